//! JSON wire formats shared by every front end.
//!
//! All exact scalars travel as strings — `"p/q"` or a bare integer string
//! `"p"` — never as floating-point numbers.  Input additionally accepts JSON
//! integers for convenience; floating-point literals are rejected because
//! they cannot represent the intended rational exactly.
//!
//! Document shapes:
//!
//! ```text
//! matrix    {"rows": m, "cols": d, "data": [["p/q", …], …]}
//! zonotope  {"d": d, "generators": [["p/q", …], …]}
//! lattice   {"basis": <matrix>}
//! ```
//!
//! The remaining functions shape result reports (certificates, verdicts,
//! witnesses) as JSON values so the command-line front end and the
//! self-test runner emit identical documents.

use serde_json::{json, Map, Value};

use crate::bmdist::BmBound;
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::mvse::{HexagonReport, SearchOutcome};
use crate::plucker::{PluckerVector, SubsetIndex};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::tiling::{Lattice, TilingPipelineReport, TileVerdict};
use crate::tumat::{GomoryCertificate, TdMembership, TdRefusal, TuViolation};
use crate::zonotope::{HexagonClassification, Zonotope};

// ---------------------------------------------------------------------------
// Scalars and vectors
// ---------------------------------------------------------------------------

/// Render a rational as its canonical string: `"p"` or `"p/q"`.
pub fn rat_to_value(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

/// Parse a rational from a JSON string (or an integer number).
pub fn rat_from_value(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else {
                Err(Error::Parse(format!(
                    "{n} is not an exact rational; write it as a string \"p/q\""
                )))
            }
        }
        other => Err(Error::Parse(format!(
            "expected a rational string, got {other}"
        ))),
    }
}

pub fn vector_to_value(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_to_value).collect())
}

pub fn vector_from_value(v: &Value) -> Result<Vec<Rat>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array of rationals, got {v}")))?
        .iter()
        .map(rat_from_value)
        .collect()
}

pub fn vectors_to_value(vs: &[Vec<Rat>]) -> Value {
    Value::Array(vs.iter().map(|v| vector_to_value(v)).collect())
}

fn indices_to_value(indices: &[usize]) -> Value {
    Value::Array(indices.iter().map(|&i| json!(i)).collect())
}

fn subset_to_value(s: &SubsetIndex) -> Value {
    indices_to_value(s.indices())
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

pub fn matrix_to_value(m: &RationalMatrix) -> Value {
    let data: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| rat_to_value(&m[(i, j)])).collect()))
        .collect();
    json!({"rows": m.rows(), "cols": m.cols(), "data": data})
}

pub fn matrix_from_value(v: &Value) -> Result<RationalMatrix> {
    let obj = expect_object(v, "matrix")?;
    let rows = expect_usize(obj, "rows")?;
    let cols = expect_usize(obj, "cols")?;
    let data = expect_array(obj, "data")?;
    if data.len() != rows {
        return Err(Error::Shape {
            expected: format!("{rows} data rows as declared"),
            got: format!("{}", data.len()),
        });
    }
    let mut parsed: Vec<Vec<Rat>> = Vec::with_capacity(rows);
    for (i, row) in data.iter().enumerate() {
        let row = vector_from_value(row)
            .map_err(|e| Error::Parse(format!("matrix data row {}: {e}", i + 1)))?;
        if row.len() != cols {
            return Err(Error::Shape {
                expected: format!("{cols} entries in data row {} as declared", i + 1),
                got: format!("{}", row.len()),
            });
        }
        parsed.push(row);
    }
    RationalMatrix::from_rows(parsed)
}

pub fn matrix_from_str(text: &str) -> Result<RationalMatrix> {
    matrix_from_value(&parse_document(text)?)
}

/// Parse a matrix from comma-separated rational strings, one row per line.
/// Blank lines are ignored; every row must have the same width.
pub fn matrix_from_csv(text: &str) -> Result<RationalMatrix> {
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row: Vec<Rat> = line
            .split(',')
            .map(|cell| parse_rat(cell))
            .collect::<Result<_>>()
            .map_err(|e| Error::Parse(format!("csv line {}: {e}", lineno + 1)))?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(Error::Shape {
                    expected: format!("{} entries per csv row", first.len()),
                    got: format!("{} on line {}", row.len(), lineno + 1),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse("csv input contains no rows".into()));
    }
    RationalMatrix::from_rows(rows)
}

// ---------------------------------------------------------------------------
// Zonotopes and lattices
// ---------------------------------------------------------------------------

pub fn zonotope_to_value(z: &Zonotope) -> Value {
    json!({"d": z.d(), "generators": vectors_to_value(z.generators())})
}

pub fn zonotope_from_value(v: &Value) -> Result<Zonotope> {
    let obj = expect_object(v, "zonotope")?;
    let d = expect_usize(obj, "d")?;
    let gens = expect_array(obj, "generators")?
        .iter()
        .map(vector_from_value)
        .collect::<Result<Vec<_>>>()?;
    Zonotope::new(d, gens)
}

pub fn zonotope_from_str(text: &str) -> Result<Zonotope> {
    zonotope_from_value(&parse_document(text)?)
}

pub fn lattice_to_value(l: &Lattice) -> Value {
    json!({"basis": matrix_to_value(l.basis())})
}

pub fn lattice_from_value(v: &Value) -> Result<Lattice> {
    let obj = expect_object(v, "lattice")?;
    let basis = obj
        .get("basis")
        .ok_or_else(|| Error::Parse("lattice document is missing \"basis\"".into()))?;
    Lattice::new(matrix_from_value(basis)?)
}

pub fn lattice_from_str(text: &str) -> Result<Lattice> {
    lattice_from_value(&parse_document(text)?)
}

// ---------------------------------------------------------------------------
// Result reports
// ---------------------------------------------------------------------------

/// Full minor vector, one `{subset, value}` entry per size-`d` row subset in
/// lexicographic order.
pub fn plucker_to_value(p: &PluckerVector) -> Value {
    let entries: Vec<Value> = p
        .iter()
        .map(|(s, v)| json!({"subset": subset_to_value(&s), "value": rat_to_value(v)}))
        .collect();
    json!({"m": p.m(), "d": p.d(), "minors": entries})
}

pub fn tu_violation_to_value(v: &TuViolation) -> Value {
    json!({
        "rows": indices_to_value(&v.rows),
        "cols": indices_to_value(&v.cols),
        "det": v.det,
    })
}

/// Gomory-style certificate as column index lists plus the six pair minors.
pub fn gomory_to_value(c: &GomoryCertificate) -> Value {
    json!({
        "p_hat": indices_to_value(&c.p_hat),
        "x_hat": indices_to_value(&c.x_hat),
        "minors": c.minors,
    })
}

pub fn td_membership_to_value(m: &TdMembership) -> Value {
    match m {
        TdMembership::Member(w) => json!({
            "member": true,
            "witness": {
                "c": matrix_to_value(&w.c),
                "a": vector_to_value(&w.a),
                "tau": matrix_to_value(&w.tau),
                "basis": indices_to_value(&w.basis),
            },
        }),
        TdMembership::Refused(r) => json!({
            "member": false,
            "refusal": td_refusal_to_value(r),
        }),
    }
}

fn td_refusal_to_value(r: &TdRefusal) -> Value {
    match r {
        TdRefusal::EntryOutOfRange { row, col, value } => json!({
            "kind": "entry_out_of_range",
            "row": row,
            "col": col,
            "value": rat_to_value(value),
        }),
        TdRefusal::NotTotallyUnimodular { violation } => json!({
            "kind": "not_totally_unimodular",
            "violation": tu_violation_to_value(violation),
        }),
    }
}

pub fn tile_verdict_to_value(v: &TileVerdict) -> Value {
    json!({
        "passed": v.passed,
        "samples_tested": v.samples_tested,
        "failure_point": v.failure_point.as_ref().map(|f| json!({
            "point": vector_to_value(&f.point),
            "cover_count": f.cover_count,
        })),
    })
}

pub fn pipeline_to_value(r: &TilingPipelineReport) -> Value {
    json!({
        "membership": td_membership_to_value(&r.membership),
        "lattice": r.lattice.as_ref().map(lattice_to_value),
        "det_check": r.det_check,
        "tile": r.tile.as_ref().map(tile_verdict_to_value),
        "contract_holds": r.contract_holds(),
    })
}

pub fn search_outcome_to_value(o: &SearchOutcome) -> Value {
    json!({
        "ratio": rat_to_value(&o.ratio),
        "projection": matrix_to_value(o.projection.a()),
    })
}

pub fn hexagon_classification_to_value(c: &HexagonClassification) -> Value {
    let (kind, vertices) = match c {
        HexagonClassification::Parallelogram { vertices } => ("parallelogram", Some(vertices)),
        HexagonClassification::HexagonAffinelyRegular { vertices } => {
            ("hexagon_affinely_regular", Some(vertices))
        }
        HexagonClassification::HexagonOther { vertices } => ("hexagon_other", Some(vertices)),
        HexagonClassification::NotHexagon => ("not_hexagon", None),
    };
    json!({
        "kind": kind,
        "vertices": vertices.map(|v| vectors_to_value(v)),
    })
}

/// Hexagonal-subspace extraction report with all rationals as strings.
pub fn hexagon_report_to_value(r: &HexagonReport) -> Value {
    json!({
        "basis_pair": [vector_to_value(&r.basis_pair.0), vector_to_value(&r.basis_pair.1)],
        "row_order": indices_to_value(&r.row_order),
        "normalized_matrix": matrix_to_value(&r.normalized_matrix),
        "circuit": subset_to_value(&r.circuit),
        "b_c_rows": r.b_c_rows.iter()
            .map(|(b, c)| json!([rat_to_value(b), rat_to_value(c)]))
            .collect::<Vec<_>>(),
        "checks": r.checks.iter()
            .map(|(x, y, z)| json!([x, y, z]))
            .collect::<Vec<_>>(),
        "ball_vertices": vectors_to_value(&r.ball_vertices),
        "classification": hexagon_classification_to_value(&r.classification),
    })
}

/// Distance bound with its two witness directions.
pub fn bm_bound_to_value(b: &BmBound) -> Value {
    json!({
        "upper_bound": rat_to_value(&b.upper_bound),
        "witnesses": {
            "max_ratio_direction": vector_to_value(&b.max_ratio_direction),
            "min_ratio_direction": vector_to_value(&b.min_ratio_direction),
        },
        "exact": b.exact,
        "directions_tested": b.directions_tested,
    })
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

/// Parse a JSON document from text with a uniform error.
pub fn parse_document(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn expect_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Parse(format!("expected a {what} object, got {v}")))
}

fn expect_usize(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    obj.get(key)
        .and_then(Value::as_u64)
        .map(|n| n as usize)
        .ok_or_else(|| Error::Parse(format!("missing or invalid \"{key}\"")))
}

fn expect_array<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Vec<Value>> {
    obj.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse(format!("missing or invalid \"{key}\"")))
}
