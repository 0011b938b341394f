//! Total unimodularity and scaled-TU presentations of zonotopes.
//!
//! A matrix with entries in {−1, 0, 1} is totally unimodular (TU) when every
//! square minor lies in {−1, 0, 1}. Recognition here is by exhaustive minor
//! enumeration — the documented contract covers matrices whose smaller
//! dimension is at most 6, which is ample for the zonotope pipeline (d ≤ 3).
//!
//! A zonotope belongs to the scaled-TU class when some invertible linear
//! image writes its generators as positive multiples of the columns of a
//! rank-d TU matrix. Membership is decided constructively: take the first
//! independent generators as a basis, express everything in that basis, and
//! rescale rows and columns along a spanning forest of the bipartite
//! support graph. If the result has entries in {−1, 0, 1} and is TU, the
//! witness is explicit; otherwise the failing entry or violating minor is
//! returned. Completeness rests on the pivoting invariance of TU
//! representability, so no basis search is performed.

use num_traits::{One, Signed, Zero};
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::plucker::subsets_lex;
use crate::rat::{format_rat, Rat};
use crate::zonotope::Zonotope;

/// Maximum value of min(rows, cols) accepted by the brute-force TU check.
pub const TU_BRUTE_FORCE_LIMIT: usize = 6;

/// A square submatrix whose determinant falls outside {−1, 0, 1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuViolation {
    /// 1-based row indices, ascending.
    pub rows: Vec<usize>,
    /// 1-based column indices, ascending.
    pub cols: Vec<usize>,
    pub det: i64,
}

/// Certificate that a {−1,0,1} matrix with an identity block is not TU:
/// d+2 columns such that all six d×d minors obtained by joining the d−2
/// shared columns with each pair of the four distinguished ones are nonzero.
#[derive(Clone, Debug)]
pub struct GomoryCertificate {
    /// The four distinguished columns (1-based, ascending).
    pub p_hat: Vec<usize>,
    /// The d−2 shared unit columns (1-based, ascending).
    pub x_hat: Vec<usize>,
    /// The six minors det[x_hat | p_a | p_b], pairs (a,b) of `p_hat` in
    /// lexicographic order.
    pub minors: Vec<i64>,
}

impl GomoryCertificate {
    pub fn all_minors_nonzero(&self) -> bool {
        self.minors.iter().all(|&m| m != 0)
    }
}

/// Positive row/column rescaling along a spanning forest of the bipartite
/// support graph, normalizing the forest entries to ±1.
#[derive(Clone, Debug)]
pub struct ScalingRecord {
    pub scaled: RationalMatrix,
    pub row_scales: Vec<Rat>,
    pub col_scales: Vec<Rat>,
    /// Forest edges (row, col), 1-based, in BFS discovery order.
    pub forest_edges: Vec<(usize, usize)>,
}

/// Verdict of scaled-TU class membership.
#[derive(Clone, Debug)]
pub enum TdMembership {
    Member(TdWitness),
    Refused(TdRefusal),
}

impl TdMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, TdMembership::Member(_))
    }
}

/// Constructive witness: `C · z_i = a_i · τ_i` exactly for every reduced
/// generator z_i, with C invertible, a_i > 0, and τ totally unimodular.
#[derive(Clone, Debug)]
pub struct TdWitness {
    pub c: RationalMatrix,
    pub a: Vec<Rat>,
    pub tau: RationalMatrix,
    /// 1-based indices (into the reduced generator list) of the basis.
    pub basis: Vec<usize>,
}

/// Why membership was refused. Positions are 1-based into the forest-scaled
/// basis-coordinate matrix.
#[derive(Clone, Debug)]
pub enum TdRefusal {
    EntryOutOfRange { row: usize, col: usize, value: Rat },
    NotTotallyUnimodular { violation: TuViolation },
}

impl std::fmt::Display for TdRefusal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TdRefusal::EntryOutOfRange { row, col, value } => write!(
                f,
                "scaled entry ({row},{col}) = {} is not in {{-1,0,1}}",
                format_rat(value)
            ),
            TdRefusal::NotTotallyUnimodular { violation } => write!(
                f,
                "scaled matrix has minor {} on rows {:?}, cols {:?}",
                violation.det, violation.rows, violation.cols
            ),
        }
    }
}

/// Convert to a sign grid, rejecting entries outside {−1, 0, 1}.
fn sign_grid(m: &RationalMatrix) -> Result<Vec<Vec<i64>>> {
    let mut grid = vec![vec![0i64; m.cols()]; m.rows()];
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let e = &m[(r, c)];
            grid[r][c] = if e.is_zero() {
                0
            } else if e.is_one() {
                1
            } else if (-e).is_one() {
                -1
            } else {
                return Err(Error::EntryOutOfRange {
                    row: r + 1,
                    col: c + 1,
                    value: format_rat(e),
                    allowed: "{-1,0,1}".into(),
                });
            };
        }
    }
    Ok(grid)
}

/// Integer determinant of the submatrix of `grid` on `rows` × `cols`
/// (0-based), by cofactor expansion along the first listed column.
fn int_det(grid: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> i64 {
    debug_assert_eq!(rows.len(), cols.len());
    match rows.len() {
        0 => 1,
        1 => grid[rows[0]][cols[0]],
        2 => {
            grid[rows[0]][cols[0]] * grid[rows[1]][cols[1]]
                - grid[rows[0]][cols[1]] * grid[rows[1]][cols[0]]
        }
        _ => {
            let rest_cols = &cols[1..];
            let mut acc = 0i64;
            for (k, &r) in rows.iter().enumerate() {
                let pivot = grid[r][cols[0]];
                if pivot == 0 {
                    continue;
                }
                let sub_rows: Vec<usize> = rows
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != k)
                    .map(|(_, &x)| x)
                    .collect();
                let minor = int_det(grid, &sub_rows, rest_cols);
                if k % 2 == 0 {
                    acc += pivot * minor;
                } else {
                    acc -= pivot * minor;
                }
            }
            acc
        }
    }
}

fn check_brute_force_size(rows: usize, cols: usize) -> Result<()> {
    if rows.min(cols) > TU_BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit {
            context: format!(
                "brute-force TU check covers min(rows, cols) <= {TU_BRUTE_FORCE_LIMIT}, got {rows}x{cols}"
            ),
        });
    }
    Ok(())
}

/// Exhaustive total-unimodularity check. Entries must lie in {−1, 0, 1}
/// and min(rows, cols) must not exceed [`TU_BRUTE_FORCE_LIMIT`].
pub fn is_tu(m: &RationalMatrix) -> Result<bool> {
    Ok(tu_violation(m)?.is_none())
}

/// Smallest violating square submatrix, if any: orders ascending, then row
/// subsets lexicographic, then column subsets lexicographic.
pub fn tu_violation(m: &RationalMatrix) -> Result<Option<TuViolation>> {
    check_brute_force_size(m.rows(), m.cols())?;
    let grid = sign_grid(m)?;
    let (r, c) = (m.rows(), m.cols());
    // Order-1 minors are the entries, already confined to {−1,0,1}.
    for k in 2..=r.min(c) {
        for row_set in subsets_lex(r, k) {
            let rows = row_set.zero_based();
            for col_set in subsets_lex(c, k) {
                let cols = col_set.zero_based();
                let det = int_det(&grid, &rows, &cols);
                if det.abs() > 1 {
                    return Ok(Some(TuViolation {
                        rows: row_set.indices().to_vec(),
                        cols: col_set.indices().to_vec(),
                        det,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// True when the working column is ±(a unit vector).
fn unit_coord(col: &[i64]) -> Option<usize> {
    let mut found = None;
    for (i, &v) in col.iter().enumerate() {
        if v != 0 {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

/// Extract a non-TU certificate from a {−1,0,1} matrix of full row rank d
/// that carries all d unit vectors among its columns and is not TU.
///
/// The search mirrors the classical argument: put a violating block in the
/// leading columns, then repeatedly try to convert a non-unit leading
/// column into a unit vector by adding/subtracting one row to others (plus
/// column negations), staying inside {−1,0,1}. Every conversion strictly
/// increases the number of unit columns among the first d, which is capped
/// below d because those columns keep |det| ≥ 2; so the process always
/// terminates at a state where every conversion is blocked by a 2×2
/// submatrix with determinant ±2 — exactly the certificate data. The six
/// certificate minors are re-verified on the original matrix.
pub fn gomory_certificate(m: &RationalMatrix) -> Result<GomoryCertificate> {
    let d = m.rows();
    let j = m.cols();
    check_brute_force_size(d, j)?;
    if d < 2 {
        return Err(Error::Precondition(
            "certificate extraction needs at least two rows".into(),
        ));
    }
    let original = sign_grid(m)?;
    // Locate the positive identity columns required by the contract.
    let mut identity_col = vec![usize::MAX; d];
    for coord in 0..d {
        let found = (0..j).find(|&c| {
            (0..d).all(|r| original[r][c] == i64::from(r == coord))
        });
        identity_col[coord] = found.ok_or_else(|| {
            Error::Precondition(format!(
                "matrix must contain the identity: no column equals e_{}",
                coord + 1
            ))
        })?;
    }
    let violation = tu_violation(m)?.ok_or_else(|| {
        Error::Precondition("matrix is totally unimodular; nothing to certify".into())
    })?;

    // Working copy as columns, with a map back to original column indices.
    // Leading d columns: the violating block padded with identity columns
    // for the rows it misses — their determinant has absolute value ≥ 2,
    // and row operations preserve that.
    let viol_rows: Vec<usize> = violation.rows.iter().map(|&r| r - 1).collect();
    let viol_cols: Vec<usize> = violation.cols.iter().map(|&c| c - 1).collect();
    let mut order: Vec<usize> = viol_cols.clone();
    for coord in 0..d {
        if !viol_rows.contains(&coord) {
            order.push(identity_col[coord]);
        }
    }
    debug_assert_eq!(order.len(), d);
    for c in 0..j {
        if !order.contains(&c) {
            order.push(c);
        }
    }
    let mut cols: Vec<Vec<i64>> = order
        .iter()
        .map(|&c| (0..d).map(|r| original[r][c]).collect())
        .collect();
    let colmap = order;

    // Greedy conversion loop. Bounded by d iterations (see above).
    let blockage = 'outer: loop {
        let mut first_blockage: Option<(usize, usize, usize, usize)> = None;
        for r in 0..d {
            if unit_coord(&cols[r]).is_some() {
                continue;
            }
            let nz: Vec<usize> = (0..d).filter(|&i| cols[r][i] != 0).collect();
            for &i1 in &nz {
                // e_{i1} must not already sit among the leading d columns.
                let occupied = (0..d).any(|c| unit_coord(&cols[c]) == Some(i1));
                if occupied {
                    continue;
                }
                // Tentatively add ±row_{i1} to the other supported rows.
                let mut blocked: Option<(usize, usize)> = None;
                'rows: for &is in &nz {
                    if is == i1 {
                        continue;
                    }
                    let coeff = -cols[r][is] * cols[r][i1];
                    for (t, col) in cols.iter().enumerate() {
                        let nv = col[is] + coeff * col[i1];
                        if nv.abs() > 1 {
                            blocked = Some((is, t));
                            break 'rows;
                        }
                    }
                }
                match blocked {
                    None => {
                        // Apply: column r becomes ±e_{i1}; flip to +e_{i1}.
                        for &is in &nz {
                            if is == i1 {
                                continue;
                            }
                            let coeff = -cols[r][is] * cols[r][i1];
                            for col in cols.iter_mut() {
                                col[is] += coeff * col[i1];
                            }
                        }
                        if cols[r][i1] < 0 {
                            for v in cols[r].iter_mut() {
                                *v = -*v;
                            }
                        }
                        continue 'outer;
                    }
                    Some((is, t)) => {
                        first_blockage.get_or_insert((r, i1, is, t));
                    }
                }
            }
        }
        break first_blockage.ok_or_else(|| {
            Error::Precondition(
                "certificate search found no blocked conversion; input violates the contract"
                    .into(),
            )
        })?;
    };

    let (r, i1, is, t) = blockage;
    let find_unit = |coord: usize| -> Result<usize> {
        (0..cols.len())
            .find(|&c| unit_coord(&cols[c]) == Some(coord))
            .map(|c| colmap[c])
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "unit vector e_{} vanished from the working matrix",
                    coord + 1
                ))
            })
    };
    let mut p_hat = vec![colmap[r], colmap[t], find_unit(i1)?, find_unit(is)?];
    p_hat.sort_unstable();
    let mut x_hat: Vec<usize> = (0..d)
        .filter(|&coord| coord != i1 && coord != is)
        .map(find_unit)
        .collect::<Result<_>>()?;
    x_hat.sort_unstable();

    // Post-hoc verification on the original matrix: all six joined minors
    // must be nonzero.
    let all_rows: Vec<usize> = (0..d).collect();
    let mut minors = Vec::with_capacity(6);
    for a in 0..4 {
        for b in (a + 1)..4 {
            let mut chosen = x_hat.clone();
            chosen.push(p_hat[a]);
            chosen.push(p_hat[b]);
            minors.push(int_det(&original, &all_rows, &chosen));
        }
    }
    let cert = GomoryCertificate {
        p_hat: p_hat.iter().map(|&c| c + 1).collect(),
        x_hat: x_hat.iter().map(|&c| c + 1).collect(),
        minors,
    };
    if !cert.all_minors_nonzero() {
        return Err(Error::Precondition(
            "certificate verification failed: a joined minor vanished".into(),
        ));
    }
    Ok(cert)
}

/// Rescale rows and columns by positive rationals so that every entry on a
/// maximal spanning forest of the bipartite support graph becomes ±1.
/// Deterministic: BFS from row 1, neighbors in ascending index order,
/// remaining components rooted at the lowest unvisited row, then column.
pub fn forest_scaling(g: &RationalMatrix) -> Result<ScalingRecord> {
    let (d, j) = (g.rows(), g.cols());
    let rank = g.rank();
    if rank < d {
        return Err(Error::RankDeficient {
            rank,
            needed: d,
            context: "forest scaling requires full row rank".into(),
        });
    }
    let mut row_scales: Vec<Option<Rat>> = vec![None; d];
    let mut col_scales: Vec<Option<Rat>> = vec![None; j];
    let mut forest_edges: Vec<(usize, usize)> = Vec::new();

    #[derive(Clone, Copy)]
    enum Node {
        Row(usize),
        Col(usize),
    }
    let mut queue: VecDeque<Node> = VecDeque::new();
    let mut roots: Vec<Node> = vec![Node::Row(0)];
    roots.extend((1..d).map(Node::Row));
    roots.extend((0..j).map(Node::Col));

    for root in roots {
        let fresh = match root {
            Node::Row(r) => row_scales[r].is_none(),
            Node::Col(c) => col_scales[c].is_none(),
        };
        if !fresh {
            continue;
        }
        match root {
            Node::Row(r) => row_scales[r] = Some(Rat::one()),
            Node::Col(c) => col_scales[c] = Some(Rat::one()),
        }
        queue.push_back(root);
        while let Some(node) = queue.pop_front() {
            match node {
                Node::Row(r) => {
                    let r_scale = row_scales[r].clone().expect("visited row has a scale");
                    for c in 0..j {
                        if g[(r, c)].is_zero() || col_scales[c].is_some() {
                            continue;
                        }
                        col_scales[c] = Some((&r_scale * g[(r, c)].abs()).recip());
                        forest_edges.push((r + 1, c + 1));
                        queue.push_back(Node::Col(c));
                    }
                }
                Node::Col(c) => {
                    let c_scale = col_scales[c].clone().expect("visited col has a scale");
                    for r in 0..d {
                        if g[(r, c)].is_zero() || row_scales[r].is_some() {
                            continue;
                        }
                        row_scales[r] = Some((&c_scale * g[(r, c)].abs()).recip());
                        forest_edges.push((r + 1, c + 1));
                        queue.push_back(Node::Row(r));
                    }
                }
            }
        }
    }

    let row_scales: Vec<Rat> = row_scales.into_iter().map(Option::unwrap).collect();
    let col_scales: Vec<Rat> = col_scales.into_iter().map(Option::unwrap).collect();
    let mut scaled_rows = Vec::with_capacity(d);
    for r in 0..d {
        let mut row = Vec::with_capacity(j);
        for c in 0..j {
            row.push(&row_scales[r] * &g[(r, c)] * &col_scales[c]);
        }
        scaled_rows.push(row);
    }
    Ok(ScalingRecord {
        scaled: RationalMatrix::from_rows(scaled_rows)?,
        row_scales,
        col_scales,
        forest_edges,
    })
}

/// Decide membership in the scaled-TU zonotope class and produce either an
/// exact witness `C · z_i = a_i · τ_i` or the refusal evidence.
pub fn td_membership(z: &Zonotope) -> Result<TdMembership> {
    let reduced = z.reduced()?;
    let d = reduced.d();
    let mat = reduced.generator_matrix();
    let rank = mat.rank();
    if rank < d {
        return Err(Error::RankDeficient {
            rank,
            needed: d,
            context: "class membership requires a full-dimensional zonotope".into(),
        });
    }
    // First independent generators, in reduced order, form the basis.
    let all_rows: Vec<usize> = (0..d).collect();
    let mut basis: Vec<usize> = Vec::with_capacity(d);
    for c in 0..mat.cols() {
        if basis.len() == d {
            break;
        }
        let mut trial = basis.clone();
        trial.push(c);
        if mat.submatrix(&all_rows, &trial).rank() == trial.len() {
            basis.push(c);
        }
    }
    debug_assert_eq!(basis.len(), d);
    let b = mat.submatrix(&all_rows, &basis);
    let b_inv = b.inverse()?;
    let coords = b_inv.mul(&mat)?;
    let scaling = forest_scaling(&coords)?;

    // Every scaled entry must be a sign.
    for r in 0..scaling.scaled.rows() {
        for c in 0..scaling.scaled.cols() {
            let e = &scaling.scaled[(r, c)];
            if !(e.is_zero() || e.is_one() || (-e).is_one()) {
                return Ok(TdMembership::Refused(TdRefusal::EntryOutOfRange {
                    row: r + 1,
                    col: c + 1,
                    value: e.clone(),
                }));
            }
        }
    }
    if let Some(violation) = tu_violation(&scaling.scaled)? {
        return Ok(TdMembership::Refused(TdRefusal::NotTotallyUnimodular {
            violation,
        }));
    }
    // C = diag(row_scales) · B^{-1}; a_i = 1 / col_scale_i.
    let mut c_rows = Vec::with_capacity(d);
    for r in 0..d {
        c_rows.push(
            (0..d)
                .map(|cc| &scaling.row_scales[r] * &b_inv[(r, cc)])
                .collect::<Vec<Rat>>(),
        );
    }
    let witness = TdWitness {
        c: RationalMatrix::from_rows(c_rows)?,
        a: scaling.col_scales.iter().map(|s| s.recip()).collect(),
        tau: scaling.scaled.clone(),
        basis: basis.iter().map(|&c| c + 1).collect(),
    };
    Ok(TdMembership::Member(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, rat};

    #[test]
    fn is_tu_basic_cases() {
        assert!(is_tu(&RationalMatrix::identity(3)).unwrap());
        assert!(is_tu(&RationalMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]])).unwrap());
        // det = 2.
        assert!(!is_tu(&RationalMatrix::from_i64(&[&[1, 1], &[-1, 1]])).unwrap());
        assert!(!is_tu(&RationalMatrix::from_i64(&[&[1, 0, 1, 1], &[0, 1, 1, -1]])).unwrap());
    }

    #[test]
    fn is_tu_rejects_out_of_range_entries() {
        let m = RationalMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(matches!(is_tu(&m), Err(Error::EntryOutOfRange { .. })));
        let halves = RationalMatrix::from_rows(vec![vec![frac(1, 2)]]).unwrap();
        assert!(matches!(is_tu(&halves), Err(Error::EntryOutOfRange { .. })));
    }

    #[test]
    fn is_tu_rejects_oversized_instances() {
        let m = RationalMatrix::from_rows(vec![vec![rat(0); 7]; 7]).unwrap();
        assert!(matches!(is_tu(&m), Err(Error::SizeLimit { .. })));
        // 3x9 is fine: min dimension within the limit.
        let wide = RationalMatrix::from_rows(vec![vec![rat(0); 9]; 3]).unwrap();
        assert!(is_tu(&wide).unwrap());
    }

    #[test]
    fn tu_violation_finds_smallest_lexicographic() {
        let m = RationalMatrix::from_i64(&[&[1, 0, 1, 1], &[0, 1, 1, -1]]);
        let v = tu_violation(&m).unwrap().unwrap();
        assert_eq!(v.rows, vec![1, 2]);
        assert_eq!(v.cols, vec![3, 4]);
        assert_eq!(v.det, -2);
        assert!(tu_violation(&RationalMatrix::identity(4)).unwrap().is_none());
    }

    #[test]
    fn tu_violation_matches_independent_minor_oracle() {
        // Oracle: rational determinants over all square submatrices.
        fn oracle_is_tu(m: &RationalMatrix) -> bool {
            let (r, c) = (m.rows(), m.cols());
            for k in 1..=r.min(c) {
                for rs in subsets_lex(r, k) {
                    for cs in subsets_lex(c, k) {
                        let det = m
                            .submatrix(&rs.zero_based(), &cs.zero_based())
                            .det()
                            .unwrap();
                        if det.abs() > rat(1) {
                            return false;
                        }
                    }
                }
            }
            true
        }
        let samples = [
            RationalMatrix::from_i64(&[&[1, 0, 1, 1], &[0, 1, 1, -1]]),
            RationalMatrix::from_i64(&[&[1, 0, 0, 1, 0, 1], &[0, 1, 0, 1, 1, 0], &[0, 0, 1, 0, 1, 1]]),
            RationalMatrix::from_i64(&[&[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]]),
            RationalMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
        ];
        for m in samples {
            assert_eq!(is_tu(&m).unwrap(), oracle_is_tu(&m));
        }
    }

    #[test]
    fn gomory_certificate_on_planar_example() {
        let m = RationalMatrix::from_i64(&[&[1, 0, 1, 1], &[0, 1, 1, -1]]);
        let cert = gomory_certificate(&m).unwrap();
        assert_eq!(cert.p_hat, vec![1, 2, 3, 4]);
        assert!(cert.x_hat.is_empty());
        assert_eq!(cert.minors, vec![1, 1, -1, -1, -1, -2]);
        assert!(cert.all_minors_nonzero());
    }

    #[test]
    fn gomory_certificate_on_odd_cycle_example() {
        // Columns: identity plus the three edge vectors of a 3-cycle; the
        // cycle block has determinant 2.
        let m = RationalMatrix::from_i64(&[
            &[1, 0, 0, 1, 0, 1],
            &[0, 1, 0, 1, 1, 0],
            &[0, 0, 1, 0, 1, 1],
        ]);
        assert!(!is_tu(&m).unwrap());
        let cert = gomory_certificate(&m).unwrap();
        assert_eq!(cert.p_hat.len(), 4);
        assert_eq!(cert.x_hat.len(), 1);
        assert!(cert.all_minors_nonzero());
        // Indices must be distinct overall.
        let mut all = cert.p_hat.clone();
        all.extend(&cert.x_hat);
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), 5);
    }

    #[test]
    fn gomory_certificate_rejects_tu_and_missing_identity() {
        let tu = RationalMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]]);
        assert!(matches!(
            gomory_certificate(&tu),
            Err(Error::Precondition(_))
        ));
        let no_identity = RationalMatrix::from_i64(&[&[1, 1], &[1, -1]]);
        assert!(matches!(
            gomory_certificate(&no_identity),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn forest_scaling_reference_example() {
        let g = RationalMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 2]]);
        let rec = forest_scaling(&g).unwrap();
        assert_eq!(
            rec.scaled,
            RationalMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]])
        );
        assert_eq!(rec.row_scales, vec![rat(1), frac(1, 2)]);
        assert_eq!(rec.col_scales, vec![rat(1), rat(2), rat(1)]);
        assert_eq!(rec.forest_edges, vec![(1, 1), (1, 3), (2, 3), (2, 2)]);
    }

    #[test]
    fn forest_scaling_normalizes_forest_entries_and_inverts() {
        let g = RationalMatrix::from_rows(vec![
            vec![frac(2, 3), rat(0), frac(1, 5), rat(4)],
            vec![rat(0), frac(-3, 7), rat(1), rat(0)],
        ])
        .unwrap();
        let rec = forest_scaling(&g).unwrap();
        for &(r, c) in &rec.forest_edges {
            assert_eq!(rec.scaled[(r - 1, c - 1)].abs(), rat(1));
        }
        // Scales are positive and invert back to G.
        for s in rec.row_scales.iter().chain(&rec.col_scales) {
            assert!(s.is_positive());
        }
        for r in 0..g.rows() {
            for c in 0..g.cols() {
                let back = &rec.scaled[(r, c)] / (&rec.row_scales[r] * &rec.col_scales[c]);
                assert_eq!(back, g[(r, c)]);
            }
        }
        // Forest is spanning: edge count = rows + cols − components = 6 − 1.
        assert_eq!(rec.forest_edges.len(), 5);
    }

    #[test]
    fn forest_scaling_handles_disconnected_support() {
        let g = RationalMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let rec = forest_scaling(&g).unwrap();
        assert_eq!(rec.scaled, RationalMatrix::identity(2));
        assert_eq!(rec.forest_edges, vec![(1, 1), (2, 2)]);
    }

    #[test]
    fn forest_scaling_rejects_rank_deficient() {
        let g = RationalMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(matches!(
            forest_scaling(&g),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn td_membership_accepts_hexagon_with_reference_witness() {
        let z = Zonotope::from_i64(2, &[&[1, 0], &[0, 1], &[1, 2]]);
        let TdMembership::Member(w) = td_membership(&z).unwrap() else {
            panic!("expected membership");
        };
        assert_eq!(w.a, vec![rat(1), frac(1, 2), rat(1)]);
        assert_eq!(w.tau, RationalMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(w.basis, vec![1, 2]);
        // Witness identity: C z_i = a_i τ_i exactly.
        let reduced = z.reduced().unwrap();
        for (i, gen) in reduced.generators().iter().enumerate() {
            let img = w.c.mul_vec(gen).unwrap();
            let expected: Vec<Rat> = (0..2).map(|r| &w.a[i] * &w.tau[(r, i)]).collect();
            assert_eq!(img, expected);
        }
    }

    #[test]
    fn td_membership_accepts_any_symmetric_hexagon() {
        let z = Zonotope::new(
            2,
            vec![
                vec![rat(2), rat(1)],
                vec![frac(-1, 3), rat(1)],
                vec![rat(1), rat(5)],
            ],
        )
        .unwrap();
        assert!(td_membership(&z).unwrap().is_member());
    }

    #[test]
    fn td_membership_refuses_octagon_with_minor() {
        let z = Zonotope::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]);
        let TdMembership::Refused(TdRefusal::NotTotallyUnimodular { violation }) =
            td_membership(&z).unwrap()
        else {
            panic!("expected TU refusal");
        };
        assert_eq!(violation.det, -2);
        assert_eq!(violation.cols, vec![3, 4]);
    }

    #[test]
    fn td_membership_rejects_flat_zonotope() {
        let z = Zonotope::from_i64(2, &[&[1, 1], &[2, 2]]);
        assert!(matches!(
            td_membership(&z),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn td_membership_accepts_parallelepipeds() {
        let z = Zonotope::from_i64(3, &[&[2, 0, 1], &[0, 3, 0], &[1, 1, 4]]);
        assert!(td_membership(&z).unwrap().is_member());
    }
}
