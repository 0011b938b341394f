//! Bundled self-test corpus: the reference examples and seeded invariant
//! sweeps, exercised through the public library API.  Every check is exact;
//! seeds are fixed so reruns produce byte-identical reports.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use mvse_lab::bmdist::bm_upper_bound;
use mvse_lab::json as wire;
use mvse_lab::matrix::RationalMatrix;
use mvse_lab::mvse::{
    coordinate_projection, enumerate_parallelepiped_mvse, find_circuit, hexagonal_subspace,
    image_volume, make_projection, make_space, mvse_volume, plucker_relation_check,
    random_projection, volume_ratio, PolyhedralSpace, ProjectionSpec,
};
use mvse_lab::plucker::{
    cauchy_binet, complementary_check, det_perturb_bound, laplace_expand, laplace_sign, plucker,
    subsets_lex, SubsetIndex,
};
use mvse_lab::rat::{frac, rat, Rat};
use mvse_lab::tiling::{det_volume_check, td_tiling_pipeline, tile_verify, Lattice};
use mvse_lab::tumat::{gomory_certificate, td_membership, tu_violation, TdMembership};
use mvse_lab::zonotope::{HexagonClassification, Zonotope};

use crate::{CommandResult, Status};

type CheckResult = Result<(), String>;

struct Check {
    name: &'static str,
    run: fn() -> CheckResult,
}

const CHECKS: &[Check] = &[
    Check {
        name: "parity signs of row subsets",
        run: check_parity_signs,
    },
    Check {
        name: "block expansion equals the determinant",
        run: check_block_expansion,
    },
    Check {
        name: "minor pairing equals the product determinant",
        run: check_minor_pairing,
    },
    Check {
        name: "minor vectors of the reference presentations",
        run: check_reference_minors,
    },
    Check {
        name: "planar volume equals the shoelace area",
        run: check_shoelace,
    },
    Check {
        name: "worked enlargement ratios",
        run: check_worked_ratios,
    },
    Check {
        name: "random projections never beat the minimum",
        run: check_ratio_floor,
    },
    Check {
        name: "quadratic minor relation vanishes",
        run: check_quadratic_relation,
    },
    Check {
        name: "determinant perturbation bound",
        run: check_det_perturbation,
    },
    Check {
        name: "orthogonal complementary minors",
        run: check_orthogonal_minors,
    },
    Check {
        name: "unimodularity decisions and certificate",
        run: check_unimodularity,
    },
    Check {
        name: "class membership with exact witnesses",
        run: check_membership,
    },
    Check {
        name: "verified lattice tilings",
        run: check_tilings,
    },
    Check {
        name: "tiling pipeline end to end",
        run: check_pipeline,
    },
    Check {
        name: "hexagonal subspace extraction",
        run: check_hexagonal_subspace,
    },
    Check {
        name: "distance bound references",
        run: check_distance_bounds,
    },
    Check {
        name: "wire formats round-trip",
        run: check_wire_formats,
    },
];

/// Run every check and shape the pass/fail table; any failure makes the
/// whole command an error carrying the first counterexample.
pub fn run() -> CommandResult {
    let mut rows = Vec::new();
    let mut first_failure: Option<Value> = None;
    let mut passed = 0usize;
    for check in CHECKS {
        match (check.run)() {
            Ok(()) => {
                passed += 1;
                rows.push(json!({"name": check.name, "pass": true}));
            }
            Err(detail) => {
                rows.push(json!({"name": check.name, "pass": false, "detail": detail}));
                if first_failure.is_none() {
                    first_failure = Some(json!({
                        "name": check.name,
                        "counterexample": detail,
                    }));
                }
            }
        }
    }
    let failed = CHECKS.len() - passed;
    let payload = json!({
        "total": CHECKS.len(),
        "passed": passed,
        "failed": failed,
        "checks": rows,
        "first_failure": first_failure,
    });
    CommandResult {
        status: if failed == 0 { Status::Ok } else { Status::Error },
        payload,
    }
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib(e: mvse_lab::Error) -> String {
    format!("library error: {e}")
}

fn y3() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]])
}

fn y4() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])
}

fn hexagon() -> Zonotope {
    Zonotope::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]])
}

fn square() -> Zonotope {
    Zonotope::from_i64(2, &[&[1, 0], &[0, 1]])
}

fn octagon() -> Zonotope {
    Zonotope::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]])
}

/// The projection family of the planar reference presentation:
/// `A(t) = [[1−t1, −t1, t1], [−t2, 1−t2, t2]]` satisfies `A·Y3 = I`.
fn planar_projection(
    space: &PolyhedralSpace,
    t1: Rat,
    t2: Rat,
) -> Result<ProjectionSpec, String> {
    let a = RationalMatrix::from_rows(vec![
        vec![rat(1) - &t1, -t1.clone(), t1],
        vec![-t2.clone(), rat(1) - &t2, t2],
    ])
    .map_err(lib)?;
    make_projection(space, a).map_err(lib)
}

/// Same family one dimension up: `A(t)_i = e_i − t_i·(1,1,1,−1)`.
fn spatial_projection(space: &PolyhedralSpace, t: [Rat; 3]) -> Result<ProjectionSpec, String> {
    let rows: Vec<Vec<Rat>> = t
        .iter()
        .enumerate()
        .map(|(i, ti)| {
            (0..4)
                .map(|j| {
                    let base = if i == j { rat(1) } else { rat(0) };
                    if j < 3 {
                        base - ti
                    } else {
                        ti.clone()
                    }
                })
                .collect()
        })
        .collect();
    make_projection(space, RationalMatrix::from_rows(rows).map_err(lib)?).map_err(lib)
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    frac(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=4))
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RationalMatrix {
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| random_rat(rng)).collect())
        .collect();
    RationalMatrix::from_rows(data).expect("rectangular by construction")
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

fn check_parity_signs() -> CheckResult {
    let cases: &[(&[usize], i32)] = &[
        (&[1, 2], 1),
        (&[2], -1),
        (&[1, 3], -1),
        (&[2, 3], 1),
        (&[1, 2, 3], 1),
        (&[2, 4], -1),
    ];
    for (indices, expected) in cases {
        let s = SubsetIndex::new(indices.to_vec()).map_err(lib)?;
        let got = laplace_sign(&s);
        ensure(got == *expected, || {
            format!("sign of {s} is {got}, expected {expected}")
        })?;
    }
    Ok(())
}

fn check_block_expansion() -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for trial in 0..20 {
        let m = rng.gen_range(3usize..=5);
        let d = rng.gen_range(1usize..m);
        let full = random_matrix(&mut rng, m, m);
        let all_rows: Vec<usize> = (0..m).collect();
        let f = full.submatrix(&all_rows, &(0..d).collect::<Vec<_>>());
        let g = full.submatrix(&all_rows, &(d..m).collect::<Vec<_>>());
        let expanded = laplace_expand(&f, &g).map_err(lib)?;
        let direct = full.det().map_err(lib)?;
        ensure(expanded == direct, || {
            format!("trial {trial}: expansion {expanded} differs from determinant {direct}")
        })?;
    }
    Ok(())
}

fn check_minor_pairing() -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for trial in 0..20 {
        let d = rng.gen_range(1usize..=3);
        let m = rng.gen_range(d..=6);
        let y = random_matrix(&mut rng, m, d);
        let a = random_matrix(&mut rng, d, m);
        let u = plucker(&y).map_err(lib)?;
        let w = plucker(&a.transpose()).map_err(lib)?;
        let paired = cauchy_binet(&u, &w).map_err(lib)?;
        let direct = a.mul(&y).map_err(lib)?.det().map_err(lib)?;
        ensure(paired == direct, || {
            format!("trial {trial}: pairing {paired} differs from det(A·Y) {direct}")
        })?;
    }
    Ok(())
}

fn check_reference_minors() -> CheckResult {
    let u3 = plucker(&y3()).map_err(lib)?;
    ensure(u3.values() == [rat(1), rat(1), rat(-1)], || {
        format!("planar presentation minors {:?}", u3.values())
    })?;
    let u4 = plucker(&y4()).map_err(lib)?;
    ensure(u4.values() == [rat(1), rat(1), rat(-1), rat(1)], || {
        format!("spatial presentation minors {:?}", u4.values())
    })?;
    Ok(())
}

fn check_shoelace() -> CheckResult {
    let shoelace = |vertices: &[Vec<Rat>]| -> Rat {
        let n = vertices.len();
        let mut twice = Rat::from_integer(0.into());
        for i in 0..n {
            let (a, b) = (&vertices[i], &vertices[(i + 1) % n]);
            twice += &a[0] * &b[1] - &b[0] * &a[1];
        }
        let half = twice / rat(2);
        if half < rat(0) {
            -half
        } else {
            half
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let mut bodies = vec![hexagon(), square(), octagon()];
    for _ in 0..10 {
        let mut gens: Vec<Vec<Rat>> = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        for _ in 0..2 {
            gens.push(vec![
                rat(rng.gen_range(-3i64..=3)),
                rat(rng.gen_range(-3i64..=3)),
            ]);
        }
        bodies.push(Zonotope::new(2, gens).map_err(lib)?);
    }
    for (i, z) in bodies.iter().enumerate() {
        let by_minors = z.volume().map_err(lib)?;
        let by_area = shoelace(&z.vertices2d().map_err(lib)?);
        ensure(by_minors == by_area, || {
            format!("body {i}: minor volume {by_minors} differs from shoelace {by_area}")
        })?;
    }
    Ok(())
}

fn check_worked_ratios() -> CheckResult {
    let space3 = make_space(y3()).map_err(lib)?;
    let space4 = make_space(y4()).map_err(lib)?;
    ensure(mvse_volume(&space3) == rat(4), || {
        format!("planar minimal volume {}", mvse_volume(&space3))
    })?;
    ensure(mvse_volume(&space4) == rat(8), || {
        format!("spatial minimal volume {}", mvse_volume(&space4))
    })?;

    let far = planar_projection(&space3, rat(1), rat(1))?;
    let ratio_far = volume_ratio(&space3, &far);
    ensure(ratio_far == rat(3), || {
        format!("ratio at t=(1,1) is {ratio_far}, expected 3")
    })?;

    let optimal = planar_projection(&space3, frac(1, 3), frac(1, 3))?;
    let ratio_opt = volume_ratio(&space3, &optimal);
    ensure(ratio_opt == rat(1), || {
        format!("ratio at t=(1/3,1/3) is {ratio_opt}, expected 1")
    })?;

    for (space, proj) in [(&space3, &far), (&space3, &optimal)] {
        let product = volume_ratio(space, proj) * mvse_volume(space);
        let image = image_volume(proj);
        ensure(product == image, || {
            format!("ratio·minimal volume {product} differs from image volume {image}")
        })?;
    }
    Ok(())
}

fn check_ratio_floor() -> CheckResult {
    for (label, y) in [("planar", y3()), ("spatial", y4())] {
        let space = make_space(y).map_err(lib)?;
        for seed in 0..60u64 {
            let proj = random_projection(&space, seed).map_err(lib)?;
            let ratio = volume_ratio(&space, &proj);
            ensure(ratio >= rat(1), || {
                format!("{label} presentation, seed {seed}: ratio {ratio} below 1")
            })?;
        }
    }
    Ok(())
}

fn check_quadratic_relation() -> CheckResult {
    // Reference: the spatial presentation extended by the row (1,2,3);
    // gamma = {5} (the new row), kappa = the four original rows.
    let extended = RationalMatrix::from_i64(&[
        &[1, 0, 0],
        &[0, 1, 0],
        &[0, 0, 1],
        &[1, 1, 1],
        &[1, 2, 3],
    ]);
    let value = plucker_relation_check(&extended, &[5], &[1, 2, 3, 4]).map_err(lib)?;
    ensure(value == rat(0), || {
        format!("reference relation value {value}")
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for trial in 0..15 {
        let d = rng.gen_range(2usize..=3);
        let m = d + 2 + rng.gen_range(0usize..=1);
        let mat = random_matrix(&mut rng, m, d);
        // First (d−2) rows as gamma, next four as kappa: always distinct.
        let gammas: Vec<usize> = (1..=(d - 2)).collect();
        let kappas = [d - 1, d, d + 1, d + 2];
        let value = plucker_relation_check(&mat, &gammas, &kappas).map_err(lib)?;
        ensure(value == rat(0), || {
            format!("trial {trial}: relation value {value} on a {m}x{d} instance")
        })?;
    }
    Ok(())
}

fn check_det_perturbation() -> CheckResult {
    // Perturbing (1,0) to (1,1/2) leaves both determinants against (0,1)
    // equal: difference 0 within the L·M bound 1/2.
    let x = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
    let z = vec![rat(1), frac(1, 2)];
    let report = det_perturb_bound(&x, &z, &frac(1, 2), &rat(1)).map_err(lib)?;
    ensure(report.lhs == rat(0) && report.holds, || {
        format!("parallel perturbation: lhs {}, rhs {}", report.lhs, report.rhs)
    })?;

    // Shrinking (0,1) to (0,1/2) moves the determinant by exactly 1/2: the
    // bound is tight.
    let x = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
    let z = vec![rat(0), frac(1, 2)];
    let report = det_perturb_bound(&x, &z, &frac(1, 2), &rat(1)).map_err(lib)?;
    ensure(report.lhs == frac(1, 2) && report.holds, || {
        format!("tight perturbation: lhs {}, rhs {}", report.lhs, report.rhs)
    })?;
    Ok(())
}

fn check_orthogonal_minors() -> CheckResult {
    // Signed permutation.
    let p = RationalMatrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, -1]]);
    for d in [1usize, 2] {
        let report = complementary_check(&p, d).map_err(lib)?;
        ensure(report.passed(), || {
            format!("signed permutation failed at split {d}: {report:?}")
        })?;
    }

    // Product of two rational rotations and a signed permutation.
    let g1 = RationalMatrix::from_rows(vec![
        vec![frac(3, 5), frac(4, 5), rat(0), rat(0)],
        vec![frac(-4, 5), frac(3, 5), rat(0), rat(0)],
        vec![rat(0), rat(0), rat(1), rat(0)],
        vec![rat(0), rat(0), rat(0), rat(1)],
    ])
    .map_err(lib)?;
    let g2 = RationalMatrix::from_rows(vec![
        vec![rat(1), rat(0), rat(0), rat(0)],
        vec![rat(0), rat(1), rat(0), rat(0)],
        vec![rat(0), rat(0), frac(5, 13), frac(12, 13)],
        vec![rat(0), rat(0), frac(-12, 13), frac(5, 13)],
    ])
    .map_err(lib)?;
    let p4 = RationalMatrix::from_i64(&[
        &[0, 0, 1, 0],
        &[-1, 0, 0, 0],
        &[0, 0, 0, -1],
        &[0, 1, 0, 0],
    ]);
    let q = g1.mul(&g2).map_err(lib)?.mul(&p4).map_err(lib)?;
    for d in [1usize, 2, 3] {
        let report = complementary_check(&q, d).map_err(lib)?;
        ensure(report.passed(), || {
            format!("rotation compound failed at split {d}: {report:?}")
        })?;
    }
    Ok(())
}

fn check_unimodularity() -> CheckResult {
    let interval = RationalMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]]);
    ensure(tu_violation(&interval).map_err(lib)?.is_none(), || {
        "interval matrix flagged as not unimodular".into()
    })?;

    let bad = RationalMatrix::from_i64(&[&[1, 0, 1, 1], &[0, 1, 1, -1]]);
    let violation = tu_violation(&bad)
        .map_err(lib)?
        .ok_or_else(|| "mixed-sign matrix accepted as unimodular".to_string())?;
    ensure(violation.det.abs() == 2, || {
        format!("violation determinant {}", violation.det)
    })?;
    let cert = gomory_certificate(&bad).map_err(lib)?;
    ensure(cert.p_hat == vec![1, 2, 3, 4], || {
        format!("certificate columns {:?}", cert.p_hat)
    })?;
    ensure(cert.minors.iter().all(|&m| m != 0), || {
        format!("certificate pair minors {:?}", cert.minors)
    })?;

    // Independent oracle: exhaustive rational minors.
    let rational_tu = |m: &RationalMatrix| -> Result<bool, String> {
        for k in 1..=m.rows().min(m.cols()) {
            for rows in subsets_lex(m.rows(), k) {
                for cols in subsets_lex(m.cols(), k) {
                    let det = m
                        .submatrix(&rows.zero_based(), &cols.zero_based())
                        .det()
                        .map_err(lib)?;
                    if det != rat(0) && det != rat(1) && det != rat(-1) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for trial in 0..30 {
        let data: Vec<Vec<Rat>> = (0..3)
            .map(|_| (0..4).map(|_| rat(rng.gen_range(-1i64..=1))).collect())
            .collect();
        let m = RationalMatrix::from_rows(data).map_err(lib)?;
        let fast = tu_violation(&m).map_err(lib)?.is_none();
        let oracle = rational_tu(&m)?;
        ensure(fast == oracle, || {
            format!("trial {trial}: decision {fast} against oracle {oracle}")
        })?;
    }
    Ok(())
}

fn check_membership() -> CheckResult {
    let skewed = Zonotope::from_i64(2, &[&[1, 0], &[0, 1], &[1, 2]]);
    match td_membership(&skewed).map_err(lib)? {
        TdMembership::Member(w) => {
            ensure(w.a == vec![rat(1), frac(1, 2), rat(1)], || {
                format!("witness scales {:?}", w.a)
            })?;
            // Re-verify the witness identity C·z_i = a_i·τ_i exactly.
            let reduced = skewed.reduced().map_err(lib)?;
            for (i, z) in reduced.generators().iter().enumerate() {
                let cz = w.c.mul_vec(z).map_err(lib)?;
                for (r, czr) in cz.iter().enumerate() {
                    let expected = &w.a[i] * &w.tau[(r, i)];
                    ensure(*czr == expected, || {
                        format!("witness identity fails at generator {}, row {}", i + 1, r + 1)
                    })?;
                }
            }
        }
        TdMembership::Refused(r) => return Err(format!("skewed hexagon refused: {r}")),
    }

    let cube = Zonotope::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    ensure(td_membership(&cube).map_err(lib)?.is_member(), || {
        "cube refused".into()
    })?;
    ensure(!td_membership(&octagon()).map_err(lib)?.is_member(), || {
        "octagon accepted".into()
    })?;
    Ok(())
}

fn check_tilings() -> CheckResult {
    let lattice = Lattice::from_i64(&[&[4, 2], &[2, 4]]).map_err(lib)?;
    ensure(det_volume_check(&hexagon(), &lattice).map_err(lib)?, || {
        "hexagon lattice determinant mismatch".into()
    })?;
    let verdict = tile_verify(&hexagon(), &lattice, &rat(5), 400, 12).map_err(lib)?;
    ensure(verdict.passed && verdict.samples_tested == 400, || {
        format!("hexagon tiling verdict {verdict:?}")
    })?;

    let doubled = Lattice::from_i64(&[&[2, 0], &[0, 2]]).map_err(lib)?;
    let verdict = tile_verify(&square(), &doubled, &rat(3), 300, 11).map_err(lib)?;
    ensure(verdict.passed, || format!("cube tiling verdict {verdict:?}"))?;

    // Negative control: the unit lattice makes translates overlap.
    let unit = Lattice::from_i64(&[&[1, 0], &[0, 1]]).map_err(lib)?;
    let verdict = tile_verify(&square(), &unit, &rat(3), 300, 11).map_err(lib)?;
    let overlap = verdict
        .failure_point
        .as_ref()
        .map(|f| f.cover_count)
        .unwrap_or(0);
    ensure(!verdict.passed && overlap >= 2, || {
        format!("overlapping lattice verdict {verdict:?}")
    })?;
    Ok(())
}

fn check_pipeline() -> CheckResult {
    let report = td_tiling_pipeline(&hexagon(), 300, 5).map_err(lib)?;
    let tiled = report.tile.as_ref().map(|t| t.passed).unwrap_or(false);
    ensure(
        report.membership.is_member() && tiled && report.contract_holds(),
        || format!("hexagon pipeline: {report:?}"),
    )?;
    let det = report
        .lattice
        .as_ref()
        .map(|l| l.determinant().clone())
        .unwrap_or_else(|| rat(0));
    ensure(det == rat(12), || format!("hexagon lattice determinant {det}"))?;

    let report = td_tiling_pipeline(&octagon(), 200, 5).map_err(lib)?;
    ensure(
        !report.membership.is_member() && report.lattice.is_none() && report.contract_holds(),
        || format!("octagon pipeline: {report:?}"),
    )?;
    Ok(())
}

fn check_hexagonal_subspace() -> CheckResult {
    let space3 = make_space(y3()).map_err(lib)?;
    let witness = planar_projection(&space3, frac(1, 3), frac(1, 3))?;
    let report = hexagonal_subspace(&space3, &witness).map_err(lib)?;
    ensure(report.all_checks_hold() && report.is_affinely_regular(), || {
        format!("planar extraction report {report:?}")
    })?;
    let expected: Vec<Vec<Rat>> = [(-1, 0), (0, -1), (1, -1), (1, 0), (0, 1), (-1, 1)]
        .iter()
        .map(|&(x, y)| vec![rat(x), rat(y)])
        .collect();
    ensure(report.ball_vertices == expected, || {
        format!("extracted ball vertices {:?}", report.ball_vertices)
    })?;

    let space4 = make_space(y4()).map_err(lib)?;
    let witness = spatial_projection(&space4, [frac(1, 3), frac(1, 3), frac(1, 3)])?;
    let report = hexagonal_subspace(&space4, &witness).map_err(lib)?;
    ensure(
        report.is_affinely_regular()
            && matches!(
                report.classification,
                HexagonClassification::HexagonAffinelyRegular { .. }
            ),
        || format!("spatial extraction report {report:?}"),
    )?;

    // Control: a cube presentation has a unique parallelepiped enlargement
    // and no hexagonal witness.
    let identity = make_space(RationalMatrix::identity(3)).map_err(lib)?;
    let minima = enumerate_parallelepiped_mvse(&identity);
    ensure(minima.len() == 1 && minima[0].indices() == [1, 2, 3], || {
        format!("cube control minima {minima:?}")
    })?;
    let subset = SubsetIndex::new(vec![1, 2, 3]).map_err(lib)?;
    let proj = coordinate_projection(&identity, &subset).map_err(lib)?;
    ensure(find_circuit(&proj).map_err(lib)?.is_none(), || {
        "cube control produced a circuit".into()
    })?;
    Ok(())
}

fn check_distance_bounds() -> CheckResult {
    let self_bound = bm_upper_bound(&hexagon(), &hexagon()).map_err(lib)?;
    ensure(self_bound.upper_bound == rat(1), || {
        format!("self distance {}", self_bound.upper_bound)
    })?;

    let bound = bm_upper_bound(&square(), &hexagon()).map_err(lib)?;
    ensure(bound.upper_bound == rat(2) && bound.exact, || {
        format!("square/hexagon bound {}", bound.upper_bound)
    })?;

    let cube = Zonotope::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    let rhombic = Zonotope::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
    let bound = bm_upper_bound(&cube, &rhombic).map_err(lib)?;
    ensure(bound.upper_bound == rat(2) && !bound.exact, || {
        format!("cube/rhombic bound {}", bound.upper_bound)
    })?;
    Ok(())
}

fn check_wire_formats() -> CheckResult {
    let m = y3();
    let round = wire::matrix_from_value(&wire::matrix_to_value(&m)).map_err(lib)?;
    ensure(round == m, || "matrix round-trip changed the value".into())?;

    let z = hexagon();
    let round = wire::zonotope_from_value(&wire::zonotope_to_value(&z)).map_err(lib)?;
    ensure(round == z, || "zonotope round-trip changed the value".into())?;

    let l = Lattice::from_i64(&[&[4, 2], &[2, 4]]).map_err(lib)?;
    let round = wire::lattice_from_value(&wire::lattice_to_value(&l)).map_err(lib)?;
    ensure(round == l, || "lattice round-trip changed the value".into())?;

    let csv = wire::matrix_from_csv("1, 1/2\n0, 3\n").map_err(lib)?;
    ensure(csv.rows() == 2 && csv[(0, 1)] == frac(1, 2), || {
        "csv ingestion mis-parsed".into()
    })?;

    ensure(
        wire::rat_from_value(&json!(0.25)).is_err(),
        || "floating-point literal was accepted".into(),
    )?;
    Ok(())
}
