//! Acceptance suite: ten numbered criteria, one test and one printed
//! pass/fail line each (run with `--nocapture` to see the lines; the
//! harness result per test carries the same verdict).
//!
//! Every comparison is exact rational arithmetic with zero tolerance
//! except the two sampling cross-checks, whose tolerances are pinned
//! here as constants.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mvse_lab::bmdist::bm_upper_bound;
use mvse_lab::matrix::RationalMatrix;
use mvse_lab::mvse::{
    coordinate_projection, enumerate_parallelepiped_mvse, find_circuit, hexagonal_subspace,
    image_volume, make_projection, make_space, mvse_volume, plucker_relation_check,
    random_projection, volume_ratio, PolyhedralSpace, ProjectionSpec,
};
use mvse_lab::plucker::{cauchy_binet, complementary_check, laplace_expand, plucker, SubsetIndex};
use mvse_lab::rat::{frac, rat, rat_to_f64, Rat};
use mvse_lab::tiling::{det_volume_check, td_tiling_pipeline, tile_verify, Lattice};
use mvse_lab::tumat::{gomory_certificate, td_membership, tu_violation, TdMembership};
use mvse_lab::zonotope::{HexagonClassification, Zonotope};

/// Monte-Carlo volume cross-check: relative error allowed at 10^6 samples.
const MC_RELATIVE_TOLERANCE: f64 = 0.01;
const MC_SAMPLES: usize = 1_000_000;

/// Dense-sweep distance cross-check: a 10^5-direction sweep resolves the
/// piecewise-smooth ratio extremes to well under this slack.
const SWEEP_DIRECTIONS: usize = 100_000;
const SWEEP_TOLERANCE: f64 = 1e-3;

fn report(number: u32, label: &str) {
    println!("ACCEPTANCE {number:02} {label}: PASS");
}

// ---------------------------------------------------------------------------
// Shared constructions
// ---------------------------------------------------------------------------

fn y3() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]])
}

fn y4() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])
}

/// `A(t)·Y3 = I`: row i is e_i − t_i·(1, 1, −1).
fn planar_family(space: &PolyhedralSpace, t1: Rat, t2: Rat) -> ProjectionSpec {
    let a = RationalMatrix::from_rows(vec![
        vec![rat(1) - &t1, -t1.clone(), t1],
        vec![-t2.clone(), rat(1) - &t2, t2],
    ])
    .unwrap();
    make_projection(space, a).expect("the family inverts the presentation")
}

/// `A(t)·Y4 = I`: row i is e_i − t_i·(1, 1, 1, −1).
fn spatial_family(space: &PolyhedralSpace, t: [Rat; 3]) -> ProjectionSpec {
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
    make_projection(space, RationalMatrix::from_rows(rows).unwrap())
        .expect("the family inverts the presentation")
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    frac(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=4))
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RationalMatrix {
    RationalMatrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| random_rat(rng)).collect())
            .collect(),
    )
    .unwrap()
}

fn all_combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn extend(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            extend(v + 1, n, k, current, out);
            current.pop();
        }
    }
    extend(0, n, k, &mut current, &mut out);
    out
}

// ---------------------------------------------------------------------------
// 1. Enlargement optimality
// ---------------------------------------------------------------------------

#[test]
fn criterion_01_random_projections_never_beat_the_minimum() {
    for y in [y3(), y4()] {
        let space = make_space(y).unwrap();
        let floor = mvse_volume(&space);
        for seed in 0..1000u64 {
            let proj = random_projection(&space, seed).unwrap();
            let ratio = volume_ratio(&space, &proj);
            assert!(ratio >= rat(1), "seed {seed}: ratio {ratio} below 1");
            assert_eq!(
                image_volume(&proj),
                &ratio * &floor,
                "seed {seed}: volume bookkeeping is inconsistent"
            );
        }
    }

    // The simplex family attains the floor exactly, everywhere on the
    // rational simplex grid.
    let space = make_space(y3()).unwrap();
    let mut planar_points = 0usize;
    for i in 0..=13i64 {
        for j in 0..=(13 - i) {
            let proj = planar_family(&space, frac(i, 13), frac(j, 13));
            assert_eq!(volume_ratio(&space, &proj), rat(1), "t = ({i}/13, {j}/13)");
            planar_points += 1;
        }
    }
    assert!(planar_points >= 100, "only {planar_points} planar simplex points");

    let space = make_space(y4()).unwrap();
    let mut spatial_points = 0usize;
    for i in 0..=8i64 {
        for j in 0..=(8 - i) {
            for k in 0..=(8 - i - j) {
                let proj = spatial_family(&space, [frac(i, 8), frac(j, 8), frac(k, 8)]);
                assert_eq!(
                    volume_ratio(&space, &proj),
                    rat(1),
                    "t = ({i}/8, {j}/8, {k}/8)"
                );
                spatial_points += 1;
            }
        }
    }
    assert!(spatial_points >= 100, "only {spatial_points} spatial simplex points");

    report(1, "random projections never beat the minimum");
}

// ---------------------------------------------------------------------------
// 2. Expansion and pairing identities
// ---------------------------------------------------------------------------

#[test]
fn criterion_02_expansion_and_pairing_match_determinants() {
    let mut rng = ChaCha8Rng::seed_from_u64(2002);
    for trial in 0..200 {
        let d = rng.gen_range(1usize..=3);
        let m = rng.gen_range(d.max(2)..=7);

        let full = random_matrix(&mut rng, m, m);
        let rows: Vec<usize> = (0..m).collect();
        let f = full.submatrix(&rows, &(0..d).collect::<Vec<_>>());
        let g = full.submatrix(&rows, &(d..m).collect::<Vec<_>>());
        assert_eq!(
            laplace_expand(&f, &g).unwrap(),
            full.det().unwrap(),
            "trial {trial}: subset expansion of a {m}x{m} determinant"
        );

        let y = random_matrix(&mut rng, m, d);
        let a = random_matrix(&mut rng, d, m);
        let u = plucker(&y).unwrap();
        let w = plucker(&a.transpose()).unwrap();
        assert_eq!(
            cauchy_binet(&u, &w).unwrap(),
            a.mul(&y).unwrap().det().unwrap(),
            "trial {trial}: minor pairing on a {d}x{m} · {m}x{d} product"
        );
    }
    report(2, "expansion and pairing match determinants");
}

// ---------------------------------------------------------------------------
// 3. Quadratic minor relation
// ---------------------------------------------------------------------------

#[test]
fn criterion_03_quadratic_minor_relation_vanishes() {
    let mut rng = ChaCha8Rng::seed_from_u64(2003);
    for trial in 0..200 {
        let d = rng.gen_range(2usize..=3);
        // Enough rows that every (d+2)-subset leaves room for the d−2
        // shared indices.
        let m = rng.gen_range((2 * d).max(d + 2)..=7);
        let mat = random_matrix(&mut rng, m, d);
        for chosen in all_combinations(m, d + 2) {
            for kappa_pick in all_combinations(d + 2, 4) {
                let kappas: Vec<usize> = kappa_pick.iter().map(|&i| chosen[i] + 1).collect();
                let gammas: Vec<usize> = chosen
                    .iter()
                    .map(|&r| r + 1)
                    .filter(|r| !kappas.contains(r))
                    .collect();
                let kappas: [usize; 4] = kappas.try_into().unwrap();
                let value = plucker_relation_check(&mat, &gammas, &kappas).unwrap();
                assert_eq!(
                    value,
                    rat(0),
                    "trial {trial}: relation on rows {chosen:?} of a {m}x{d} matrix"
                );
            }
        }
    }
    report(3, "quadratic minor relation vanishes");
}

// ---------------------------------------------------------------------------
// 4. Orthogonal compound identities
// ---------------------------------------------------------------------------

#[test]
fn criterion_04_orthogonal_compound_identities() {
    fn givens(n: usize, i: usize, j: usize, c: Rat, s: Rat) -> RationalMatrix {
        let mut rows = vec![vec![rat(0); n]; n];
        for (k, row) in rows.iter_mut().enumerate() {
            row[k] = rat(1);
        }
        rows[i][i] = c.clone();
        rows[j][j] = c;
        rows[i][j] = s.clone();
        rows[j][i] = -s;
        RationalMatrix::from_rows(rows).unwrap()
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2004);
    for trial in 0..50 {
        let n = rng.gen_range(3usize..=5);

        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut rows = vec![vec![rat(0); n]; n];
        for (r, &c) in perm.iter().enumerate() {
            rows[r][c] = rat(if rng.gen_bool(0.5) { 1 } else { -1 });
        }
        let signed_perm = RationalMatrix::from_rows(rows).unwrap();

        let i = rng.gen_range(0..n - 1);
        let j = rng.gen_range(i + 1..n);
        let g1 = givens(n, i, j, frac(3, 5), frac(4, 5));
        let i = rng.gen_range(0..n - 1);
        let j = rng.gen_range(i + 1..n);
        let g2 = givens(n, i, j, frac(5, 13), frac(12, 13));

        let q = g1.mul(&g2).unwrap().mul(&signed_perm).unwrap();
        for d in 1..n {
            let check = complementary_check(&q, d).unwrap();
            assert!(
                check.passed(),
                "trial {trial}: compound identity fails at split {d}: {check:?}"
            );
        }
    }
    report(4, "orthogonal compound identities");
}

// ---------------------------------------------------------------------------
// 5. Unimodularity recognition against an independent oracle
// ---------------------------------------------------------------------------

#[test]
fn criterion_05_unimodularity_matches_the_minor_oracle() {
    // Independent route: integer cofactor expansion over every square
    // submatrix, no shared code with the library's decision.
    fn int_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        let mut total = 0i64;
        for (col, &top) in m[0].iter().enumerate() {
            if top == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != col)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if col % 2 == 0 { 1 } else { -1 };
            total += sign * top * int_det(&minor);
        }
        total
    }
    fn oracle_is_tu(entries: &[Vec<i64>]) -> bool {
        let (r, c) = (entries.len(), entries[0].len());
        for k in 1..=r.min(c) {
            for row_pick in all_combinations(r, k) {
                for col_pick in all_combinations(c, k) {
                    let sub: Vec<Vec<i64>> = row_pick
                        .iter()
                        .map(|&rr| col_pick.iter().map(|&cc| entries[rr][cc]).collect())
                        .collect();
                    if int_det(&sub).abs() > 1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2005);
    let mut decided = 0usize;
    for trial in 0..500 {
        let r = rng.gen_range(1usize..=4);
        let c = rng.gen_range(1usize..=5);
        let entries: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..c).map(|_| rng.gen_range(-1i64..=1)).collect())
            .collect();
        let m = RationalMatrix::from_rows(
            entries
                .iter()
                .map(|row| row.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
        .unwrap();
        let library = tu_violation(&m).unwrap().is_none();
        let oracle = oracle_is_tu(&entries);
        assert_eq!(library, oracle, "trial {trial}: disagreement on {entries:?}");
        decided += 1;
    }
    assert!(decided >= 500);

    // Certificates: matrices of the shape [I | R] that fail the test must
    // always yield four columns whose six joined minors are all nonzero.
    let mut certified = 0usize;
    for trial in 0..400 {
        let d = rng.gen_range(2usize..=4);
        let extra = rng.gen_range(2usize..=3);
        let mut rows_i64: Vec<Vec<i64>> = (0..d)
            .map(|r| {
                let mut row: Vec<i64> = (0..d).map(|c| i64::from(c == r)).collect();
                row.extend((0..extra).map(|_| rng.gen_range(-1i64..=1)));
                row
            })
            .collect();
        // Keep the oracle honest about signs.
        if rng.gen_bool(0.2) {
            rows_i64.reverse();
        }
        let m = RationalMatrix::from_rows(
            rows_i64
                .iter()
                .map(|row| row.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
        .unwrap();
        if tu_violation(&m).unwrap().is_none() {
            continue;
        }
        let cert = gomory_certificate(&m).unwrap_or_else(|e| {
            panic!("trial {trial}: certificate extraction failed on {rows_i64:?}: {e}")
        });
        assert_eq!(cert.minors.len(), 6);
        assert!(
            cert.all_minors_nonzero(),
            "trial {trial}: zero pair minor in {cert:?} for {rows_i64:?}"
        );
        certified += 1;
    }
    assert!(certified >= 50, "only {certified} non-unimodular instances certified");

    report(5, "unimodularity matches the minor oracle");
}

// ---------------------------------------------------------------------------
// 6. Planar class boundary
// ---------------------------------------------------------------------------

fn cross2(a: &[Rat], b: &[Rat]) -> Rat {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn random_planar_vector(rng: &mut ChaCha8Rng) -> Vec<Rat> {
    loop {
        let v = vec![
            frac(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2)),
            frac(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2)),
        ];
        if v[0] != rat(0) || v[1] != rat(0) {
            return v;
        }
    }
}

fn random_independent_pair(rng: &mut ChaCha8Rng) -> (Vec<Rat>, Vec<Rat>) {
    let g1 = random_planar_vector(rng);
    loop {
        let g2 = random_planar_vector(rng);
        if cross2(&g1, &g2) != rat(0) {
            return (g1, g2);
        }
    }
}

/// Confirm an accepting witness exactly: C·z_i = a_i·τ_i over the reduced
/// generators.
fn verify_member_witness(z: &Zonotope) {
    match td_membership(z).unwrap() {
        TdMembership::Member(w) => {
            let reduced = z.reduced().unwrap();
            for (i, gen) in reduced.generators().iter().enumerate() {
                let cz = w.c.mul_vec(gen).unwrap();
                for (r, value) in cz.iter().enumerate() {
                    assert_eq!(
                        *value,
                        &w.a[i] * &w.tau[(r, i)],
                        "witness identity fails at generator {}, row {}",
                        i + 1,
                        r + 1
                    );
                }
            }
        }
        TdMembership::Refused(reason) => panic!("member instance refused: {reason}"),
    }
}

#[test]
fn criterion_06_planar_class_boundary() {
    let mut rng = ChaCha8Rng::seed_from_u64(2006);
    let nonzero_scale = |rng: &mut ChaCha8Rng| -> Rat {
        let options = [frac(1, 2), rat(1), rat(2), frac(-1, 2), rat(-1), rat(-2)];
        options[rng.gen_range(0..options.len())].clone()
    };

    // 25 symmetric hexagons: three pairwise independent generators.
    for _ in 0..25 {
        let (g1, g2) = random_independent_pair(&mut rng);
        let (alpha, beta) = (nonzero_scale(&mut rng), nonzero_scale(&mut rng));
        let g3 = vec![&alpha * &g1[0] + &beta * &g2[0], &alpha * &g1[1] + &beta * &g2[1]];
        let z = Zonotope::new(2, vec![g1, g2, g3]).unwrap();
        verify_member_witness(&z);
    }

    // 25 parallelograms, a third of them with a redundant parallel copy.
    for trial in 0..25 {
        let (g1, g2) = random_independent_pair(&mut rng);
        let mut gens = vec![g1.clone(), g2];
        if trial % 3 == 0 {
            gens.push(vec![&rat(2) * &g1[0], &rat(2) * &g1[1]]);
        }
        let z = Zonotope::new(2, gens).unwrap();
        verify_member_witness(&z);
    }

    // 50 zonogons with at least four pairwise non-parallel generators.
    for trial in 0..50 {
        let target = 4 + (trial % 2);
        let mut gens: Vec<Vec<Rat>> = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        while gens.len() < target {
            let candidate = random_planar_vector(&mut rng);
            if gens.iter().all(|g| cross2(g, &candidate) != rat(0)) {
                gens.push(candidate);
            }
        }
        let z = Zonotope::new(2, gens).unwrap();
        assert!(
            !td_membership(&z).unwrap().is_member(),
            "trial {trial}: {z:?} accepted despite {target} generator classes"
        );
    }

    report(6, "planar class boundary");
}

// ---------------------------------------------------------------------------
// 7. Members tile, with exact determinants
// ---------------------------------------------------------------------------

fn assert_member_tiles(z: &Zonotope, samples: usize, seed: u64, label: &str) {
    let pipeline = td_tiling_pipeline(z, samples, seed).unwrap();
    assert!(pipeline.membership.is_member(), "{label}: membership refused");
    assert!(pipeline.lattice.is_some(), "{label}: no lattice found");
    assert_eq!(pipeline.det_check, Some(true), "{label}: determinant mismatch");
    let tile = pipeline.tile.as_ref().expect("verdict present");
    assert!(tile.passed, "{label}: sampling verification failed: {tile:?}");
    assert!(
        tile.samples_tested >= samples,
        "{label}: only {} retained samples",
        tile.samples_tested
    );
    assert!(pipeline.contract_holds(), "{label}: contract flag disagrees");
}

#[test]
fn criterion_07_members_tile_with_exact_determinants() {
    let cube = Zonotope::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    assert_member_tiles(&cube, 1000, 7, "cube");

    // The hexagon with its pinned tiling lattice.
    let hexagon = Zonotope::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]]);
    let pinned = Lattice::from_i64(&[&[4, 2], &[2, 4]]).unwrap();
    assert!(det_volume_check(&hexagon, &pinned).unwrap());
    let verdict = tile_verify(&hexagon, &pinned, &rat(5), 1000, 12).unwrap();
    assert!(verdict.passed && verdict.samples_tested >= 1000, "{verdict:?}");
    assert_member_tiles(&hexagon, 1000, 7, "hexagon");

    let mut rng = ChaCha8Rng::seed_from_u64(2007);

    // Six random planar members.
    for trial in 0..6 {
        let g1 = vec![rat(rng.gen_range(1i64..=2)), rat(rng.gen_range(-1i64..=1))];
        let mut g2 = vec![rat(rng.gen_range(-1i64..=1)), rat(rng.gen_range(1i64..=2))];
        if cross2(&g1, &g2) == rat(0) {
            g2 = vec![rat(0), rat(1)];
        }
        let z = if trial % 2 == 0 {
            let g3 = vec![&g1[0] + &g2[0], &g1[1] + &g2[1]];
            Zonotope::new(2, vec![g1, g2, g3]).unwrap()
        } else {
            Zonotope::new(2, vec![g1, g2]).unwrap()
        };
        assert_member_tiles(&z, 1000, 7 + trial as u64, &format!("planar member {trial}"));
    }

    // Four random spatial members: parallelepipeds and images of the
    // four-generator reference body under small unimodular maps.
    for trial in 0..4 {
        let z = if trial % 2 == 0 {
            loop {
                let gens: Vec<Vec<Rat>> = (0..3)
                    .map(|axis| {
                        (0..3)
                            .map(|c| {
                                if c == axis {
                                    rat(rng.gen_range(1i64..=2))
                                } else {
                                    rat(rng.gen_range(-1i64..=1))
                                }
                            })
                            .collect()
                    })
                    .collect();
                let m = RationalMatrix::from_rows(gens.clone()).unwrap();
                if m.det().unwrap() != rat(0) {
                    break Zonotope::new(3, gens).unwrap();
                }
            }
        } else {
            // Shear the reference body by a random elementary map.
            let i = rng.gen_range(0usize..3);
            let j = (i + 1 + rng.gen_range(0usize..2)) % 3;
            let rows: Vec<Vec<Rat>> = (0..3)
                .map(|r| {
                    (0..3)
                        .map(|c| rat(i64::from(r == c) + i64::from((r, c) == (i, j))))
                        .collect()
                })
                .collect();
            let shear = RationalMatrix::from_rows(rows).unwrap();
            let gens: Vec<Vec<Rat>> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
                .iter()
                .map(|g| {
                    let v: Vec<Rat> = g.iter().map(|&x| rat(x)).collect();
                    shear.mul_vec(&v).unwrap()
                })
                .collect();
            Zonotope::new(3, gens).unwrap()
        };
        assert_member_tiles(&z, 1000, 11 + trial as u64, &format!("spatial member {trial}"));
    }

    report(7, "members tile with exact determinants");
}

// ---------------------------------------------------------------------------
// 8. Hexagonal subspace extraction
// ---------------------------------------------------------------------------

#[test]
fn criterion_08_hexagonal_subspace_extraction() {
    let space = make_space(y3()).unwrap();
    let witness = planar_family(&space, frac(1, 3), frac(1, 3));
    let report_planar = hexagonal_subspace(&space, &witness).unwrap();
    assert!(report_planar.all_checks_hold());
    assert!(report_planar.is_affinely_regular());
    assert!(matches!(
        report_planar.classification,
        HexagonClassification::HexagonAffinelyRegular { .. }
    ));
    assert_eq!(report_planar.ball_vertices.len(), 6);

    let space = make_space(y4()).unwrap();
    let witness = spatial_family(&space, [frac(1, 3), frac(1, 3), frac(1, 3)]);
    let report_spatial = hexagonal_subspace(&space, &witness).unwrap();
    assert!(report_spatial.all_checks_hold());
    assert!(report_spatial.is_affinely_regular());

    // Control: the cube presentation has a unique parallelepiped minimum
    // and offers no hexagonal witness.
    let space = make_space(RationalMatrix::identity(3)).unwrap();
    let minima = enumerate_parallelepiped_mvse(&space);
    assert_eq!(minima.len(), 1);
    assert_eq!(minima[0].indices(), &[1, 2, 3]);
    let subset = SubsetIndex::new(vec![1, 2, 3]).unwrap();
    let proj = coordinate_projection(&space, &subset).unwrap();
    assert_eq!(volume_ratio(&space, &proj), rat(1));
    assert!(find_circuit(&proj).unwrap().is_none());

    report(8, "hexagonal subspace extraction");
}

// ---------------------------------------------------------------------------
// 9. Volume cross-checks
// ---------------------------------------------------------------------------

#[test]
fn criterion_09_volume_cross_checks() {
    // Planar: minors versus the shoelace area of the traced boundary.
    let shoelace = |vertices: &[Vec<Rat>]| -> Rat {
        let n = vertices.len();
        let mut twice = rat(0);
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
    let mut rng = ChaCha8Rng::seed_from_u64(2009);
    for trial in 0..100 {
        let extra = rng.gen_range(0usize..=3);
        let mut gens: Vec<Vec<Rat>> = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        for _ in 0..extra {
            gens.push(vec![
                rat(rng.gen_range(-4i64..=4)),
                rat(rng.gen_range(-4i64..=4)),
            ]);
        }
        gens.retain(|g| g[0] != rat(0) || g[1] != rat(0));
        let z = Zonotope::new(2, gens).unwrap();
        assert_eq!(
            z.volume().unwrap(),
            shoelace(&z.vertices2d().unwrap()),
            "trial {trial}: planar volume disagrees with the shoelace area"
        );
    }

    // Spatial: minors versus Monte-Carlo sampling of the facet-inequality
    // hull (an independent floating-point route).
    let instances: Vec<Zonotope> = vec![
        Zonotope::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        Zonotope::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]),
        Zonotope::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]),
        Zonotope::from_i64(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 1], &[0, 1, 1]],
        ),
        Zonotope::from_i64(3, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]),
    ];
    for (index, z) in instances.iter().enumerate() {
        let gens: Vec<[f64; 3]> = z
            .generators()
            .iter()
            .map(|g| [rat_to_f64(&g[0]), rat_to_f64(&g[1]), rat_to_f64(&g[2])])
            .collect();
        // Facet normals of a spatial zonotope are cross products of
        // generator pairs; membership is the support inequality on each.
        let mut normals: Vec<[f64; 3]> = Vec::new();
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                let (a, b) = (&gens[i], &gens[j]);
                let n = [
                    a[1] * b[2] - a[2] * b[1],
                    a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0],
                ];
                if n.iter().any(|v| v.abs() > 1e-12) {
                    normals.push(n);
                }
            }
        }
        let support: Vec<f64> = normals
            .iter()
            .map(|n| {
                gens.iter()
                    .map(|g| (g[0] * n[0] + g[1] * n[1] + g[2] * n[2]).abs())
                    .sum()
            })
            .collect();
        let halfwidth: Vec<f64> = (0..3)
            .map(|axis| gens.iter().map(|g| g[axis].abs()).sum())
            .collect();
        let box_volume: f64 = halfwidth.iter().map(|h| 2.0 * h).product();

        let mut mc_rng = ChaCha8Rng::seed_from_u64(900 + index as u64);
        let mut hits = 0usize;
        for _ in 0..MC_SAMPLES {
            let p = [
                mc_rng.gen_range(-halfwidth[0]..=halfwidth[0]),
                mc_rng.gen_range(-halfwidth[1]..=halfwidth[1]),
                mc_rng.gen_range(-halfwidth[2]..=halfwidth[2]),
            ];
            let inside = normals.iter().zip(&support).all(|(n, h)| {
                (p[0] * n[0] + p[1] * n[1] + p[2] * n[2]).abs() <= *h
            });
            if inside {
                hits += 1;
            }
        }
        let estimate = box_volume * hits as f64 / MC_SAMPLES as f64;
        let exact = rat_to_f64(&z.volume().unwrap());
        let relative = (estimate - exact).abs() / exact;
        assert!(
            relative <= MC_RELATIVE_TOLERANCE,
            "instance {index}: Monte-Carlo {estimate} vs exact {exact} (relative {relative:.5})"
        );
    }

    report(9, "volume cross-checks");
}

// ---------------------------------------------------------------------------
// 10. Distance bound extremes
// ---------------------------------------------------------------------------

fn random_zonogon(rng: &mut ChaCha8Rng) -> Zonotope {
    let extra = rng.gen_range(0usize..=2);
    let mut gens: Vec<Vec<Rat>> = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
    for _ in 0..extra {
        let candidate = vec![
            rat(rng.gen_range(-3i64..=3)),
            rat(rng.gen_range(-3i64..=3)),
        ];
        if candidate[0] != rat(0) || candidate[1] != rat(0) {
            gens.push(candidate);
        }
    }
    Zonotope::new(2, gens).unwrap()
}

fn scaled(z: &Zonotope, s: i64) -> Zonotope {
    let gens = z
        .generators()
        .iter()
        .map(|g| g.iter().map(|x| x * rat(s)).collect())
        .collect();
    Zonotope::new(z.d(), gens).unwrap()
}

#[test]
fn criterion_10_distance_bound_extremes() {
    let mut rng = ChaCha8Rng::seed_from_u64(2010);
    for trial in 0..50 {
        let z1 = random_zonogon(&mut rng);
        let z2 = random_zonogon(&mut rng);

        let identity = bm_upper_bound(&z1, &z1).unwrap();
        assert_eq!(identity.upper_bound, rat(1), "trial {trial}: self-distance");

        let base = bm_upper_bound(&z1, &z2).unwrap();
        let first_scaled = bm_upper_bound(&scaled(&z1, 3), &z2).unwrap();
        let second_scaled = bm_upper_bound(&z1, &scaled(&z2, 5)).unwrap();
        assert_eq!(base.upper_bound, first_scaled.upper_bound, "trial {trial}");
        assert_eq!(base.upper_bound, second_scaled.upper_bound, "trial {trial}");
        assert!(base.exact, "trial {trial}: planar bound must be exact");
    }

    // Dense sweep: the breakpoint extremes dominate every sampled direction
    // and are reached to within the sweep's resolution.
    for trial in 0..5 {
        let z1 = random_zonogon(&mut rng);
        let z2 = random_zonogon(&mut rng);
        let exact = rat_to_f64(&bm_upper_bound(&z1, &z2).unwrap().upper_bound);

        let to_f64 = |z: &Zonotope| -> Vec<[f64; 2]> {
            z.generators()
                .iter()
                .map(|g| [rat_to_f64(&g[0]), rat_to_f64(&g[1])])
                .collect()
        };
        let (g1, g2) = (to_f64(&z1), to_f64(&z2));
        let support = |gens: &[[f64; 2]], u: [f64; 2]| -> f64 {
            gens.iter().map(|g| (g[0] * u[0] + g[1] * u[1]).abs()).sum()
        };
        let mut max_ratio = f64::MIN;
        let mut min_ratio = f64::MAX;
        for k in 0..SWEEP_DIRECTIONS {
            let theta = std::f64::consts::PI * (k as f64) / (SWEEP_DIRECTIONS as f64);
            let u = [theta.cos(), theta.sin()];
            let ratio = support(&g1, u) / support(&g2, u);
            max_ratio = max_ratio.max(ratio);
            min_ratio = min_ratio.min(ratio);
        }
        let swept = max_ratio / min_ratio;
        assert!(
            swept <= exact + 1e-9,
            "trial {trial}: sweep {swept} exceeds the certified bound {exact}"
        );
        assert!(
            exact - swept <= SWEEP_TOLERANCE,
            "trial {trial}: sweep {swept} misses the certified bound {exact}"
        );
    }

    report(10, "distance bound extremes");
}
