//! Property-based invariants: randomized structural laws that must hold
//! for every input the generators can produce.

use proptest::prelude::*;

use mvse_lab::json as wire;
use mvse_lab::matrix::RationalMatrix;
use mvse_lab::mvse::{make_space, random_projection, volume_ratio};
use mvse_lab::plucker::{laplace_expand, SubsetIndex};
use mvse_lab::rat::{format_rat, frac, parse_rat, rat, Rat};
use mvse_lab::tiling::{det_volume_check, tile_verify, Lattice};
use mvse_lab::zonotope::Zonotope;

fn rational() -> impl Strategy<Value = Rat> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn rational_rows(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Rat>>> {
    prop::collection::vec(prop::collection::vec(rational(), cols), rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The subset expansion of det[F | G] along the first block agrees
    /// with direct elimination for every shape split.
    #[test]
    fn expansion_matches_the_determinant(
        (rows, split) in (2usize..=5).prop_flat_map(|m| (Just(m), 1usize..m)),
        seed_rows in rational_rows(5, 5),
    ) {
        let data: Vec<Vec<Rat>> = seed_rows.into_iter().take(rows)
            .map(|r| r.into_iter().take(rows).collect())
            .collect();
        let full = RationalMatrix::from_rows(data).unwrap();
        let all: Vec<usize> = (0..rows).collect();
        let f = full.submatrix(&all, &(0..split).collect::<Vec<_>>());
        let g = full.submatrix(&all, &(split..rows).collect::<Vec<_>>());
        prop_assert_eq!(laplace_expand(&f, &g).unwrap(), full.det().unwrap());
    }

    /// Zonotope volume is blind to generator signs and ordering.
    #[test]
    fn volume_ignores_generator_signs_and_order(
        gens in prop::collection::vec((rational(), rational()), 2..=5),
        flips in prop::collection::vec(any::<bool>(), 5),
        rotation in 0usize..5,
    ) {
        let original: Vec<Vec<Rat>> = gens.iter()
            .map(|(a, b)| vec![a.clone(), b.clone()])
            .collect();
        let mut mangled: Vec<Vec<Rat>> = original.iter().zip(flips.iter())
            .map(|(g, &flip)| if flip { vec![-&g[0], -&g[1]] } else { g.clone() })
            .collect();
        let shift = rotation % mangled.len();
        mangled.rotate_left(shift);

        // Rank-deficient generator sets have no volume; skip those draws.
        let before = match Zonotope::new(2, original).unwrap().volume() {
            Ok(v) => v,
            Err(_) => return Ok(()),
        };
        let after = Zonotope::new(2, mangled).unwrap().volume().unwrap();
        prop_assert_eq!(before, after);
    }

    /// Canonicalization is idempotent and absorbs sign flips and ordering.
    #[test]
    fn canonical_form_is_a_fixed_point(
        gens in prop::collection::vec((rational(), rational()), 1..=5),
        flips in prop::collection::vec(any::<bool>(), 5),
        rotation in 0usize..5,
    ) {
        let original: Vec<Vec<Rat>> = gens.iter()
            .map(|(a, b)| vec![a.clone(), b.clone()])
            .collect();
        let mut mangled: Vec<Vec<Rat>> = original.iter().zip(flips.iter())
            .map(|(g, &flip)| if flip { vec![-&g[0], -&g[1]] } else { g.clone() })
            .collect();
        let shift = rotation % mangled.len();
        mangled.rotate_left(shift);

        let canon = Zonotope::new(2, original).unwrap().canonical().unwrap();
        let canon_mangled = Zonotope::new(2, mangled).unwrap().canonical().unwrap();
        prop_assert_eq!(&canon, &canon_mangled);
        prop_assert_eq!(&canon.canonical().unwrap(), &canon);
    }

    /// Rational text round-trips exactly through the wire format.
    #[test]
    fn rational_text_round_trips(n in -1000i64..=1000, d in 1i64..=999) {
        let value = frac(n, d);
        prop_assert_eq!(parse_rat(&format_rat(&value)).unwrap(), value);
    }

    /// Matrices round-trip exactly through their JSON document form.
    #[test]
    fn matrix_wire_round_trips(
        (rows, cols) in (1usize..=4, 1usize..=4),
        seed_rows in rational_rows(4, 4),
    ) {
        let data: Vec<Vec<Rat>> = seed_rows.into_iter().take(rows)
            .map(|r| r.into_iter().take(cols).collect())
            .collect();
        let m = RationalMatrix::from_rows(data).unwrap();
        let doc = wire::matrix_to_value(&m).to_string();
        prop_assert_eq!(wire::matrix_from_str(&doc).unwrap(), m);
    }

    /// Complementing a subset twice returns the original subset.
    #[test]
    fn subset_complement_is_an_involution(
        (m, picks) in (2usize..=8).prop_flat_map(|m| {
            (Just(m), prop::collection::btree_set(1usize..=m, 1..m))
        }),
    ) {
        let subset = SubsetIndex::new(picks.into_iter().collect()).unwrap();
        let complement = subset.complement(m);
        prop_assert_eq!(complement.complement(m), subset);
    }

    /// No projection of the outer cube can have a smaller image than the
    /// certified minimum: the ratio never dips below one.
    #[test]
    fn projections_never_beat_the_minimum(
        rows in rational_rows(4, 2),
        seed in any::<u64>(),
    ) {
        let y = RationalMatrix::from_rows(rows).unwrap();
        let space = match make_space(y) {
            Ok(space) => space,
            // Rank-deficient presentations are rejected upstream.
            Err(_) => return Ok(()),
        };
        let proj = random_projection(&space, seed).unwrap();
        prop_assert!(volume_ratio(&space, &proj) >= rat(1));
    }

    /// A parallelepiped tiles by the lattice of its doubled generators,
    /// and the lattice determinant matches the volume exactly.
    #[test]
    fn parallelepipeds_tile_by_doubled_generators(
        a in rational(), b in rational(), c in rational(), d in rational(),
        seed in any::<u64>(),
    ) {
        let det = &a * &d - &b * &c;
        prop_assume!(det != rat(0));
        let z = Zonotope::new(2, vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]).unwrap();
        // Lattice vectors are the columns of the basis: twice each generator.
        let basis = RationalMatrix::from_rows(vec![
            vec![&a * &rat(2), &c * &rat(2)],
            vec![&b * &rat(2), &d * &rat(2)],
        ]).unwrap();
        let lattice = Lattice::new(basis).unwrap();
        prop_assert!(det_volume_check(&z, &lattice).unwrap());
        let verdict = tile_verify(&z, &lattice, &rat(3), 40, seed).unwrap();
        prop_assert!(verdict.passed, "{:?}", verdict);
    }
}
