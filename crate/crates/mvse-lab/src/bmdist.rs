//! Distance upper bounds between origin-symmetric zonotopes at their given
//! positions, via support-function ratios.
//!
//! For two full-dimensional zonotopes `Z1`, `Z2` centered at the origin, the
//! product
//!
//! ```text
//!   sup_u h_{Z1}(u)/h_{Z2}(u) · sup_u h_{Z2}(u)/h_{Z1}(u)
//! ```
//!
//! over nonzero directions `u` bounds the Banach–Mazur distance between the
//! two normed spaces whose unit balls they are, *at the given position* (no
//! optimization over linear images is performed).
//!
//! In the plane the ratio of the two support functions is a ratio of
//! piecewise-linear positively homogeneous functions, and on each arc
//! between consecutive breakpoints it is a monotone linear-fractional
//! function; its extremes over all directions are therefore attained at
//! breakpoint directions — the directions orthogonal to some generator of
//! either zonotope.  Evaluating there is exact.
//!
//! In three dimensions the same evaluation over all facet normals of both
//! bodies plus a seeded batch of random rational directions yields a valid
//! lower estimate of the sup-product, reported as a heuristic bound with
//! its witness directions and labeled inexact.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::zonotope::{cross3, parallel, primitive_integer_direction, Zonotope};

/// Number of seeded random directions added in dimension 3.
pub const BM_SAMPLE_COUNT: usize = 200;

/// Seed used by [`bm_upper_bound`] for the dimension-3 samples.
pub const BM_DEFAULT_SEED: u64 = 0xB41A;

/// A positional distance bound together with the directions witnessing the
/// two extreme support-function ratios.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BmBound {
    /// `max_u r(u) / min_u r(u)` over the tested directions, where
    /// `r = h_{Z1}/h_{Z2}`.  Always at least 1.
    pub upper_bound: Rat,
    /// First tested direction attaining the maximal ratio.
    pub max_ratio_direction: Vec<Rat>,
    /// First tested direction attaining the minimal ratio.
    pub min_ratio_direction: Vec<Rat>,
    /// True in dimension 2, where the breakpoint evaluation is provably the
    /// supremum; false for the sampled dimension-3 estimate.
    pub exact: bool,
    /// Number of directions evaluated (breakpoints, facet normals, and —
    /// in dimension 3 — the seeded samples).
    pub directions_tested: usize,
}

/// Distance upper bound at the given position, with the default sample seed.
///
/// Exact in dimension 2 (breakpoint directions); heuristic in dimension 3
/// (facet normals of both bodies plus [`BM_SAMPLE_COUNT`] seeded rational
/// directions).  Errors on mismatched dimensions, on bodies that are not
/// full-dimensional, and on dimensions other than 2 and 3.
pub fn bm_upper_bound(z1: &Zonotope, z2: &Zonotope) -> Result<BmBound> {
    bm_upper_bound_seeded(z1, z2, BM_DEFAULT_SEED)
}

/// Same as [`bm_upper_bound`] with an explicit seed for the dimension-3
/// samples.  Dimension 2 uses no randomness, so the seed is irrelevant there.
pub fn bm_upper_bound_seeded(z1: &Zonotope, z2: &Zonotope, seed: u64) -> Result<BmBound> {
    let d = z1.d();
    if z2.d() != d {
        return Err(Error::Shape {
            expected: format!("two zonotopes in dimension {d}"),
            got: format!("dimensions {} and {}", d, z2.d()),
        });
    }
    for (label, z) in [("first", z1), ("second", z2)] {
        let rank = z.generator_matrix().rank();
        if rank < d {
            return Err(Error::RankDeficient {
                rank,
                needed: d,
                context: format!("{label} zonotope is not full-dimensional"),
            });
        }
    }
    let gens1 = z1.canonical()?.generators().to_vec();
    let gens2 = z2.canonical()?.generators().to_vec();

    let (directions, exact) = match d {
        2 => (breakpoint_directions(&gens1, &gens2), true),
        3 => {
            let mut dirs = facet_normal_directions(&gens1);
            for dir in facet_normal_directions(&gens2) {
                push_unless_parallel(&mut dirs, dir);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            dirs.extend((0..BM_SAMPLE_COUNT).map(|_| sample_direction(&mut rng)));
            (dirs, false)
        }
        _ => {
            return Err(Error::UnsupportedDimension {
                d,
                context: "distance bounds cover dimensions 2 and 3".into(),
            })
        }
    };

    let mut extremes: Option<(Rat, Vec<Rat>, Rat, Vec<Rat>)> = None;
    for u in directions.iter() {
        // h_{Z2}(u) > 0 for u ≠ 0 because Z2 is full-dimensional.
        let ratio = z1.support(u)? / z2.support(u)?;
        match &mut extremes {
            None => extremes = Some((ratio.clone(), u.clone(), ratio, u.clone())),
            Some((max, max_dir, min, min_dir)) => {
                if ratio > *max {
                    *max = ratio.clone();
                    *max_dir = u.clone();
                }
                if ratio < *min {
                    *min = ratio;
                    *min_dir = u.clone();
                }
            }
        }
    }
    let (max, max_dir, min, min_dir) =
        extremes.expect("full-dimensional bodies yield at least one direction");
    let upper_bound = max / &min;
    debug_assert!(upper_bound >= crate::rat::rat(1));
    Ok(BmBound {
        upper_bound,
        max_ratio_direction: max_dir,
        min_ratio_direction: min_dir,
        exact,
        directions_tested: directions.len(),
    })
}

/// The primitive integer representative of a nonzero direction: coprime
/// integer entries, positive first nonzero coordinate.  Canonical up to the
/// ray, so witnesses do not depend on how the inputs were scaled.
fn primitive(v: &[Rat]) -> Vec<Rat> {
    primitive_integer_direction(v)
        .into_iter()
        .map(Rat::from_integer)
        .collect()
}

/// Directions where either planar support function changes slope: the
/// orthogonal complements of all generators, made primitive and
/// deduplicated up to parallelism.
fn breakpoint_directions(gens1: &[Vec<Rat>], gens2: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut dirs: Vec<Vec<Rat>> = Vec::new();
    for g in gens1.iter().chain(gens2) {
        let orth = vec![-g[1].clone(), g[0].clone()];
        if orth.iter().all(Rat::is_zero) {
            continue;
        }
        push_unless_parallel(&mut dirs, primitive(&orth));
    }
    dirs
}

/// Facet normals of a 3-dimensional zonotope: cross products of all
/// non-parallel generator pairs, made primitive and deduplicated.
fn facet_normal_directions(gens: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut dirs: Vec<Vec<Rat>> = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in gens.iter().skip(i + 1) {
            let n = cross3(a, b);
            if n.iter().all(Rat::is_zero) {
                continue;
            }
            push_unless_parallel(&mut dirs, primitive(&n));
        }
    }
    dirs
}

fn push_unless_parallel(dirs: &mut Vec<Vec<Rat>>, candidate: Vec<Rat>) {
    if !dirs.iter().any(|d| parallel(d, &candidate)) {
        dirs.push(candidate);
    }
}

/// A nonzero random rational direction with small numerators and
/// denominators.
fn sample_direction(rng: &mut ChaCha8Rng) -> Vec<Rat> {
    loop {
        let v: Vec<Rat> = (0..3)
            .map(|_| Rat::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=9).into()))
            .collect();
        if !v.iter().all(Rat::is_zero) {
            return v;
        }
    }
}
