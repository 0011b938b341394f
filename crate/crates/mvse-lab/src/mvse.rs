//! Polyhedral normed spaces inside ℓ∞^m, projections onto them, and the
//! exact minimal-enlargement volume functional.
//!
//! A d-dimensional polyhedral space is presented by an m×d matrix Y of full
//! column rank: the columns are a basis, the rows are the coordinate
//! functionals of ℓ∞^m restricted to the subspace. A projection of ℓ∞^m
//! onto the subspace is presented by a d×m matrix A with A·Y = I; its image
//! of the unit cube is, in Y-basis coordinates, the zonotope generated by
//! the columns of A.
//!
//! The central quantity is the volume ratio
//! `max_S |u_S| · Σ_S |w_S|`, where u and w are the d×d-minor vectors of Y
//! and Aᵀ. Because Σ_S u_S·w_S = det(A·Y) = 1, the ratio is ≥ 1 for every
//! projection, with equality exactly at the minimal-volume images. All
//! volumes here are measured in Y-basis coordinates; every quantity the
//! library certifies is a ratio and independent of that normalization.
//!
//! When a ratio-1 projection has a non-parallelepiped image, the space
//! contains a two-dimensional subspace whose unit ball is an affinely
//! regular hexagon; [`hexagonal_subspace`] extracts it constructively.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::plucker::{plucker, subsets_lex, PluckerVector, SubsetIndex};
use crate::rat::{abs, rat, Rat};
use crate::zonotope::{
    classify_hexagon_vertices, parallel, polygon_from_slabs, HexagonClassification, Zonotope,
};

/// A polyhedral normed space presented inside ℓ∞^m, with the minor vector
/// of its presentation matrix cached.
#[derive(Clone, Debug)]
pub struct PolyhedralSpace {
    y: RationalMatrix,
    u: PluckerVector,
}

impl PolyhedralSpace {
    pub fn y(&self) -> &RationalMatrix {
        &self.y
    }

    /// Ambient dimension m.
    pub fn m(&self) -> usize {
        self.y.rows()
    }

    /// Subspace dimension d.
    pub fn d(&self) -> usize {
        self.y.cols()
    }

    /// The vector of d×d minors of Y, in lexicographic subset order.
    pub fn minors(&self) -> &PluckerVector {
        &self.u
    }
}

/// A projection of ℓ∞^m onto a polyhedral space, with the minor vector of
/// Aᵀ cached. Constructed only through [`make_projection`], which verifies
/// A·Y = I exactly.
#[derive(Clone, Debug)]
pub struct ProjectionSpec {
    a: RationalMatrix,
    w: PluckerVector,
}

impl ProjectionSpec {
    pub fn a(&self) -> &RationalMatrix {
        &self.a
    }

    /// The vector of d×d minors of Aᵀ, in lexicographic subset order.
    pub fn minors(&self) -> &PluckerVector {
        &self.w
    }

    /// The image of the unit cube in Y-basis coordinates: the canonical
    /// zonotope generated by the columns of A.
    pub fn image_zonotope(&self) -> Result<Zonotope> {
        let cols: Vec<Vec<Rat>> = (0..self.a.cols()).map(|c| self.a.col(c)).collect();
        Zonotope::new(self.a.rows(), cols)?.canonical()
    }
}

/// Build a space from its presentation matrix. Rejects rank-deficient Y.
pub fn make_space(y: RationalMatrix) -> Result<PolyhedralSpace> {
    let (m, d) = (y.rows(), y.cols());
    if m < d {
        return Err(Error::Shape {
            expected: "at least as many rows as columns".into(),
            got: format!("{m}x{d}"),
        });
    }
    let u = plucker(&y)?;
    if u.is_zero() {
        return Err(Error::RankDeficient {
            rank: y.rank(),
            needed: d,
            context: "space presentation matrix must have full column rank".into(),
        });
    }
    Ok(PolyhedralSpace { y, u })
}

/// Right-multiply Y by an invertible matrix so that d rows become the
/// identity and every d×d minor has absolute value ≤ 1, with the maximum 1
/// attained. The pivot block is the lexicographically first subset of rows
/// whose minor has maximal absolute value; that subset is returned with the
/// normalized space.
pub fn normalize_laa(space: &PolyhedralSpace) -> Result<(PolyhedralSpace, SubsetIndex)> {
    let max = space.u.max_abs();
    let pivot = space
        .u
        .iter()
        .find(|(_, v)| abs(v) == max)
        .map(|(s, _)| s)
        .expect("a full-rank presentation has a nonzero minor");
    let all_cols: Vec<usize> = (0..space.d()).collect();
    let block = space.y.submatrix(&pivot.zero_based(), &all_cols);
    let normalized = space.y.mul(&block.inverse()?)?;
    Ok((make_space(normalized)?, pivot))
}

/// Bind a projection matrix to a space, verifying A·Y = I exactly. On
/// failure the first offending entry is reported.
pub fn make_projection(space: &PolyhedralSpace, a: RationalMatrix) -> Result<ProjectionSpec> {
    let d = space.d();
    if a.rows() != d || a.cols() != space.m() {
        return Err(Error::Shape {
            expected: format!("{}x{} projection matrix", d, space.m()),
            got: format!("{}x{}", a.rows(), a.cols()),
        });
    }
    let prod = a.mul(&space.y)?;
    for r in 0..d {
        for c in 0..d {
            let expected = if r == c { Rat::one() } else { Rat::zero() };
            if prod[(r, c)] != expected {
                return Err(Error::Precondition(format!(
                    "A*Y must be the identity; entry ({},{}) is {}",
                    r + 1,
                    c + 1,
                    prod[(r, c)]
                )));
            }
        }
    }
    let w = plucker(&a.transpose())?;
    Ok(ProjectionSpec { a, w })
}

/// The exact volume ratio `max_S |u_S| · Σ_S |w_S|` of the projection
/// image against the minimal achievable volume. Always ≥ 1; equal to 1
/// exactly at minimal-volume projections.
pub fn volume_ratio(space: &PolyhedralSpace, proj: &ProjectionSpec) -> Rat {
    space.u.max_abs() * proj.w.sum_abs()
}

/// Volume of the minimal sufficient enlargement in Y-basis coordinates:
/// `2^d / max_S |u_S|`.
pub fn mvse_volume(space: &PolyhedralSpace) -> Rat {
    let two_d = rat(1i64 << space.d());
    two_d / space.u.max_abs()
}

/// Volume of the projection image in Y-basis coordinates:
/// `2^d · Σ_S |w_S|`. Agrees exactly with the zonotope volume of
/// [`ProjectionSpec::image_zonotope`].
pub fn image_volume(proj: &ProjectionSpec) -> Rat {
    let d = proj.a.rows();
    rat(1i64 << d) * proj.w.sum_abs()
}

/// The projection whose kernel is spanned by the coordinate functionals
/// outside S: A carries inverse(Y_S) in columns S and zeros elsewhere. Its
/// image is a parallelepiped and its ratio is `max|u| / |u_S|`.
pub fn coordinate_projection(
    space: &PolyhedralSpace,
    s: &SubsetIndex,
) -> Result<ProjectionSpec> {
    let d = space.d();
    if s.len() != d {
        return Err(Error::Shape {
            expected: format!("subset of {d} rows"),
            got: format!("{} rows", s.len()),
        });
    }
    let all_cols: Vec<usize> = (0..d).collect();
    let block = space.y.submatrix(&s.zero_based(), &all_cols);
    let inv = block.inverse().map_err(|_| Error::Singular {
        context: format!("rows {s} of the presentation matrix"),
    })?;
    let mut a = RationalMatrix::zeros(d, space.m());
    for (j, &col) in s.zero_based().iter().enumerate() {
        for r in 0..d {
            a.set(r, col, inv[(r, j)].clone());
        }
    }
    make_projection(space, a)
}

/// All row subsets S with |u_S| maximal — exactly the coordinate
/// projections whose parallelepiped images have minimal volume.
pub fn enumerate_parallelepiped_mvse(space: &PolyhedralSpace) -> Vec<SubsetIndex> {
    let max = space.u.max_abs();
    space
        .u
        .iter()
        .filter(|(_, v)| abs(v) == max)
        .map(|(s, _)| s)
        .collect()
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=9);
    Rat::new(num.into(), den.into())
}

/// Base point of the affine family of valid projections: the coordinate
/// projection at the lexicographically first invertible row subset.
fn base_projection(space: &PolyhedralSpace) -> ProjectionSpec {
    let s = space
        .u
        .iter()
        .find(|(_, v)| !v.is_zero())
        .map(|(s, _)| s)
        .expect("a full-rank presentation has a nonzero minor");
    coordinate_projection(space, &s).expect("a nonzero minor yields an invertible block")
}

/// A seeded random valid projection: A = A₀ + C·W, where A₀ is a fixed
/// coordinate projection, the rows of W span the left null space of Y, and
/// C is a random rational d×(m−d) matrix. A·Y = I holds by construction
/// (and is re-verified). Deterministic per seed.
pub fn random_projection(space: &PolyhedralSpace, seed: u64) -> Result<ProjectionSpec> {
    let base = base_projection(space);
    let kernel = space.y.left_kernel_basis();
    if kernel.is_empty() {
        return Ok(base);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    perturbed_projection(space, &base, &kernel, &mut rng)
}

fn perturbed_projection(
    space: &PolyhedralSpace,
    base: &ProjectionSpec,
    kernel: &[Vec<Rat>],
    rng: &mut ChaCha8Rng,
) -> Result<ProjectionSpec> {
    let d = space.d();
    let m = space.m();
    let mut a = base.a().clone();
    for r in 0..d {
        let coeffs: Vec<Rat> = (0..kernel.len()).map(|_| random_rat(rng)).collect();
        for c in 0..m {
            let mut entry = a[(r, c)].clone();
            for (k, coeff) in kernel.iter().zip(&coeffs) {
                entry += coeff * &k[c];
            }
            a.set(r, c, entry);
        }
    }
    make_projection(space, a)
}

/// Outcome of [`minimize_ratio_search`].
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub projection: ProjectionSpec,
    pub ratio: Rat,
}

/// Best projection found by exact enumeration of all coordinate
/// projections plus a seeded random search over the affine family of valid
/// projections. The result is never worse than the best coordinate
/// projection — which already attains the global minimum ratio 1 at every
/// maximal minor — so the random phase serves as an independent probe, not
/// as the guarantee.
pub fn minimize_ratio_search(
    space: &PolyhedralSpace,
    restarts: usize,
    seed: u64,
) -> Result<SearchOutcome> {
    let mut best: Option<(Rat, ProjectionSpec)> = None;
    for s in subsets_lex(space.m(), space.d()) {
        if space.u.get(&s)?.is_zero() {
            continue;
        }
        let proj = coordinate_projection(space, &s)?;
        let ratio = volume_ratio(space, &proj);
        if best.as_ref().map_or(true, |(b, _)| ratio < *b) {
            best = Some((ratio, proj));
        }
    }
    let (mut best_ratio, mut best_proj) = best.expect("full rank gives a coordinate projection");
    let kernel = space.y.left_kernel_basis();
    if !kernel.is_empty() {
        let base = base_projection(space);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..restarts {
            let proj = perturbed_projection(space, &base, &kernel, &mut rng)?;
            let ratio = volume_ratio(space, &proj);
            if ratio < best_ratio {
                best_ratio = ratio;
                best_proj = proj;
            }
        }
    }
    Ok(SearchOutcome {
        projection: best_proj,
        ratio: best_ratio,
    })
}

/// Evaluate the three-term quadratic minor identity on rows of M: with
/// t(α,β) = det of the rows (γ_1,…,γ_{d−2}, κ_α, κ_β),
/// returns t(1,2)·t(3,4) − t(1,4)·t(3,2) + t(2,4)·t(3,1), which is 0 for
/// every matrix. Row indices are 1-based and must be d+2 distinct values.
pub fn plucker_relation_check(
    m: &RationalMatrix,
    gammas: &[usize],
    kappas: &[usize; 4],
) -> Result<Rat> {
    let d = m.cols();
    if d < 2 || gammas.len() != d - 2 {
        return Err(Error::Shape {
            expected: format!("{} shared rows for {} columns", d.saturating_sub(2), d),
            got: format!("{} shared rows", gammas.len()),
        });
    }
    let mut seen: Vec<usize> = gammas.iter().chain(kappas.iter()).copied().collect();
    for &idx in &seen {
        if idx == 0 || idx > m.rows() {
            return Err(Error::Precondition(format!(
                "row index {idx} out of range 1..={}",
                m.rows()
            )));
        }
    }
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != d + 2 {
        return Err(Error::Precondition(
            "row indices must be distinct".into(),
        ));
    }
    let all_cols: Vec<usize> = (0..d).collect();
    let t = |alpha: usize, beta: usize| -> Result<Rat> {
        let mut rows: Vec<usize> = gammas.iter().map(|&g| g - 1).collect();
        rows.push(kappas[alpha - 1] - 1);
        rows.push(kappas[beta - 1] - 1);
        m.submatrix(&rows, &all_cols).det()
    };
    Ok(t(1, 2)? * t(3, 4)? - t(1, 4)? * t(3, 2)? + t(2, 4)? * t(3, 1)?)
}

/// First minimal linearly dependent subset of the canonical image-zonotope
/// generators, smallest cardinality first, lexicographic tie-break. `None`
/// when the image is a parallelepiped (canonical generators independent).
pub fn find_circuit(proj: &ProjectionSpec) -> Result<Option<SubsetIndex>> {
    let image = proj.image_zonotope()?;
    let gens = image.generators();
    Ok(circuit_of(gens, image.d()))
}

/// First (size, then lex) minimal dependent subset with ≥ 3 elements among
/// the given vectors, skipping subsets containing a zero vector or a
/// parallel pair — any dependent subset that survives the skip at the
/// smallest size is automatically minimal. Indices are 1-based into
/// `vectors`.
fn circuit_of(vectors: &[Vec<Rat>], d: usize) -> Option<SubsetIndex> {
    let n = vectors.len();
    let zero: Vec<bool> = vectors
        .iter()
        .map(|v| v.iter().all(Rat::is_zero))
        .collect();
    for k in 3..=(d + 1).min(n) {
        'subset: for s in subsets_lex(n, k) {
            let picked = s.zero_based();
            for (pos, &i) in picked.iter().enumerate() {
                if zero[i] {
                    continue 'subset;
                }
                for &j in &picked[pos + 1..] {
                    if parallel(&vectors[i], &vectors[j]) {
                        continue 'subset;
                    }
                }
            }
            let rows: Vec<Vec<Rat>> = picked.iter().map(|&i| vectors[i].clone()).collect();
            let mat = RationalMatrix::from_rows(rows).expect("nonempty subset");
            if mat.rank() < k {
                return Some(s);
            }
        }
    }
    None
}

/// Constructive extraction of a planar subspace with hexagonal ball.
#[derive(Clone, Debug)]
pub struct HexagonReport {
    /// Basis of the planar subspace, as vectors in the original ℓ∞^m
    /// coordinates. Both lie in the column span of Y.
    pub basis_pair: (Vec<Rat>, Vec<Rat>),
    /// The coordinate order (1-based original row indices) in which
    /// `normalized_matrix` is written.
    pub row_order: Vec<usize>,
    /// The m×d presentation after both basis changes: ±identity in the top
    /// d rows, the row (1, 1, *, …) at position d+1, and (b_i, c_i, *, …)
    /// rows below. All d×d minors have absolute value ≤ 1.
    pub normalized_matrix: RationalMatrix,
    /// The minimal dependent set of projection-matrix columns (1-based)
    /// that witnesses the non-parallelepiped image.
    pub circuit: SubsetIndex,
    /// The (b_i, c_i) pairs from rows d+2..m of the normalized matrix.
    pub b_c_rows: Vec<(Rat, Rat)>,
    /// The bound checks |b_i| ≤ 1, |c_i| ≤ 1, |b_i − c_i| ≤ 1 (one triple
    /// of booleans per row, all guaranteed true).
    pub checks: Vec<(bool, bool, bool)>,
    /// Vertices of the planar unit ball, counterclockwise from the
    /// lexicographically smallest.
    pub ball_vertices: Vec<Vec<Rat>>,
    /// Classification of the ball — always an affinely regular hexagon.
    pub classification: HexagonClassification,
}

impl HexagonReport {
    pub fn all_checks_hold(&self) -> bool {
        self.checks.iter().all(|&(b, c, d)| b && c && d)
    }

    pub fn is_affinely_regular(&self) -> bool {
        matches!(
            self.classification,
            HexagonClassification::HexagonAffinelyRegular { .. }
        )
    }
}

/// Extract a two-dimensional subspace whose unit ball (in the sup norm
/// inherited from ℓ∞^m) is an affinely regular hexagon, from a witness
/// projection with volume ratio exactly 1 and a non-parallelepiped image.
///
/// The construction follows the minimal dependent column set of the
/// witness: its first k−1 columns extend to a row basis r of the
/// presentation; because the ratio is 1, every nonzero minor of Aᵀ forces
/// the matching minor of Y to be maximal, so pivoting Y at r yields a
/// presentation with identity top, all minors ≤ 1 in absolute value, and a
/// ±1 pair in the first two entries of the dependent row — sign-flipping
/// the first two columns produces the normal form whose first two columns
/// span the hexagonal subspace. Internal steps that are mathematically
/// forced by the verified preconditions are asserted, not returned as
/// errors: a failure there is a defect, not an input condition.
pub fn hexagonal_subspace(
    space: &PolyhedralSpace,
    witness: &ProjectionSpec,
) -> Result<HexagonReport> {
    let d = space.d();
    let m = space.m();
    let ratio = volume_ratio(space, witness);
    if !ratio.is_one() {
        return Err(Error::Precondition(format!(
            "witness must have volume ratio exactly 1, got {ratio}"
        )));
    }
    // Minimal dependent column set of A itself (not of the merged image):
    // its indices address rows of the presentation.
    let a_cols: Vec<Vec<Rat>> = (0..m).map(|c| witness.a.col(c)).collect();
    let circuit = circuit_of(&a_cols, d).ok_or_else(|| {
        Error::Precondition(
            "witness image is a parallelepiped; no hexagonal subspace is extracted from it"
                .into(),
        )
    })?;
    let circ = circuit.zero_based();
    let k = circ.len();
    let (head, last) = (&circ[..k - 1], circ[k - 1]);

    // Extend the first k−1 circuit columns to a column basis of A, taking
    // candidate indices in ascending order outside the circuit.
    let mut basis_rows: Vec<usize> = head.to_vec();
    let basis_mat = |rows: &[usize]| -> RationalMatrix {
        let picked: Vec<Vec<Rat>> = rows.iter().map(|&i| a_cols[i].clone()).collect();
        RationalMatrix::from_rows(picked).expect("nonempty row set")
    };
    for cand in 0..m {
        if basis_rows.len() == d {
            break;
        }
        if circ.contains(&cand) {
            continue;
        }
        let mut trial = basis_rows.clone();
        trial.push(cand);
        if basis_mat(&trial).rank() == trial.len() {
            basis_rows.push(cand);
        }
    }
    assert_eq!(
        basis_rows.len(),
        d,
        "defect: circuit head must extend to a basis of the projection columns"
    );

    // Reorder the ambient coordinates: basis rows, then the dependent row,
    // then the rest ascending.
    let mut row_order: Vec<usize> = basis_rows.clone();
    row_order.push(last);
    let leading = row_order.clone();
    row_order.extend((0..m).filter(|i| !leading.contains(i)));
    let y_perm = space.y.permute_rows(&row_order);

    // Pivot at the basis rows. The ratio-1 equality forces |det| of this
    // block to be the maximal minor, so all minors of the result are ≤ 1.
    let all_cols: Vec<usize> = (0..d).collect();
    let top: Vec<usize> = (0..d).collect();
    let block = y_perm.submatrix(&top, &all_cols);
    let mut z = y_perm.mul(
        &block
            .inverse()
            .expect("defect: a nonzero projection minor forces an invertible block"),
    )?;

    // The dependent row now starts with two entries of absolute value 1.
    for col in [0usize, 1] {
        let v = &z[(d, col)];
        assert!(
            v.is_one() || (-v).is_one(),
            "defect: dependent-row entry {col} must be a sign, got {v}"
        );
        if v.is_negative() {
            for r in 0..m {
                let flipped = -&z[(r, col)];
                z.set(r, col, flipped);
            }
        }
    }
    debug_assert!(plucker(&z)?.max_abs().is_one());

    let b_c_rows: Vec<(Rat, Rat)> = (d + 1..m)
        .map(|r| (z[(r, 0)].clone(), z[(r, 1)].clone()))
        .collect();
    let one = Rat::one();
    let checks: Vec<(bool, bool, bool)> = b_c_rows
        .iter()
        .map(|(b, c)| (abs(b) <= one, abs(c) <= one, abs(&(b - c)) <= one))
        .collect();
    assert!(
        checks.iter().all(|&(b, c, d)| b && c && d),
        "defect: minor bounds must cap the planar rows"
    );

    // Unit ball of the span of the first two columns: the sup norm gives
    // one slab per ambient coordinate.
    let slabs: Vec<(Vec<Rat>, Rat)> = (0..m)
        .map(|r| (vec![z[(r, 0)].clone(), z[(r, 1)].clone()], one.clone()))
        .collect();
    let ball_vertices = polygon_from_slabs(&slabs)?;
    let classification = classify_hexagon_vertices(&ball_vertices);
    assert!(
        matches!(
            classification,
            HexagonClassification::HexagonAffinelyRegular { .. }
        ),
        "defect: the planar ball must be an affinely regular hexagon"
    );

    // Report the basis pair in the original coordinate order.
    let mut inverse_order = vec![0usize; m];
    for (pos, &orig) in row_order.iter().enumerate() {
        inverse_order[orig] = pos;
    }
    let unpermuted = z.permute_rows(&inverse_order);
    Ok(HexagonReport {
        basis_pair: (unpermuted.col(0), unpermuted.col(1)),
        row_order: row_order.iter().map(|&i| i + 1).collect(),
        normalized_matrix: z,
        circuit,
        b_c_rows,
        checks,
        ball_vertices,
        classification,
    })
}
