//! Minor vectors and compound-matrix identities.
//!
//! For an m×d matrix (m ≥ d) the Plücker vector collects all d×d row minors
//! in lexicographic subset order; this fixed order is shared by every module
//! and by the wire format. The Laplace expansion, the Cauchy–Binet pairing,
//! and the complementary-minor check for orthogonal matrices are all exact.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{dot, RationalMatrix};
use crate::rat::{format_rat, Rat};

/// Strictly increasing set of 1-based row indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetIndex(Vec<usize>);

impl SubsetIndex {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::Precondition("subset index must be nonempty".into()));
        }
        if indices[0] == 0 {
            return Err(Error::Precondition("subset indices are 1-based".into()));
        }
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "subset indices must be strictly increasing, got {indices:?}"
            )));
        }
        Ok(Self(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.0.binary_search(&idx).is_ok()
    }

    /// 0-based copies of the indices, for slicing matrices.
    pub fn zero_based(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i - 1).collect()
    }

    /// Complement within {1..m}, ascending.
    pub fn complement(&self, m: usize) -> Self {
        Self((1..=m).filter(|i| !self.contains(*i)).collect())
    }
}

impl std::fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.0
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All size-`d` subsets of {1..m} in lexicographic order.
pub fn subsets_lex(m: usize, d: usize) -> Vec<SubsetIndex> {
    let mut out = Vec::new();
    if d == 0 || d > m {
        return out;
    }
    let mut cur: Vec<usize> = (1..=d).collect();
    loop {
        out.push(SubsetIndex(cur.clone()));
        // Advance to the next lexicographic combination.
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < m - (d - 1 - i) {
                cur[i] += 1;
                for j in (i + 1)..d {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Sign of the permutation sending (1..m) to (S ascending, complement
/// ascending): `(-1)^{Σ (s_i - i)}`. Independent of m.
pub fn laplace_sign(s: &SubsetIndex) -> i32 {
    let shift: usize = s
        .indices()
        .iter()
        .enumerate()
        .map(|(i, &si)| si - (i + 1))
        .sum();
    if shift % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Vector of all d×d row minors of an m×d matrix, lexicographic subset order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector {
    m: usize,
    d: usize,
    values: Vec<Rat>,
}

impl PluckerVector {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Minor values in lexicographic subset order.
    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn subsets(&self) -> Vec<SubsetIndex> {
        subsets_lex(self.m, self.d)
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubsetIndex, &Rat)> {
        self.subsets().into_iter().zip(self.values.iter())
    }

    pub fn get(&self, s: &SubsetIndex) -> Result<&Rat> {
        let pos = self
            .subsets()
            .iter()
            .position(|t| t == s)
            .ok_or_else(|| Error::Precondition(format!("subset {s} not valid for m={}", self.m)))?;
        Ok(&self.values[pos])
    }

    /// max_S |u_S|.
    pub fn max_abs(&self) -> Rat {
        self.values
            .iter()
            .map(|v| v.abs())
            .max()
            .expect("plucker vector is nonempty")
    }

    /// Σ_S |u_S|.
    pub fn sum_abs(&self) -> Rat {
        self.values.iter().map(|v| v.abs()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Rat::is_zero)
    }
}

/// All d×d row minors of an m×d matrix (m ≥ d), lexicographic subset order.
pub fn plucker(mat: &RationalMatrix) -> Result<PluckerVector> {
    let (m, d) = (mat.rows(), mat.cols());
    if m < d {
        return Err(Error::Shape {
            expected: "at least as many rows as columns".into(),
            got: format!("{m}x{d}"),
        });
    }
    let all_cols: Vec<usize> = (0..d).collect();
    let mut values = Vec::new();
    for s in subsets_lex(m, d) {
        values.push(mat.submatrix(&s.zero_based(), &all_cols).det()?);
    }
    Ok(PluckerVector { m, d, values })
}

/// Laplace expansion of `det [F | G]` along the first d columns:
/// `Σ_S θ_S · minor_S(F) · minor_{S^c}(G)` for F m×d, G m×(m−d).
pub fn laplace_expand(f: &RationalMatrix, g: &RationalMatrix) -> Result<Rat> {
    let m = f.rows();
    let d = f.cols();
    if g.rows() != m || g.cols() != m - d {
        return Err(Error::Shape {
            expected: format!("{m}x{} companion block", m - d),
            got: format!("{}x{}", g.rows(), g.cols()),
        });
    }
    let f_cols: Vec<usize> = (0..d).collect();
    let g_cols: Vec<usize> = (0..(m - d)).collect();
    let mut acc = Rat::zero();
    for s in subsets_lex(m, d) {
        let u = f.submatrix(&s.zero_based(), &f_cols).det()?;
        if u.is_zero() {
            continue;
        }
        let comp = s.complement(m);
        let v = if comp.is_empty() {
            Rat::one()
        } else {
            g.submatrix(&comp.zero_based(), &g_cols).det()?
        };
        let term = &u * &v;
        if laplace_sign(&s) > 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Cauchy–Binet pairing `Σ_S u_S w_S`. When `u = plucker(Y)` and
/// `w = plucker(A^T)` this equals `det(A·Y)`.
pub fn cauchy_binet(u: &PluckerVector, w: &PluckerVector) -> Result<Rat> {
    if u.m != w.m || u.d != w.d {
        return Err(Error::Shape {
            expected: format!("matching minor shapes (m={}, d={})", u.m, u.d),
            got: format!("m={}, d={}", w.m, w.d),
        });
    }
    Ok(u.values
        .iter()
        .zip(&w.values)
        .map(|(a, b)| a * b)
        .sum())
}

/// Outcome of the complementary-minor identity check on an orthogonal
/// matrix: minors of the first d columns against complementary minors of the
/// remaining columns, with a single global sign `sigma = det(Q)`.
#[derive(Clone, Debug)]
pub struct ComplementaryReport {
    /// The global sign relating the two minor families (±1).
    pub sigma: i32,
    /// Every subset satisfies `w_S = sigma · θ_S · v_{S^c}`.
    pub signs_match: bool,
    /// Σ w_S² = 1.
    pub w_norm_is_one: bool,
    /// Σ v_{S^c}² = 1.
    pub v_norm_is_one: bool,
}

impl ComplementaryReport {
    pub fn passed(&self) -> bool {
        self.signs_match && self.w_norm_is_one && self.v_norm_is_one
    }
}

/// Check the compound-orthogonality identities for an exactly orthogonal
/// m×m matrix split after column d (1 ≤ d < m).
pub fn complementary_check(q: &RationalMatrix, d: usize) -> Result<ComplementaryReport> {
    let m = q.rows();
    if q.cols() != m {
        return Err(Error::Shape {
            expected: "square matrix".into(),
            got: format!("{}x{}", q.rows(), q.cols()),
        });
    }
    if d == 0 || d >= m {
        return Err(Error::Precondition(format!(
            "column split must satisfy 1 <= d < m, got d={d}, m={m}"
        )));
    }
    let qtq = q.transpose().mul(q)?;
    if qtq != RationalMatrix::identity(m) {
        return Err(Error::Precondition(
            "matrix is not orthogonal (Q^T Q differs from the identity)".into(),
        ));
    }
    let all_rows: Vec<usize> = (0..m).collect();
    let first: Vec<usize> = (0..d).collect();
    let rest: Vec<usize> = (d..m).collect();
    let w = plucker(&q.submatrix(&all_rows, &first))?;
    let g = q.submatrix(&all_rows, &rest);
    let g_cols: Vec<usize> = (0..(m - d)).collect();

    let det_q = q.det()?;
    let sigma = if det_q == Rat::one() {
        1
    } else if det_q == -Rat::one() {
        -1
    } else {
        // Orthogonality already verified; this cannot happen.
        return Err(Error::Precondition(
            "orthogonal matrix must have determinant ±1".into(),
        ));
    };

    let mut signs_match = true;
    let mut w_sq = Rat::zero();
    let mut v_sq = Rat::zero();
    for (s, w_s) in w.iter() {
        let v_s = g.submatrix(&s.complement(m).zero_based(), &g_cols).det()?;
        w_sq += w_s * w_s;
        v_sq += &v_s * &v_s;
        let theta = laplace_sign(&s);
        let mut expected = v_s;
        if theta * sigma < 0 {
            expected = -expected;
        }
        if *w_s != expected {
            signs_match = false;
        }
    }
    Ok(ComplementaryReport {
        sigma,
        signs_match,
        w_norm_is_one: w_sq.is_one(),
        v_norm_is_one: v_sq.is_one(),
    })
}

/// Outcome of the determinant-perturbation bound
/// `|det[z, x_2, …, x_d] − det[x_1, …, x_d]| ≤ l · m_bound^{d−1}`.
#[derive(Clone, Debug)]
pub struct DetPerturbReport {
    pub lhs: Rat,
    pub rhs: Rat,
    pub holds: bool,
}

impl std::fmt::Display for DetPerturbReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "|Δdet| = {} vs bound {} ({})",
            format_rat(&self.lhs),
            format_rat(&self.rhs),
            if self.holds { "holds" } else { "violated" }
        )
    }
}

/// Evaluate the perturbation bound for columns `x_1..x_d` and replacement
/// `z` for `x_1`. Preconditions (checked exactly, on squares): every
/// Euclidean norm ‖x_i‖ for i ≥ 2 is at most `m_bound`, and ‖z − x_1‖ is at
/// most `l`.
pub fn det_perturb_bound(
    x: &[Vec<Rat>],
    z: &[Rat],
    l: &Rat,
    m_bound: &Rat,
) -> Result<DetPerturbReport> {
    let d = x.len();
    if d == 0 {
        return Err(Error::Precondition("need at least one column".into()));
    }
    if x.iter().any(|c| c.len() != d) || z.len() != d {
        return Err(Error::Shape {
            expected: format!("{d} columns of length {d} plus z of length {d}"),
            got: "ragged input".into(),
        });
    }
    if l.is_negative() || m_bound.is_negative() {
        return Err(Error::Precondition("bounds must be nonnegative".into()));
    }
    let m_sq = m_bound * m_bound;
    for (i, xi) in x.iter().enumerate().skip(1) {
        let norm_sq = dot(xi, xi);
        if norm_sq > m_sq {
            return Err(Error::Precondition(format!(
                "column {} has squared norm {} exceeding m_bound^2 = {}",
                i + 1,
                format_rat(&norm_sq),
                format_rat(&m_sq)
            )));
        }
    }
    let diff: Vec<Rat> = z.iter().zip(&x[0]).map(|(a, b)| a - b).collect();
    let diff_sq = dot(&diff, &diff);
    let l_sq = l * l;
    if diff_sq > l_sq {
        return Err(Error::Precondition(format!(
            "perturbation has squared norm {} exceeding l^2 = {}",
            format_rat(&diff_sq),
            format_rat(&l_sq)
        )));
    }

    let from_cols = |cols: Vec<Vec<Rat>>| -> Result<RationalMatrix> {
        let mut rows = vec![Vec::with_capacity(d); d];
        for col in &cols {
            for (r, entry) in col.iter().enumerate() {
                rows[r].push(entry.clone());
            }
        }
        RationalMatrix::from_rows(rows)
    };
    let mut perturbed = vec![z.to_vec()];
    perturbed.extend(x.iter().skip(1).cloned());
    let det_perturbed = from_cols(perturbed)?.det()?;
    let det_original = from_cols(x.to_vec())?.det()?;
    let lhs = (det_perturbed - det_original).abs();
    let mut rhs = l.clone();
    for _ in 1..d {
        rhs *= m_bound;
    }
    let holds = lhs <= rhs;
    Ok(DetPerturbReport { lhs, rhs, holds })
}
