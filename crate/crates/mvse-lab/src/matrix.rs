//! Dense matrices over exact rationals.
//!
//! Row-major storage; all elimination-based routines (determinant, rank,
//! inverse, kernels) are exact. Row and column indices in this module are
//! 0-based; the subset machinery in [`crate::plucker`] exposes the 1-based
//! convention used on the wire.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{rat, Rat};

/// Dense row-major matrix of rationals. Always has at least one row and
/// one column.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl std::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| crate::rat::format_rat(&self[(r, c)]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape {
                expected: "at least one row and one column".into(),
                got: format!("{rows}x{cols}"),
            });
        }
        if data.len() != rows * cols {
            return Err(Error::Shape {
                expected: format!("{rows}x{cols} = {} entries", rows * cols),
                got: format!("{} entries", data.len()),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape {
                expected: format!("rows of equal length {c}"),
                got: "ragged rows".into(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Build from integer literals; convenient in tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| rat(n)).collect())
                .collect(),
        )
        .expect("integer literal matrix must be rectangular and nonempty")
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Rat::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rat::one();
        }
        Self { rows: n, cols: n, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rat) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self[(r, c)].clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                expected: format!("inner dimensions to agree ({} vs {})", self.cols, other.rows),
                got: format!("{}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols),
            });
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    acc += &self[(r, k)] * &other[(k, c)];
                }
                data.push(acc);
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::Shape {
                expected: format!("vector of length {}", self.cols),
                got: format!("length {}", v.len()),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    acc += &self[(r, c)] * &v[c];
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape {
                expected: format!("{}x{}", self.rows, self.cols),
                got: format!("{}x{}", other.rows, other.cols),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Submatrix on the given 0-based row and column indices, in the order
    /// listed (duplicates allowed; callers control ordering).
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &r in row_idx {
            for &c in col_idx {
                data.push(self[(r, c)].clone());
            }
        }
        Self {
            rows: row_idx.len(),
            cols: col_idx.len(),
            data,
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn concat_cols(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Shape {
                expected: format!("{} rows", self.rows),
                got: format!("{} rows", other.rows),
            });
        }
        let mut data = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Self::new(self.rows, self.cols + other.cols, data)
    }

    /// Rows reordered by `order` (0-based original index per new position).
    pub fn permute_rows(&self, order: &[usize]) -> Self {
        self.submatrix(order, &(0..self.cols).collect::<Vec<_>>())
    }

    /// Exact determinant by fraction-free-in-spirit Gaussian elimination
    /// (plain rational elimination; exactness comes from the scalar type).
    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::Shape {
                expected: "square matrix".into(),
                got: format!("{}x{}", self.rows, self.cols),
            });
        }
        let n = self.rows;
        let mut m = self.data.clone();
        let at = |m: &Vec<Rat>, r: usize, c: usize| m[r * n + c].clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !m[r * n + col].is_zero());
            let Some(p) = pivot_row else {
                return Ok(Rat::zero());
            };
            if p != col {
                for c in 0..n {
                    m.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = at(&m, col, col);
            det *= &pivot;
            for r in (col + 1)..n {
                if m[r * n + col].is_zero() {
                    continue;
                }
                let factor = &m[r * n + col] / &pivot;
                for c in col..n {
                    let sub = &factor * &m[col * n + c];
                    m[r * n + c] -= sub;
                }
            }
        }
        Ok(det)
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.data.clone();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let pivot_row = (rank..rows).find(|&r| !m[r * cols + col].is_zero());
            let Some(p) = pivot_row else { continue };
            if p != rank {
                for c in 0..cols {
                    m.swap(p * cols + c, rank * cols + c);
                }
            }
            let pivot = m[rank * cols + col].clone();
            for r in (rank + 1)..rows {
                if m[r * cols + col].is_zero() {
                    continue;
                }
                let factor = &m[r * cols + col] / &pivot;
                for c in col..cols {
                    let sub = &factor * &m[rank * cols + c];
                    m[r * cols + c] -= sub;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Exact inverse; `Err(Singular)` if the matrix is not invertible.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Shape {
                expected: "square matrix".into(),
                got: format!("{}x{}", self.rows, self.cols),
            });
        }
        let n = self.rows;
        // Gauss-Jordan on [self | I].
        let mut m = Vec::with_capacity(n * 2 * n);
        for r in 0..n {
            m.extend_from_slice(self.row(r));
            for c in 0..n {
                m.push(if r == c { Rat::one() } else { Rat::zero() });
            }
        }
        let w = 2 * n;
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !m[r * w + col].is_zero());
            let Some(p) = pivot_row else {
                return Err(Error::Singular {
                    context: format!("{n}x{n} matrix has no pivot in column {col}"),
                });
            };
            if p != col {
                for c in 0..w {
                    m.swap(p * w + c, col * w + c);
                }
            }
            let pivot = m[col * w + col].clone();
            for c in 0..w {
                m[col * w + c] /= &pivot;
            }
            for r in 0..n {
                if r == col || m[r * w + col].is_zero() {
                    continue;
                }
                let factor = m[r * w + col].clone();
                for c in 0..w {
                    let sub = &factor * &m[col * w + c];
                    m[r * w + c] -= sub;
                }
            }
        }
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(m[r * w + n + c].clone());
            }
        }
        Self::new(n, n, data)
    }

    /// Basis of the left kernel `{ v : v^T self = 0 }`, as row vectors.
    /// Deterministic: reduced row echelon form of the transpose, free
    /// variables in ascending order. May be empty (full row rank).
    pub fn left_kernel_basis(&self) -> Vec<Vec<Rat>> {
        // Left kernel of self = kernel of self^T.
        let t = self.transpose();
        let (rows, cols) = (t.rows, t.cols);
        let mut m = t.data.clone();
        let mut pivot_cols = Vec::new();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let pivot_row = (rank..rows).find(|&r| !m[r * cols + col].is_zero());
            let Some(p) = pivot_row else { continue };
            if p != rank {
                for c in 0..cols {
                    m.swap(p * cols + c, rank * cols + c);
                }
            }
            let pivot = m[rank * cols + col].clone();
            for c in 0..cols {
                m[rank * cols + c] /= &pivot;
            }
            for r in 0..rows {
                if r == rank || m[r * cols + col].is_zero() {
                    continue;
                }
                let factor = m[r * cols + col].clone();
                for c in 0..cols {
                    let sub = &factor * &m[rank * cols + c];
                    m[r * cols + c] -= sub;
                }
            }
            pivot_cols.push(col);
            rank += 1;
        }
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); cols];
            v[free] = Rat::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[r * cols + free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn abs_entries_le(&self, bound: &Rat) -> bool {
        self.data.iter().all(|e| e.abs() <= *bound)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

/// Dot product of two equal-length rational slices.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;

    #[test]
    fn det_small_cases() {
        assert_eq!(RationalMatrix::identity(3).det().unwrap(), rat(1));
        let m = RationalMatrix::from_i64(&[&[1, 1], &[-1, 1]]);
        assert_eq!(m.det().unwrap(), rat(2));
        let sing = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.det().unwrap(), rat(0));
    }

    #[test]
    fn det_matches_cofactor_expansion_oracle() {
        // Independent oracle: recursive cofactor expansion.
        fn cofactor_det(m: &RationalMatrix) -> Rat {
            let n = m.rows();
            if n == 1 {
                return m[(0, 0)].clone();
            }
            let mut acc = Rat::zero();
            let cols: Vec<usize> = (1..n).collect();
            for r in 0..n {
                if m[(r, 0)].is_zero() {
                    continue;
                }
                let rows: Vec<usize> = (0..n).filter(|&x| x != r).collect();
                let minor = cofactor_det(&m.submatrix(&rows, &cols));
                let term = &m[(r, 0)] * &minor;
                if r % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let m = RationalMatrix::from_rows(vec![
            vec![frac(1, 2), rat(3), rat(-1), rat(0)],
            vec![rat(2), frac(-1, 3), rat(4), rat(1)],
            vec![rat(0), rat(5), frac(1, 5), rat(-2)],
            vec![rat(1), rat(1), rat(1), rat(1)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), cofactor_det(&m));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = RationalMatrix::from_i64(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(2));
        assert_eq!(inv.mul(&m).unwrap(), RationalMatrix::identity(2));
    }

    #[test]
    fn inverse_rejects_singular() {
        let m = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(matches!(m.inverse(), Err(Error::Singular { .. })));
    }

    #[test]
    fn rank_counts_pivots() {
        assert_eq!(RationalMatrix::identity(4).rank(), 4);
        let m = RationalMatrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(m.rank(), 2);
        let flat = RationalMatrix::from_i64(&[&[1, 2], &[2, 4], &[3, 6]]);
        assert_eq!(flat.rank(), 1);
    }

    #[test]
    fn left_kernel_annihilates() {
        let y = RationalMatrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]);
        let basis = y.left_kernel_basis();
        assert_eq!(basis.len(), 1);
        for v in &basis {
            // v^T Y = 0
            for c in 0..y.cols() {
                let s: Rat = (0..y.rows()).map(|r| &v[r] * &y[(r, c)]).sum();
                assert!(s.is_zero());
            }
        }
        // Full-rank square matrix has empty left kernel.
        assert!(RationalMatrix::identity(3).left_kernel_basis().is_empty());
    }

    #[test]
    fn mul_and_concat_shapes() {
        let a = RationalMatrix::from_i64(&[&[1, 2, 3]]);
        let b = RationalMatrix::from_i64(&[&[1], &[1], &[1]]);
        assert_eq!(a.mul(&b).unwrap()[(0, 0)], rat(6));
        assert!(a.mul(&a).is_err());
        let c = a.concat_cols(&a).unwrap();
        assert_eq!((c.rows(), c.cols()), (1, 6));
    }
}
