//! Dense arbitrary-precision integer matrices and exact determinants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Square matrix of big integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        IntMatrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParameter("matrix rows must form a square".into()));
        }
        Ok(IntMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.dim {
            self.entries.swap(a * self.dim + j, b * self.dim + j);
        }
    }

    /// Principal submatrix with row and column `skip` (0-based) removed.
    pub fn without(&self, skip: usize) -> IntMatrix {
        let keep: Vec<usize> = (0..self.dim).filter(|&i| i != skip).collect();
        IntMatrix::from_fn(keep.len(), |i, j| self.get(keep[i], keep[j]).clone())
    }

    pub fn determinant(&self) -> BigInt {
        det_bareiss(self)
    }
}

/// Exact determinant by single-step fraction-free (Bareiss) elimination.
///
/// Every intermediate is itself a minor of the input, so all divisions are
/// exact. Pivots are the first nonzero entry in the column; a zero column
/// ends the elimination with determinant 0. The empty matrix has determinant 1.
pub fn det_bareiss(m: &IntMatrix) -> BigInt {
    let n = m.dim;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.entries.clone();
    let mut negate = false;
    let mut prev = BigInt::one();

    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in k..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }

        let (head, tail) = a.split_at_mut((k + 1) * n);
        let pivot_row = &head[k * n..];
        let pivot = &pivot_row[k];
        let unit_prev = prev.is_one();
        for row in tail.chunks_exact_mut(n) {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut v = &row[j] * pivot;
                if !factor.is_zero() {
                    v -= &factor * &pivot_row[j];
                }
                row[j] = if unit_prev { v } else { v / &prev };
            }
        }
        prev = pivot.clone();
    }

    let det = std::mem::take(&mut a[n * n - 1]);
    if negate {
        -det
    } else {
        det
    }
}

/// `alpha + beta * x` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinPoly {
    pub alpha: BigInt,
    pub beta: BigInt,
}

impl LinPoly {
    pub fn eval(&self, x: &BigInt) -> BigInt {
        &self.alpha + &self.beta * x
    }
}

/// A matrix whose entries are affine in one indeterminate `x`:
/// `base + x * bump`, where `bump` is a sparse list of `(row, col, coeff)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedMatrix {
    pub base: IntMatrix,
    pub bump: Vec<(usize, usize, BigInt)>,
}

impl MarkedMatrix {
    pub fn new(base: IntMatrix) -> Self {
        MarkedMatrix { base, bump: Vec::new() }
    }

    pub fn add_bump(&mut self, row: usize, col: usize, coeff: BigInt) {
        self.bump.push((row, col, coeff));
    }

    /// Substitutes a concrete value for `x`.
    pub fn at(&self, x: &BigInt) -> IntMatrix {
        let mut m = self.base.clone();
        for (i, j, c) in &self.bump {
            let v = m.get(*i, *j) + c * x;
            m.set(*i, *j, v);
        }
        m
    }
}

/// Determinant of a marked matrix as a linear polynomial in `x`.
///
/// Evaluates at `x = 0` and `x = 1`, then certifies linearity at `x = 2`.
/// A single marked edge always passes; a failure means the bump pattern
/// encodes more than one independent weight.
pub fn det_linear_in_x(m: &MarkedMatrix) -> Result<LinPoly> {
    let at0 = det_bareiss(&m.at(&BigInt::zero()));
    let at1 = det_bareiss(&m.at(&BigInt::one()));
    let poly = LinPoly {
        beta: &at1 - &at0,
        alpha: at0,
    };
    let two = BigInt::from(2);
    let at2 = det_bareiss(&m.at(&two));
    if at2 != poly.eval(&two) {
        return Err(Error::NonlinearMarkedPattern {
            at0: poly.alpha.to_string(),
            at1: at1.to_string(),
            at2: at2.to_string(),
        });
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn bareiss_small_cases() {
        assert_eq!(det_bareiss(&mat(&[&[2, -1], &[-1, 2]])), BigInt::from(3));
        assert_eq!(det_bareiss(&IntMatrix::identity(5)), BigInt::one());
        assert_eq!(det_bareiss(&mat(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(det_bareiss(&IntMatrix::zeros(0)), BigInt::one());
        assert_eq!(det_bareiss(&mat(&[&[-7]])), BigInt::from(-7));
    }

    #[test]
    fn bareiss_needs_row_swap() {
        assert_eq!(det_bareiss(&mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            det_bareiss(&mat(&[&[0, 2, 1], &[0, 1, 3], &[4, 1, 1]])),
            BigInt::from(4 * (2 * 3 - 1))
        );
        // zero pivot column after the first step
        assert_eq!(det_bareiss(&mat(&[&[1, 2, 3], &[2, 4, 5], &[3, 6, 9]])), BigInt::zero());
    }

    #[test]
    fn rejects_ragged_rows() {
        let rows = vec![vec![BigInt::one()], vec![BigInt::one(), BigInt::one()]];
        assert!(IntMatrix::from_rows(rows).is_err());
    }

    #[test]
    fn linear_in_x_triangle() {
        // (K_3; {1,2}) with vertex 3 removed
        let mut m = MarkedMatrix::new(mat(&[&[1, 0], &[0, 1]]));
        m.add_bump(0, 0, BigInt::one());
        m.add_bump(1, 1, BigInt::one());
        m.add_bump(0, 1, BigInt::from(-1));
        m.add_bump(1, 0, BigInt::from(-1));
        let p = det_linear_in_x(&m).unwrap();
        assert_eq!(
            p,
            LinPoly {
                alpha: BigInt::one(),
                beta: BigInt::from(2)
            }
        );
    }

    #[test]
    fn linear_in_x_trivial_cases() {
        let base = mat(&[&[3, -1], &[-1, 3]]);
        let p = det_linear_in_x(&MarkedMatrix::new(base)).unwrap();
        assert_eq!(
            p,
            LinPoly {
                alpha: BigInt::from(8),
                beta: BigInt::zero()
            }
        );

        let mut m = MarkedMatrix::new(mat(&[&[0]]));
        m.add_bump(0, 0, BigInt::one());
        let p = det_linear_in_x(&m).unwrap();
        assert_eq!(
            p,
            LinPoly {
                alpha: BigInt::zero(),
                beta: BigInt::one()
            }
        );
    }

    #[test]
    fn linear_in_x_rejects_quadratic() {
        let mut m = MarkedMatrix::new(IntMatrix::zeros(2));
        m.add_bump(0, 0, BigInt::one());
        m.add_bump(1, 1, BigInt::one());
        assert!(matches!(det_linear_in_x(&m), Err(Error::NonlinearMarkedPattern { .. })));
    }

    #[test]
    fn without_removes_row_and_column() {
        let m = mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(m.without(1), mat(&[&[1, 3], &[7, 9]]));
        assert_eq!(m.without(0), mat(&[&[5, 6], &[8, 9]]));
    }
}
