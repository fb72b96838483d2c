use std::fmt;

use crate::complex::{Rational, RationalComplex};
use crate::error::{Error, Result};

/// Dense row-major matrix over [`RationalComplex`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<RationalComplex>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<RationalComplex>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Panics on zero dimensions.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RationalComplex) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<RationalComplex>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer entries, mainly for tests and examples. Panics on ragged or
    /// empty input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let grid = rows
            .iter()
            .map(|row| row.iter().map(|&v| RationalComplex::from(v)).collect())
            .collect();
        Self::from_rows(grid).expect("well-formed integer rows")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| RationalComplex::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                RationalComplex::one()
            } else {
                RationalComplex::zero()
            }
        })
    }

    pub fn diagonal(diag: &[RationalComplex]) -> Self {
        Self::from_fn(diag.len(), diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                RationalComplex::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalComplex {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: RationalComplex) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[RationalComplex] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[RationalComplex] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RationalComplex::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(k, z)| {
                if k / self.cols == k % self.cols {
                    z.is_one()
                } else {
                    z.is_zero()
                }
            })
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub(crate) fn require_same_shape(&self, other: &Self) -> Result<()> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(self.mismatch(other))
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::ShapeMismatch {
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&RationalComplex, &RationalComplex) -> RationalComplex,
    ) -> Result<Self> {
        self.require_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Self { data, ..*self })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        self.map(|z| -z)
    }

    pub fn map(&self, f: impl Fn(&RationalComplex) -> RationalComplex) -> Self {
        Self {
            data: self.data.iter().map(f).collect(),
            ..*self
        }
    }

    pub fn scale(&self, k: &RationalComplex) -> Self {
        self.map(|z| z * k)
    }

    pub fn scale_real(&self, k: &Rational) -> Self {
        self.map(|z| z.scale(k))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(self.mismatch(other));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let (n, m, p) = (self.rows, self.cols, other.cols);
        let mut data = vec![RationalComplex::zero(); n * p];
        for i in 0..n {
            for k in 0..m {
                let a = &self.data[i * m + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..p {
                    let b = &other.data[k * p + j];
                    if !b.is_zero() {
                        data[i * p + j] += &(a * b);
                    }
                }
            }
        }
        Self { rows: n, cols: p, data }
    }

    pub fn mul_vec(&self, v: &[RationalComplex]) -> Result<Vec<RationalComplex>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(RationalComplex::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// `Mᵏ` by repeated squaring; `M⁰ = I`.
    pub fn pow(&self, k: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// `M² = M`, exactly.
    pub fn is_idempotent(&self) -> Result<bool> {
        self.require_square()?;
        Ok(self.mul_unchecked(self) == *self)
    }

    /// Smallest `k` with `Mᵏ = 0`, searching `k ≤ n`; `None` if `M` is not
    /// nilpotent. An `n×n` nilpotent matrix always has index at most `n`.
    pub fn nilpotency_index(&self) -> Result<Option<usize>> {
        let n = self.require_square()?;
        let mut power = self.clone();
        for k in 1..=n {
            if power.is_zero() {
                return Ok(Some(k));
            }
            if k < n {
                power = power.mul_unchecked(self);
            }
        }
        Ok(None)
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_errors() {
        assert_eq!(
            ComplexMatrix::new(0, 2, vec![]),
            Err(Error::EmptyMatrix { rows: 0, cols: 2 })
        );
        assert!(matches!(
            ComplexMatrix::new(2, 2, vec![RationalComplex::one()]),
            Err(Error::DimensionMismatch { expected: 4, found: 1 })
        ));
        let ragged = vec![vec![RationalComplex::one()], vec![]];
        assert!(ComplexMatrix::from_rows(ragged).is_err());
    }

    #[test]
    fn mul_shape_checks() {
        let a = ComplexMatrix::zeros(2, 3);
        let b = ComplexMatrix::zeros(2, 3);
        assert!(matches!(a.mul(&b), Err(Error::ShapeMismatch { .. })));
        assert_eq!(a.mul(&b.transpose()).unwrap().shape(), (2, 2));
        assert!(matches!(a.pow(2), Err(Error::NotSquare { rows: 2, cols: 3 })));
    }

    #[test]
    fn shift_block_index() {
        let n3 = ComplexMatrix::from_int_rows(&[&[0, 1, 1], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(n3.nilpotency_index().unwrap(), Some(3));
        assert!(!n3.pow(2).unwrap().is_zero());
        assert!(n3.pow(3).unwrap().is_zero());
        assert_eq!(ComplexMatrix::zeros(4, 4).nilpotency_index().unwrap(), Some(1));
        assert_eq!(ComplexMatrix::identity(2).nilpotency_index().unwrap(), None);
    }

    #[test]
    fn pow_zero_is_identity() {
        let m = ComplexMatrix::from_int_rows(&[&[2, 1], &[0, 3]]);
        assert!(m.pow(0).unwrap().is_identity());
        assert_eq!(m.pow(3).unwrap(), m.mul(&m).unwrap().mul(&m).unwrap());
    }

    #[test]
    fn mul_vec_matches_column_product() {
        let m = ComplexMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let v = vec![RationalComplex::from_ints(1, 1), RationalComplex::from_ints(0, -1)];
        let col = ComplexMatrix::new(2, 1, v.clone()).unwrap();
        assert_eq!(m.mul_vec(&v).unwrap(), m.mul(&col).unwrap().entries().to_vec());
    }
}
