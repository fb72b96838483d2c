//! Double-precision mirror of the matrix predicates.
//!
//! Used for lossy input only. Each zero test is relative to the size of the
//! input so that results do not depend on scaling:
//!
//! - idempotent: `‖A² − A‖ ≤ τ·(1 + ‖A‖)`
//! - `Aᵏ` vanishes: `‖Aᵏ‖ ≤ τ·(1 + ‖A‖)ᵏ`
//! - singular: `|det A| ≤ τ·∏ᵢ max(1, ‖rowᵢ‖)`
//!
//! where `‖·‖` is the entrywise max-modulus norm.

use num_complex::Complex64;

use super::{BicomplexMatrix, ComplexMatrix, NilpotencyReport, SingularityReport};
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct FloatComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl FloatComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
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

    pub fn from_exact(m: &ComplexMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data: m.entries().iter().map(|z| z.to_complex64()).collect(),
        }
    }

    fn identity(n: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        Self { rows: n, cols: n, data }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows == self.cols {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn max_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn mul_square(&self, other: &Self) -> Self {
        let n = self.rows;
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Self { rows: n, cols: n, data }
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(n);
        for _ in 0..k {
            acc = acc.mul_square(self);
        }
        Ok(acc)
    }

    pub fn is_idempotent(&self, tol: f64) -> Result<bool> {
        self.require_square()?;
        let sq = self.mul_square(self);
        let diff = sq
            .data
            .iter()
            .zip(&self.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        Ok(diff <= tol * (1.0 + self.max_norm()))
    }

    pub fn nilpotency_index(&self, tol: f64) -> Result<Option<usize>> {
        let n = self.require_square()?;
        let scale = 1.0 + self.max_norm();
        let mut power = self.clone();
        for k in 1..=n {
            if power.max_norm() <= tol * scale.powi(k as i32) {
                return Ok(Some(k));
            }
            power = power.mul_square(self);
        }
        Ok(None)
    }

    /// LU with partial pivoting.
    pub fn determinant(&self) -> Result<Complex64> {
        let n = self.require_square()?;
        let mut a = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a[x * n + k].norm().total_cmp(&a[y * n + k].norm()))
                .unwrap_or(k);
            if a[p * n + k].norm() == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k];
            det *= pivot;
            for i in k + 1..n {
                let f = a[i * n + k] / pivot;
                for j in k..n {
                    let t = a[k * n + j];
                    a[i * n + j] -= f * t;
                }
            }
        }
        Ok(det)
    }

    pub fn is_singular(&self, tol: f64) -> Result<bool> {
        let det = self.determinant()?;
        let bound: f64 = (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .map(|z| z.norm())
                    .fold(1.0, f64::max)
            })
            .product();
        Ok(det.norm() <= tol * bound)
    }
}

/// Float counterpart of [`BicomplexMatrix`].
#[derive(Clone, Debug, PartialEq)]
pub struct FloatBicomplexMatrix {
    pub minus: FloatComplexMatrix,
    pub plus: FloatComplexMatrix,
    pub tolerance: f64,
}

impl FloatBicomplexMatrix {
    pub fn from_exact(m: &BicomplexMatrix, tolerance: f64) -> Self {
        Self {
            minus: FloatComplexMatrix::from_exact(m.minus()),
            plus: FloatComplexMatrix::from_exact(m.plus()),
            tolerance,
        }
    }

    pub fn is_idempotent(&self) -> Result<bool> {
        Ok(self.minus.is_idempotent(self.tolerance)? && self.plus.is_idempotent(self.tolerance)?)
    }

    pub fn nilpotency(&self) -> Result<NilpotencyReport> {
        Ok(NilpotencyReport::from_components(
            self.minus.nilpotency_index(self.tolerance)?,
            self.plus.nilpotency_index(self.tolerance)?,
        ))
    }

    pub fn is_singular(&self) -> Result<SingularityReport> {
        Ok(SingularityReport {
            minus_singular: self.minus.is_singular(self.tolerance)?,
            plus_singular: self.plus.is_singular(self.tolerance)?,
        })
    }

    pub fn determinants(&self) -> Result<(Complex64, Complex64)> {
        Ok((self.minus.determinant()?, self.plus.determinant()?))
    }
}
