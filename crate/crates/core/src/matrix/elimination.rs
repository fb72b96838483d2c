//! Exact elimination: fraction-free determinants and Gauss–Jordan inverses.
//!
//! The determinant clears each row's denominators, runs Bareiss elimination
//! over the Gaussian integers `Z[i]` where every division is exact, and
//! divides by the accumulated row scale once at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ComplexMatrix;
use crate::complex::{Rational, RationalComplex};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn one() -> Self {
        Self {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &Self) -> Self {
        Self {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    /// Division known to be exact in `Z[i]`.
    fn div_exact(&self, d: &Self) -> Self {
        let norm = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        debug_assert!(
            re.is_multiple_of(&norm) && im.is_multiple_of(&norm),
            "inexact Bareiss division"
        );
        Self {
            re: re / &norm,
            im: im / norm,
        }
    }
}

/// Fraction-free determinant. Panics if `m` is not square; the public entry
/// point is [`ComplexMatrix::determinant`].
fn bareiss(m: &ComplexMatrix) -> RationalComplex {
    let n = m.rows();
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<GaussInt>> = (0..n)
        .map(|i| {
            let row = m.row(i);
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, z| acc.lcm(z.re.denom()).lcm(z.im.denom()));
            scale *= &lcm;
            row.iter()
                .map(|z| GaussInt {
                    re: z.re.numer() * (&lcm / z.re.denom()),
                    im: z.im.numer() * (&lcm / z.im.denom()),
                })
                .collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = GaussInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return RationalComplex::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let last = &a[n - 1][n - 1];
    let mut det = RationalComplex::new(
        Rational::new(last.re.clone(), scale.clone()),
        Rational::new(last.im.clone(), scale),
    );
    if negate {
        det = -det;
    }
    det
}

fn gauss_jordan_inverse(m: &ComplexMatrix) -> Option<ComplexMatrix> {
    let n = m.rows();
    let mut a: Vec<Vec<RationalComplex>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut inv: Vec<Vec<RationalComplex>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        RationalComplex::one()
                    } else {
                        RationalComplex::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].inv()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let da = &f * &a[col][j];
                a[r][j] -= &da;
                let di = &f * &inv[col][j];
                inv[r][j] -= &di;
            }
        }
    }
    ComplexMatrix::from_rows(inv).ok()
}

impl ComplexMatrix {
    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<RationalComplex> {
        self.require_square()?;
        Ok(bareiss(self))
    }

    /// Exact inverse by Gauss–Jordan elimination; `Ok(None)` when singular.
    pub fn inverse(&self) -> Result<Option<ComplexMatrix>> {
        self.require_square()?;
        Ok(gauss_jordan_inverse(self))
    }
}
