use std::fmt;

use super::{ComplexMatrix, NilpotencyReport, SingularityReport};
use crate::complex::RationalComplex;
use crate::error::{Error, Result};
use crate::scalar::BicomplexScalar;

/// Bicomplex matrix stored as its idempotent components `(A⁻, A⁺)`.
///
/// Every ring operation acts on the two components independently, so each
/// predicate reduces to the same predicate on two ordinary complex matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BicomplexMatrix {
    minus: ComplexMatrix,
    plus: ComplexMatrix,
}

impl BicomplexMatrix {
    /// `A = e₁·minus + e₂·plus`.
    pub fn compose(minus: ComplexMatrix, plus: ComplexMatrix) -> Result<Self> {
        minus.require_same_shape(&plus)?;
        Ok(Self { minus, plus })
    }

    pub fn decompose(self) -> (ComplexMatrix, ComplexMatrix) {
        (self.minus, self.plus)
    }

    pub fn minus(&self) -> &ComplexMatrix {
        &self.minus
    }

    pub fn plus(&self) -> &ComplexMatrix {
        &self.plus
    }

    pub fn from_scalar_rows(rows: Vec<Vec<BicomplexScalar>>) -> Result<Self> {
        let split = |pick: fn(BicomplexScalar) -> RationalComplex, rows: &Vec<Vec<BicomplexScalar>>| {
            ComplexMatrix::from_rows(rows.iter().map(|r| r.iter().cloned().map(pick).collect()).collect())
        };
        let minus = split(|s| s.minus, &rows)?;
        let plus = split(|s| s.plus, &rows)?;
        Self::compose(minus, plus)
    }

    /// From the cartesian grid `A = Z₁ + i₂Z₂`, entrywise.
    pub fn from_cartesian(z1: &ComplexMatrix, z2: &ComplexMatrix) -> Result<Self> {
        z1.require_same_shape(z2)?;
        let (r, c) = z1.shape();
        let entry = |i, j| BicomplexScalar::from_cartesian_pair(z1.get(i, j).clone(), z2.get(i, j).clone());
        let minus = ComplexMatrix::from_fn(r, c, |i, j| entry(i, j).minus);
        let plus = ComplexMatrix::from_fn(r, c, |i, j| entry(i, j).plus);
        Self::compose(minus, plus)
    }

    /// Inverse of [`from_cartesian`](Self::from_cartesian).
    pub fn to_cartesian(&self) -> (ComplexMatrix, ComplexMatrix) {
        let (r, c) = self.shape();
        let z1 = ComplexMatrix::from_fn(r, c, |i, j| self.entry(i, j).to_cartesian_pair().0);
        let z2 = ComplexMatrix::from_fn(r, c, |i, j| self.entry(i, j).to_cartesian_pair().1);
        (z1, z2)
    }

    /// Embeds a complex matrix `M` as `e₁M + e₂M`.
    pub fn from_complex(m: ComplexMatrix) -> Self {
        Self {
            minus: m.clone(),
            plus: m,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_complex(ComplexMatrix::identity(n))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_complex(ComplexMatrix::zeros(rows, cols))
    }

    pub fn shape(&self) -> (usize, usize) {
        self.minus.shape()
    }

    pub fn is_square(&self) -> bool {
        self.minus.is_square()
    }

    pub fn is_zero(&self) -> bool {
        self.minus.is_zero() && self.plus.is_zero()
    }

    pub fn entry(&self, i: usize, j: usize) -> BicomplexScalar {
        BicomplexScalar::new(self.minus.get(i, j).clone(), self.plus.get(i, j).clone())
    }

    pub fn entries(&self) -> impl Iterator<Item = BicomplexScalar> + '_ {
        self.minus
            .entries()
            .iter()
            .zip(self.plus.entries())
            .map(|(m, p)| BicomplexScalar::new(m.clone(), p.clone()))
    }

    fn require_square(&self) -> Result<usize> {
        self.minus.require_square()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::compose(self.minus.add(&other.minus)?, self.plus.add(&other.plus)?)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Self::compose(self.minus.sub(&other.minus)?, self.plus.sub(&other.plus)?)
    }

    /// `A·B = e₁(A⁻B⁻) + e₂(A⁺B⁺)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::compose(self.minus.mul(&other.minus)?, self.plus.mul(&other.plus)?)
    }

    /// `ξ·A = e₁(ξ⁻A⁻) + e₂(ξ⁺A⁺)`.
    pub fn scalar_mul(&self, s: &BicomplexScalar) -> Self {
        Self {
            minus: self.minus.scale(&s.minus),
            plus: self.plus.scale(&s.plus),
        }
    }

    /// `Aᵏ = e₁(A⁻)ᵏ + e₂(A⁺)ᵏ`; `A⁰ = I`.
    pub fn power(&self, k: u32) -> Result<Self> {
        Self::compose(self.minus.pow(k)?, self.plus.pow(k)?)
    }

    /// `(det A⁻, det A⁺)`.
    pub fn determinants(&self) -> Result<(RationalComplex, RationalComplex)> {
        Ok((self.minus.determinant()?, self.plus.determinant()?))
    }

    /// Singular iff `det A⁻ = 0` or `det A⁺ = 0`.
    pub fn is_singular(&self) -> Result<SingularityReport> {
        let (dm, dp) = self.determinants()?;
        Ok(SingularityReport {
            minus_singular: dm.is_zero(),
            plus_singular: dp.is_zero(),
        })
    }

    /// `A² = A`, decided as `(A⁻)² = A⁻` and `(A⁺)² = A⁺`.
    pub fn is_idempotent(&self) -> Result<bool> {
        Ok(self.minus.is_idempotent()? && self.plus.is_idempotent()?)
    }

    pub fn nilpotency(&self) -> Result<NilpotencyReport> {
        self.require_square()?;
        Ok(NilpotencyReport::from_components(
            self.minus.nilpotency_index()?,
            self.plus.nilpotency_index()?,
        ))
    }

    /// `e₁A = e₁A⁻`.
    pub fn section_e1(&self) -> Self {
        let (r, c) = self.shape();
        Self {
            minus: self.minus.clone(),
            plus: ComplexMatrix::zeros(r, c),
        }
    }

    /// `e₂A = e₂A⁺`.
    pub fn section_e2(&self) -> Self {
        let (r, c) = self.shape();
        Self {
            minus: ComplexMatrix::zeros(r, c),
            plus: self.plus.clone(),
        }
    }

    /// `e₁A + e₂B = e₁A⁻ + e₂B⁺`.
    pub fn mix(&self, other: &Self) -> Result<Self> {
        self.minus.require_same_shape(&other.minus)?;
        self.require_square()?;
        Self::compose(self.minus.clone(), other.plus.clone())
    }

    /// `I − A`.
    pub fn complement(&self) -> Result<Self> {
        let n = self.require_square()?;
        Self::identity(n).sub(self)
    }

    /// `e₁(I − A)`, requiring `A` idempotent.
    pub fn complement_section_e1(&self) -> Result<Self> {
        self.require_idempotent()?;
        Ok(self.complement()?.section_e1())
    }

    /// `e₂(I − A)`, requiring `A` idempotent.
    pub fn complement_section_e2(&self) -> Result<Self> {
        self.require_idempotent()?;
        Ok(self.complement()?.section_e2())
    }

    fn require_idempotent(&self) -> Result<()> {
        if self.is_idempotent()? {
            Ok(())
        } else {
            Err(Error::NotIdempotent)
        }
    }
}

impl fmt::Display for BicomplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (r, c) = self.shape();
        for i in 0..r {
            let cells: Vec<String> = (0..c).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
