//! Linear operators `T = e₁T₁ + e₂T₂` on bicomplex n-space.
//!
//! An operator is held as the standard-basis matrices of `T₁` and `T₂`;
//! [`BicomplexOperator::apply`] recovers the map
//! `T(ξ) = e₁T₁(ξ⁻) + e₂T₂(ξ⁺)`.

use crate::complex::RationalComplex;
use crate::error::{Error, Result};
use crate::matrix::{BicomplexMatrix, ComplexMatrix, NilpotencyReport, SingularityReport};
use crate::scalar::BicomplexScalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BicomplexVector {
    pub entries: Vec<BicomplexScalar>,
}

impl BicomplexVector {
    pub fn new(entries: Vec<BicomplexScalar>) -> Self {
        Self { entries }
    }

    pub fn from_components(minus: Vec<RationalComplex>, plus: Vec<RationalComplex>) -> Result<Self> {
        if minus.len() != plus.len() {
            return Err(Error::DimensionMismatch {
                expected: minus.len(),
                found: plus.len(),
            });
        }
        Ok(Self::new(
            minus
                .into_iter()
                .zip(plus)
                .map(|(m, p)| BicomplexScalar::new(m, p))
                .collect(),
        ))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(v⁻, v⁺)`.
    pub fn split(&self) -> (Vec<RationalComplex>, Vec<RationalComplex>) {
        self.entries.iter().map(|s| (s.minus.clone(), s.plus.clone())).unzip()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Self::new(
            self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        ))
    }
}

/// Change-of-basis matrix `P` whose columns are the basis vectors, stored
/// with its exact inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    p: ComplexMatrix,
    p_inv: ComplexMatrix,
}

impl Basis {
    /// Fails with [`Error::SingularBasis`] when the columns are dependent.
    pub fn new(p: ComplexMatrix) -> Result<Self> {
        let p_inv = p.inverse()?.ok_or(Error::SingularBasis)?;
        Ok(Self { p, p_inv })
    }

    pub fn standard(n: usize) -> Self {
        let p = ComplexMatrix::identity(n);
        Self { p_inv: p.clone(), p }
    }

    pub fn dim(&self) -> usize {
        self.p.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.p
    }

    pub fn inverse_matrix(&self) -> &ComplexMatrix {
        &self.p_inv
    }

    /// `P⁻¹·M·P`.
    fn conjugate(&self, m: &ComplexMatrix) -> ComplexMatrix {
        self.p_inv.mul_unchecked(m).mul_unchecked(&self.p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BicomplexOperator {
    t1: ComplexMatrix,
    t2: ComplexMatrix,
}

impl BicomplexOperator {
    pub fn new(t1: ComplexMatrix, t2: ComplexMatrix) -> Result<Self> {
        t1.require_square()?;
        t1.require_same_shape(&t2)?;
        Ok(Self { t1, t2 })
    }

    /// The operator whose standard-basis matrix is `m`.
    pub fn from_matrix(m: BicomplexMatrix) -> Result<Self> {
        let (minus, plus) = m.decompose();
        Self::new(minus, plus)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            t1: ComplexMatrix::identity(n),
            t2: ComplexMatrix::identity(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            t1: ComplexMatrix::zeros(n, n),
            t2: ComplexMatrix::zeros(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.t1.rows()
    }

    pub fn t1(&self) -> &ComplexMatrix {
        &self.t1
    }

    pub fn t2(&self) -> &ComplexMatrix {
        &self.t2
    }

    pub fn is_zero(&self) -> bool {
        self.t1.is_zero() && self.t2.is_zero()
    }

    fn require_dim(&self, found: usize) -> Result<()> {
        if found == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found,
            })
        }
    }

    pub fn apply(&self, v: &BicomplexVector) -> Result<BicomplexVector> {
        self.require_dim(v.len())?;
        let (minus, plus) = v.split();
        BicomplexVector::from_components(self.t1.mul_vec(&minus)?, self.t2.mul_vec(&plus)?)
    }

    /// `S∘T = e₁(S₁T₁) + e₂(S₂T₂)`, with `self` as `S`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.require_dim(inner.dim())?;
        Ok(Self {
            t1: self.t1.mul_unchecked(&inner.t1),
            t2: self.t2.mul_unchecked(&inner.t2),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.require_dim(other.dim())?;
        Ok(Self {
            t1: self.t1.add(&other.t1)?,
            t2: self.t2.add(&other.t2)?,
        })
    }

    /// `αT = e₁(αT₁) + e₂(αT₂)` for complex `α`.
    pub fn scale(&self, alpha: &RationalComplex) -> Self {
        Self {
            t1: self.t1.scale(alpha),
            t2: self.t2.scale(alpha),
        }
    }

    /// `Tᵏ = e₁T₁ᵏ + e₂T₂ᵏ`; `T⁰` is the identity.
    pub fn power(&self, k: u32) -> Self {
        Self {
            t1: self.t1.pow(k).expect("operator components are square"),
            t2: self.t2.pow(k).expect("operator components are square"),
        }
    }

    /// `Sᵏ = Tᵏ`, decided componentwise.
    pub fn powers_equal(&self, other: &Self, k: u32) -> Result<bool> {
        self.require_dim(other.dim())?;
        let (a, b) = (self.power(k), other.power(k));
        Ok(a.t1 == b.t1 && a.t2 == b.t2)
    }

    pub fn to_matrix(&self) -> BicomplexMatrix {
        BicomplexMatrix::compose(self.t1.clone(), self.t2.clone()).expect("components share a shape")
    }

    /// `[T]_B = e₁[T₁]_B + e₂[T₂]_B` with `[Tᵢ]_B = P⁻¹TᵢP`.
    pub fn matrix_in_basis(&self, basis: &Basis) -> Result<BicomplexMatrix> {
        self.require_dim(basis.dim())?;
        BicomplexMatrix::compose(basis.conjugate(&self.t1), basis.conjugate(&self.t2))
    }

    pub fn nilpotency(&self) -> NilpotencyReport {
        self.to_matrix().nilpotency().expect("operator matrix is square")
    }

    pub fn is_idempotent(&self) -> bool {
        self.to_matrix().is_idempotent().expect("operator matrix is square")
    }

    pub fn is_singular(&self) -> SingularityReport {
        self.to_matrix().is_singular().expect("operator matrix is square")
    }
}
