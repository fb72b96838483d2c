//! Exact bicomplex linear algebra in idempotent-decomposed form.
//!
//! Every bicomplex number `ξ = z₁ + i₂z₂` has a unique representation
//! `ξ = ξ⁻e₁ + ξ⁺e₂` over the idempotents `e₁ = (1 + i₁i₂)/2` and
//! `e₂ = (1 − i₁i₂)/2`, and ring operations act independently on the two
//! complex components. This crate stores scalars, matrices, and operators in
//! that form and computes over exact Gaussian rationals, so the predicates
//! below are decision procedures rather than floating-point heuristics:
//!
//! - singularity (a component determinant vanishes),
//! - idempotency (`A² = A`),
//! - nilpotency and the nilpotency index (`max` of the component indices).
//!
//! The runnable programs under `examples/` walk through each capability;
//! the `bicomplex` binary exposes `analyze`, `generate`, and `verify` over
//! the JSON matrix file format in [`format`].
//!
//! ```
//! use bicomplex::{BicomplexMatrix, ComplexMatrix};
//!
//! let shift = ComplexMatrix::from_int_rows(&[&[0, 1, 1], &[0, 0, 1], &[0, 0, 0]]);
//! let proj = ComplexMatrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
//! let t = BicomplexMatrix::compose(shift, proj).unwrap();
//!
//! let report = t.nilpotency().unwrap();
//! assert!(!report.is_nilpotent);
//! assert_eq!(report.minus_index, Some(3));
//! assert!(t.is_singular().unwrap().both());
//! ```

pub mod cli;
pub mod complex;
pub mod error;
pub mod format;
pub mod generators;
pub mod matrix;
pub mod operator;
pub mod scalar;
pub mod verify;

pub use complex::{parse_rational, rational, Rational, RationalComplex};
pub use error::{Error, Result};
pub use matrix::float::{FloatBicomplexMatrix, FloatComplexMatrix, DEFAULT_TOLERANCE};
pub use matrix::{BicomplexMatrix, ComplexMatrix, NilpotencyReport, SingularityReport};
pub use operator::{Basis, BicomplexOperator, BicomplexVector};
pub use scalar::{BicomplexScalar, ScalarClass};
