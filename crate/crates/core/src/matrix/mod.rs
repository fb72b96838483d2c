//! Complex component matrices and bicomplex matrices `A = e₁A⁻ + e₂A⁺`.

mod bicomplex;
mod dense;
mod elimination;
pub mod float;

pub use bicomplex::BicomplexMatrix;
pub use dense::ComplexMatrix;

use serde::Serialize;

/// Outcome of the nilpotency decision procedure.
///
/// `index` is present iff `is_nilpotent`, and then equals the larger of the
/// two component indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotencyReport {
    pub is_nilpotent: bool,
    pub index: Option<usize>,
    pub component_indices: Option<[usize; 2]>,
    /// Index of `A⁻` on its own, present whenever that component is nilpotent.
    pub minus_index: Option<usize>,
    /// Index of `A⁺` on its own.
    pub plus_index: Option<usize>,
}

impl NilpotencyReport {
    pub fn from_components(minus_index: Option<usize>, plus_index: Option<usize>) -> Self {
        let component_indices = minus_index.zip(plus_index).map(|(a, b)| [a, b]);
        Self {
            is_nilpotent: component_indices.is_some(),
            index: component_indices.map(|[a, b]| a.max(b)),
            component_indices,
            minus_index,
            plus_index,
        }
    }
}

/// Which idempotent components have vanishing determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    pub minus_singular: bool,
    pub plus_singular: bool,
}

impl SingularityReport {
    /// Singular iff at least one component is singular.
    pub fn is_singular(&self) -> bool {
        self.minus_singular || self.plus_singular
    }

    pub fn both(&self) -> bool {
        self.minus_singular && self.plus_singular
    }
}
