//! Dense exact linear algebra over any [`FieldDescriptor`].

mod matrix;
mod subspace;
pub mod vector;

pub use matrix::{kernel, minimal_polynomial, rref, MatrixE};
pub use subspace::Subspace;
pub use vector::Vector;

use thiserror::Error;

use crate::scalars::{FieldDescriptor, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("fields differ: {0} vs {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
