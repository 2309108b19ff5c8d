//! Verdicts for checked identities.

use std::fmt;

use crate::algebra::Algebra;
use crate::catalog::minf::SparseVector;
use crate::linalg::vector;
use crate::scalars::Scalar;

/// One checked identity: it either holds exactly or carries a nonzero
/// witness (the difference of both sides).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Self { name: name.into(), holds: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Self { name: name.into(), holds: false, witness: Some(witness.into()) }
    }

    pub fn from_residual(name: impl Into<String>, residual: &SparseVector) -> Self {
        if residual.is_zero() {
            Self::pass(name)
        } else {
            Self::fail(name, residual.to_string())
        }
    }

    /// Compare two vectors of `alg`; the witness is `lhs - rhs`.
    pub fn compare(name: impl Into<String>, alg: &Algebra, lhs: &[Scalar], rhs: &[Scalar]) -> Self {
        let diff = vector::sub(lhs, rhs);
        if vector::is_zero(&diff) {
            Self::pass(name)
        } else {
            Self::fail(name, alg.format_vector(&diff))
        }
    }

    pub fn verdict(&self) -> &'static str {
        if self.holds {
            "pass"
        } else {
            "fail"
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "identity={:?} verdict={}", self.name, self.verdict())?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w:?}")?;
        }
        Ok(())
    }
}
