//! Inhomogeneous cochains `C^i(G, M)`, the differential, pullbacks, and
//! cohomology computed by exact linear algebra over `Z/n`.

mod cochain;
mod complex;
mod differential;

pub use cochain::{Cochain, TupleIndex};
pub use complex::{
    classify, cohomology, complex_for, is_coboundary, preimage, Classification, CochainComplex,
    CohomologyGroup,
};
pub use differential::{differential, differential_with, pullback, pullback_into};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::groups::GroupError;

/// Default cap on the degree of any cochain produced by a differential.
pub const DEFAULT_MAX_DEGREE: usize = 4;

/// Degree cap for differentials and cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl Limits {
    /// Raise or lower the cap. Tables grow like `|G|^degree`, so raising it
    /// past the default logs a warning.
    pub fn with_max_degree(max_degree: usize) -> Self {
        if max_degree > DEFAULT_MAX_DEGREE {
            log::warn!("degree cap raised to {max_degree}; cochain tables grow as |G|^degree");
        }
        Self { max_degree }
    }

    pub fn check(&self, degree: usize) -> Result<(), CochainError> {
        if degree > self.max_degree {
            return Err(CochainError::DegreeBound {
                requested: degree,
                max: self.max_degree,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CochainError {
    #[error("degree {requested} exceeds the configured maximum {max}")]
    DegreeBound { requested: usize, max: usize },
    #[error("cochain table has {found} entries, expected {expected}")]
    TableLength { expected: usize, found: usize },
    #[error("value {value} at tuple {index}, component {component} is out of range")]
    ValueOutOfRange {
        index: usize,
        component: usize,
        value: u32,
    },
    #[error("coefficient modules differ")]
    CoefficientMismatch,
    #[error("degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("groups do not match")]
    GroupMismatch,
    #[error("not a cocycle{}", .witness.as_ref().map(|w| format!(" (df nonzero at {w:?})")).unwrap_or_default())]
    NotACocycle { witness: Option<Vec<usize>> },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
