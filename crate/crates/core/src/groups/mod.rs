//! Finite groups by multiplication table, homomorphisms, and modules with a
//! group action.

mod action;
pub mod catalog;
mod group;
mod hom;

pub use action::{ActionFailure, GModule};
pub use group::{AxiomFailure, FiniteGroup};
pub use hom::{all_homs, conjugate_hom, conjugation_hom, quotient, GroupHom};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("a group needs at least one element")]
    EmptyGroup,
    #[error("row {row} has length {len}, expected {order}")]
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("table entry ({row}, {col}) = {value} is out of range")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("product of elements {row} and {col} leaves the element list")]
    NotClosed { row: usize, col: usize },
    #[error("not a group: {0}")]
    NotAGroup(AxiomFailure),
    #[error("map has length {found}, expected {expected}")]
    MapLength { expected: usize, found: usize },
    #[error("element {element} out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("not a homomorphism: f({g}*{h}) != f({g})*f({h})")]
    NotAHom { g: usize, h: usize },
    #[error("groups do not match")]
    GroupMismatch,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid action: {0}")]
    InvalidAction(ActionFailure),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
