//! Exact arithmetic over `Z/n` and the linear algebra every cohomology
//! computation reduces to.

mod howell;
mod matrix;
mod module;
mod ring;
mod smith;
mod solve;

pub use howell::{howell_form, HowellForm, RowReducer};
pub use matrix::MatrixZn;
pub use module::ZnModule;
pub use ring::{gcd, lcm, xgcd, ModRing, MAX_MODULUS};
pub use smith::{diagonalize_mod, smith_normal_form, ModDiagonal, SmithForm};
pub use solve::{in_row_space, solve_linear, solve_linear_ordered, LinearSolution};

pub(crate) use matrix::combine_rows;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("modulus {0} outside the supported range 2..=65536")]
    InvalidModulus(u32),
    #[error("cyclic order {order} does not divide the modulus {modulus}")]
    InvalidCyclicOrder { order: u32, modulus: u32 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no solution")]
    NoSolution,
    #[error("integer overflow during elimination")]
    Overflow,
}
