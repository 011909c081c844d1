//! Arithmetic Chern-Simons constructions on finite simulations: places with
//! declared local invariants, reciprocity validation, the gluing invariant,
//! the torsor of local trivializations, and Kummer trivializations.

mod datum;
pub mod fixtures;
mod invariant;
mod kummer;
mod torsor;

pub use datum::{Check, GlobalDatum, PlaceDatum, ValidatedDatum, ValidationReport};
pub use invariant::{cs_invariant, local_invariant, unramified_trivialization, SolveOrder};
pub use kummer::{kummer_trivialization, KummerTrivialization};
pub use torsor::{
    automorphism_shift, cs_section, l_class, local_homs, torsor_build, torsor_difference,
    torsor_map, unramified_basepoint, Torsor, TorsorElement,
};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::cochains::CochainError;
use crate::groups::GroupError;
use crate::ops::OpsError;

/// An element `numerator / modulus` of `(1/n)Z/Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantValue {
    pub numerator: u32,
    pub modulus: u32,
}

impl InvariantValue {
    pub fn zero(modulus: u32) -> Self {
        Self {
            numerator: 0,
            modulus,
        }
    }

    pub fn new(numerator: i64, modulus: u32) -> Self {
        Self {
            numerator: numerator.rem_euclid(modulus as i64) as u32,
            modulus,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator == 0
    }
}

impl std::ops::Add for InvariantValue {
    type Output = Self;

    fn add(self, other: Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Self::new(self.numerator as i64 + other.numerator as i64, self.modulus)
    }
}

impl std::ops::Neg for InvariantValue {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-(self.numerator as i64), self.modulus)
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.modulus)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CsError {
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error("datum failed validation: {0}")]
    Validation(Box<ValidationReport>),
    #[error("class at place {place} leaves the declared cyclic summand")]
    NotInGeneratedSummand { place: usize },
    #[error("place {place} has no canonical unramified trivialization: {reason}")]
    NotUnramifiedTrivializable { place: usize, reason: String },
    #[error("pulled-back 3-cocycle is not a coboundary on the global group")]
    NoGlobalTrivialization,
    #[error("pulled-back 3-cocycle is not a coboundary at place {place}")]
    LocallyNontrivial { place: usize },
    #[error("torsor elements belong to different fibres at place {place}")]
    TorsorMismatch { place: usize },
    #[error("element {a} does not centralize the image of rho")]
    NotAutomorphism { a: usize },
    #[error("no homomorphism to Z/p^2 reduces to the given character")]
    NoLift,
    #[error("supplied lift does not reduce to the character at element {element}")]
    InvalidLift { element: usize },
    #[error(transparent)]
    Cochain(#[from] CochainError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Ops(#[from] OpsError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
