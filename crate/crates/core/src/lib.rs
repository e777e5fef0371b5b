//! Exact Clifford-algebra computations for finite reflection groups.
//!
//! Everything geometric lives over the number field ℚ(√2, τ) with τ the
//! golden ratio, so root systems, versor groups and their representations
//! are computed without rounding. Only the numerical eigenvector step of
//! the character-table computation uses floating point.

pub mod cli;
pub mod clifford;
pub mod e8fold;
pub mod field;
pub mod induction;
pub mod linalg;
pub mod reptheory;
pub mod rootsystem;
pub mod versorgroup;

use thiserror::Error;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] field::FieldError),
    #[error(transparent)]
    Clifford(#[from] clifford::CliffordError),
    #[error(transparent)]
    RootSystem(#[from] rootsystem::RootSystemError),
    #[error(transparent)]
    Group(#[from] versorgroup::GroupError),
    #[error(transparent)]
    Induction(#[from] induction::InductionError),
    #[error(transparent)]
    Rep(#[from] reptheory::RepError),
    #[error(transparent)]
    Fold(#[from] e8fold::FoldError),
}

impl From<rootsystem::DiagramError> for Error {
    fn from(e: rootsystem::DiagramError) -> Self {
        Error::RootSystem(e.into())
    }
}
