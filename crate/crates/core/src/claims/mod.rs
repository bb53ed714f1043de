//! Closed-form values, explicit colorings and named verification suites for
//! the published results on rvc and srvc.

pub mod colorings;
pub mod formulas;
pub mod suites;

use thiserror::Error;

use crate::families::FamilyError;
use crate::solver::SolveError;

pub use colorings::{paper_coloring, ColoringKind, ColoringSpec};
pub use formulas::{formula_corollary12, formula_wheel2_rvc, formula_wheel2_srvc, FormulaResult};
pub use suites::{verify_suite, CaseRow, CaseStatus, SuiteId, SuiteParams, SuiteReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClaimError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("wrong graph: {0}")]
    WrongGraph(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

impl From<crate::check::CheckError> for ClaimError {
    fn from(e: crate::check::CheckError) -> Self {
        ClaimError::Solve(e.into())
    }
}

impl From<crate::graph::GraphError> for ClaimError {
    fn from(e: crate::graph::GraphError) -> Self {
        ClaimError::Solve(e.into())
    }
}
