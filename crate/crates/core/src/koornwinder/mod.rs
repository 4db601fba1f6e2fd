//! Koornwinder's q-difference operator, a triangular eigen-solve oracle for
//! `P_lambda`, and the explicit one-column formulas checked against it.

mod formulas;
mod operator;
mod verify;

use thiserror::Error;

use crate::exactalg::AlgError;
use crate::symfunc::SymError;
use crate::transition::TransError;

pub use formulas::*;
pub use operator::*;
pub use verify::*;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KoornError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Trans(#[from] TransError),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("operator is not triangular: {0}")]
    NotTriangular(String),
}
