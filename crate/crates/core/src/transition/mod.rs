//! Transition coefficients and matrices among `P_(1^r)`, `E_r`,
//! `E_r(x;a|t)` and `m_(1^r)`, deformed Catalan numbers, Kostka
//! polynomials, and the identities relating them.

mod coeffs;
mod kostka;
mod matrix;
mod verify;

use thiserror::Error;

use crate::exactalg::AlgError;

pub use coeffs::*;
pub use kostka::{kostka, kostka_matrix, kostka_ratio, kostka_split};
pub use matrix::*;
pub use verify::*;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("closed forms disagree: {0}")]
    Mismatch(String),
}
