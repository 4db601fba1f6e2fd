//! `W_n`-invariant Laurent polynomials of type `BC_n`: monomial symmetric
//! polynomials, the generators `E_r(x)`, the interpolation polynomials
//! `E_r(x;a|t)`, and dominance order.

mod generators;
mod laurent;
mod partition;
mod sym;

use thiserror::Error;

use crate::exactalg::AlgError;

pub use generators::{elementary, elementary_binomial, interpolation};
pub use laurent::LaurentPoly;
pub use partition::{dominance_leq, partitions_below, Partition};
pub use sym::{monomial_sym, orbit, LaurentSym};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("not W_n-invariant: {0}")]
    NotInvariant(String),
    #[error("inexact division: {0}")]
    NotDivisible(String),
    #[error("parse error: {0}")]
    Parse(String),
}
