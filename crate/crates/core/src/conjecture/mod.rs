//! Asymptotically free eigenfunctions of types `A` and `C`, and exact checks
//! of the `C_2`, rectangular `C_3` and folded `A_{2n-1}` conjectures at
//! rational parameter points.

mod coeffs;
mod eigen_c;
mod macdonald_a;
mod series;
mod suite;
mod verify;

use thiserror::Error;

use crate::exactalg::AlgError;
use crate::koornwinder::KoornError;
use crate::symfunc::SymError;

pub use coeffs::*;
pub use eigen_c::{phi_c_series, CParams};
pub use macdonald_a::{apply_macdonald_a, eigenvalue_a, monomial_a, oracle_p_a};
pub use series::{height, keys_up_to, RootKind, TruncSeries};
pub use suite::{support_height, verify_conjecture_suite, ConjectureConfig};
pub use verify::*;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Koorn(#[from] KoornError),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
}
