//! Exact computation of one-column Koornwinder polynomials, their
//! transition matrices, deformed Catalan numbers and type C/D Kostka
//! polynomials, together with independent oracles that check them.

pub mod conjecture;
pub mod exactalg;
pub mod koornwinder;
pub mod qseries;
pub mod report;
pub mod symfunc;
pub mod transition;
