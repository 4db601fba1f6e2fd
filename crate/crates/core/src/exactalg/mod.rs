//! Exact arithmetic: rationals, sparse polynomials, reduced rational
//! functions, specialization maps, and randomized identity testing.

mod error;
mod expr;
mod factor;
mod field;
mod identity;
pub(crate) mod int;
pub(crate) mod mono;
mod parse;
mod poly;
mod spec;

pub use error::AlgError;
pub use expr::RationalExpr;
pub use field::{format_rational, parse_rational, ExactRational, Field};
pub use identity::{probably_zero, random_rational};
pub use mono::{Var, ALPHABET};
pub use parse::parse_expr;
pub use poly::MultiPoly;
pub use spec::{substitute, SpecField, Stage};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact binary arithmetic on rational expressions.
pub fn poly_arith(x: &RationalExpr, y: &RationalExpr, op: ArithOp) -> Result<RationalExpr, AlgError> {
    Ok(match op {
        ArithOp::Add => x.add(y),
        ArithOp::Sub => x.sub(y),
        ArithOp::Mul => x.mul(y),
        ArithOp::Div => x.try_div(y)?,
    })
}

/// Shorthand for a variable as a rational expression.
pub fn v(var: Var) -> RationalExpr {
    RationalExpr::var(var)
}
