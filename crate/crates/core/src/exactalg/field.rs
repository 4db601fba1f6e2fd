//! The arithmetic interface shared by symbolic and numeric computations.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::error::AlgError;
use super::expr::RationalExpr;

/// Arbitrary-precision rational number.
pub type ExactRational = BigRational;

/// A commutative field with exact arithmetic.
pub trait Field: Clone + Debug + Display + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &ExactRational) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    fn inverse(&self) -> Result<Self, AlgError>;

    fn quot(&self, o: &Self) -> Result<Self, AlgError> {
        Ok(self.times(&o.inverse()?))
    }

    fn pow_u(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    fn pow_i(&self, k: i64) -> Result<Self, AlgError> {
        let p = self.pow_u(k.unsigned_abs() as u32);
        if k >= 0 {
            Ok(p)
        } else {
            p.inverse()
        }
    }

    /// `1 - self`
    fn one_minus(&self) -> Self {
        Self::one().minus(self)
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_rational(r: &ExactRational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        <BigRational as Zero>::is_zero(self)
    }
    fn is_one(&self) -> bool {
        <BigRational as One>::is_one(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Result<Self, AlgError> {
        if Field::is_zero(self) {
            Err(AlgError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

impl Field for RationalExpr {
    fn zero() -> Self {
        RationalExpr::zero()
    }
    fn one() -> Self {
        RationalExpr::one()
    }
    fn from_i64(v: i64) -> Self {
        RationalExpr::from_int(v)
    }
    fn from_rational(r: &ExactRational) -> Self {
        RationalExpr::from_rational(r)
    }
    fn is_zero(&self) -> bool {
        RationalExpr::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RationalExpr::is_one(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn inverse(&self) -> Result<Self, AlgError> {
        self.try_inv()
    }
}

/// Parses `p/q` or `p` into an exact rational.
pub fn parse_rational(s: &str) -> Result<ExactRational, AlgError> {
    let s = s.trim();
    let bad = || AlgError::Parse(format!("not a rational number: `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(AlgError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-{}/{}", -r.numer(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
