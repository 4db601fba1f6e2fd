//! Arbitrary-precision integers with an inline `i128` fast path.
//!
//! Polynomial coefficients in this crate are overwhelmingly small, so the
//! common case never touches the heap. Values that overflow `i128` are
//! promoted to [`BigInt`] and demoted again as soon as they fit.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub(crate) enum Int {
    Small(i128),
    Big(BigInt),
}

impl Int {
    pub fn zero() -> Int {
        Int::Small(0)
    }

    pub fn one() -> Int {
        Int::Small(1)
    }

    pub fn from_big(b: BigInt) -> Int {
        match b.to_i128() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(v) => v.signum() as i32,
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => i64::try_from(*v).ok(),
            Int::Big(_) => None,
        }
    }

    pub fn add(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(v) = a.checked_add(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() + o.to_big())
    }

    pub fn sub(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(v) = a.checked_sub(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() - o.to_big())
    }

    pub fn mul(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(v) = a.checked_mul(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() * o.to_big())
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b.clone()),
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// `self += a * b`, reusing the inline representation when possible.
    pub fn add_mul(&mut self, a: &Int, b: &Int) {
        if let (Int::Small(s), Int::Small(x), Int::Small(y)) = (&*self, a, b) {
            if let Some(p) = x.checked_mul(*y) {
                if let Some(v) = s.checked_add(p) {
                    *self = Int::Small(v);
                    return;
                }
            }
        }
        *self = self.add(&a.mul(b));
    }

    /// Exact quotient; `None` when `o` does not divide `self`.
    pub fn div_exact(&self, o: &Int) -> Option<Int> {
        if o.is_zero() {
            return None;
        }
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return if r == 0 { Some(Int::Small(q)) } else { None };
            }
        }
        let (q, r) = self.to_big().div_rem(&o.to_big());
        if r.is_zero() {
            Some(Int::from_big(q))
        } else {
            None
        }
    }

    pub fn gcd(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if *a != i128::MIN && *b != i128::MIN {
                let (mut x, mut y) = (a.abs(), b.abs());
                while y != 0 {
                    let r = x % y;
                    x = y;
                    y = r;
                }
                return Int::Small(x);
            }
        }
        Int::from_big(self.to_big().gcd(&o.to_big()))
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::one();
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Int {
        Int::Small(v as i128)
    }
}

impl From<&BigInt> for Int {
    fn from(v: &BigInt) -> Int {
        Int::from_big(v.clone())
    }
}

impl PartialEq for Int {
    fn eq(&self, o: &Int) -> bool {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => a == b,
            (Int::Big(a), Int::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Int {}

impl Hash for Int {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Int::Small(v) => {
                0u8.hash(state);
                v.hash(state)
            }
            Int::Big(b) => {
                1u8.hash(state);
                b.hash(state)
            }
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, o: &Int) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Int {
    fn cmp(&self, o: &Int) -> Ordering {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl Zero for Int {
    fn zero() -> Int {
        Int::Small(0)
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl std::ops::Add for Int {
    type Output = Int;
    fn add(self, o: Int) -> Int {
        Int::add(&self, &o)
    }
}

impl One for Int {
    fn one() -> Int {
        Int::Small(1)
    }
}

impl std::ops::Mul for Int {
    type Output = Int;
    fn mul(self, o: Int) -> Int {
        Int::mul(&self, &o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotes_and_demotes() {
        let big = Int::Small(i128::MAX).add(&Int::one());
        assert!(matches!(big, Int::Big(_)));
        let back = big.sub(&Int::one());
        assert_eq!(back, Int::Small(i128::MAX));
    }

    #[test]
    fn exact_division_and_gcd() {
        let a = Int::from(84);
        let b = Int::from(-36);
        assert_eq!(a.gcd(&b), Int::from(12));
        assert_eq!(a.div_exact(&Int::from(7)), Some(Int::from(12)));
        assert_eq!(a.div_exact(&Int::from(5)), None);
        let huge = Int::from(3).pow(200);
        assert_eq!(huge.div_exact(&Int::from(3).pow(199)), Some(Int::from(3)));
    }

    #[test]
    fn add_mul_overflow_falls_back() {
        let mut acc = Int::Small(i128::MAX - 1);
        acc.add_mul(&Int::from(2), &Int::from(3));
        assert_eq!(acc.to_big(), BigInt::from(i128::MAX) + 5);
    }
}
