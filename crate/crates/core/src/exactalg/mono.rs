//! Packed monomials over the fixed alphabet `a, b, c, d, q, t, u, s`.
//!
//! Each exponent occupies a 16-bit lane of a `u128`, with `a` in the most
//! significant lane, so the integer order on packed values is the
//! lexicographic order on exponent vectors. The top bit of each lane is a
//! guard: exponents are limited to `MAX_EXP` and overflow is detected by
//! inspecting the guard bits after an addition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// One symbol of the fixed alphabet, in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    A,
    B,
    C,
    D,
    Q,
    T,
    U,
    S,
}

pub const ALPHABET: [Var; 8] = [Var::A, Var::B, Var::C, Var::D, Var::Q, Var::T, Var::U, Var::S];

impl Var {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        b"abcdqtus"[self.index()] as char
    }

    pub fn from_char(c: char) -> Option<Var> {
        ALPHABET.iter().copied().find(|v| v.name() == c)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Var {
    type Err = String;
    fn from_str(s: &str) -> Result<Var, String> {
        let mut it = s.chars();
        match (it.next(), it.next()) {
            (Some(c), None) => Var::from_char(c).ok_or_else(|| format!("unknown variable `{s}`")),
            _ => Err(format!("unknown variable `{s}`")),
        }
    }
}

pub(crate) type Mono = u128;

pub(crate) const MAX_EXP: u32 = 0x7fff;
const LANE: u32 = 16;
const GUARDS: u128 = 0x8000_8000_8000_8000_8000_8000_8000_8000;

#[inline]
fn shift(v: usize) -> u32 {
    (7 - v as u32) * LANE
}

#[inline]
pub(crate) fn exp(m: Mono, v: usize) -> u32 {
    ((m >> shift(v)) & 0xffff) as u32
}

pub(crate) fn single(v: usize, e: u32) -> Mono {
    assert!(e <= MAX_EXP, "exponent {e} exceeds the supported bound");
    (e as u128) << shift(v)
}

pub(crate) fn from_exps(e: &[u32; 8]) -> Mono {
    e.iter().enumerate().fold(0, |m, (v, &k)| m | single(v, k))
}

pub(crate) fn to_exps(m: Mono) -> [u32; 8] {
    std::array::from_fn(|v| exp(m, v))
}

#[inline]
pub(crate) fn mul(x: Mono, y: Mono) -> Mono {
    let r = x + y;
    assert!(r & GUARDS == 0, "monomial exponent overflow");
    r
}

/// `x / y` when `y` divides `x`.
#[inline]
pub(crate) fn div(x: Mono, y: Mono) -> Option<Mono> {
    let r = (x | GUARDS).wrapping_sub(y);
    if r & GUARDS == GUARDS {
        Some(r & !GUARDS)
    } else {
        None
    }
}

pub(crate) fn pow(x: Mono, k: u32) -> Mono {
    let e = to_exps(x);
    let mut out = [0u32; 8];
    for v in 0..8 {
        let p = e[v] as u64 * k as u64;
        assert!(p <= MAX_EXP as u64, "monomial exponent overflow");
        out[v] = p as u32;
    }
    from_exps(&out)
}

/// Lane-wise minimum.
pub(crate) fn gcd(x: Mono, y: Mono) -> Mono {
    let (a, b) = (to_exps(x), to_exps(y));
    from_exps(&std::array::from_fn(|v| a[v].min(b[v])))
}

/// Lane-wise maximum.
pub(crate) fn lcm(x: Mono, y: Mono) -> Mono {
    let (a, b) = (to_exps(x), to_exps(y));
    from_exps(&std::array::from_fn(|v| a[v].max(b[v])))
}

pub(crate) fn degree(m: Mono) -> u32 {
    to_exps(m).iter().sum()
}

pub(crate) fn write_mono(f: &mut impl fmt::Write, m: Mono) -> fmt::Result {
    let mut first = true;
    for v in ALPHABET {
        let e = exp(m, v.index());
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_order_is_lex() {
        let a = single(Var::A.index(), 1);
        let t5 = single(Var::T.index(), 5);
        assert!(a > t5);
        assert!(single(Var::T.index(), 2) > single(Var::T.index(), 1));
    }

    #[test]
    fn divisibility() {
        let x = from_exps(&[2, 0, 1, 0, 0, 3, 0, 0]);
        let y = from_exps(&[1, 0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(div(x, y), Some(from_exps(&[1, 0, 0, 0, 0, 3, 0, 0])));
        assert_eq!(div(y, x), None);
        assert_eq!(mul(div(x, y).unwrap(), y), x);
    }

    #[test]
    fn display() {
        let mut s = String::new();
        write_mono(&mut s, from_exps(&[2, 0, 1, 0, 0, 3, 0, 0])).unwrap();
        assert_eq!(s, "a^2*c*t^3");
    }
}
