//! Sparse multivariate polynomials.
//!
//! [`ZPoly`] is the integer-coefficient workhorse used inside rational
//! expressions; [`MultiPoly`] is the public view with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::int::Int;
use super::mono::{self, Mono, Var, ALPHABET};

/// Integer polynomial; terms sorted by ascending monomial, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub(crate) struct ZPoly {
    terms: Vec<(Mono, Int)>,
}

pub(crate) const MOD_P: u64 = (1 << 61) - 1;

#[inline]
pub(crate) fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD_P as u128) as u64
}

#[inline]
fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MOD_P {
        s - MOD_P
    } else {
        s
    }
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    acc
}

fn int_mod(c: &Int) -> u64 {
    match c {
        Int::Small(v) => v.rem_euclid(MOD_P as i128) as u64,
        Int::Big(b) => {
            let m = BigInt::from(MOD_P);
            let r = ((b % &m) + &m) % &m;
            r.try_into().unwrap()
        }
    }
}

impl ZPoly {
    pub fn zero() -> ZPoly {
        ZPoly { terms: Vec::new() }
    }

    pub fn one() -> ZPoly {
        ZPoly::constant(Int::one())
    }

    pub fn constant(c: Int) -> ZPoly {
        ZPoly::term(0, c)
    }

    pub fn term(m: Mono, c: Int) -> ZPoly {
        if c.is_zero() {
            ZPoly::zero()
        } else {
            ZPoly { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: Var) -> ZPoly {
        ZPoly::term(mono::single(v.index(), 1), Int::one())
    }

    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(raw: Vec<(Mono, Int)>) -> ZPoly {
        let mut map: BTreeMap<Mono, Int> = BTreeMap::new();
        for (m, c) in raw {
            let e = map.entry(m).or_insert_with(Int::zero);
            *e = e.add(&c);
        }
        ZPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Builds from terms already sorted by strictly increasing monomial.
    pub fn terms(&self) -> &[(Mono, Int)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<Int> {
        match self.terms.as_slice() {
            [] => Some(Int::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn lowest(&self) -> &(Mono, Int) {
        &self.terms[0]
    }

    pub fn leading(&self) -> &(Mono, Int) {
        self.terms.last().unwrap()
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.iter().any(|(m, _)| mono::exp(*m, v) > 0)
    }

    pub fn max_exps(&self) -> [u32; 8] {
        let mut out = [0u32; 8];
        for (m, _) in &self.terms {
            let e = mono::to_exps(*m);
            for v in 0..8 {
                out[v] = out[v].max(e[v]);
            }
        }
        out
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, k: &Int) -> ZPoly {
        if k.is_zero() {
            return ZPoly::zero();
        }
        if k.is_one() {
            return self.clone();
        }
        ZPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.mul(k))).collect(),
        }
    }

    pub fn mul_mono(&self, m: Mono) -> ZPoly {
        ZPoly {
            terms: self.terms.iter().map(|(x, c)| (mono::mul(*x, m), c.clone())).collect(),
        }
    }

    pub fn div_mono(&self, m: Mono) -> ZPoly {
        ZPoly {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (mono::div(*x, m).expect("monomial does not divide"), c.clone()))
                .collect(),
        }
    }

    pub fn div_int(&self, k: &Int) -> ZPoly {
        ZPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.div_exact(k).expect("integer does not divide")))
                .collect(),
        }
    }

    fn merge(&self, o: &ZPoly, negate: bool) -> ZPoly {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { t.1.neg() } else { t.1.clone() };
            out.push((t.0, c));
        }
        ZPoly { terms: out }
    }

    pub fn add(&self, o: &ZPoly) -> ZPoly {
        self.merge(o, false)
    }

    #[cfg(test)]
    pub fn sub(&self, o: &ZPoly) -> ZPoly {
        self.merge(o, true)
    }

    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly::zero();
        }
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_mono(*m).scale(c);
        }
        if small.len() <= 4 {
            let mut acc = ZPoly::zero();
            for (m, c) in &small.terms {
                acc = acc.add(&big.mul_mono(*m).scale(c));
            }
            return acc;
        }
        let mut map: FxHashMap<Mono, Int> =
            FxHashMap::with_capacity_and_hasher(big.len() * 2, Default::default());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                map.entry(mono::mul(*m1, *m2)).or_insert_with(Int::zero).add_mul(c1, c2);
            }
        }
        let mut terms: Vec<(Mono, Int)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| t.0);
        ZPoly { terms }
    }

    pub fn pow(&self, k: u32) -> ZPoly {
        let mut acc = ZPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn int_content(&self) -> Int {
        let mut g = Int::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term.
    pub fn mono_content(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else { return 0 };
        let mut g = *first;
        for (m, _) in it {
            if g == 0 {
                break;
            }
            g = mono::gcd(g, *m);
        }
        g
    }

    /// Exact quotient by `f`, or `None` if `f` does not divide `self`.
    pub fn div_exact(&self, f: &ZPoly) -> Option<ZPoly> {
        assert!(!f.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if f.len() == 1 {
            let (m, c) = &f.terms[0];
            let mut out = Vec::with_capacity(self.len());
            for (x, k) in &self.terms {
                out.push((mono::div(*x, *m)?, k.div_exact(c)?));
            }
            return Some(ZPoly { terms: out });
        }
        let (lm, lc) = f.leading().clone();
        let (low_m, _) = f.lowest();
        if mono::div(self.leading().0, lm).is_none() || mono::div(self.lowest().0, *low_m).is_none() {
            return None;
        }
        let mut rem: BTreeMap<Mono, Int> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Mono, Int)> = Vec::new();
        let rest = &f.terms[..f.len() - 1];
        while let Some((&m, c)) = rem.iter().next_back() {
            let qm = mono::div(m, lm)?;
            let qc = c.div_exact(&lc)?;
            rem.remove(&m);
            for (fm, fc) in rest {
                let key = mono::mul(qm, *fm);
                let prod = qc.mul(fc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = e.get().sub(&prod);
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(prod.neg());
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        Some(ZPoly { terms: quot })
    }

    /// Image in `F_p[z]` under `x_v -> r_v z`, as a dense coefficient vector.
    pub fn modular_image(&self, r: &[u64; 8]) -> Vec<u64> {
        let maxe = self.max_exps();
        let tables: Vec<Vec<u64>> = (0..8)
            .map(|v| {
                let mut tab = Vec::with_capacity(maxe[v] as usize + 1);
                let mut acc = 1u64;
                for _ in 0..=maxe[v] {
                    tab.push(acc);
                    acc = mulmod(acc, r[v]);
                }
                tab
            })
            .collect();
        let deg = self.terms.iter().map(|(m, _)| mono::degree(*m)).max().unwrap_or(0);
        let mut out = vec![0u64; deg as usize + 1];
        for (m, c) in &self.terms {
            let e = mono::to_exps(*m);
            let mut val = int_mod(c);
            for v in 0..8 {
                if e[v] > 0 {
                    val = mulmod(val, tables[v][e[v] as usize]);
                }
            }
            let d = mono::degree(*m) as usize;
            out[d] = addmod(out[d], val);
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[BigRational; 8]) -> BigRational {
        let maxe = self.max_exps();
        let tables: Vec<Vec<BigRational>> = (0..8)
            .map(|v| {
                let mut tab = Vec::with_capacity(maxe[v] as usize + 1);
                let mut acc = BigRational::one();
                for k in 0..=maxe[v] {
                    tab.push(acc.clone());
                    if k < maxe[v] {
                        acc = &acc * &point[v];
                    }
                }
                tab
            })
            .collect();
        let mut sum = BigRational::zero();
        for (m, c) in &self.terms {
            let e = mono::to_exps(*m);
            let mut val = BigRational::from_integer(c.to_big());
            for v in 0..8 {
                if e[v] > 0 {
                    val *= &tables[v][e[v] as usize];
                }
            }
            sum += val;
        }
        sum
    }
}

/// Whether the dense polynomial `f` divides `n` in `F_p[z]`.
pub(crate) fn modular_divides(n: &[u64], f: &[u64]) -> bool {
    let df = f.len() - 1;
    let lead = *f.last().unwrap();
    if lead == 0 {
        return true;
    }
    if n.len() == 1 && n[0] == 0 {
        return true;
    }
    if n.len() < f.len() {
        return false;
    }
    let inv = powmod(lead, MOD_P - 2);
    let mut rem = n.to_vec();
    for i in (df..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        let k = mulmod(c, inv);
        let base = i - df;
        for (j, fc) in f.iter().enumerate() {
            let sub = mulmod(k, *fc);
            rem[base + j] = if rem[base + j] >= sub {
                rem[base + j] - sub
            } else {
                rem[base + j] + MOD_P - sub
            };
        }
    }
    rem[..df].iter().all(|&c| c == 0)
}

pub(crate) fn write_terms(f: &mut impl fmt::Write, terms: &[(Mono, String)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (m, c)) in terms.iter().enumerate() {
        let (neg, mag) = match c.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, c.as_str()),
        };
        if i == 0 {
            if neg {
                f.write_char('-')?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        if *m == 0 {
            f.write_str(mag)?;
        } else {
            if mag != "1" {
                write!(f, "{mag}*")?;
            }
            mono::write_mono(f, *m)?;
        }
    }
    Ok(())
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Mono, String)> = self.terms.iter().map(|(m, c)| (*m, c.to_string())).collect();
        write_terms(f, &terms)
    }
}

/// A polynomial over the fixed alphabet with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    pub(crate) num: ZPoly,
    pub(crate) den: Int,
}

impl MultiPoly {
    pub(crate) fn from_parts(num: ZPoly, den: Int) -> MultiPoly {
        let g = num.int_content().gcd(&den);
        let mut den = den;
        let mut num = num;
        if den.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        if !g.is_zero() && !g.is_one() {
            num = num.div_int(&g);
            den = den.div_exact(&g).unwrap();
        }
        if num.is_zero() {
            den = Int::one();
        }
        MultiPoly { num, den }
    }

    pub fn zero() -> MultiPoly {
        MultiPoly::from_parts(ZPoly::zero(), Int::one())
    }

    pub fn one() -> MultiPoly {
        MultiPoly::from_parts(ZPoly::one(), Int::one())
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::from_parts(ZPoly::var(v), Int::one())
    }

    /// Builds a polynomial from `(exponents in alphabet order, coefficient)` pairs.
    pub fn from_terms(terms: &[([u32; 8], BigRational)]) -> MultiPoly {
        let mut den = BigInt::one();
        for (_, c) in terms {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let raw = terms
            .iter()
            .map(|(e, c)| (mono::from_exps(e), Int::from_big(c.numer() * (&den / c.denom()))))
            .collect();
        MultiPoly::from_parts(ZPoly::from_terms(raw), Int::from_big(den))
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> Vec<([u32; 8], BigRational)> {
        let d = self.den.to_big();
        self.num
            .terms()
            .iter()
            .map(|(m, c)| (mono::to_exps(*m), BigRational::new(c.to_big(), d.clone())))
            .collect()
    }

    /// Variables that actually occur, in alphabet order.
    pub fn variables(&self) -> Vec<Var> {
        ALPHABET.iter().copied().filter(|v| self.num.uses_var(v.index())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        let l = self.den.mul(&o.den).div_exact(&self.den.gcd(&o.den)).unwrap();
        let x = self.num.scale(&l.div_exact(&self.den).unwrap());
        let y = o.num.scale(&l.div_exact(&o.den).unwrap());
        MultiPoly::from_parts(x.add(&y), l)
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        MultiPoly::from_parts(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn eval(&self, point: &[BigRational; 8]) -> BigRational {
        self.num.eval(point) / BigRational::from_integer(self.den.to_big())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.den.to_big();
        let terms: Vec<(Mono, String)> = self
            .num
            .terms()
            .iter()
            .map(|(m, c)| (*m, BigRational::new(c.to_big(), d.clone()).to_string()))
            .collect();
        write_terms(f, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> ZPoly {
        ZPoly::var(Var::T)
    }

    #[test]
    fn arithmetic_and_display() {
        let one = ZPoly::one();
        let p = one.sub(&t().pow(2)).pow(2);
        assert_eq!(p.to_string(), "1 - 2*t^2 + t^4");
        let q = ZPoly::var(Var::A).pow(2).mul(&ZPoly::var(Var::C)).mul(&t().pow(3));
        assert_eq!(q.to_string(), "a^2*c*t^3");
    }

    #[test]
    fn exact_division() {
        let one = ZPoly::one();
        let a = one.sub(&t());
        let b = one.add(&ZPoly::var(Var::A).mul(&t()));
        let p = a.mul(&b).mul(&b);
        assert_eq!(p.div_exact(&b).unwrap(), a.mul(&b));
        assert!(p.div_exact(&one.add(&t())).is_none());
    }

    #[test]
    fn modular_divisibility() {
        let one = ZPoly::one();
        let f = one.sub(&ZPoly::var(Var::A).mul(&t()));
        let g = one.add(&t().pow(3));
        let n = f.mul(&g);
        let r = [3, 5, 7, 11, 13, 17, 19, 23];
        assert!(modular_divides(&n.modular_image(&r), &f.modular_image(&r)));
        assert!(!modular_divides(&g.modular_image(&r), &f.modular_image(&r)));
    }

    #[test]
    fn rational_coefficients() {
        let p = MultiPoly::from_terms(&[
            ([0; 8], BigRational::new(1.into(), 2.into())),
            ([0, 0, 0, 0, 0, 1, 0, 0], BigRational::new((-3).into(), 4.into())),
        ]);
        assert_eq!(p.to_string(), "1/2 - 3/4*t");
    }
}
