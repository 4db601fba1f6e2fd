//! Partial factorization used to keep rational expressions reduced.
//!
//! Every polynomial that enters a denominator is split into a signed integer
//! content, a monomial, and primitive factors. Binomials and polynomials in a
//! single monomial are split into cyclotomic pieces, which covers every
//! denominator built from q-Pochhammer symbols. Anything else is kept as one
//! factor; that only weakens cancellation, never correctness.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use super::int::Int;
use super::mono::{self, Mono};
use super::poly::ZPoly;

pub(crate) struct Factorization {
    /// Signed integer unit, so that `p = unit * x^mono * prod(factors)`.
    pub unit: Int,
    pub mono: Mono,
    pub factors: Vec<(ZPoly, u32)>,
}

thread_local! {
    static CYCLO: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub(crate) fn cyclotomic(n: u32) -> Rc<Vec<i64>> {
    if let Some(c) = CYCLO.with(|m| m.borrow().get(&n).cloned()) {
        return c;
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d < n {
            num = div_monic(&num, &cyclotomic(d)).expect("cyclotomic recursion");
        }
    }
    let rc = Rc::new(num);
    CYCLO.with(|m| m.borrow_mut().insert(n, rc.clone()));
    rc
}

/// Exact division of integer polynomials by a monic divisor.
fn div_monic(n: &[i64], f: &[i64]) -> Option<Vec<i64>> {
    let df = f.len() - 1;
    if n.len() < f.len() {
        return if n.iter().all(|&c| c == 0) { Some(vec![0]) } else { None };
    }
    let mut rem: Vec<i128> = n.iter().map(|&c| c as i128).collect();
    let mut q = vec![0i64; n.len() - df];
    for i in (0..q.len()).rev() {
        let c = rem[i + df];
        q[i] = i64::try_from(c).ok()?;
        if c != 0 {
            for (j, fc) in f.iter().enumerate() {
                rem[i + j] -= c * *fc as i128;
            }
        }
    }
    if rem[..df].iter().all(|&c| c == 0) {
        Some(q)
    } else {
        None
    }
}

fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `Q^deg * phi(P/Q)` for a univariate integer polynomial `phi`.
fn homogenize(coeffs: &[i64], p: Mono, q: Mono) -> ZPoly {
    let deg = coeffs.len() as u32 - 1;
    let raw = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(k, c)| (mono::mul(mono::pow(p, k as u32), mono::pow(q, deg - k as u32)), Int::from(*c)))
        .collect();
    ZPoly::from_terms(raw)
}

/// Sign-normalizes so that the lowest term is positive.
fn normalize_sign(p: ZPoly) -> (ZPoly, bool) {
    if p.lowest().1.is_negative() {
        (p.neg(), true)
    } else {
        (p, false)
    }
}

fn exps_gcd(m: Mono) -> u32 {
    mono::to_exps(m).iter().fold(0u32, |g, &e| num_integer::gcd(g, e))
}

fn push_factor(out: &mut Vec<(ZPoly, u32)>, f: ZPoly) {
    if let Some(e) = out.iter_mut().find(|(g, _)| *g == f) {
        e.1 += 1;
    } else {
        out.push((f, 1));
    }
}

/// Splits `x^m0 + sign*x^m1` (disjoint supports) into cyclotomic factors.
fn split_binomial(m0: Mono, m1: Mono, plus: bool, out: &mut Vec<(ZPoly, u32)>) {
    let g = num_integer::gcd(exps_gcd(m0), exps_gcd(m1));
    let p = mono::from_exps(&mono::to_exps(m1).map(|e| e / g));
    let q = mono::from_exps(&mono::to_exps(m0).map(|e| e / g));
    let orders: Vec<u32> = if plus {
        divisors(2 * g).into_iter().filter(|e| g % e != 0).collect()
    } else {
        divisors(g)
    };
    for e in orders {
        let (f, _) = normalize_sign(homogenize(&cyclotomic(e), p, q));
        push_factor(out, f);
    }
}

/// If every term of `p` is a power of one monomial `y`, returns `y` and the
/// dense coefficients of the univariate polynomial in `y`.
fn univariate_view(p: &ZPoly) -> Option<(Mono, Vec<i64>)> {
    let first = p.terms().iter().find(|(m, _)| *m != 0)?.0;
    let g = exps_gcd(first);
    let y = mono::from_exps(&mono::to_exps(first).map(|e| e / g));
    let ye = mono::to_exps(y);
    let lead = ye.iter().position(|&e| e > 0)?;
    let mut dense: Vec<i64> = Vec::new();
    for (m, c) in p.terms() {
        let e = mono::to_exps(*m);
        let k = e[lead] / ye[lead];
        if mono::pow(y, k) != *m {
            return None;
        }
        if dense.len() <= k as usize {
            dense.resize(k as usize + 1, 0);
        }
        dense[k as usize] = c.to_i64()?;
    }
    Some((y, dense))
}

/// Splits off cyclotomic factors of a univariate primitive polynomial.
fn split_univariate(y: Mono, mut h: Vec<i64>, out: &mut Vec<(ZPoly, u32)>) -> Option<ZPoly> {
    let deg = h.len() as u32 - 1;
    let bound = 6 * deg + 6;
    for e in 1..=bound {
        if h.len() == 1 {
            break;
        }
        if euler_phi(e) > h.len() as u32 - 1 {
            continue;
        }
        let phi = cyclotomic(e);
        while h.len() > phi.len() - 1 {
            match div_monic(&h, &phi) {
                Some(q) => {
                    let (f, _) = normalize_sign(homogenize(&phi, y, 0));
                    push_factor(out, f);
                    h = q;
                }
                None => break,
            }
        }
    }
    if h.len() == 1 {
        None
    } else {
        Some(normalize_sign(homogenize(&h, y, 0)).0)
    }
}

pub(crate) fn factorize(p: &ZPoly) -> Factorization {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let mut content = p.int_content();
    let m = p.mono_content();
    let mut prim = p.div_mono(m).div_int(&content);
    if prim.lowest().1.is_negative() {
        prim = prim.neg();
        content = content.neg();
    }
    let mut factors = Vec::new();
    if prim.len() == 1 {
        return Factorization { unit: content, mono: m, factors };
    }
    if prim.len() == 2 {
        let (m0, c0) = prim.lowest().clone();
        let (m1, c1) = prim.leading().clone();
        if c0.is_one() && c1.abs().is_one() {
            split_binomial(m0, m1, !c1.is_negative(), &mut factors);
            return Factorization { unit: content, mono: m, factors };
        }
    }
    if let Some((y, dense)) = univariate_view(&prim) {
        if let Some(rest) = split_univariate(y, dense, &mut factors) {
            push_factor(&mut factors, rest);
        }
    } else {
        push_factor(&mut factors, prim);
    }
    Factorization { unit: content, mono: m, factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::mono::Var;

    fn t() -> ZPoly {
        ZPoly::var(Var::T)
    }

    fn product(f: &Factorization) -> ZPoly {
        let mut acc = ZPoly::term(f.mono, f.unit.clone());
        for (g, k) in &f.factors {
            acc = acc.mul(&g.pow(*k));
        }
        acc
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(*cyclotomic(1), vec![-1, 1]);
        assert_eq!(*cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn binomials_split() {
        let p = ZPoly::one().sub(&t().pow(6));
        let f = factorize(&p);
        assert_eq!(f.factors.len(), 4);
        assert_eq!(product(&f), p);
        let a2 = ZPoly::var(Var::A).pow(2);
        let q = a2.sub(&t().pow(2)).mul(&t());
        let f = factorize(&q);
        assert_eq!(f.factors.len(), 2);
        assert_eq!(product(&f), q);
        let r = ZPoly::one().add(&t().pow(4).mul(&a2));
        let f = factorize(&r);
        assert_eq!(product(&f), r);
        assert_eq!(f.factors.len(), 1);
    }

    #[test]
    fn univariate_products() {
        let one = ZPoly::one();
        let p = one.add(&t()).mul(&one.add(&t().pow(2))).mul(&one.add(&t()).add(&t().pow(3)).scale(&Int::from(-3)));
        let f = factorize(&p);
        assert_eq!(product(&f), p);
        assert_eq!(f.factors.len(), 3);
    }
}
