use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rustc_hash::FxHashSet;

use crate::exactalg::Field;

use super::laurent::LaurentPoly;
use super::partition::Partition;
use super::SymError;

/// The distinct weights in the `W_n`-orbit of `lambda` (signed permutations).
pub fn orbit(lambda: &Partition, n: usize) -> Vec<Vec<i32>> {
    let mut w = lambda.padded(n);
    w.sort_unstable();
    let mut perms = Vec::new();
    loop {
        perms.push(w.clone());
        if !next_permutation(&mut w) {
            break;
        }
    }
    let mut out = Vec::new();
    for p in perms {
        let nz: Vec<usize> = (0..n).filter(|&i| p[i] != 0).collect();
        for mask in 0u32..(1 << nz.len()) {
            let mut u = p.clone();
            for (b, &i) in nz.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    u[i] = -u[i];
                }
            }
            out.push(u);
        }
    }
    out
}

fn next_permutation(v: &mut [i32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn is_dominant(w: &[i32]) -> bool {
    w.iter().all(|&x| x >= 0) && w.windows(2).all(|p| p[0] >= p[1])
}

type Structure = Arc<Vec<(Partition, i64)>>;

/// Integer structure constants of `m_lambda * m_mu` in `n` variables.
fn structure(lambda: &Partition, mu: &Partition, n: usize) -> Structure {
    static CACHE: OnceLock<Mutex<HashMap<(usize, Partition, Partition), Structure>>> = OnceLock::new();
    let key = if lambda <= mu { (n, lambda.clone(), mu.clone()) } else { (n, mu.clone(), lambda.clone()) };
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().unwrap().get(&key) {
        return s.clone();
    }
    let (a, b) = (orbit(&key.1, n), orbit(&key.2, n));
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut sum = vec![0; n];
    for x in &a {
        for y in &b {
            for i in 0..n {
                sum[i] = x[i] + y[i];
            }
            if is_dominant(&sum) {
                *counts.entry(Partition::dominant(&sum)).or_default() += 1;
            }
        }
    }
    let s: Structure = Arc::new(counts.into_iter().collect());
    cache.lock().unwrap().insert(key, s.clone());
    s
}

/// A `W_n`-invariant Laurent polynomial, stored by its coefficients in the
/// monomial basis `m_lambda`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSym<F> {
    pub n: usize,
    pub coeffs: BTreeMap<Partition, F>,
}

impl<F: Field> LaurentSym<F> {
    pub fn zero(n: usize) -> LaurentSym<F> {
        LaurentSym { n, coeffs: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: F) -> LaurentSym<F> {
        let mut s = LaurentSym::zero(n);
        s.add_term(Partition::empty(), c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> F {
        self.coeffs.get(lambda).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: F) {
        assert!(lambda.len() <= self.n, "partition {lambda} longer than n = {}", self.n);
        if c.is_zero() {
            return;
        }
        let cur = self.coeff(&lambda).plus(&c);
        if cur.is_zero() {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, cur);
        }
    }

    pub fn plus(&self, o: &LaurentSym<F>) -> LaurentSym<F> {
        let mut r = self.clone();
        for (l, c) in &o.coeffs {
            r.add_term(l.clone(), c.clone());
        }
        r
    }

    pub fn minus(&self, o: &LaurentSym<F>) -> LaurentSym<F> {
        self.plus(&o.scale(&F::one().negate()))
    }

    pub fn scale(&self, c: &F) -> LaurentSym<F> {
        let mut r = LaurentSym::zero(self.n);
        for (l, x) in &self.coeffs {
            r.add_term(l.clone(), x.times(c));
        }
        r
    }

    pub fn times(&self, o: &LaurentSym<F>) -> LaurentSym<F> {
        assert_eq!(self.n, o.n, "products need a common number of variables");
        let mut r = LaurentSym::zero(self.n);
        for (l, x) in &self.coeffs {
            for (m, y) in &o.coeffs {
                let xy = x.times(y);
                for (nu, k) in structure(l, m, self.n).iter() {
                    r.add_term(nu.clone(), xy.times(&F::from_i64(*k)));
                }
            }
        }
        r
    }

    /// The coefficient map in the monomial basis.
    pub fn expand_in_monomial(&self) -> &BTreeMap<Partition, F> {
        &self.coeffs
    }

    /// The largest partition in the support under the graded order.
    pub fn leading(&self) -> Option<(&Partition, &F)> {
        self.coeffs.iter().next_back()
    }

    /// The full Laurent expansion.
    pub fn to_laurent(&self) -> LaurentPoly<F> {
        let mut p = LaurentPoly::zero(self.n);
        for (l, c) in &self.coeffs {
            for w in orbit(l, self.n) {
                p.add_term(w, c.clone());
            }
        }
        p
    }

    /// Reads off the dominant coefficients after checking `W_n`-invariance.
    pub fn from_laurent(p: &LaurentPoly<F>) -> Result<LaurentSym<F>, SymError> {
        let mut s = LaurentSym::zero(p.n);
        let mut seen = FxHashSet::default();
        for (w, c) in &p.terms {
            if is_dominant(w) {
                s.add_term(Partition::new(w.iter().map(|&x| x as u32).collect()), c.clone());
            }
            let key = Partition::dominant(w);
            if seen.insert(key.clone()) {
                for u in orbit(&key, p.n) {
                    if p.coeff(&u) != *c {
                        return Err(SymError::NotInvariant(format!("coefficients of x^{w:?} and x^{u:?} differ")));
                    }
                }
            }
        }
        Ok(s)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> Result<G, SymError>) -> Result<LaurentSym<G>, SymError> {
        let mut r = LaurentSym::zero(self.n);
        for (l, c) in &self.coeffs {
            r.add_term(l.clone(), f(c)?);
        }
        Ok(r)
    }
}

/// The monomial symmetric polynomial `m_lambda` in `n` variables.
pub fn monomial_sym<F: Field>(lambda: &Partition, n: usize) -> Result<LaurentSym<F>, SymError> {
    if lambda.len() > n {
        return Err(SymError::OutOfRange(format!("partition {lambda} has more than {n} parts")));
    }
    let mut s = LaurentSym::zero(n);
    s.add_term(lambda.clone(), F::one());
    Ok(s)
}

impl<F: Field> fmt::Display for LaurentSym<F> {
    /// Terms `coeff * m[...]`, largest partition first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let s = c.to_string();
            if s.contains(' ') || s.starts_with('-') {
                write!(f, "({s}) * m{l}")?;
            } else {
                write!(f, "{s} * m{l}")?;
            }
        }
        Ok(())
    }
}
