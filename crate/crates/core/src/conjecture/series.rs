use std::collections::BTreeMap;

use crate::exactalg::Field;
use crate::symfunc::LaurentPoly;

use super::ConjError;

/// Root system whose simple roots are the expansion variables.
///
/// Type `A_{n-1}` expands in `x_{i+1}/x_i`; type `C_n` additionally in `1/x_n^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootKind {
    A,
    C,
}

impl RootKind {
    pub fn rank(self, n: usize) -> usize {
        match self {
            RootKind::A => n.saturating_sub(1),
            RootKind::C => n,
        }
    }

    /// Exponents of `x^{-beta}` for `beta = sum k_i alpha_i`.
    pub fn exponents(self, n: usize, key: &[u32]) -> Vec<i32> {
        let mut a = vec![0i32; n];
        for (i, &k) in key.iter().enumerate() {
            let k = k as i32;
            a[i] -= if self == RootKind::C && i == n - 1 { 2 * k } else { k };
            if i + 1 < n {
                a[i + 1] += k;
            }
        }
        a
    }

    /// Inverse of [`RootKind::exponents`]; `None` when `x^a` is not in the
    /// negative cone.
    pub fn key_of(self, a: &[i32]) -> Option<Vec<u32>> {
        let n = a.len();
        let mut key = Vec::with_capacity(n);
        let mut partial = 0i32;
        for (i, &ai) in a.iter().enumerate() {
            partial += ai;
            if i + 1 < n {
                if partial > 0 {
                    return None;
                }
                key.push((-partial) as u32);
            }
        }
        match self {
            RootKind::A => (partial == 0).then_some(key),
            RootKind::C => {
                if partial > 0 || partial % 2 != 0 {
                    return None;
                }
                key.push((-partial / 2) as u32);
                Some(key)
            }
        }
    }
}

pub fn height(key: &[u32]) -> u32 {
    key.iter().sum()
}

/// All keys of rank `r` with height at most `order`, by increasing height.
pub fn keys_up_to(r: usize, order: u32) -> Vec<Vec<u32>> {
    fn go(r: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            go(r, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, order, &mut Vec::new(), &mut out);
    out.sort_by_key(|k| (height(k), k.clone()));
    out
}

/// A formal series `sum_beta c_beta x^{-beta}` over the positive cone,
/// truncated at root height `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<F> {
    pub kind: RootKind,
    pub n: usize,
    pub order: u32,
    pub coeffs: BTreeMap<Vec<u32>, F>,
}

impl<F: Field> TruncSeries<F> {
    pub fn zero(kind: RootKind, n: usize, order: u32) -> TruncSeries<F> {
        TruncSeries { kind, n, order, coeffs: BTreeMap::new() }
    }

    pub fn one(kind: RootKind, n: usize, order: u32) -> TruncSeries<F> {
        let mut s = TruncSeries::zero(kind, n, order);
        s.add_term(vec![0; kind.rank(n)], F::one());
        s
    }

    pub fn rank(&self) -> usize {
        self.kind.rank(self.n)
    }

    pub fn coeff(&self, key: &[u32]) -> F {
        self.coeffs.get(key).cloned().unwrap_or_else(F::zero)
    }

    /// Adds `c x^{-key}`; terms beyond the order are dropped.
    pub fn add_term(&mut self, key: Vec<u32>, c: F) {
        if c.is_zero() || height(&key) > self.order {
            return;
        }
        match self.coeffs.get_mut(&key) {
            Some(v) => {
                *v = v.plus(&c);
                if v.is_zero() {
                    self.coeffs.remove(&key);
                }
            }
            None => {
                self.coeffs.insert(key, c);
            }
        }
    }

    /// Adds `c x^a`, which must lie in the negative cone.
    pub fn add_monomial(&mut self, a: &[i32], c: F) -> Result<(), ConjError> {
        let key = self
            .kind
            .key_of(a)
            .ok_or_else(|| ConjError::OutOfRange(format!("monomial {a:?} is not in the expansion cone")))?;
        self.add_term(key, c);
        Ok(())
    }

    pub fn plus(&self, o: &TruncSeries<F>) -> TruncSeries<F> {
        let mut out = self.clone();
        out.order = self.order.min(o.order);
        out.coeffs.retain(|k, _| height(k) <= out.order);
        for (k, c) in &o.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> TruncSeries<F> {
        let mut out = TruncSeries::zero(self.kind, self.n, self.order);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), v.times(c));
        }
        out
    }

    pub fn times(&self, o: &TruncSeries<F>) -> TruncSeries<F> {
        let order = self.order.min(o.order);
        let mut out = TruncSeries::zero(self.kind, self.n, order);
        for (k1, c1) in &self.coeffs {
            let h1 = height(k1);
            for (k2, c2) in &o.coeffs {
                if h1 + height(k2) <= order {
                    let k: Vec<u32> = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
                    out.add_term(k, c1.times(c2));
                }
            }
        }
        out
    }

    /// `1 - c x^{-key}`.
    pub fn one_minus(kind: RootKind, n: usize, order: u32, c: &F, key: &[u32]) -> TruncSeries<F> {
        let mut s = TruncSeries::one(kind, n, order);
        s.add_term(key.to_vec(), c.negate());
        s
    }

    /// `1 / (1 - c x^{-key})` for a nonzero key.
    pub fn geometric(kind: RootKind, n: usize, order: u32, c: &F, key: &[u32]) -> TruncSeries<F> {
        let mut s = TruncSeries::one(kind, n, order);
        let h = height(key);
        let mut cm = F::one();
        let mut km = vec![0u32; key.len()];
        for _ in 0..order / h {
            cm = cm.times(c);
            for (a, b) in km.iter_mut().zip(key) {
                *a += b;
            }
            s.add_term(km.clone(), cm.clone());
        }
        s
    }

    /// The Laurent polynomial `x^lambda * (series)`.
    pub fn to_laurent(&self, lambda: &[i32]) -> LaurentPoly<F> {
        let mut p = LaurentPoly::zero(self.n);
        for (k, c) in &self.coeffs {
            let a = self.kind.exponents(self.n, k);
            p.add_term(a.iter().zip(lambda).map(|(x, l)| x + l).collect(), c.clone());
        }
        p
    }
}
