use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::exactalg::Field;

use super::SymError;

/// A Laurent polynomial in `x_1, ..., x_n` with coefficients in `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<F> {
    pub n: usize,
    pub terms: FxHashMap<Vec<i32>, F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero(n: usize) -> LaurentPoly<F> {
        LaurentPoly { n, terms: FxHashMap::default() }
    }

    pub fn constant(n: usize, c: F) -> LaurentPoly<F> {
        LaurentPoly::monomial(vec![0; n], c)
    }

    pub fn monomial(w: Vec<i32>, c: F) -> LaurentPoly<F> {
        let mut p = LaurentPoly::zero(w.len());
        p.add_term(w, c);
        p
    }

    /// `x_i`, or `x_i^{-1}` when `inverse` is set.
    pub fn var(n: usize, i: usize, inverse: bool) -> LaurentPoly<F> {
        let mut w = vec![0; n];
        w[i] = if inverse { -1 } else { 1 };
        LaurentPoly::monomial(w, F::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &[i32]) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, w: Vec<i32>, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = v.plus(&c);
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn plus(&self, o: &LaurentPoly<F>) -> LaurentPoly<F> {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn minus(&self, o: &LaurentPoly<F>) -> LaurentPoly<F> {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.negate());
        }
        r
    }

    pub fn scale(&self, c: &F) -> LaurentPoly<F> {
        if c.is_zero() {
            return LaurentPoly::zero(self.n);
        }
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(w, v)| (w.clone(), v.times(c))).collect() }
    }

    pub fn times(&self, o: &LaurentPoly<F>) -> LaurentPoly<F> {
        let mut r = LaurentPoly::zero(self.n);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let w: Vec<i32> = w1.iter().zip(w2).map(|(a, b)| a + b).collect();
                r.add_term(w, c1.times(c2));
            }
        }
        r
    }

    /// Multiplies by `c x^v`.
    pub fn times_monomial(&self, c: &F, v: &[i32]) -> LaurentPoly<F> {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.iter().zip(v).map(|(a, b)| a + b).collect(), x.times(c)))
                .collect(),
        }
    }

    /// Multiplies by `1 - c x^v`.
    pub fn times_one_minus(&self, c: &F, v: &[i32]) -> LaurentPoly<F> {
        self.minus(&self.times_monomial(c, v))
    }

    /// Exact quotient by `1 - c x^v` (`v` nonzero, `c` nonzero).
    ///
    /// Along each line `w + k v` the quotient satisfies `q_k = p_k + c q_{k-1}`;
    /// the division is exact iff the recurrence returns to zero past the last
    /// term of every line.
    pub fn div_one_minus(&self, c: &F, v: &[i32]) -> Result<LaurentPoly<F>, SymError> {
        let piv = v.iter().position(|&x| x != 0).expect("nonzero direction");
        let vp = v[piv];
        let mut lines: FxHashMap<Vec<i32>, BTreeMap<i32, F>> = FxHashMap::default();
        for (w, x) in &self.terms {
            let k = w[piv].div_euclid(vp);
            let base: Vec<i32> = w.iter().zip(v).map(|(a, b)| a - k * b).collect();
            lines.entry(base).or_default().insert(k, x.clone());
        }
        let mut out = LaurentPoly::zero(self.n);
        for (base, pts) in lines {
            let (&lo, _) = pts.first_key_value().unwrap();
            let (&hi, _) = pts.last_key_value().unwrap();
            let mut q = F::zero();
            for k in lo..=hi {
                q = pts.get(&k).cloned().unwrap_or_else(F::zero).plus(&c.times(&q));
                if k < hi {
                    let w: Vec<i32> = base.iter().zip(v).map(|(a, b)| a + k * b).collect();
                    out.add_term(w, q.clone());
                }
            }
            if !q.is_zero() {
                return Err(SymError::NotDivisible(format!("remainder along direction {v:?}")));
            }
        }
        Ok(out)
    }

    /// `T_{q, x_i}^{±1}`: the coefficient of `x^w` is multiplied by `q^{±w_i}`.
    pub fn q_shift(&self, i: usize, q: &F, inverse: bool) -> Result<LaurentPoly<F>, SymError> {
        let mut r = LaurentPoly::zero(self.n);
        for (w, c) in &self.terms {
            let e = if inverse { -w[i] } else { w[i] } as i64;
            r.add_term(w.clone(), c.times(&q.pow_i(e)?));
        }
        Ok(r)
    }

    /// Applies a signed permutation: `x_j -> x_{perm[j]}^{sign[j]}`.
    pub fn act(&self, perm: &[usize], flip: &[bool]) -> LaurentPoly<F> {
        let mut r = LaurentPoly::zero(self.n);
        for (w, c) in &self.terms {
            let mut u = vec![0; self.n];
            for j in 0..self.n {
                u[perm[j]] = if flip[j] { -w[j] } else { w[j] };
            }
            r.add_term(u, c.clone());
        }
        r
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> Result<G, SymError>) -> Result<LaurentPoly<G>, SymError> {
        let mut r = LaurentPoly::zero(self.n);
        for (w, c) in &self.terms {
            r.add_term(w.clone(), f(c)?);
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn c(v: i64) -> Q {
        Q::from_i64(v)
    }

    #[test]
    fn division_round_trip() {
        let x = LaurentPoly::<Q>::var(2, 0, false);
        let y = LaurentPoly::<Q>::var(2, 1, true);
        let p = x.plus(&y).times(&x).plus(&LaurentPoly::constant(2, c(3)));
        let f = p.times_one_minus(&c(5), &[1, -1]).times_one_minus(&c(1), &[0, 2]);
        let back = f.div_one_minus(&c(1), &[0, 2]).unwrap().div_one_minus(&c(5), &[1, -1]).unwrap();
        assert_eq!(back, p);
        assert!(p.div_one_minus(&c(2), &[1, 0]).is_err());
    }
}
