use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rayon::prelude::*;

use crate::exactalg::Field;
use crate::symfunc::{monomial_sym, partitions_below, LaurentPoly, LaurentSym, Partition};

use super::KoornError;

/// Koornwinder's parameters `(a, b, c, d | q, t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct KoornwinderParams<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
    pub q: F,
    pub t: F,
}

impl<F: Field> KoornwinderParams<F> {
    pub fn new(a: F, b: F, c: F, d: F, q: F, t: F) -> KoornwinderParams<F> {
        KoornwinderParams { a, b, c, d, q, t }
    }

    /// `alpha^2 = abcd/q`.
    pub fn alpha_sq(&self) -> Result<F, KoornError> {
        Ok(self.a.times(&self.b).times(&self.c).times(&self.d).quot(&self.q)?)
    }

    pub fn abcd(&self) -> [&F; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// The `(C_n, C_n)` point `(b^{1/2}, -b^{1/2}, q^{1/2} b^{1/2}, -q^{1/2} b^{1/2})`,
    /// given the square roots.
    pub fn cc(b_half: F, q_half: F, t: F) -> KoornwinderParams<F> {
        let c = q_half.times(&b_half);
        KoornwinderParams { a: b_half.clone(), b: b_half.negate(), c: c.clone(), d: c.negate(), q: q_half.times(&q_half), t }
    }

    /// Whether `b = -a` and `d = -c`.
    pub fn is_type_c(&self) -> bool {
        self.b == self.a.negate() && self.d == self.c.negate()
    }
}

impl KoornwinderParams<BigRational> {
    /// A seeded draw of nonzero rationals of height at most `height`, with
    /// `q` and `t` kept away from small roots of unity relations.
    pub fn random(rng: &mut impl Rng, height: i64) -> KoornwinderParams<BigRational> {
        loop {
            let mut draw = || small_rational(rng, height);
            let p = KoornwinderParams::new(draw(), draw(), draw(), draw(), draw(), draw());
            if p.generic_enough(8) {
                return p;
            }
        }
    }

    /// No `q^i t^j = 1` for `0 < |i| + |j|`, `|i|, |j| <= k`.
    pub fn generic_enough(&self, k: i64) -> bool {
        for i in -k..=k {
            for j in -k..=k {
                if (i, j) == (0, 0) {
                    continue;
                }
                if self.q.pow_i(i).unwrap().times(&self.t.pow_i(j).unwrap()).is_one() {
                    return false;
                }
            }
        }
        true
    }
}

/// A nonzero rational `p/q` with `|p|, q <= height`.
pub fn small_rational(rng: &mut impl Rng, height: i64) -> BigRational {
    loop {
        let p: i64 = rng.gen_range(-height..=height);
        if p != 0 {
            return BigRational::new(BigInt::from(p), BigInt::from(rng.gen_range(1..=height)));
        }
    }
}

fn unit(n: usize, i: usize, k: i32) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = k;
    v
}

fn pair(n: usize, i: usize, si: i32, j: usize, sj: i32) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = si;
    v[j] = sj;
    v
}

/// A factor `1 - c x^v` of the common denominator.
struct Factor<F> {
    c: F,
    v: Vec<i32>,
}

/// The common denominator: `(1 - x_i^2)`, `(1 - q x_i^{±2})`, and
/// `(1 - x_i x_j)`, `(1 - x_i/x_j)` for `i < j`.
fn common_factors<F: Field>(n: usize, q: &F) -> Vec<Factor<F>> {
    let mut fs = Vec::new();
    for i in 0..n {
        fs.push(Factor { c: F::one(), v: unit(n, i, 2) });
        fs.push(Factor { c: q.clone(), v: unit(n, i, 2) });
        fs.push(Factor { c: q.clone(), v: unit(n, i, -2) });
    }
    for i in 0..n {
        for j in i + 1..n {
            fs.push(Factor { c: F::one(), v: pair(n, i, 1, j, 1) });
            fs.push(Factor { c: F::one(), v: pair(n, i, 1, j, -1) });
        }
    }
    fs
}

/// `alpha t^{n-1} D_x p`, computed on the full Laurent expansion over a
/// common denominator, which is then divided out exactly.
pub fn apply_d_scaled<F: Field>(p: &LaurentSym<F>, params: &KoornwinderParams<F>) -> Result<LaurentSym<F>, KoornError> {
    let n = p.n;
    let raw = p.to_laurent();
    let common = common_factors(n, &params.q);
    let one = F::one();
    let mut total = LaurentPoly::zero(n);
    for i in 0..n {
        for eps in [1i32, -1] {
            let diff = raw.q_shift(i, &params.q, eps < 0)?.minus(&raw);
            if diff.is_zero() {
                continue;
            }
            let mut term = diff;
            for e in params.abcd() {
                term = term.times_one_minus(e, &unit(n, i, eps));
            }
            // Denominator factors of this term, as (c, v) before normalization.
            let mut den: Vec<(F, Vec<i32>)> = vec![(one.clone(), unit(n, i, 2 * eps)), (params.q.clone(), unit(n, i, 2 * eps))];
            for j in (0..n).filter(|&j| j != i) {
                term = term.times_one_minus(&params.t, &pair(n, i, eps, j, 1));
                term = term.times_one_minus(&params.t, &pair(n, i, eps, j, -1));
                den.push((one.clone(), pair(n, i, eps, j, 1)));
                den.push((one.clone(), pair(n, i, eps, j, -1)));
            }
            let mut used = vec![false; common.len()];
            for (c, v) in den {
                if let Some(k) = common.iter().position(|f| f.c == c && f.v == v) {
                    used[k] = true;
                } else {
                    // 1 - x^v = -x^v (1 - x^{-v}).
                    let neg: Vec<i32> = v.iter().map(|x| -x).collect();
                    let k = common
                        .iter()
                        .position(|f| f.c == c && f.v == neg)
                        .expect("every operator denominator is a common factor up to a unit");
                    used[k] = true;
                    term = term.times_monomial(&one.negate(), &neg);
                }
            }
            for (f, u) in common.iter().zip(&used) {
                if !u {
                    term = term.times_one_minus(&f.c, &f.v);
                }
            }
            total = total.plus(&term);
        }
    }
    for f in &common {
        total = total.div_one_minus(&f.c, &f.v)?;
    }
    Ok(LaurentSym::from_laurent(&total)?)
}

/// `alpha t^{n-1} d_lambda
///  = t^{n-1} sum_j (alpha^2 t^{n-j} q^{l_j} + t^{j-n} q^{-l_j} - alpha^2 t^{n-j} - t^{j-n})`.
pub fn eigenvalue_scaled<F: Field>(lambda: &Partition, params: &KoornwinderParams<F>, n: usize) -> Result<F, KoornError> {
    if lambda.len() > n {
        return Err(KoornError::OutOfRange(format!("partition {lambda} has more than {n} parts")));
    }
    let al2 = params.alpha_sq()?;
    let t = &params.t;
    let mut acc = F::zero();
    for j in 1..=n as i64 {
        let ql = params.q.pow_i(lambda.part(j as usize - 1) as i64)?;
        let x = t.pow_i(n as i64 - j)?;
        let xi = t.pow_i(j - n as i64)?;
        let term = al2.times(&x).times(&ql).plus(&xi.quot(&ql)?).minus(&al2.times(&x)).minus(&xi);
        acc = acc.plus(&term);
    }
    Ok(acc.times(&t.pow_i(n as i64 - 1)?))
}

/// `P_lambda` as the unique eigenvector `m_lambda + (lower terms)` of the
/// scaled operator, by a triangular solve over the dominated basis.
pub fn oracle_p<F: Field>(lambda: &Partition, n: usize, params: &KoornwinderParams<F>) -> Result<LaurentSym<F>, KoornError> {
    if lambda.len() > n {
        return Err(KoornError::OutOfRange(format!("partition {lambda} has more than {n} parts")));
    }
    let basis = partitions_below(lambda, n);
    let images: Vec<LaurentSym<F>> = basis
        .par_iter()
        .map(|mu| apply_d_scaled(&monomial_sym(mu, n)?, params))
        .collect::<Result<_, _>>()?;
    let eig: Vec<F> = basis.iter().map(|mu| eigenvalue_scaled(mu, params, n)).collect::<Result<_, _>>()?;
    for (k, (mu, img)) in basis.iter().zip(&images).enumerate() {
        for nu in img.coeffs.keys() {
            let pos = basis.binary_search(nu).map_err(|_| {
                KoornError::NotTriangular(format!("D m{mu} has a term m{nu} outside the dominated basis"))
            })?;
            if pos > k {
                return Err(KoornError::NotTriangular(format!("D m{mu} is not triangular at m{nu}")));
            }
        }
        if img.coeff(mu) != eig[k] {
            return Err(KoornError::NotTriangular(format!("the diagonal entry of D m{mu} is not its eigenvalue")));
        }
    }
    let top = basis.len() - 1;
    let e = &eig[top];
    let mut u: Vec<F> = vec![F::zero(); basis.len()];
    u[top] = F::one();
    for k in (0..top).rev() {
        let mut acc = F::zero();
        for m in k + 1..=top {
            if !u[m].is_zero() {
                acc = acc.plus(&images[m].coeff(&basis[k]).times(&u[m]));
            }
        }
        let gap = eig[k].minus(e);
        if gap.is_zero() {
            return Err(KoornError::Degenerate(format!("eigenvalues of m{} and m{} collide", basis[k], lambda)));
        }
        u[k] = acc.negate().quot(&gap)?;
    }
    let mut p = LaurentSym::zero(n);
    for (mu, c) in basis.into_iter().zip(u) {
        p.add_term(mu, c);
    }
    Ok(p)
}

/// `alpha t^{n-1} (D_x - d_lambda) p`.
pub fn eigen_residual<F: Field>(p: &LaurentSym<F>, lambda: &Partition, params: &KoornwinderParams<F>) -> Result<LaurentSym<F>, KoornError> {
    let e = eigenvalue_scaled(lambda, params, p.n)?;
    Ok(apply_d_scaled(p, params)?.minus(&p.scale(&e)))
}
