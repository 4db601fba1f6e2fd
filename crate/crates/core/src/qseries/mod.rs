//! q-Pochhammer symbols, q-integers and q-binomials, terminating basic
//! hypergeometric and bibasic series, and ballot numbers.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;

use crate::exactalg::{AlgError, Field};

/// `(z; q)_k` for any integer `k`.
pub fn qpoch<F: Field>(z: &F, q: &F, k: i64) -> Result<F, AlgError> {
    if k >= 0 {
        let mut acc = F::one();
        let mut zq = z.clone();
        for _ in 0..k {
            acc = acc.times(&zq.one_minus());
            zq = zq.times(q);
        }
        return Ok(acc);
    }
    let qinv = q.inverse()?;
    let mut acc = F::one();
    let mut zq = z.times(&qinv);
    for _ in 0..-k {
        acc = acc.quot(&zq.one_minus())?;
        zq = zq.times(&qinv);
    }
    Ok(acc)
}

/// Divides `x` by each factor in turn, so that the denominators stay factored.
pub fn quot_each<F: Field>(x: F, factors: &[F]) -> Result<F, AlgError> {
    factors.iter().try_fold(x, |acc, f| {
        if f.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        acc.quot(f)
    })
}

/// `x / (z; q)_k` for `k >= 0`, dividing by one factor at a time.
pub fn qpoch_quot<F: Field>(x: F, z: &F, q: &F, k: i64) -> Result<F, AlgError> {
    let mut acc = x;
    let mut zq = z.clone();
    for _ in 0..k {
        let f = zq.one_minus();
        if f.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        acc = acc.quot(&f)?;
        zq = zq.times(q);
    }
    Ok(acc)
}

/// Product of several Pochhammer symbols `(z_1, ..., z_m; q)_k`.
pub fn qpoch_multi<F: Field>(zs: &[F], q: &F, k: i64) -> Result<F, AlgError> {
    let mut acc = F::one();
    for z in zs {
        acc = acc.times(&qpoch(z, q, k)?);
    }
    Ok(acc)
}

/// `[n]_q = (1 - q^n)/(1 - q)`, computed as `1 + q + ... + q^{n-1}` for `n >= 0`.
pub fn qint<F: Field>(n: i64, q: &F) -> Result<F, AlgError> {
    if n >= 0 {
        let mut acc = F::zero();
        let mut p = F::one();
        for _ in 0..n {
            acc = acc.plus(&p);
            p = p.times(q);
        }
        return Ok(acc);
    }
    q.pow_i(n)?.one_minus().quot(&q.one_minus())
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn qfact<F: Field>(n: u32, q: &F) -> Result<F, AlgError> {
    let mut acc = F::one();
    for k in 1..=n as i64 {
        acc = acc.times(&qint(k, q)?);
    }
    Ok(acc)
}

/// Gaussian binomial via the product `prod_{k=1}^{j} [m-k+1]_q / [k]_q`.
pub fn qbinom<F: Field>(m: i64, j: i64, q: &F) -> Result<F, AlgError> {
    if j < 0 || j > m {
        return Err(AlgError::OutOfRange(format!("qbinom({m}, {j}) needs 0 <= j <= m")));
    }
    let mut acc = F::one();
    for k in 1..=j {
        acc = acc.times(&qint(m - k + 1, q)?).quot(&qint(k, q)?)?;
    }
    Ok(acc)
}

/// Gaussian binomial extended by zero outside `0 <= j <= m`.
pub fn qbinom_or_zero<F: Field>(m: i64, j: i64, q: &F) -> Result<F, AlgError> {
    if j < 0 || j > m || m < 0 {
        Ok(F::zero())
    } else {
        qbinom(m, j, q)
    }
}

/// `x (x-1) ... (x-j+1) / j!`.
pub fn gen_binom<F: Field>(x: &F, j: u32) -> F {
    let mut acc = F::one();
    for k in 0..j as i64 {
        acc = acc.times(&x.minus(&F::from_i64(k)));
    }
    let mut fact = BigInt::from(1);
    for k in 1..=j {
        fact *= k;
    }
    acc.quot(&F::from_rational(&BigRational::from_integer(fact))).unwrap()
}

/// A terminating `r+1 phi r` series summed over `n = 0..=terms`.
#[derive(Clone, Debug)]
pub struct PhiSpec<F> {
    pub upper: Vec<F>,
    pub lower: Vec<F>,
    pub base: F,
    pub argument: F,
    pub terms: u32,
}

/// `sum_{n=0}^{terms} (upper; base)_n / ((base; base)_n (lower; base)_n) argument^n`.
pub fn phi_sum<F: Field>(spec: &PhiSpec<F>) -> Result<F, AlgError> {
    let q = &spec.base;
    let mut sum = F::one();
    let mut term = F::one();
    let mut qn = F::one();
    for _ in 0..spec.terms {
        let mut num = spec.argument.clone();
        for u in &spec.upper {
            num = num.times(&u.times(&qn).one_minus());
        }
        let mut den = vec![qn.times(q).one_minus()];
        den.extend(spec.lower.iter().map(|l| l.times(&qn).one_minus()));
        term = quot_each(term.times(&num), &den)?;
        sum = sum.plus(&term);
        qn = qn.times(q);
    }
    Ok(sum)
}

/// A terminating bibasic series with a `q`-group and a `p`-group.
#[derive(Clone, Debug)]
pub struct BibasicSpec<F> {
    pub upper_q: Vec<F>,
    pub lower_q: Vec<F>,
    pub upper_p: Vec<F>,
    pub lower_p: Vec<F>,
    pub q: F,
    pub p: F,
    pub argument: F,
    pub terms: u32,
}

/// `sum_n (a; q)_n / (q, b; q)_n * (c; p)_n / (d; p)_n * z^n` over `n = 0..=terms`.
pub fn bibasic_sum<F: Field>(spec: &BibasicSpec<F>) -> Result<F, AlgError> {
    let mut sum = F::one();
    let mut term = F::one();
    let mut qn = F::one();
    let mut pn = F::one();
    for _ in 0..spec.terms {
        let mut num = spec.argument.clone();
        for a in &spec.upper_q {
            num = num.times(&a.times(&qn).one_minus());
        }
        for c in &spec.upper_p {
            num = num.times(&c.times(&pn).one_minus());
        }
        let mut den = vec![qn.times(&spec.q).one_minus()];
        den.extend(spec.lower_q.iter().map(|b| b.times(&qn).one_minus()));
        den.extend(spec.lower_p.iter().map(|d| d.times(&pn).one_minus()));
        term = quot_each(term.times(&num), &den)?;
        sum = sum.plus(&term);
        qn = qn.times(&spec.q);
        pn = pn.times(&spec.p);
    }
    Ok(sum)
}

/// `q^{-j} (binom[m+2j, j]_q - binom[m+2j, j-1]_q)`.
pub fn qballot_difference<F: Field>(m: i64, j: i64, q: &F) -> Result<F, AlgError> {
    let d = qbinom_or_zero(m + 2 * j, j, q)?.minus(&qbinom_or_zero(m + 2 * j, j - 1, q)?);
    Ok(d.times(&q.pow_i(-j)?))
}

/// `[m+1]_q / [m+j+1]_q * binom[m+2j, j]_q`.
pub fn qballot_ratio<F: Field>(m: i64, j: i64, q: &F) -> Result<F, AlgError> {
    qint(m + 1, q)?.quot(&qint(m + j + 1, q)?).map(|r| r.times(&qbinom(m + 2 * j, j, q).unwrap()))
}

/// The `q`-ballot number; both closed forms are computed and must agree.
pub fn qballot<F: Field>(m: i64, j: i64, q: &F) -> Result<F, AlgError> {
    if m < 0 || j < 0 {
        return Err(AlgError::OutOfRange(format!("qballot({m}, {j})")));
    }
    let a = qballot_difference(m, j, q)?;
    let b = qballot_ratio(m, j, q)?;
    assert_eq!(a, b, "q-ballot closed forms disagree at m={m}, j={j}");
    Ok(b)
}

/// `(m+1)/(m+j+1) * C(m+2j, j)`.
pub fn catalan_ballot(m: u64, j: u64) -> BigInt {
    let c: BigInt = binomial(BigInt::from(m + 2 * j), BigInt::from(j));
    c * (m + 1) / (m + j + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{RationalExpr, Var};

    fn p(s: &str) -> RationalExpr {
        s.parse().unwrap()
    }

    fn q() -> RationalExpr {
        RationalExpr::var(Var::Q)
    }

    fn t() -> RationalExpr {
        RationalExpr::var(Var::T)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(qpoch(&RationalExpr::var(Var::U), &q(), 0).unwrap(), RationalExpr::one());
        assert_eq!(qpoch(&t(), &t(), 2).unwrap(), p("(1-t)*(1-t^2)"));
        assert_eq!(qpoch(&p("t^2"), &t(), -1).unwrap(), p("1/(1-t)"));
        assert!(qpoch(&t(), &t(), -1).is_err());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(qbinom(4, 2, &q()).unwrap(), p("1+q+2*q^2+q^3+q^4"));
        assert_eq!(qbinom(7, 0, &q()).unwrap(), RationalExpr::one());
        assert_eq!(qint(3, &q()).unwrap(), p("1+q+q^2"));
        assert!(qbinom(2, 3, &q()).is_err());
        let m = RationalExpr::var(Var::U);
        assert_eq!(gen_binom(&m, 0), RationalExpr::one());
        assert_eq!(gen_binom(&RationalExpr::from_int(4), 2), RationalExpr::from_int(6));
        assert_eq!(gen_binom(&m, 2), p("u*(u-1)/2"));
    }

    #[test]
    fn ballot_examples() {
        let row: Vec<BigInt> = (0..5).map(|j| catalan_ballot(0, j)).collect();
        assert_eq!(row, [1, 1, 2, 5, 14].map(BigInt::from));
        assert_eq!(catalan_ballot(2, 2), BigInt::from(9));
        let diff = qbinom(4, 2, &q()).unwrap().sub(&qbinom(4, 1, &q()).unwrap());
        assert_eq!(diff, p("q^2+q^4"));
        assert_eq!(qballot(0, 2, &q()).unwrap(), p("1+q^2"));
    }

    #[test]
    fn phi_examples() {
        let empty = PhiSpec { upper: vec![], lower: vec![], base: q(), argument: t(), terms: 0 };
        assert!(phi_sum(&empty).unwrap().is_one());
        let geometric = PhiSpec { upper: vec![], lower: vec![], base: q(), argument: t(), terms: 2 };
        let expect = p("1 + t/(1-q) + t^2/((1-q)*(1-q^2))");
        assert_eq!(phi_sum(&geometric).unwrap(), expect);
    }
}
