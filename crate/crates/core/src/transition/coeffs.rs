//! Transition coefficients between `P_(1^r)`, `E_r`, `E_r(x;a|t)` and
//! `m_(1^r)` for the parameter tuple `(a, -a, c, -c)`.
//!
//! Every function is generic over the coefficient field, so the same code
//! runs symbolically over `RationalExpr` and numerically over rationals.
//! Functions taking an integer `m` substitute `s = t^{m+1}` before anything
//! else; specializations of `a^2`, `c^2` and `q` are applied afterwards.

use crate::exactalg::{AlgError, Field, RationalExpr, Var};
use crate::qseries::{gen_binom, phi_sum, qbinom_or_zero, qint, qpoch, qpoch_quot, quot_each, PhiSpec};

/// The parameters `a^2`, `c^2` and `t` on which the one-column coefficients
/// depend.
#[derive(Clone, Debug, PartialEq)]
pub struct TransParams<F> {
    pub a2: F,
    pub c2: F,
    pub t: F,
}

impl<F: Field> TransParams<F> {
    pub fn new(a2: F, c2: F, t: F) -> TransParams<F> {
        TransParams { a2, c2, t }
    }

    /// `t^k`
    pub fn tp(&self, k: i64) -> Result<F, AlgError> {
        self.t.pow_i(k)
    }

    /// `t^{m+1}`, the spectral value attached to the integer `m`.
    pub fn s_of(&self, m: i64) -> Result<F, AlgError> {
        self.tp(m + 1)
    }

    fn t2(&self) -> F {
        self.t.times(&self.t)
    }

    fn a2c2(&self) -> F {
        self.a2.times(&self.c2)
    }
}

impl TransParams<RationalExpr> {
    /// Symbolic `a^2`, `c^2`, `t`.
    pub fn generic() -> TransParams<RationalExpr> {
        TransParams {
            a2: RationalExpr::var_pow(Var::A, 2),
            c2: RationalExpr::var_pow(Var::C, 2),
            t: RationalExpr::var(Var::T),
        }
    }
}

fn sign<F: Field>(j: i64) -> F {
    if j % 2 == 0 {
        F::one()
    } else {
        F::from_i64(-1)
    }
}

/// `f(s)` in the cancelled form
/// `(s-1)(s a^2 c^2 - t^2)(s a^2 + t)(s c^2 + t) / ((s^2 a^2 c^2 - t)(s^2 a^2 c^2 - t^3))`.
pub fn f_def<F: Field>(p: &TransParams<F>, s: &F) -> Result<F, AlgError> {
    let t = &p.t;
    let ac = p.a2c2();
    let s2ac = s.times(s).times(&ac);
    let num = s
        .minus(&F::one())
        .times(&s.times(&ac).minus(&p.t2()))
        .times(&s.times(&p.a2).plus(t))
        .times(&s.times(&p.c2).plus(t));
    quot_each(num, &[s2ac.minus(t), s2ac.minus(&p.t2().times(t))])
}

/// `F(s, l) = f(s / t^l)`.
pub fn f_shift<F: Field>(p: &TransParams<F>, s: &F, l: i64) -> Result<F, AlgError> {
    f_def(p, &s.times(&p.tp(-l)?))
}

/// `(s^2/t^2; t^2)_j / (1 - s^2/t^2)` written as `(s^2; t^2)_{j-1}`, valid at `s = 1`.
fn pochhammer_over_first<F: Field>(p: &TransParams<F>, s: &F, j: i64) -> Result<F, AlgError> {
    qpoch(&s.times(s), &p.t2(), j - 1)
}

/// `B(s, j)`.
pub fn b_at<F: Field>(p: &TransParams<F>, s: &F, j: u32) -> Result<F, AlgError> {
    if j == 0 {
        return Ok(F::one());
    }
    let j = j as i64;
    let t2 = p.t2();
    let s2 = s.times(s);
    let pre = sign::<F>(j)
        .times(&s.pow_i(-j)?)
        .times(&pochhammer_over_first(p, s, j)?)
        .times(&s2.times(&p.tp(4 * j - 2)?).one_minus())
        .quot(&qpoch(&t2, &t2, j)?)?;
    let phi = phi_sum(&PhiSpec {
        upper: vec![
            s.times(&p.a2).negate(),
            s.times(&p.c2).negate(),
            s2.times(&p.tp(2 * j - 2)?),
            p.tp(-2 * j)?,
        ],
        lower: vec![s.negate(), s.times(&p.t).negate(), s2.times(&p.a2c2()).quot(&p.t)?],
        base: t2.clone(),
        argument: t2,
        terms: j as u32,
    })?;
    Ok(pre.times(&phi))
}

/// `B~(s, j)`.
pub fn btilde_at<F: Field>(p: &TransParams<F>, s: &F, j: u32) -> Result<F, AlgError> {
    if j == 0 {
        return Ok(F::one());
    }
    let j = j as i64;
    let t2 = p.t2();
    let s2 = s.times(s);
    let pre = s
        .times(&p.tp(j - 1)?)
        .pow_i(-j)?
        .times(&qpoch(&p.tp(2 * j)?.times(&s2), &t2, j)?)
        .quot(&qpoch(&t2, &t2, j)?)?;
    let w = p.tp(-2 * j + 2)?;
    let phi = phi_sum(&PhiSpec {
        upper: vec![
            w.quot(&s.times(&p.a2))?.negate(),
            w.quot(&s.times(&p.c2))?.negate(),
            w.quot(&s2)?,
            p.tp(-2 * j)?,
        ],
        lower: vec![
            p.tp(-2 * j + 1)?.quot(s)?.negate(),
            w.quot(s)?.negate(),
            p.tp(-4 * j + 5)?.quot(&s2.times(&p.a2c2()))?,
        ],
        base: t2.clone(),
        argument: t2,
        terms: j as u32,
    })?;
    Ok(pre.times(&phi))
}

/// `B(s, j)` in its Sears-transformed form.
pub fn b_alt_at<F: Field>(p: &TransParams<F>, s: &F, j: u32) -> Result<F, AlgError> {
    if j == 0 {
        return Ok(F::one());
    }
    let j = j as i64;
    let t = &p.t;
    let t2 = p.t2();
    let s2 = s.times(s);
    let s_t = s.quot(t)?;
    let pre = sign::<F>(j)
        .times(&p.tp(j)?)
        .times(&s.pow_i(-j)?)
        .times(&s_t.plus(&F::one()))
        .times(&pochhammer_over_first(p, s, j)?)
        .times(&s.times(&p.tp(2 * j - 1)?).one_minus())
        .quot(&qpoch(&t2, &t2, j)?)?;
    let phi = phi_sum(&PhiSpec {
        upper: vec![
            s_t.times(&p.a2).negate(),
            s_t.times(&p.c2).negate(),
            s2.times(&p.tp(2 * j - 2)?),
            p.tp(-2 * j)?,
        ],
        lower: vec![s.negate(), s_t.negate(), s2.times(&p.a2c2()).quot(t)?],
        base: t2.clone(),
        argument: t2,
        terms: j as u32,
    })?;
    Ok(pre.times(&phi))
}

/// `B~(s, j)` in its Sears-transformed form.
pub fn btilde_alt_at<F: Field>(p: &TransParams<F>, s: &F, j: u32) -> Result<F, AlgError> {
    if j == 0 {
        return Ok(F::one());
    }
    let j = j as i64;
    let t2 = p.t2();
    let s2 = s.times(s);
    let pre = p
        .tp(j)?
        .times(&s.times(&p.tp(j - 1)?).pow_i(-j)?)
        .times(&qpoch(&s2.times(&p.tp(2 * j)?), &t2, j)?)
        .quot(&qpoch(&t2, &t2, j)?)?
        .times(&s.quot(&p.t)?.plus(&F::one()))
        .quot(&s.times(&p.tp(2 * j - 1)?).plus(&F::one()))?;
    let w = p.tp(-2 * j + 3)?;
    let phi = phi_sum(&PhiSpec {
        upper: vec![
            w.quot(&s.times(&p.a2))?.negate(),
            w.quot(&s.times(&p.c2))?.negate(),
            p.tp(-2 * j + 2)?.quot(&s2)?,
            p.tp(-2 * j)?,
        ],
        lower: vec![
            p.tp(-2 * j + 2)?.quot(s)?.negate(),
            w.quot(s)?.negate(),
            p.tp(-4 * j + 5)?.quot(&s2.times(&p.a2c2()))?,
        ],
        base: t2.clone(),
        argument: t2,
        terms: j as u32,
    })?;
    Ok(pre.times(&phi))
}

/// `B(t^{m+1}, j)`.
pub fn b_coeff<F: Field>(p: &TransParams<F>, m: i64, j: u32) -> Result<F, AlgError> {
    b_at(p, &p.s_of(m)?, j)
}

/// `B~(t^{m+1}, j)`.
pub fn btilde_coeff<F: Field>(p: &TransParams<F>, m: i64, j: u32) -> Result<F, AlgError> {
    btilde_at(p, &p.s_of(m)?, j)
}

pub fn b_alt<F: Field>(p: &TransParams<F>, m: i64, j: u32) -> Result<F, AlgError> {
    b_alt_at(p, &p.s_of(m)?, j)
}

pub fn btilde_alt<F: Field>(p: &TransParams<F>, m: i64, j: u32) -> Result<F, AlgError> {
    btilde_alt_at(p, &p.s_of(m)?, j)
}

/// `C(s, j) = sum_i B(s, i) binom(m + 2j, j - i)` with `s` and `m` supplied
/// independently, so that `m` may be symbolic.
pub fn c_at<F: Field>(p: &TransParams<F>, s: &F, m: &F, j: u32) -> Result<F, AlgError> {
    let top = m.plus(&F::from_i64(2 * j as i64));
    let mut acc = F::zero();
    for i in 0..=j {
        acc = acc.plus(&b_at(p, s, i)?.times(&gen_binom(&top, j - i)));
    }
    Ok(acc)
}

/// `C(t^{m+1}, j)` for an integer `m >= -1`.
pub fn c_coeff<F: Field>(p: &TransParams<F>, m: i64, j: u32) -> Result<F, AlgError> {
    c_at(p, &p.s_of(m)?, &F::from_i64(m), j)
}

/// An element `(d_1, ..., d_i)` of the path set `P[r, i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathTuple {
    pub entries: Vec<i64>,
}

/// All tuples with `0 <= d_1 <= r` and `d_k - 1 <= d_{k+1} <= r`.
pub fn enumerate_paths(r: i64, i: usize) -> Vec<PathTuple> {
    fn extend(r: i64, i: usize, cur: &mut Vec<i64>, out: &mut Vec<PathTuple>) {
        if cur.len() == i {
            out.push(PathTuple { entries: cur.clone() });
            return;
        }
        let lo = cur.last().map_or(0, |d| d - 1);
        for d in lo..=r {
            cur.push(d);
            extend(r, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r >= 0 {
        extend(r, i, &mut Vec::with_capacity(i), &mut out);
    }
    out
}

/// `C(t^{r+1}, i)` as the sum over `P[r, i]` of `prod_k F(t^{r+1}, d_k)`,
/// accumulated over partial tuples grouped by their last entry.
pub fn c_via_paths<F: Field>(p: &TransParams<F>, r: i64, i: usize) -> Result<F, AlgError> {
    if r < 0 {
        return Ok(F::zero());
    }
    if i == 0 {
        return Ok(F::one());
    }
    let s = p.s_of(r)?;
    let lowest = -(i as i64);
    let table: Vec<F> = (lowest..=r).map(|d| f_shift(p, &s, d)).collect::<Result<_, _>>()?;
    let width = table.len();
    let mut w = vec![F::zero(); width];
    for d in 0..=r {
        let k = (d - lowest) as usize;
        w[k] = table[k].clone();
    }
    for _ in 1..i {
        let mut prefix = vec![F::zero(); width + 1];
        for k in 0..width {
            prefix[k + 1] = prefix[k].plus(&w[k]);
        }
        // d_{k+1} = d admits every previous entry up to d + 1.
        w = (0..width).map(|k| table[k].times(&prefix[(k + 2).min(width)])).collect();
    }
    Ok(w.iter().fold(F::zero(), |a, b| a.plus(b)))
}

/// `e(s, m)`, the coefficient of `(-1)^m E_{r-m}(x)` in `E_r(x;a|t)`.
/// Depends on `a` itself, not only on `a^2`.
pub fn e_at<F: Field>(a: &F, t: &F, s: &F, m: u32) -> Result<F, AlgError> {
    if m == 0 {
        return Ok(F::one());
    }
    let mi = m as i64;
    let a2 = a.times(a);
    let t2 = t.times(t);
    let tp = |k: i64| t.pow_i(k);
    let pre = t
        .quot(&a.times(s))?
        .pow_u(m)
        .times(&qpoch(s, t, mi)?)
        .times(&qpoch(&s.times(&a2).times(&tp(-mi)?).negate(), &t2, mi)?)
        .quot(&qpoch(t, t, mi)?)?;
    let phi = phi_sum(&PhiSpec {
        upper: vec![
            tp(-mi)?,
            tp(-mi + 1)?,
            tp(-mi + 1)?.quot(s)?.negate(),
            tp(-mi + 2)?.quot(s)?.negate(),
        ],
        lower: vec![
            tp(-mi + 2)?.quot(&a2.times(s))?.negate(),
            tp(-mi)?.times(&a2).times(s).negate(),
            tp(-2 * mi + 4)?.quot(&s.times(s))?,
        ],
        base: t2.clone(),
        argument: t2,
        terms: m / 2,
    })?;
    Ok(pre.times(&phi))
}

/// `e(s, m)` as the unsimplified double sum through `B(s t^{m-2j}, j)`.
/// `p.a2` must equal `a^2`.
pub fn e_alt_at<F: Field>(p: &TransParams<F>, a: &F, s: &F, m: u32) -> Result<F, AlgError> {
    let t = &p.t;
    let mut acc = F::zero();
    for j in 0..=m / 2 {
        let k = (m - 2 * j) as i64;
        let num = qpoch(s, t, k)?
            .times(&qpoch(&s.times(&p.a2).quot(t)?.negate(), t, k)?)
            .times(&qpoch(&s.times(s).times(&p.a2c2()).quot(&p.t2())?, &p.t2(), k)?);
        let c = num.quot(&a.times(s).quot(t)?.pow_u(k as u32).times(&qpoch(t, t, k)?))?;
        let c = qpoch_quot(c, &p.tp(k - 3)?.times(s).times(s).times(&p.a2c2()), t, k)?;
        let b = b_at(p, &s.times(&p.tp(k)?), j)?;
        acc = acc.plus(&c.times(&b));
    }
    Ok(acc)
}

/// Coefficient of `E_{r-l}(x;a|t)` in `P_(1^r)(x|a,b,c,d|q,t)` at spectral
/// value `s = t^{n-r+1}`.
pub fn interp_forward_coeff<F: Field>(abcd: [&F; 4], t: &F, s: &F, l: u32) -> Result<F, AlgError> {
    let [a, b, c, d] = abcd;
    let li = l as i64;
    let sa_t = s.times(a).quot(t)?;
    let num = qpoch(s, t, li)?
        .times(&qpoch(&sa_t.times(b), t, li)?)
        .times(&qpoch(&sa_t.times(c), t, li)?)
        .times(&qpoch(&sa_t.times(d), t, li)?);
    let abcd_prod = a.times(b).times(c).times(d);
    let den = t.pow_i(li * (li - 1) / 2)?.times(&sa_t.pow_u(l)).times(&qpoch(t, t, li)?);
    qpoch_quot(num.quot(&den)?, &s.times(s).times(&abcd_prod).quot(&t.times(t))?, t, li)
}

/// Coefficient of `P_(1^{r-l})` in `E_r(x;a|t)` at `s = t^{n-r+1}`.
pub fn interp_inverse_coeff<F: Field>(abcd: [&F; 4], t: &F, s: &F, l: u32) -> Result<F, AlgError> {
    let [a, b, c, d] = abcd;
    let li = l as i64;
    let sa_t = s.times(a).quot(t)?;
    let num = qpoch(s, t, li)?
        .times(&qpoch(&sa_t.times(b), t, li)?)
        .times(&qpoch(&sa_t.times(c), t, li)?)
        .times(&qpoch(&sa_t.times(d), t, li)?);
    let abcd_prod = a.times(b).times(c).times(d);
    let c = num.quot(&sa_t.pow_u(l).times(&qpoch(t, t, li)?))?;
    let c = qpoch_quot(c, &t.pow_i(li - 3)?.times(s).times(s).times(&abcd_prod), t, li)?;
    Ok(sign::<F>(li).times(&c))
}

/// Root-system family of a Hall–Littlewood or Kostka degeneration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    C,
    D,
}

/// Which of the two transition coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coef {
    B,
    Btilde,
}

/// `q -> 0` limit of `B(t^{m+1}, j)` or `B~(t^{m+1}, j)` for the `(C_n, C_n)`
/// (`a^2 = t`, `c^2 = qt`) or `(D_n, D_n)` (`a^2 = 1`, `c^2 = q`) parameters,
/// as a function of `t`. The `B` limits are written with
/// `binom[m+j-1, j]_{t^2} / [m] = binom[m+j-1, j-1]_{t^2} / [j]`, which is
/// finite at `m = 0`.
pub fn hl_limit<F: Field>(family: Family, coef: Coef, m: i64, j: u32, t: &F) -> Result<F, AlgError> {
    let ji = j as i64;
    let t2 = t.times(t);
    if j == 0 {
        return Ok(F::one());
    }
    match (family, coef) {
        (Family::C, Coef::B) => Ok(sign::<F>(ji)
            .times(&t.pow_u(j * (j - 1)))
            .times(&qint(m + 2 * ji, &t2)?)
            .quot(&qint(ji, &t2)?)?
            .times(&qbinom_or_zero(m + ji - 1, ji - 1, &t2)?)),
        (Family::C, Coef::Btilde) => qbinom_or_zero(m + 2 * ji, ji, &t2),
        (Family::D, Coef::B) => Ok(sign::<F>(ji)
            .times(&t.pow_u(j * j))
            .times(&qint(m + 2 * ji, t)?)
            .times(&t.pow_i(m)?.plus(&F::one()))
            .quot(&t.plus(&F::one()).times(&qint(ji, &t2)?))?
            .times(&qbinom_or_zero(m + ji - 1, ji - 1, &t2)?)),
        (Family::D, Coef::Btilde) => Ok(t
            .pow_u(j)
            .times(&t.pow_i(m)?.plus(&F::one()))
            .quot(&t.pow_i(m + 2 * ji)?.plus(&F::one()))?
            .times(&qbinom_or_zero(m + 2 * ji, ji, &t2)?)),
    }
}
