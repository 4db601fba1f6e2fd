use crate::exactalg::{Field, RationalExpr, SpecField, Var};
use crate::qseries::{qpoch, qpoch_quot};
use crate::symfunc::{elementary, interpolation, LaurentSym, Partition};
use crate::transition::{
    b_at, btilde_at, c_coeff, e_at, hl_limit, interp_forward_coeff, interp_inverse_coeff, kostka, Coef, Family,
    TransParams,
};

use super::operator::KoornwinderParams;
use super::KoornError;

fn check_r(n: usize, r: usize) -> Result<(), KoornError> {
    if r > n {
        return Err(KoornError::OutOfRange(format!("one-column formulas need r <= n, got r={r}, n={n}")));
    }
    Ok(())
}

fn spectral<F: Field>(t: &F, n: usize, r: usize) -> Result<F, KoornError> {
    Ok(t.pow_i(n as i64 - r as i64 + 1)?)
}

/// The even coefficient `c'_e(k, l; s)`, which depends on `a` and `c` only
/// through `a^2` and `c^2`. At `k = l = 0` it is 1; otherwise the factor
/// `(s/t; t)_{2k+l} / (1 - s/t)` is taken as `(s; t)_{2k+l-1}`.
pub fn c_e_prime<F: Field>(a2: &F, c2: &F, t: &F, s: &F, k: u32, l: u32) -> Result<F, KoornError> {
    if k == 0 && l == 0 {
        return Ok(F::one());
    }
    let (ki, li) = (k as i64, l as i64);
    let t2 = t.times(t);
    let s2 = s.times(s);
    let num = qpoch(&t.times(c2).quot(a2)?, &t2, ki)?
        .times(&qpoch(&s.times(c2).times(t), &t2, ki)?)
        .times(&qpoch(&s2.times(c2).times(c2).quot(&t2)?, &t2, ki)?)
        .times(&qpoch(&c2.inverse()?, t, li)?)
        .times(&qpoch(s, t, 2 * ki + li - 1)?)
        .times(&s.times(&t.pow_i(2 * ki + 2 * li - 1)?).one_minus())
        .times(&a2.pow_u(k))
        .times(&c2.pow_u(l));
    let v = qpoch_quot(num, &t2, &t2, ki)?;
    let v = qpoch_quot(v, &s.times(c2).quot(t)?, &t2, ki)?;
    let v = qpoch_quot(v, &s2.times(a2).times(c2).quot(t)?, &t2, ki)?;
    let v = qpoch_quot(v, t, t, li)?;
    Ok(qpoch_quot(v, &s.times(c2), t, 2 * ki + li)?)
}

/// The odd coefficient `c_o(i, j; s)`, with the pair
/// `(sac/t^{3/2}; t)_n (-sac/t^{3/2}; t)_n` written as `(s^2 a^2 c^2/t^3; t^2)_n`.
pub fn c_o<F: Field>(p: &KoornwinderParams<F>, s: &F, i: u32, j: u32) -> Result<F, KoornError> {
    let (ii, ji) = (i as i64, j as i64);
    let (a, b, c, d, t) = (&p.a, &p.b, &p.c, &p.d, &p.t);
    let ij = ii + ji;
    let sac_t = s.times(a).times(c).quot(t)?;
    let s2a2c2 = sac_t.times(&sac_t).quot(t)?;
    let num = qpoch(&a.quot(b)?.negate(), t, ii)?
        .times(&qpoch(&s.times(c).times(d).quot(t)?, t, ii)?)
        .times(&qpoch(s, t, ij)?)
        .times(&qpoch(&sac_t.negate(), t, ij)?)
        .times(&qpoch(&s2a2c2, t, ij)?)
        .times(&qpoch(&c.quot(d)?.negate(), t, ji)?)
        .times(&qpoch(&s.times(a).times(b).quot(t)?, t, ji)?)
        .times(&b.pow_u(i))
        .times(&d.pow_u(j));
    let v = qpoch_quot(num, t, t, ii)?;
    let v = qpoch_quot(v, &sac_t.negate(), t, ii)?;
    let v = qpoch_quot(v, &s.times(s).times(a).times(b).times(c).times(d).quot(&t.times(t))?, t, ij)?;
    let v = qpoch_quot(v, &s2a2c2, &t.times(t), ij)?;
    let v = qpoch_quot(v, t, t, ji)?;
    Ok(qpoch_quot(v, &sac_t.negate(), t, ji)?)
}

/// `E_0, ..., E_r` in `n` variables.
fn generators<F: Field>(n: usize, r: usize) -> Result<Vec<LaurentSym<F>>, KoornError> {
    (0..=r).map(|k| elementary(n, k).map_err(KoornError::from)).collect()
}

/// The fourfold summation for `P_(1^r)(x | a, b, c, d | q, t)`.
pub fn p_fourfold<F: Field>(n: usize, r: usize, p: &KoornwinderParams<F>) -> Result<LaurentSym<F>, KoornError> {
    check_r(n, r)?;
    let e = generators::<F>(n, r)?;
    let (a2, c2, t) = (p.a.times(&p.a), p.c.times(&p.c), &p.t);
    let s = spectral(t, n, r)?;
    let mut out = LaurentSym::zero(n);
    for i in 0..=r {
        for j in 0..=r - i {
            let co = c_o(p, &s, i as u32, j as u32)?;
            if co.is_zero() {
                continue;
            }
            let se = s.times(&t.pow_i((i + j) as i64)?);
            let sign = if (i + j) % 2 == 0 { F::one() } else { F::one().negate() };
            for k in 0..=(r - i - j) / 2 {
                for l in 0..=(r - i - j - 2 * k) / 2 {
                    let coef = c_e_prime(&a2, &c2, t, &se, k as u32, l as u32)?.times(&co).times(&sign);
                    out = out.plus(&e[r - 2 * k - 2 * l - i - j].scale(&coef));
                }
            }
        }
    }
    Ok(out)
}

/// The twofold summation for `P_(1^r)(x | a, -a, c, -c | q, t)`.
pub fn p_twofold<F: Field>(n: usize, r: usize, tp: &TransParams<F>) -> Result<LaurentSym<F>, KoornError> {
    check_r(n, r)?;
    let e = generators::<F>(n, r)?;
    let s = spectral(&tp.t, n, r)?;
    let mut out = LaurentSym::zero(n);
    for k in 0..=r / 2 {
        for l in 0..=(r - 2 * k) / 2 {
            let coef = c_e_prime(&tp.a2, &tp.c2, &tp.t, &s, k as u32, l as u32)?;
            out = out.plus(&e[r - 2 * k - 2 * l].scale(&coef));
        }
    }
    Ok(out)
}

/// `P_(1^r) = sum_j B(t^{n-r+1}, j) E_{r-2j}` at `b = -a`, `d = -c`.
pub fn p_via_e<F: Field>(n: usize, r: usize, tp: &TransParams<F>) -> Result<LaurentSym<F>, KoornError> {
    check_r(n, r)?;
    let s = spectral(&tp.t, n, r)?;
    let mut out = LaurentSym::zero(n);
    for j in 0..=r / 2 {
        out = out.plus(&elementary::<F>(n, r - 2 * j)?.scale(&b_at(tp, &s, j as u32)?));
    }
    Ok(out)
}

/// `P_(1^r) = sum_j C(t^{n-r+1}, j) m_(1^{r-2j})` at `b = -a`, `d = -c`.
pub fn p_via_c<F: Field>(n: usize, r: usize, tp: &TransParams<F>) -> Result<LaurentSym<F>, KoornError> {
    check_r(n, r)?;
    let mut out = LaurentSym::zero(n);
    for j in 0..=r / 2 {
        out.add_term(Partition::column(r - 2 * j), c_coeff(tp, (n - r) as i64, j as u32)?);
    }
    Ok(out)
}

/// `sum_j B~(t^{n-r+1}, j) P_(1^{r-2j})`, with the `P` from [`p_via_e`];
/// equals `E_r`.
pub fn e_from_p<F: Field>(n: usize, r: usize, tp: &TransParams<F>) -> Result<LaurentSym<F>, KoornError> {
    check_r(n, r)?;
    let s = spectral(&tp.t, n, r)?;
    let mut out = LaurentSym::zero(n);
    for j in 0..=r / 2 {
        out = out.plus(&p_via_e(n, r - 2 * j, tp)?.scale(&btilde_at(tp, &s, j as u32)?));
    }
    Ok(out)
}

fn specialized(p: LaurentSym<RationalExpr>, spec: &SpecField) -> Result<LaurentSym<RationalExpr>, KoornError> {
    Ok(p.map_coeffs(|c| Ok(spec.apply(c)?))?)
}

/// [`p_fourfold`] with symbolic `(a, b, c, d | q, t)`, then specialized.
pub fn p_fourfold_spec(n: usize, r: usize, spec: &SpecField) -> Result<LaurentSym<RationalExpr>, KoornError> {
    let v = RationalExpr::var;
    let p = KoornwinderParams::new(v(Var::A), v(Var::B), v(Var::C), v(Var::D), v(Var::Q), v(Var::T));
    specialized(p_fourfold(n, r, &p)?, spec)
}

/// [`p_twofold`] with generic `(a^2, c^2, t)`, then specialized.
pub fn p_twofold_spec(n: usize, r: usize, spec: &SpecField) -> Result<LaurentSym<RationalExpr>, KoornError> {
    specialized(p_twofold(n, r, &TransParams::generic())?, spec)
}

/// [`p_via_c`] with generic `(a^2, c^2, t)`, then specialized.
pub fn p_via_c_spec(n: usize, r: usize, spec: &SpecField) -> Result<LaurentSym<RationalExpr>, KoornError> {
    specialized(p_via_c(n, r, &TransParams::generic())?, spec)
}

/// [`p_via_e`] with generic `(a^2, c^2, t)`, then specialized.
pub fn p_via_e_spec(n: usize, r: usize, spec: &SpecField) -> Result<LaurentSym<RationalExpr>, KoornError> {
    specialized(p_via_e(n, r, &TransParams::generic())?, spec)
}

/// The three expansions through the interpolation polynomials at `s = t^{n-r+1}`.
#[derive(Clone, Debug)]
pub struct InterpTransitions<F> {
    /// `sum_l (coefficient) E_{r-l}(x; a | t)`, which should equal `P_(1^r)`.
    pub p_from_interp: LaurentSym<F>,
    /// `sum_l (coefficient) P_(1^{r-l})`, which should equal `E_r(x; a | t)`.
    pub interp_from_p: LaurentSym<F>,
    /// `sum_m (-1)^m e(s, m) E_{r-m}`, which should equal `E_r(x; a | t)`.
    pub interp_from_e: LaurentSym<F>,
}

/// The interpolation expansions, with `P` from the fourfold formula.
pub fn interp_transitions<F: Field>(n: usize, r: usize, p: &KoornwinderParams<F>) -> Result<InterpTransitions<F>, KoornError> {
    check_r(n, r)?;
    let t = &p.t;
    let s = spectral(t, n, r)?;
    let mut p_from_interp = LaurentSym::zero(n);
    let mut interp_from_p = LaurentSym::zero(n);
    let mut interp_from_e = LaurentSym::zero(n);
    for l in 0..=r {
        let lu = l as u32;
        let fwd = interp_forward_coeff(p.abcd(), t, &s, lu)?;
        p_from_interp = p_from_interp.plus(&interpolation(n, r - l, &p.a, t)?.scale(&fwd));
        let inv = interp_inverse_coeff(p.abcd(), t, &s, lu)?;
        interp_from_p = interp_from_p.plus(&p_fourfold(n, r - l, p)?.scale(&inv));
        let e = e_at(&p.a, t, &s, lu)?;
        let e = if l % 2 == 0 { e } else { e.negate() };
        interp_from_e = interp_from_e.plus(&elementary::<F>(n, r - l)?.scale(&e));
    }
    Ok(InterpTransitions { p_from_interp, interp_from_p, interp_from_e })
}

/// The one-column Hall–Littlewood polynomial `sum_j B_HL(j) E_{r-2j}`, the
/// `q -> 0` limit at the `(C_n, C_n)` or `(D_n, D_n)` parameters.
pub fn hall_littlewood_p<F: Field>(family: Family, n: usize, r: usize, t: &F) -> Result<LaurentSym<F>, KoornError> {
    check_r(n, r)?;
    let mut out = LaurentSym::zero(n);
    for j in 0..=r / 2 {
        let c = hl_limit(family, Coef::B, (n - r) as i64, j as u32, t)?;
        out = out.plus(&elementary::<F>(n, r - 2 * j)?.scale(&c));
    }
    Ok(out)
}

/// `s^(C_n)_(1^r) = E_r - E_{r-2}` and `s^(D_n)_(1^r) = E_r`.
pub fn schur_one_column<F: Field>(family: Family, n: usize, r: usize) -> Result<LaurentSym<F>, KoornError> {
    check_r(n, r)?;
    let e = elementary::<F>(n, r)?;
    Ok(match family {
        Family::C if r >= 2 => e.minus(&elementary(n, r - 2)?),
        _ => e,
    })
}

/// `sum_j K_{(1^r),(1^{r-2j})}(t) P^HL_(1^{r-2j})`, which should equal the
/// Schur polynomial.
pub fn kostka_expansion(family: Family, n: usize, r: usize) -> Result<LaurentSym<RationalExpr>, KoornError> {
    check_r(n, r)?;
    let t = RationalExpr::var(Var::T);
    let mut out = LaurentSym::zero(n);
    for j in 0..=r / 2 {
        let k = kostka(family, n as i64, r as i64, j as i64)?;
        out = out.plus(&hall_littlewood_p(family, n, r - 2 * j, &t)?.scale(&k));
    }
    Ok(out)
}
