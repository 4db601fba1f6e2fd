use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;

use crate::exactalg::Field;

use super::laurent::LaurentPoly;
use super::partition::Partition;
use super::sym::LaurentSym;
use super::SymError;

/// `E_r(x)`: `(-1)^r` times the coefficient of `y^r` in
/// `prod_i (1 - y x_i)(1 - y/x_i)`, expanded directly.
pub fn elementary<F: Field>(n: usize, r: usize) -> Result<LaurentSym<F>, SymError> {
    if r > 2 * n {
        return Err(SymError::OutOfRange(format!("E_{r} needs r <= 2n = {}", 2 * n)));
    }
    let mut gen: Vec<LaurentPoly<F>> = vec![LaurentPoly::constant(n, F::one())];
    for i in 0..n {
        let s = LaurentPoly::var(n, i, false).plus(&LaurentPoly::var(n, i, true));
        let mut next = vec![LaurentPoly::zero(n); gen.len() + 2];
        for (k, g) in gen.iter().enumerate() {
            next[k] = next[k].plus(g);
            next[k + 1] = next[k + 1].minus(&g.times(&s));
            next[k + 2] = next[k + 2].plus(g);
        }
        gen = next;
    }
    let p = if r % 2 == 0 { gen[r].clone() } else { gen[r].scale(&F::from_i64(-1)) };
    LaurentSym::from_laurent(&p)
}

/// `E_r(x) = sum_k binom(n-r+2k, k) m_(1^{r-2k})`, valid for `r <= n`.
pub fn elementary_binomial<F: Field>(n: usize, r: usize) -> Result<LaurentSym<F>, SymError> {
    if r > n {
        return Err(SymError::OutOfRange(format!("binomial form of E_{r} needs r <= n = {n}")));
    }
    let mut s = LaurentSym::zero(n);
    for k in 0..=r / 2 {
        let b = binomial(BigInt::from(n - r + 2 * k), BigInt::from(k));
        s.add_term(Partition::column(r - 2 * k), F::from_rational(&BigRational::from_integer(b)));
    }
    Ok(s)
}

/// `E_r(x; a | t) = sum_{i_1 < ... < i_r} prod_k <x_{i_k}; t^{i_k - k} a>`,
/// with `<z; w> = z + 1/z - w - 1/w`.
pub fn interpolation<F: Field>(n: usize, r: usize, a: &F, t: &F) -> Result<LaurentSym<F>, SymError> {
    if r > n {
        return Err(SymError::OutOfRange(format!("E_{r}(x;a|t) needs r <= n = {n}")));
    }
    let mut total = LaurentPoly::zero(n);
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        let mut term = LaurentPoly::constant(n, F::one());
        for (k, &i) in idx.iter().enumerate() {
            let w = t.pow_i(i as i64 - k as i64)?.times(a);
            let shift = w.plus(&w.inverse()?);
            let bracket = LaurentPoly::var(n, i, false)
                .plus(&LaurentPoly::var(n, i, true))
                .minus(&LaurentPoly::constant(n, shift));
            term = term.times(&bracket);
        }
        total = total.plus(&term);
        if !next_combination(&mut idx, n) {
            break;
        }
    }
    LaurentSym::from_laurent(&total)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let r = idx.len();
    let Some(i) = (0..r).rev().find(|&i| idx[i] < n - r + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..r {
        idx[j] = idx[j - 1] + 1;
    }
    true
}
