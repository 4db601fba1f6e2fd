use std::collections::BTreeMap;

use crate::exactalg::Field;

use super::series::{height, keys_up_to, RootKind, TruncSeries};
use super::ConjError;

/// Parameters of the `C_n` operator: Koornwinder's `(a, -a, c, -c | q, t)`,
/// entering only through `a^2` and `c^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct CParams<F> {
    pub a2: F,
    pub c2: F,
    pub q: F,
    pub t: F,
}

impl<F: Field> CParams<F> {
    /// The point `a = t^{1/2}`, `c = q^{1/2} t^{1/2}`.
    pub fn b_equals_t(q: F, t: F) -> CParams<F> {
        CParams { a2: t.clone(), c2: q.times(&t), q, t }
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

/// Expansion of `1 - c x^v` as `const * x^mono * (series)` in the
/// asymptotic region.
fn expand<F: Field>(n: usize, order: u32, c: &F, v: &[i32]) -> Result<(F, Vec<i32>, TruncSeries<F>), ConjError> {
    let kind = RootKind::C;
    if let Some(key) = kind.key_of(v) {
        return Ok((F::one(), vec![0; n], TruncSeries::one_minus(kind, n, order, c, &key)));
    }
    let neg: Vec<i32> = v.iter().map(|x| -x).collect();
    let key = kind
        .key_of(&neg)
        .ok_or_else(|| ConjError::OutOfRange(format!("{v:?} is not a root")))?;
    Ok((c.negate(), v.to_vec(), TruncSeries::one_minus(kind, n, order, &c.inverse()?, &key)))
}

/// `A_{i,eps}(x) / B_{i,eps}(x)` as a truncated series.
fn coefficient_series<F: Field>(n: usize, i: usize, eps: i32, p: &CParams<F>, order: u32) -> Result<TruncSeries<F>, ConjError> {
    let one = F::one();
    let mut num: Vec<(F, Vec<i32>)> = vec![(p.a2.clone(), unit(n, i, 2 * eps)), (p.c2.clone(), unit(n, i, 2 * eps))];
    let mut den: Vec<(F, Vec<i32>)> = vec![(one.clone(), unit(n, i, 2 * eps)), (p.q.clone(), unit(n, i, 2 * eps))];
    for j in (0..n).filter(|&j| j != i) {
        for sj in [1, -1] {
            num.push((p.t.clone(), pair(n, i, eps, j, sj)));
            den.push((one.clone(), pair(n, i, eps, j, sj)));
        }
    }
    let mut scalar = F::one();
    let mut mono = vec![0i32; n];
    let mut s = TruncSeries::one(RootKind::C, n, order);
    for (c, v) in &num {
        let (k, m, f) = expand(n, order, c, v)?;
        scalar = scalar.times(&k);
        mono.iter_mut().zip(&m).for_each(|(a, b)| *a += b);
        s = s.times(&f);
    }
    for (c, v) in &den {
        let (k, m, f) = expand(n, order, c, v)?;
        scalar = scalar.quot(&k)?;
        mono.iter_mut().zip(&m).for_each(|(a, b)| *a -= b);
        if let Some((key, c1)) = f.coeffs.iter().find(|(k, _)| height(k) > 0) {
            s = s.times(&TruncSeries::geometric(RootKind::C, n, order, &c1.negate(), key));
        }
    }
    debug_assert!(mono.iter().all(|&m| m == 0));
    Ok(s.scale(&scalar))
}

/// The asymptotically free eigenfunction `phi^{(C_n)}(s | x)` of the `C_n`
/// operator, normalized by `c_0 = 1`, with `s_i = t^{n-i+1} q^{lambda_i}`.
pub fn phi_c_series<F: Field>(s: &[F], p: &CParams<F>, order: u32) -> Result<TruncSeries<F>, ConjError> {
    let n = s.len();
    let kind = RootKind::C;
    let mut ql = Vec::with_capacity(n);
    for (i, si) in s.iter().enumerate() {
        ql.push(si.quot(&p.t.pow_u((n - i) as u32))?);
    }
    let mut parts: Vec<(usize, i32, TruncSeries<F>)> = Vec::new();
    for i in 0..n {
        for eps in [1, -1] {
            parts.push((i, eps, coefficient_series(n, i, eps, p, order)?));
        }
    }
    let zero_key = vec![0u32; n];
    let lead: Vec<F> = parts.iter().map(|(_, _, r)| r.coeff(&zero_key)).collect();
    // (q^{lambda_i - beta_i})^{eps} - 1 for each operator part.
    let factors = |key: &[u32]| -> Result<Vec<F>, ConjError> {
        let a = kind.exponents(n, key);
        let mut out = Vec::with_capacity(parts.len());
        for (i, eps, _) in &parts {
            let v = ql[*i].times(&p.q.pow_i(a[*i] as i64)?);
            out.push(v.pow_i(*eps as i64)?.minus(&F::one()));
        }
        Ok(out)
    };
    let energy = |f: &[F]| lead.iter().zip(f).fold(F::zero(), |acc, (l, x)| acc.plus(&l.times(x)));
    let e0 = energy(&factors(&zero_key)?);

    let mut acc: BTreeMap<Vec<u32>, F> = BTreeMap::new();
    let mut out = TruncSeries::zero(kind, n, order);
    for key in keys_up_to(n, order) {
        let f = factors(&key)?;
        let c = if height(&key) == 0 {
            F::one()
        } else {
            let gap = energy(&f).minus(&e0);
            if gap.is_zero() {
                return Err(ConjError::Degenerate(format!("resonant spectral point at {key:?}")));
            }
            acc.remove(&key).unwrap_or_else(F::zero).negate().quot(&gap)?
        };
        if c.is_zero() {
            continue;
        }
        // Push c_key * sum_parts R(gamma) f(key) into key + gamma.
        let mut push: BTreeMap<&Vec<u32>, F> = BTreeMap::new();
        for ((_, _, r), fk) in parts.iter().zip(&f) {
            if fk.is_zero() {
                continue;
            }
            for (g, rg) in &r.coeffs {
                if height(g) == 0 || height(g) + height(&key) > order {
                    continue;
                }
                let e = push.entry(g).or_insert_with(F::zero);
                *e = e.plus(&rg.times(fk));
            }
        }
        for (g, v) in push {
            let target: Vec<u32> = key.iter().zip(g).map(|(a, b)| a + b).collect();
            let e = acc.entry(target).or_insert_with(F::zero);
            *e = e.plus(&v.times(&c));
        }
        out.add_term(key, c);
    }
    Ok(out)
}
