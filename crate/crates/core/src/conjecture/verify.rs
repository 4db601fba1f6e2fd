use std::time::Instant;

use crate::exactalg::Field;
use crate::koornwinder::{oracle_p, KoornwinderParams};
use crate::report::{Report, Verdict};
use crate::symfunc::{dominance_leq, LaurentPoly, Partition};

use super::coeffs::{e2_coeff, e3_coeff, folded_a1_coeff, phi_a_coeff, psi_c2_coeff, psi_c3_rect_coeff};
use super::eigen_c::{phi_c_series, CParams};
use super::macdonald_a::oracle_p_a;
use super::series::{height, RootKind, TruncSeries};
use super::ConjError;

/// Strict upper triangular `n x n` matrices with `sum theta_ij (j - i) <= order`.
fn thetas(n: usize, order: u32) -> Vec<Vec<Vec<u32>>> {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    fn go(cells: &[(usize, usize)], k: usize, left: u32, cur: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if k == cells.len() {
            out.push(cur.clone());
            return;
        }
        let (i, j) = cells[k];
        let w = (j - i) as u32;
        for v in 0..=left / w {
            cur[i][j] = v;
            go(cells, k + 1, left - v * w, cur, out);
        }
        cur[i][j] = 0;
    }
    let mut out = Vec::new();
    go(&cells, 0, order, &mut vec![vec![0; n]; n], &mut out);
    out
}

/// `phi^{(A_{n-1})}(s | x)` truncated at root height `order`.
pub fn phi_a_series<F: Field>(s: &[F], q: &F, t: &F, order: u32) -> Result<TruncSeries<F>, ConjError> {
    let n = s.len();
    let mut out = TruncSeries::zero(RootKind::A, n, order);
    for theta in thetas(n, order) {
        let mut key = vec![0u32; n.saturating_sub(1)];
        for (i, row) in theta.iter().enumerate() {
            for (j, &v) in row.iter().enumerate().skip(i + 1) {
                for k in &mut key[i..j] {
                    *k += v;
                }
            }
        }
        out.add_term(key, phi_a_coeff(&theta, s, q, t)?);
    }
    Ok(out)
}

/// `psi^{(C_2)}(s_1, s_2 | x_1, x_2)` truncated at root height `order`.
pub fn psi_c2_series<F: Field>(s1: &F, s2: &F, q: &F, t: &F, order: u32) -> Result<TruncSeries<F>, ConjError> {
    let mut out = TruncSeries::zero(RootKind::C, 2, order);
    for theta in 0..=order {
        for mu in 0..=(order - theta) / 2 {
            for rho1 in 0..=(order - theta - 2 * mu) / 3 {
                for rho2 in 0..=order - theta - 2 * mu - 3 * rho1 {
                    let key = vec![theta + mu + 2 * rho1, mu + rho1 + rho2];
                    out.add_term(key, psi_c2_coeff(theta, mu, rho1, rho2, s1, s2, q, t)?);
                }
            }
        }
    }
    Ok(out)
}

/// `psi^{(C_3),rect}(s_3 | x_1, x_2, x_3)` truncated at root height `order`,
/// with the inner `C_2` series taken from [`psi_c2_series`].
pub fn psi_c3_rect_series<F: Field>(s3: &F, q: &F, t: &F, order: u32) -> Result<TruncSeries<F>, ConjError> {
    let mut out = TruncSeries::zero(RootKind::C, 3, order);
    for mu in 0..=order / 3 {
        for rho in 0..=(order - 3 * mu) / 5 {
            let outer = psi_c3_rect_coeff(mu, rho, s3, q, t)?;
            let shift = [mu + 2 * rho, mu + 2 * rho, mu + rho];
            let left = order - height(&shift);
            let inner = psi_c2_series(&t.times(s3), &q.pow_i(-(mu as i64))?.times(s3), q, t, left)?;
            for (k, c) in &inner.coeffs {
                out.add_term(vec![shift[0], shift[1] + k[0], shift[2] + k[1]], outer.times(c));
            }
        }
    }
    Ok(out)
}

/// The folded series `phi^{(A_{2n-1})}(t^{n-1} s, t^{n-1}, ..., 1 | x, x^{-1})`
/// in the `C_n` expansion variables.
pub fn folded_a_series<F: Field>(s: &[F], q: &F, t: &F, order: u32) -> Result<TruncSeries<F>, ConjError> {
    let n = s.len();
    let tn = t.pow_u(n as u32 - 1);
    let mut sa: Vec<F> = s.iter().map(|x| x.times(&tn)).collect();
    sa.extend((0..n).rev().map(|k| t.pow_u(k as u32)));
    let a = phi_a_series(&sa, q, t, order)?;
    let mut out = TruncSeries::zero(RootKind::C, n, order);
    for (k, c) in &a.coeffs {
        let y = RootKind::A.exponents(2 * n, k);
        let x: Vec<i32> = (0..n).map(|i| y[i] - y[2 * n - 1 - i]).collect();
        out.add_monomial(&x, c.clone())?;
    }
    Ok(out)
}

fn pair_key(n: usize, i: usize, j: usize) -> Vec<u32> {
    let mut a = vec![0; n];
    a[i] -= 1;
    a[j] -= 1;
    RootKind::C.key_of(&a).expect("1/(x_i x_j) is a positive root")
}

/// `sum_mu e_n(s; mu) prod (1/x_i x_j)^{mu_ij} phi^{(C_n)}(q^{-...} s | x)` for
/// `n <= 3`, with `phi^{(C_n)}` from the eigen-solver.
pub fn folded_decomposition<F: Field>(s: &[F], p: &CParams<F>, order: u32) -> Result<TruncSeries<F>, ConjError> {
    let n = s.len();
    let (q, t) = (&p.q, &p.t);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let keys: Vec<Vec<u32>> = pairs.iter().map(|&(i, j)| pair_key(n, i, j)).collect();
    let mut out = TruncSeries::zero(RootKind::C, n, order);
    let mut mus = vec![vec![]];
    for key in &keys {
        let h = height(key);
        mus = mus
            .into_iter()
            .flat_map(|m: Vec<u32>| (0..=order / h).map(move |v| [m.clone(), vec![v]].concat()))
            .collect();
    }
    for mu in mus {
        let mut shift = vec![0u32; n];
        for (key, &m) in keys.iter().zip(&mu) {
            shift.iter_mut().zip(key).for_each(|(a, b)| *a += b * m);
        }
        if height(&shift) > order {
            continue;
        }
        let e = match n {
            1 => F::one(),
            2 => e2_coeff(&s[0], &s[1], mu[0], q, t)?,
            3 => e3_coeff(&[s[0].clone(), s[1].clone(), s[2].clone()], [mu[0], mu[1], mu[2]], q, t)?,
            _ => return Err(ConjError::OutOfRange(format!("folded decomposition is known for n <= 3, not {n}"))),
        };
        if e.is_zero() {
            continue;
        }
        let mut shifted = s.to_vec();
        for (&(i, j), &m) in pairs.iter().zip(&mu) {
            let qm = q.pow_i(-(m as i64))?;
            shifted[i] = shifted[i].times(&qm);
            shifted[j] = shifted[j].times(&qm);
        }
        let phi = phi_c_series(&shifted, p, order - height(&shift))?;
        for (k, c) in &phi.coeffs {
            out.add_term(k.iter().zip(&shift).map(|(a, b)| a + b).collect(), e.times(c));
        }
    }
    Ok(out)
}

/// Compares `x^lambda * series` with a polynomial, coefficientwise.
///
/// `Fail` on a mismatch at a monomial of the polynomial or inside the weight
/// polytope of `lambda`; `Inconclusive` if the window does not reach the whole
/// polynomial, or if the series has a nonzero tail outside the polytope.
pub fn compare_with_polynomial<F: Field>(
    series: &TruncSeries<F>,
    lambda: &Partition,
    poly: &LaurentPoly<F>,
) -> (Verdict, String) {
    let n = series.n;
    let lam = lambda.padded(n);
    let mut required = 0;
    for w in poly.terms.keys() {
        let off: Vec<i32> = w.iter().zip(&lam).map(|(a, b)| a - b).collect();
        match series.kind.key_of(&off) {
            Some(k) => required = required.max(height(&k)),
            None => return (Verdict::Fail, format!("polynomial monomial {w:?} is outside the expansion cone")),
        }
    }
    if series.order < required {
        return (Verdict::Inconclusive, format!("window {} below the support height {required}", series.order));
    }
    for (w, c) in &poly.terms {
        let off: Vec<i32> = w.iter().zip(&lam).map(|(a, b)| a - b).collect();
        let key = series.kind.key_of(&off).unwrap();
        if series.coeff(&key) != *c {
            return (Verdict::Fail, format!("coefficient of x^{w:?} is {} in the series, {c} in the polynomial", series.coeff(&key)));
        }
    }
    let mut tail = 0;
    for (k, c) in &series.coeffs {
        let w: Vec<i32> = series.kind.exponents(n, k).iter().zip(&lam).map(|(a, b)| a + b).collect();
        if !poly.coeff(&w).is_zero() {
            continue;
        }
        let inside = dominance_leq(&Partition::dominant(&w), lambda) && (series.kind == RootKind::C || w.iter().all(|&x| x >= 0));
        if inside {
            return (Verdict::Fail, format!("series has {c} at x^{w:?}, which the polynomial lacks"));
        }
        tail += 1;
    }
    if tail > 0 {
        return (Verdict::Inconclusive, format!("{tail} nonzero tail coefficients outside the weight polytope"));
    }
    (Verdict::Pass, format!("{} monomials matched, window {} (support height {required})", poly.len(), series.order))
}

/// Compares two truncated series coefficientwise up to the smaller order.
pub fn compare_series<F: Field>(lhs: &TruncSeries<F>, rhs: &TruncSeries<F>) -> (Verdict, String) {
    let order = lhs.order.min(rhs.order);
    let mut keys: Vec<&Vec<u32>> = lhs.coeffs.keys().chain(rhs.coeffs.keys()).filter(|k| height(k) <= order).collect();
    keys.sort();
    keys.dedup();
    for k in &keys {
        let (a, b) = (lhs.coeff(k), rhs.coeff(k));
        if a != b {
            return (Verdict::Fail, format!("coefficients at {k:?} differ: {a} vs {b}"));
        }
    }
    (Verdict::Pass, format!("{} coefficients agree up to height {order}", keys.len()))
}

fn sq<F: Field>(u: &F) -> F {
    u.times(u)
}

fn point<F: Field>(u_q: &F, u_t: &F) -> String {
    format!("q=({u_q})^2, t=({u_t})^2")
}

/// `x^lambda phi^{(A_{n-1})}` against the type `A` Macdonald polynomial,
/// at `s_i = t^{n-i} q^{lambda_i}`.
pub fn phi_a_eigencheck<F: Field>(n: usize, lambda: &Partition, q: &F, t: &F, order: u32) -> Result<Report, ConjError> {
    let start = Instant::now();
    let s: Vec<F> = (0..n).map(|i| q.pow_u(lambda.part(i)).times(&t.pow_u((n - 1 - i) as u32))).collect();
    let series = phi_a_series(&s, q, t, order)?;
    let poly = oracle_p_a(lambda, n, q, t)?;
    let (v, detail) = compare_with_polynomial(&series, lambda, &poly);
    let mut r = Report::new(format!("phi^(A_{}) at partitions", n - 1));
    r.timed(format!("lambda={lambda} n={n} q={q} t={t}"), v, detail, start.elapsed());
    Ok(r)
}

/// `x^lambda psi^{(C_2)} = P_lambda` at the `b = t` point with `q = u_q^2`, `t = u_t^2`.
pub fn verify_c2_conjecture<F: Field>(lambda: &Partition, u_q: &F, u_t: &F, window: u32) -> Result<Report, ConjError> {
    if lambda.len() > 2 {
        return Err(ConjError::OutOfRange(format!("partition {lambda} has more than 2 parts")));
    }
    let start = Instant::now();
    let (q, t) = (sq(u_q), sq(u_t));
    let s1 = sq(&t).times(&q.pow_u(lambda.part(0)));
    let s2 = t.times(&q.pow_u(lambda.part(1)));
    let series = psi_c2_series(&s1, &s2, &q, &t, window)?;
    let params = KoornwinderParams::cc(u_t.clone(), u_q.clone(), t.clone());
    let poly = oracle_p(lambda, 2, &params)?.to_laurent();
    let (v, detail) = compare_with_polynomial(&series, lambda, &poly);
    let mut r = Report::new("psi^(C_2) against P^(C_2)");
    r.timed(format!("lambda={lambda} {}", point(u_q, u_t)), v, detail, start.elapsed());
    Ok(r)
}

/// `x^{(l,l,l)} psi^{(C_3),rect} = P_{(l,l,l)}` at the `b = t` point.
pub fn verify_c3_rect<F: Field>(lambda3: u32, u_q: &F, u_t: &F, window: u32) -> Result<Report, ConjError> {
    let start = Instant::now();
    let (q, t) = (sq(u_q), sq(u_t));
    let s3 = t.times(&q.pow_u(lambda3));
    let series = psi_c3_rect_series(&s3, &q, &t, window)?;
    let lambda = Partition::new(vec![lambda3; 3]);
    let params = KoornwinderParams::cc(u_t.clone(), u_q.clone(), t.clone());
    let poly = oracle_p(&lambda, 3, &params)?.to_laurent();
    let (v, detail) = compare_with_polynomial(&series, &lambda, &poly);
    let mut r = Report::new("psi^(C_3),rect against P^(C_3)");
    r.timed(format!("lambda3={lambda3} {}", point(u_q, u_t)), v, detail, start.elapsed());
    Ok(r)
}

/// `psi^{(C_2)}` against the eigen-solver's `phi^{(C_2)}` at a generic spectral point.
pub fn compare_psi_c2_with_solver<F: Field>(s1: &F, s2: &F, u_q: &F, u_t: &F, order: u32) -> Result<Report, ConjError> {
    let start = Instant::now();
    let p = CParams::b_equals_t(sq(u_q), sq(u_t));
    let psi = psi_c2_series(s1, s2, &p.q, &p.t, order)?;
    let phi = phi_c_series(&[s1.clone(), s2.clone()], &p, order)?;
    let (v, detail) = compare_series(&psi, &phi);
    let mut r = Report::new("psi^(C_2) against the eigen-solver");
    r.timed(format!("s=({s1}, {s2}) {}", point(u_q, u_t)), v, detail, start.elapsed());
    Ok(r)
}

/// The folded `A_{2n-1}` series against its `C_n` decomposition at a spectral
/// point `s`; for `n = 1` also against the closed form.
pub fn verify_folded_a<F: Field>(s: &[F], u_q: &F, u_t: &F, order: u32) -> Result<Report, ConjError> {
    let n = s.len();
    if !(1..=3).contains(&n) {
        return Err(ConjError::OutOfRange(format!("folded check needs 1 <= n <= 3, got {n}")));
    }
    let start = Instant::now();
    let p = CParams::b_equals_t(sq(u_q), sq(u_t));
    let lhs = folded_a_series(s, &p.q, &p.t, order)?;
    let rhs = folded_decomposition(s, &p, order)?;
    let (mut v, mut detail) = compare_series(&lhs, &rhs);
    if n == 1 && v == Verdict::Pass {
        for k in 0..=order {
            if lhs.coeff(&[k]) != folded_a1_coeff(&s[0], k, &p.q, &p.t)? {
                v = Verdict::Fail;
                detail = format!("closed form differs at x_1^-{}", 2 * k);
                break;
            }
        }
    }
    let mut r = Report::new(format!("folded A_{} against C_{n}", 2 * n - 1));
    let sv: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    r.timed(format!("n={n} s=({}) {} order={order}", sv.join(", "), point(u_q, u_t)), v, detail, start.elapsed());
    Ok(r)
}

/// A seeded `(u_q, u_t)` of height at most `height`, with `q = u_q^2` and
/// `t = u_t^2` free of low-order multiplicative relations.
pub fn random_point(rng: &mut impl rand::Rng, height: i64) -> (num_rational::BigRational, num_rational::BigRational) {
    use crate::koornwinder::small_rational;
    loop {
        let (uq, ut) = (small_rational(rng, height), small_rational(rng, height));
        let one = num_rational::BigRational::one();
        let p = KoornwinderParams::new(one.clone(), one.clone(), one.clone(), one, sq(&uq), sq(&ut));
        if p.generic_enough(8) {
            return (uq, ut);
        }
    }
}
