use crate::exactalg::{AlgError, Field};
use crate::qseries::{qpoch, qpoch_quot};

use super::ConjError;

/// `acc * (num; q)_k / (den; q)_k`.
fn ratio<F: Field>(acc: F, num: &F, den: &F, q: &F, k: u32) -> Result<F, AlgError> {
    if k == 0 {
        return Ok(acc);
    }
    qpoch_quot(acc.times(&qpoch(num, q, k as i64)?), den, q, k as i64)
}

/// `acc * (t)_k/(q)_k * (q/t)^k`.
fn base<F: Field>(acc: F, q: &F, t: &F, k: u32) -> Result<F, AlgError> {
    if k == 0 {
        return Ok(acc);
    }
    let acc = ratio(acc, t, q, q, k)?;
    Ok(acc.times(&q.quot(t)?.pow_u(k)))
}

/// The type `A_{n-1}` coefficient `c_n(theta; s; q, t)`, by its recursion in
/// the last column of `theta`.
pub fn phi_a_coeff<F: Field>(theta: &[Vec<u32>], s: &[F], q: &F, t: &F) -> Result<F, ConjError> {
    let n = s.len();
    if theta.len() < n || theta.iter().take(n).any(|row| row.len() < n) {
        return Err(ConjError::OutOfRange(format!("theta must be {n} x {n}")));
    }
    for (i, row) in theta.iter().take(n).enumerate() {
        if row.iter().take(i + 1).any(|&v| v != 0) {
            return Err(ConjError::OutOfRange("theta must be strictly upper triangular".into()));
        }
    }
    let mut acc = F::one();
    let mut s: Vec<F> = s.to_vec();
    for m in (1..n).rev() {
        let col: Vec<u32> = (0..m).map(|i| theta[i][m]).collect();
        for i in 0..m {
            let k = col[i];
            if k == 0 {
                continue;
            }
            for j in i..m {
                let r = s[j + 1].quot(&s[i])?;
                acc = ratio(acc, &t.times(&r), &q.times(&r), q, k)?;
                let qj = q.pow_i(-(col[j] as i64))?;
                let r = s[j].quot(&s[i])?;
                acc = ratio(acc, &qj.times(q).times(&r).quot(t)?, &qj.times(&r), q, k)?;
            }
        }
        for i in 0..m {
            s[i] = s[i].times(&q.pow_i(-(col[i] as i64))?);
        }
    }
    Ok(acc)
}

/// The `C_2` coefficient `c^{(C_2)}(theta, mu, rho_1, rho_2; s_1, s_2; q, t)`.
#[allow(clippy::too_many_arguments)]
pub fn psi_c2_coeff<F: Field>(theta: u32, mu: u32, rho1: u32, rho2: u32, s1: &F, s2: &F, q: &F, t: &F) -> Result<F, ConjError> {
    let r21 = s2.quot(s1)?;
    let mut acc = base(F::one(), q, t, theta)?;
    acc = ratio(acc, &t.times(&r21), &q.times(&r21), q, theta)?;

    let p = s1.times(s2);
    acc = base(acc, q, t, mu)?;
    acc = ratio(acc, &t.quot(&p)?, &q.quot(&p)?, q, mu)?;
    let qm = q.pow_i(-(theta as i64))?;
    let qp = q.pow_u(theta);
    acc = ratio(acc, &t.quot(s2)?, &q.quot(s2)?, q, mu)?;
    acc = ratio(acc, &qm.times(q).quot(&t.times(s2))?, &qm.quot(s2)?, q, mu)?;
    acc = ratio(acc, &t.quot(s1)?, &q.quot(s1)?, q, mu)?;
    acc = ratio(acc, &qp.times(q).quot(s1)?, &qp.times(t).quot(s1)?, q, mu)?;

    let q1 = q.pow_u(theta + mu);
    acc = base(acc, q, t, rho1)?;
    acc = ratio(acc, &q1.times(&t.pow_u(2)).quot(s1)?, &q1.times(q).times(t).quot(s1)?, q, rho1)?;
    let q2 = q.pow_i(mu as i64 - theta as i64)?;
    acc = base(acc, q, t, rho2)?;
    acc = ratio(acc, &q2.times(t).quot(s2)?, &q2.times(q).quot(s2)?, q, rho2)?;
    Ok(acc)
}

/// The outer coefficient of the rectangular `C_3` series at `(mu_13, rho_1)`.
pub fn psi_c3_rect_coeff<F: Field>(mu13: u32, rho1: u32, s3: &F, q: &F, t: &F) -> Result<F, ConjError> {
    let sq = s3.times(s3);
    let mut acc = base(F::one(), q, t, mu13)?;
    acc = ratio(acc, &sq.inverse()?, &q.quot(&t.times(&sq))?, q, mu13)?;
    acc = ratio(acc, &t.quot(s3)?, &q.quot(s3)?, q, mu13)?;
    acc = ratio(acc, &q.quot(&t.times(s3))?, &s3.inverse()?, q, mu13)?;
    let qm = q.pow_u(mu13);
    acc = base(acc, q, t, rho1)?;
    acc = ratio(acc, &qm.times(t).quot(s3)?, &qm.times(q).quot(s3)?, q, rho1)?;
    Ok(acc)
}

/// The folded `A_3` decomposition coefficient `e_2(s_1, s_2; mu_12)`.
pub fn e2_coeff<F: Field>(s1: &F, s2: &F, mu: u32, q: &F, t: &F) -> Result<F, ConjError> {
    let mut acc = ratio(F::one(), &t.quot(s1)?, &q.quot(s1)?, q, mu)?;
    acc = ratio(acc, &t.quot(s2)?, &q.quot(s2)?, q, mu)?;
    acc = base(acc, q, t, mu)?;
    let qm = q.pow_u(mu);
    let p = s1.times(s2);
    acc = ratio(acc, &qm.times(q).quot(&t.times(&p))?, &qm.quot(&p)?, q, mu)?;
    Ok(acc)
}

/// The folded `A_5` decomposition coefficient `e_3(s; mu_12, mu_13, mu_23)`.
pub fn e3_coeff<F: Field>(s: &[F; 3], mu: [u32; 3], q: &F, t: &F) -> Result<F, ConjError> {
    let [m12, m13, m23] = mu;
    let [s1, s2, s3] = s;
    let mut acc = ratio(F::one(), &t.quot(s1)?, &q.quot(s1)?, q, m12 + m13)?;
    acc = ratio(acc, &t.quot(s2)?, &q.quot(s2)?, q, m12 + m23)?;
    acc = ratio(acc, &t.quot(s3)?, &q.quot(s3)?, q, m13 + m23)?;
    let qall = q.pow_u(m12 + m13 + m23);
    let pair = |acc: F, a: &F, b: &F, k: u32| -> Result<F, ConjError> {
        let p = a.times(b);
        let acc = base(acc, q, t, k)?;
        Ok(ratio(acc, &qall.times(q).quot(&t.times(&p))?, &qall.quot(&p)?, q, k)?)
    };
    let cross = |acc: F, hi: &F, lo: &F, shift: u32, k: u32| -> Result<F, ConjError> {
        let r = hi.quot(lo)?;
        let acc = ratio(acc, &t.times(&r), &q.times(&r), q, k)?;
        let qs = q.pow_i(-(shift as i64))?;
        Ok(ratio(acc, &qs.times(q).times(&r).quot(t)?, &qs.times(&r), q, k)?)
    };
    acc = pair(acc, s1, s2, m12)?;
    acc = cross(acc, s3, s1, m23, m12)?;
    acc = cross(acc, s3, s2, m13, m12)?;
    acc = pair(acc, s1, s3, m13)?;
    acc = cross(acc, s2, s1, m23, m13)?;
    acc = pair(acc, s2, s3, m23)?;
    Ok(acc)
}

/// The closed form of the folded `A_1` coefficient:
/// `(t)_k (t/s_1)_k / ((q)_k (q/s_1)_k) (q/t)^k` at `x_1^{-2k}`.
pub fn folded_a1_coeff<F: Field>(s1: &F, k: u32, q: &F, t: &F) -> Result<F, ConjError> {
    let acc = base(F::one(), q, t, k)?;
    Ok(ratio(acc, &t.quot(s1)?, &q.quot(s1)?, q, k)?)
}
