use std::collections::BTreeSet;

use crate::exactalg::Field;
use crate::symfunc::{dominance_leq, partitions_below, LaurentPoly, Partition};

use super::ConjError;

fn pair(n: usize, i: usize, j: usize) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] -= 1;
    v[j] += 1;
    v
}

/// Macdonald's operator `D = sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) T_{q,x_i}`,
/// over the common denominator `prod_{i<j} (1 - x_j/x_i)`.
pub fn apply_macdonald_a<F: Field>(f: &LaurentPoly<F>, q: &F, t: &F) -> Result<LaurentPoly<F>, ConjError> {
    let n = f.n;
    let tinv = t.inverse()?;
    let mut total = LaurentPoly::zero(n);
    for i in 0..n {
        let mut term = f.q_shift(i, q, false)?;
        for j in 0..n {
            if j > i {
                term = term.times_one_minus(&tinv, &pair(n, i, j)).scale(t);
            } else if j < i {
                term = term.times_one_minus(t, &pair(n, j, i));
            }
        }
        for a in (0..n).filter(|&a| a != i) {
            for b in (a + 1..n).filter(|&b| b != i) {
                term = term.times_one_minus(&F::one(), &pair(n, a, b));
            }
        }
        total = total.plus(&term);
    }
    for a in 0..n {
        for b in a + 1..n {
            total = total.div_one_minus(&F::one(), &pair(n, a, b))?;
        }
    }
    Ok(total)
}

/// The type `A` monomial symmetric polynomial `m_mu(x_1, ..., x_n)`.
pub fn monomial_a<F: Field>(mu: &Partition, n: usize) -> Result<LaurentPoly<F>, ConjError> {
    if mu.len() > n {
        return Err(ConjError::OutOfRange(format!("partition {mu} has more than {n} parts")));
    }
    let mut perms = BTreeSet::new();
    let mut v = mu.padded(n);
    v.sort();
    loop {
        perms.insert(v.clone());
        if !next_permutation(&mut v) {
            break;
        }
    }
    let mut p = LaurentPoly::zero(n);
    for w in perms {
        p.add_term(w, F::one());
    }
    Ok(p)
}

fn next_permutation(v: &mut [i32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `sum_i q^{mu_i} t^{n-i}`.
pub fn eigenvalue_a<F: Field>(mu: &Partition, n: usize, q: &F, t: &F) -> Result<F, ConjError> {
    let mut acc = F::zero();
    for i in 0..n {
        acc = acc.plus(&q.pow_u(mu.part(i)).times(&t.pow_u((n - 1 - i) as u32)));
    }
    Ok(acc)
}

/// The Macdonald polynomial `P_lambda(x; q, t)` in `n` variables, as the
/// eigenvector `m_lambda + (lower terms)` of the operator.
pub fn oracle_p_a<F: Field>(lambda: &Partition, n: usize, q: &F, t: &F) -> Result<LaurentPoly<F>, ConjError> {
    if lambda.len() > n {
        return Err(ConjError::OutOfRange(format!("partition {lambda} has more than {n} parts")));
    }
    let basis: Vec<Partition> = partitions_below(lambda, n)
        .into_iter()
        .filter(|mu| mu.weight() == lambda.weight() && dominance_leq(mu, lambda))
        .collect();
    let images: Vec<LaurentPoly<F>> =
        basis.iter().map(|mu| apply_macdonald_a(&monomial_a(mu, n)?, q, t)).collect::<Result<_, _>>()?;
    let eig: Vec<F> = basis.iter().map(|mu| eigenvalue_a(mu, n, q, t)).collect::<Result<_, _>>()?;
    for (k, (mu, img)) in basis.iter().zip(&images).enumerate() {
        if img.coeff(&mu.padded(n)) != eig[k] {
            return Err(ConjError::Degenerate(format!("the diagonal entry of D m{mu} is not its eigenvalue")));
        }
        for w in img.terms.keys() {
            let nu = Partition::dominant(w);
            match basis.binary_search(&nu) {
                Ok(pos) if pos <= k => {}
                _ => return Err(ConjError::Degenerate(format!("D m{mu} is not triangular at m{nu}"))),
            }
        }
    }
    let top = basis.len() - 1;
    let mut u = vec![F::zero(); basis.len()];
    u[top] = F::one();
    for k in (0..top).rev() {
        let mut acc = F::zero();
        for m in k + 1..=top {
            if !u[m].is_zero() {
                acc = acc.plus(&images[m].coeff(&basis[k].padded(n)).times(&u[m]));
            }
        }
        let gap = eig[k].minus(&eig[top]);
        if gap.is_zero() {
            return Err(ConjError::Degenerate(format!("eigenvalues of m{} and m{lambda} collide", basis[k])));
        }
        u[k] = acc.negate().quot(&gap)?;
    }
    let mut p = LaurentPoly::zero(n);
    for (mu, c) in basis.iter().zip(u) {
        if !c.is_zero() {
            p = p.plus(&monomial_a::<F>(mu, n)?.scale(&c));
        }
    }
    Ok(p)
}
