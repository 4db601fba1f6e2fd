//! Seeded suites comparing the one-column formulas with the oracle.

use std::time::Instant;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::exactalg::{Field, RationalExpr};
use crate::report::{Report, Verdict};
use crate::symfunc::{interpolation, Partition};
use crate::transition::{kostka, Family, TransParams};

use super::formulas::*;
use super::operator::*;
use super::KoornError;

/// `trials` seeded parameter draws of height 50.
pub fn draw_params(seed: u64, trials: usize) -> Vec<KoornwinderParams<BigRational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| KoornwinderParams::random(&mut rng, 50)).collect()
}

/// `(a, -a, c, -c | q, t)` from a draw.
pub fn type_c_point<F: Field>(p: &KoornwinderParams<F>) -> KoornwinderParams<F> {
    KoornwinderParams::new(p.a.clone(), p.a.negate(), p.c.clone(), p.c.negate(), p.q.clone(), p.t.clone())
}

fn outcome(name: String, r: Result<Vec<String>, KoornError>, elapsed: std::time::Duration) -> (String, Verdict, String, std::time::Duration) {
    match r {
        Ok(bad) if bad.is_empty() => (name, Verdict::Pass, String::new(), elapsed),
        Ok(bad) => (name, Verdict::Fail, bad.join("; "), elapsed),
        Err(e) => (name, Verdict::Fail, format!("error: {e}"), elapsed),
    }
}

fn collect(title: String, items: Vec<(String, Verdict, String, std::time::Duration)>) -> Report {
    let mut rep = Report::new(title);
    for (name, v, detail, el) in items {
        rep.timed(name, v, detail, el);
    }
    rep
}

fn oracle_item(k: &KoornwinderParams<BigRational>, n: usize) -> Result<Vec<String>, KoornError> {
    let mut bad = Vec::new();
    for r in 0..=n {
        let lam = Partition::column(r);
        let four = p_fourfold(n, r, k)?;
        if four != oracle_p(&lam, n, k)? {
            bad.push(format!("r={r}: fourfold differs from the oracle"));
        }
        if !four.coeff(&lam).is_one() {
            bad.push(format!("r={r}: leading coefficient {}", four.coeff(&lam)));
        }
        if !eigen_residual(&four, &lam, k)?.is_zero() {
            bad.push(format!("r={r}: nonzero eigen-residual"));
        }
    }
    let kc = type_c_point(k);
    let tp = TransParams::new(kc.a.times(&kc.a), kc.c.times(&kc.c), kc.t.clone());
    for r in 0..=n {
        let four = p_fourfold(n, r, &kc)?;
        let routes = [
            ("oracle", oracle_p(&Partition::column(r), n, &kc)?),
            ("twofold", p_twofold(n, r, &tp)?),
            ("B route", p_via_e(n, r, &tp)?),
            ("C route", p_via_c(n, r, &tp)?),
        ];
        for (name, p) in routes {
            if p != four {
                bad.push(format!("r={r}, b=-a, d=-c: {name} differs from fourfold"));
            }
        }
    }
    Ok(bad)
}

/// For every `n <= n_max` and `r <= n`: fourfold formula = oracle, zero
/// eigen-residual, unit leading coefficient, and at `b = -a`, `d = -c` the
/// twofold, `B` and `C` routes agree with it.
pub fn verify_oracle(n_max: usize, trials: usize, seed: u64) -> Report {
    let draws = draw_params(seed, trials);
    let jobs: Vec<(usize, usize)> = (0..trials).flat_map(|d| (1..=n_max).map(move |n| (d, n))).collect();
    let items = jobs
        .par_iter()
        .map(|&(d, n)| {
            let start = Instant::now();
            let r = oracle_item(&draws[d], n);
            outcome(format!("draw {d}, n={n}, r<={n}"), r, start.elapsed())
        })
        .collect();
    collect(format!("one-column formulas against the oracle, n<={n_max}, {trials} draws, seed {seed}"), items)
}

fn interp_item(k: &KoornwinderParams<BigRational>, n: usize, r: usize) -> Result<Vec<String>, KoornError> {
    let tr = interp_transitions(n, r, k)?;
    let direct = interpolation(n, r, &k.a, &k.t)?;
    let mut bad = Vec::new();
    if tr.p_from_interp != p_fourfold(n, r, k)? {
        bad.push("P from E_interp differs".to_string());
    }
    if tr.interp_from_p != direct {
        bad.push("E_interp from P differs".to_string());
    }
    if tr.interp_from_e != direct {
        bad.push("E_interp from E differs".to_string());
    }
    Ok(bad)
}

/// The interpolation round trips for `r <= n`.
pub fn verify_interp(n: usize, trials: usize, seed: u64) -> Report {
    let draws = draw_params(seed, trials);
    let jobs: Vec<(usize, usize)> = (0..trials).flat_map(|d| (0..=n).map(move |r| (d, r))).collect();
    let items = jobs
        .par_iter()
        .map(|&(d, r)| {
            let start = Instant::now();
            outcome(format!("draw {d}, n={n}, r={r}"), interp_item(&draws[d], n, r), start.elapsed())
        })
        .collect();
    collect(format!("interpolation round trips, n={n}, {trials} draws, seed {seed}"), items)
}

/// Both Kostka closed forms for `n <= n_max`, and the Schur expansion
/// `s = sum K P^HL` for `n <= expansion_max`.
pub fn verify_kostka(n_max: usize, expansion_max: usize) -> Report {
    let mut rep = Report::new(format!("Kostka polynomials, n<={n_max}"));
    for fam in [Family::C, Family::D] {
        let start = Instant::now();
        let mut bad = Vec::new();
        for n in 0..=n_max as i64 {
            for r in 0..=n {
                for j in 0..=r / 2 {
                    if let Err(e) = kostka(fam, n, r, j) {
                        bad.push(e.to_string());
                    }
                }
            }
        }
        rep.timed(format!("{fam:?}: closed forms agree, nonnegative integral"), verdict(&bad), bad.join("; "), start.elapsed());
    }
    for fam in [Family::C, Family::D] {
        let start = Instant::now();
        let mut bad = Vec::new();
        for n in 1..=expansion_max {
            for r in 0..=n {
                match (kostka_expansion(fam, n, r), schur_one_column::<RationalExpr>(fam, n, r)) {
                    (Ok(a), Ok(b)) if a == b => {}
                    (Ok(_), Ok(_)) => bad.push(format!("n={n} r={r}")),
                    (Err(e), _) | (_, Err(e)) => bad.push(format!("n={n} r={r}: {e}")),
                }
            }
        }
        rep.timed(format!("{fam:?}: s = sum K P^HL, n<={expansion_max}"), verdict(&bad), bad.join("; "), start.elapsed());
    }
    rep
}

fn verdict(bad: &[String]) -> Verdict {
    if bad.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}
