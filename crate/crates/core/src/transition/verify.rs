//! Checks of the recursion, inversion and transformation identities
//! satisfied by the transition coefficients.

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{random_rational, AlgError, Field, RationalExpr, SpecField, Var};
use crate::qseries::catalan_ballot;
use crate::report::Report;

use super::coeffs::*;
use super::matrix::{bressoud_m, build_matrices, build_matrix_shape, krattenthaler_n, MatrixKind};
use super::TransError;

/// Evaluates `expr` at `trials` random rational points `(a^2, c^2, t, s)` and
/// reports whether it vanished at all of them. Points where the evaluation
/// hits a pole are redrawn.
pub fn vanishes_at_random_points(
    trials: usize,
    seed: u64,
    expr: impl Fn(&TransParams<BigRational>, &BigRational) -> Result<BigRational, AlgError>,
) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut redraws = 0;
    while done < trials {
        let p = TransParams::new(random_rational(&mut rng), random_rational(&mut rng), random_rational(&mut rng));
        let s = random_rational(&mut rng);
        match expr(&p, &s) {
            Ok(v) if v.is_zero() => done += 1,
            Ok(_) => return false,
            Err(_) => {
                redraws += 1;
                assert!(redraws < 1000, "too many poles while sampling");
            }
        }
    }
    true
}

fn err_text(e: &TransError) -> String {
    format!("error: {e}")
}

/// The deformed Catalan recursion for all even `(i, j)` with `i <= j < size`,
/// evaluated under `spec`.
pub fn verify_catalan(size: usize, spec: &SpecField) -> Result<Report, TransError> {
    let mut rep = Report::new(format!("Catalan recursion, size {size}, spec {}", spec.name()));
    let c = build_matrix_shape(MatrixKind::C, size, size, size as i64 - 1, spec)?;
    let p = TransParams::generic();
    let mut f = Vec::with_capacity(size + 1);
    for i in 0..=size {
        f.push(spec.apply(&f_def(&p, &p.tp(i as i64 + 1)?)?)?);
    }
    let mut bad = Vec::new();
    if !c.get(0, 0).is_one() {
        bad.push("C_00 != 1".to_string());
    }
    for i in 1..size {
        if c.get(i - 1, i - 1) != c.get(i, i) {
            bad.push(format!("C_{},{} != C_{i},{i}", i - 1, i - 1));
        }
    }
    rep.check("C_00 = 1 and C_(i-1,i-1) = C_ii", bad.is_empty(), bad.join("; "));
    let mut bad = Vec::new();
    for j in (2..size).step_by(2) {
        if f[0].mul(&c.get(1, j - 1)) != c.get(0, j) {
            bad.push(format!("j={j}"));
        }
    }
    rep.check("f(t) C_(1,j-1) = C_(0,j)", bad.is_empty(), bad.join("; "));
    let mut bad = Vec::new();
    let mut count = 0;
    for j in 2..size {
        for i in 1..j {
            if (i + j) % 2 != 0 {
                continue;
            }
            count += 1;
            let lhs = c.get(i - 1, j - 1).add(&f[i].mul(&c.get(i + 1, j - 1)));
            if lhs != c.get(i, j) {
                bad.push(format!("(i,j)=({i},{j})"));
            }
        }
    }
    rep.check(
        "C_(i-1,j-1) + f(t^{i+1}) C_(i+1,j-1) = C_(i,j)",
        bad.is_empty(),
        if bad.is_empty() { format!("{count} entries") } else { bad.join("; ") },
    );
    let mut odd = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if (i > j || (i + j) % 2 == 1) && !c.get(i, j).is_zero() {
                odd.push(format!("({i},{j})"));
            }
        }
    }
    rep.check("upper triangular and even", odd.is_empty(), odd.join("; "));
    match spec.name() {
        "schur-c" => {
            let ones = f.iter().all(|v| v.is_one());
            rep.check("f(t^{i+1}) = 1 for all i", ones, "");
        }
        "schur-d" => {
            let ok = f[0] == RationalExpr::from_int(2) && f[1..].iter().all(|v| v.is_one());
            rep.check("f(t) = 2 and f(t^{i+1}) = 1 for i > 0", ok, "");
        }
        _ => {}
    }
    Ok(rep)
}

/// `C(s, j) + F(s, -1) C(st^2, j-1) = C(st, j)`: exactly at `s = t^{m+1}` for
/// `-1 <= m < size`, and with `s` and `m` independent symbols for `j <= 3`.
pub fn verify_c_three_term(size: usize) -> Result<Report, TransError> {
    let mut rep = Report::new("three-term relation for C(s, j)");
    let p = TransParams::generic();
    let mut bad = Vec::new();
    for m in -1..size as i64 {
        let s = p.s_of(m)?;
        let fm = f_shift(&p, &s, -1)?;
        for j in 1..=(size / 2) as u32 {
            let lhs = c_coeff(&p, m, j)?.add(&fm.mul(&c_coeff(&p, m + 2, j - 1)?));
            if lhs != c_coeff(&p, m + 1, j)? {
                bad.push(format!("m={m}, j={j}"));
            }
        }
    }
    rep.check("integer m, s = t^{m+1}", bad.is_empty(), bad.join("; "));
    let s = RationalExpr::var(Var::S);
    let m = RationalExpr::var(Var::U);
    let one = RationalExpr::one();
    let t = &p.t;
    let mut bad = Vec::new();
    for j in 1..=3u32.min(size as u32) {
        let lhs = c_at(&p, &s, &m, j)?.add(&f_shift(&p, &s, -1)?.mul(&c_at(&p, &s.mul(&t.pow(2)), &m.add(&one).add(&one), j - 1)?));
        let rhs = c_at(&p, &s.mul(t), &m.add(&one), j)?;
        if lhs != rhs {
            bad.push(format!("j={j}"));
        }
    }
    rep.check("symbolic s and m", bad.is_empty(), bad.join("; "));
    let mut bad = Vec::new();
    for j in 0..=size as u32 {
        let v = c_coeff(&p, -1, j)?;
        if v != RationalExpr::from_int(i64::from(j == 0)) {
            bad.push(format!("C(1,{j}) = {v}"));
        }
    }
    rep.check("C(1, j) = delta_(j,0)", bad.is_empty(), bad.join("; "));
    Ok(rep)
}

/// Both four-term relations: exactly at `s = t^{m+1}`, `0 <= m <= max`,
/// and at `trials` random points with `s` free.
pub fn verify_four_term(max: u32, trials: usize, seed: u64) -> Result<Report, TransError> {
    let mut rep = Report::new(format!("four-term relations, indices <= {max}"));
    let p = TransParams::generic();
    let mut bad_b = Vec::new();
    let mut bad_bt = Vec::new();
    for m in 0..=max as i64 {
        let s = p.s_of(m)?;
        let st = s.mul(&p.t);
        for i in 1..=max {
            let lhs = b_at(&p, &s, i)?.add(&f_shift(&p, &s, -1)?.mul(&b_at(&p, &st.mul(&p.t), i - 1)?));
            if lhs != b_at(&p, &st, i)?.add(&b_at(&p, &st, i - 1)?) {
                bad_b.push(format!("m={m}, i={i}"));
            }
            let lhs = btilde_at(&p, &s, i)?.add(&f_shift(&p, &s, 2 - 2 * i as i64)?.mul(&btilde_at(&p, &s, i - 1)?));
            let rhs = btilde_at(&p, &s.try_div(&p.t)?, i)?.add(&btilde_at(&p, &st, i - 1)?);
            if lhs != rhs {
                bad_bt.push(format!("m={m}, i={i}"));
            }
        }
    }
    rep.check("B four-term, s = t^{m+1}", bad_b.is_empty(), bad_b.join("; "));
    rep.check("B~ four-term, s = t^{m+1}", bad_bt.is_empty(), bad_bt.join("; "));
    let mut bad_b = Vec::new();
    let mut bad_bt = Vec::new();
    for i in 1..=max {
        let ok = vanishes_at_random_points(trials, seed ^ i as u64, |p, s| {
            let st = s.times(&p.t);
            let lhs = b_at(p, s, i)?.plus(&f_shift(p, s, -1)?.times(&b_at(p, &st.times(&p.t), i - 1)?));
            Ok(lhs.minus(&b_at(p, &st, i)?).minus(&b_at(p, &st, i - 1)?))
        });
        if !ok {
            bad_b.push(format!("i={i}"));
        }
        let ok = vanishes_at_random_points(trials, seed ^ (i as u64) << 8, |p, s| {
            let lhs = btilde_at(p, s, i)?.plus(&f_shift(p, s, 2 - 2 * i as i64)?.times(&btilde_at(p, s, i - 1)?));
            let rhs = btilde_at(p, &s.quot(&p.t)?, i)?.plus(&btilde_at(p, &s.times(&p.t), i - 1)?);
            Ok(lhs.minus(&rhs))
        });
        if !ok {
            bad_bt.push(format!("i={i}"));
        }
    }
    rep.check(format!("B four-term, free s, {trials} random points"), bad_b.is_empty(), bad_b.join("; "));
    rep.check(format!("B~ four-term, free s, {trials} random points"), bad_bt.is_empty(), bad_bt.join("; "));
    Ok(rep)
}

/// `B_alt = B` and `B~_alt = B~` for `j <= max`, exactly at `s = t^{m+1}`
/// and at random points with `s` free.
pub fn verify_sears(max: u32, trials: usize, seed: u64) -> Result<Report, TransError> {
    let mut rep = Report::new(format!("Sears transformation, j <= {max}"));
    let p = TransParams::generic();
    let mut bad = Vec::new();
    for m in [-1i64, 0, 1, 3] {
        for j in 0..=max {
            if b_alt(&p, m, j)? != b_coeff(&p, m, j)? {
                bad.push(format!("B m={m}, j={j}"));
            }
            if m >= 0 && btilde_alt(&p, m, j)? != btilde_coeff(&p, m, j)? {
                bad.push(format!("B~ m={m}, j={j}"));
            }
        }
    }
    rep.check("exact at s = t^{m+1}", bad.is_empty(), bad.join("; "));
    let mut bad = Vec::new();
    for j in 0..=max {
        if !vanishes_at_random_points(trials, seed ^ j as u64, |p, s| Ok(b_alt_at(p, s, j)?.minus(&b_at(p, s, j)?))) {
            bad.push(format!("B j={j}"));
        }
        if !vanishes_at_random_points(trials, seed ^ (j as u64) << 8, |p, s| {
            Ok(btilde_alt_at(p, s, j)?.minus(&btilde_at(p, s, j)?))
        }) {
            bad.push(format!("B~ j={j}"));
        }
    }
    rep.check(format!("free s, {trials} random points"), bad.is_empty(), bad.join("; "));
    Ok(rep)
}

/// Both products of the `B` and `B~` matrices at `s = t^{size-1}`.
pub fn verify_inversion(size: usize) -> Result<Report, TransError> {
    let mut rep = Report::new(format!("mutual inversion of B and B~, size {size}"));
    let spec = SpecField::generic();
    let b = build_matrices(MatrixKind::B, size, &spec)?;
    let bt = build_matrices(MatrixKind::Btilde, size, &spec)?;
    rep.check("B B~ = I", b.mul(&bt).is_identity(), "");
    rep.check("B~ B = I", bt.mul(&b).is_identity(), "");
    Ok(rep)
}

/// The composition law `M(x, y) M(y, z) = M(x, z)` of Bressoud's matrix,
/// `M(x, y)^{-1} = M(y, x)`, and `N(x, y) N(y, x) = I` for Krattenthaler's,
/// at `trials` seeded rational draws of `(u, v, x, y, z, q)`.
pub fn verify_bressoud(size: usize, trials: usize, seed: u64) -> Result<Report, TransError> {
    let mut rep = Report::new(format!("Bressoud and Krattenthaler matrices, size {size}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut redraws = 0;
    while done < trials {
        let r: Vec<BigRational> = (0..6).map(|_| random_rational(&mut rng)).collect();
        let (u, v, x, y, z, q) = (&r[0], &r[1], &r[2], &r[3], &r[4], &r[5]);
        let mats = (|| -> Result<_, TransError> {
            Ok((
                bressoud_m(u, v, x, y, q, size)?,
                bressoud_m(u, v, y, z, q, size)?,
                bressoud_m(u, v, x, z, q, size)?,
                bressoud_m(u, v, y, x, q, size)?,
                krattenthaler_n(x, y, q, size)?,
                krattenthaler_n(y, x, q, size)?,
            ))
        })();
        let Ok((mxy, myz, mxz, myx, nxy, nyx)) = mats else {
            redraws += 1;
            if redraws > 100 {
                return Err(TransError::Degenerate("too many poles while sampling".into()));
            }
            continue;
        };
        let point = format!("u={u} v={v} x={x} y={y} z={z} q={q}");
        rep.check(format!("draw {done}: M(x,y) M(y,z) = M(x,z)"), mxy.mul(&myz).differences(&mxz).is_empty(), point.clone());
        rep.check(format!("draw {done}: M(x,y) M(y,x) = I"), mxy.mul(&myx).is_identity(), point.clone());
        rep.check(format!("draw {done}: N(x,y) N(y,x) = N(y,x) N(x,y) = I"), nxy.mul(&nyx).is_identity() && nyx.mul(&nxy).is_identity(), point);
        done += 1;
    }
    Ok(rep)
}

/// `B(1, j)`, `B~(1, i) - B~(t^2, i-1)` and `C(1, j)`.
pub fn verify_special_values(max: u32) -> Result<Report, TransError> {
    let mut rep = Report::new("special values at s = 1");
    let p = TransParams::generic();
    let mut bad = Vec::new();
    for j in 0..=max {
        let want = match j {
            0 => 1,
            1 => -1,
            _ => 0,
        };
        let v = b_coeff(&p, -1, j)?;
        if v != RationalExpr::from_int(want) {
            bad.push(format!("B(1,{j}) = {v}"));
        }
    }
    rep.check("B(1, j) = 1, -1, 0, ...", bad.is_empty(), bad.join("; "));
    let mut bad = Vec::new();
    for i in 2..=max {
        if btilde_coeff(&p, -1, i)? != btilde_coeff(&p, 1, i - 1)? {
            bad.push(format!("i={i}"));
        }
    }
    rep.check("B~(1, i) = B~(t^2, i-1), i >= 2", bad.is_empty(), bad.join("; "));
    let mut bad = Vec::new();
    for j in 0..=max {
        let v = c_coeff(&p, -1, j)?;
        if v != RationalExpr::from_int(i64::from(j == 0)) {
            bad.push(format!("C(1,{j}) = {v}"));
        }
    }
    rep.check("C(1, j) = delta_(j,0)", bad.is_empty(), bad.join("; "));
    Ok(rep)
}

/// Path-sum solution against the definition, and path counts against
/// ballot numbers.
pub fn verify_paths(max_formula: usize, max_count: usize) -> Result<Report, TransError> {
    let mut rep = Report::new("lattice-path solution");
    let p = TransParams::generic();
    let mut bad = Vec::new();
    for r in 0..=max_formula as i64 {
        for i in 0..=max_formula {
            if c_via_paths(&p, r, i)? != c_coeff(&p, r, i as u32)? {
                bad.push(format!("r={r}, i={i}"));
            }
        }
    }
    rep.check(format!("path sum = C(t^(r+1), i), r, i <= {max_formula}"), bad.is_empty(), bad.join("; "));
    let mut bad = Vec::new();
    for r in 0..=max_count {
        for i in 0..=max_count {
            let n = enumerate_paths(r as i64, i).len();
            if num_bigint::BigInt::from(n) != catalan_ballot(r as u64, i as u64) {
                bad.push(format!("|P[{r},{i}]| = {n}"));
            }
        }
    }
    rep.check(format!("|P[r,i]| = ballot number, r, i <= {max_count}"), bad.is_empty(), bad.join("; "));
    Ok(rep)
}

/// The recursion suite: Catalan recursion under `spec` and the three-term
/// relation for `C`.
pub fn verify_recursions(size: usize, spec: &SpecField) -> Report {
    let mut rep = Report::new(format!("recursions, size {size}, spec {}", spec.name()));
    let parts: [(&str, Result<Report, TransError>); 2] = [
        ("catalan", verify_catalan(size, spec)),
        ("three-term", verify_c_three_term(size)),
    ];
    for (name, r) in parts {
        match r {
            Ok(r) => {
                for c in r.checks {
                    rep.record(format!("{}: {}", r.title, c.name), c.verdict, c.detail);
                }
            }
            Err(e) => rep.check(name, false, err_text(&e)),
        }
    }
    rep
}
