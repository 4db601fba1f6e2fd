use mck::exactalg::{Field, RationalExpr, Var};
use mck::qseries::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn rat() -> impl Strategy<Value = Q> {
    ((-9i64..=9).prop_filter("nonzero", |v| *v != 0), 1i64..=9).prop_map(|(n, d)| q(n, d))
}

/// Number of lattice words in `U`, `D` with `m + 2j` letters, `j` of them
/// `D`, never going below zero.
fn ballot_by_counting(m: u64, j: u64) -> BigInt {
    let len = (m + 2 * j) as usize;
    // ways[h][d] = words reaching height h after using d down-steps.
    let mut ways = vec![vec![BigInt::from(0); j as usize + 1]; len + 2];
    ways[0][0] = BigInt::from(1);
    for step in 0..len {
        let mut next = vec![vec![BigInt::from(0); j as usize + 1]; len + 2];
        for h in 0..=step {
            for d in 0..=j as usize {
                let w = ways[h][d].clone();
                if w == BigInt::from(0) {
                    continue;
                }
                next[h + 1][d] += &w;
                if h > 0 && d < j as usize {
                    next[h - 1][d + 1] += &w;
                }
            }
        }
        ways = next;
    }
    ways[m as usize][j as usize].clone()
}

proptest! {
    #[test]
    fn pochhammer_is_a_product(z in rat(), base in rat(), k in 0i64..7) {
        let mut want = Q::one();
        for i in 0..k {
            want = want.times(&z.times(&base.pow_u(i as u32)).one_minus());
        }
        prop_assert_eq!(qpoch(&z, &base, k).unwrap(), want.clone());
        if !want.is_zero() {
            prop_assert_eq!(qpoch_quot(Q::one(), &z, &base, k).unwrap(), want.inverse().unwrap());
        }
    }

    #[test]
    fn negative_length(z in rat(), base in rat(), k in 1i64..6) {
        // (z; q)_{-k} = 1 / (z q^{-k}; q)_k
        let shifted = z.times(&base.pow_i(-k).unwrap());
        if let Ok(v) = qpoch(&z, &base, -k) {
            prop_assert_eq!(v.times(&qpoch(&shifted, &base, k).unwrap()), Q::one());
        } else {
            prop_assert!(qpoch(&shifted, &base, k).unwrap().is_zero());
        }
    }

    #[test]
    fn pochhammer_splits(z in rat(), base in rat(), k in 0i64..5, l in 0i64..5) {
        let zk = z.times(&base.pow_u(k as u32));
        prop_assert_eq!(qpoch(&z, &base, k + l).unwrap(), qpoch(&z, &base, k).unwrap().times(&qpoch(&zk, &base, l).unwrap()));
    }
}

#[test]
fn q_binomial_pascal_rule() {
    let t = RationalExpr::var(Var::T);
    for m in 1..=8i64 {
        for j in 1..m {
            let lhs = qbinom(m, j, &t).unwrap();
            let rhs = qbinom(m - 1, j - 1, &t).unwrap().add(&t.pow(j as u32).mul(&qbinom(m - 1, j, &t).unwrap()));
            assert_eq!(lhs, rhs, "m={m} j={j}");
            assert!(lhs.is_nonneg_integral_poly());
        }
    }
    assert!(qbinom_or_zero(3, 5, &t).unwrap().is_zero());
    assert!(qbinom_or_zero(3, -1, &t).unwrap().is_zero());
}

#[test]
fn ballot_numbers() {
    for m in 0..=7u64 {
        for j in 0..=7u64 {
            assert_eq!(catalan_ballot(m, j), ballot_by_counting(m, j), "m={m} j={j}");
        }
    }
    let t = RationalExpr::var(Var::T);
    let one = [Q::one(), Q::one(), Q::one(), Q::one(), Q::one(), Q::one(), Q::one(), Q::one()];
    for m in 0..=5i64 {
        for j in 0..=5i64 {
            let v = qballot(m, j, &t).unwrap();
            assert!(v.is_polynomial(), "m={m} j={j}");
            assert_eq!(v.eval(&one).unwrap(), Q::from_integer(catalan_ballot(m as u64, j as u64)));
        }
    }
}

#[test]
fn q_chu_vandermonde() {
    // 2phi1(q^-n, b; c; q, q) = (c/b; q)_n / (c; q)_n * b^n
    let (b, c, base) = (q(3, 7), q(-5, 2), q(2, 9));
    for n in 0..=6u32 {
        let spec = PhiSpec {
            upper: vec![base.pow_i(-(n as i64)).unwrap(), b.clone()],
            lower: vec![c.clone()],
            base: base.clone(),
            argument: base.clone(),
            terms: n,
        };
        let want = qpoch(&c.quot(&b).unwrap(), &base, n as i64)
            .unwrap()
            .quot(&qpoch(&c, &base, n as i64).unwrap())
            .unwrap()
            .times(&b.pow_u(n));
        assert_eq!(phi_sum(&spec).unwrap(), want, "n={n}");
    }
}

#[test]
fn q_integers() {
    let t = RationalExpr::var(Var::T);
    assert_eq!(qint(3, &t).unwrap(), "1 + t + t^2".parse().unwrap());
    assert_eq!(qfact(3, &t).unwrap(), "(1 + t)*(1 + t + t^2)".parse().unwrap());
    assert_eq!(gen_binom(&q(7, 2), 2), q(35, 8));
}
