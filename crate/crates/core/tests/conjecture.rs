use mck::conjecture::*;
use mck::exactalg::Field;
use mck::report::Verdict;
use mck::symfunc::{LaurentPoly, Partition};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = BigRational;

fn q(a: i64, b: i64) -> Q {
    Q::new(a.into(), b.into())
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn points(seed: u64, k: usize) -> Vec<(Q, Q)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..k).map(|_| random_point(&mut rng, 20)).collect()
}

fn spectral(seed: u64, n: usize) -> Vec<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| mck::koornwinder::small_rational(&mut rng, 30)).collect()
}

fn pass(r: &mck::report::Report) {
    assert_eq!(r.verdict(), Verdict::Pass, "{r}");
}

fn theta(n: usize, cells: &[(usize, usize, u32)]) -> Vec<Vec<u32>> {
    let mut m = vec![vec![0; n]; n];
    for &(i, j, v) in cells {
        m[i][j] = v;
    }
    m
}

#[test]
fn phi_a_coefficient_examples() {
    let (s1, s2, qq, t) = (q(3, 5), q(-7, 2), q(2, 9), q(4, 11));
    assert!(phi_a_coeff(&theta(1, &[]), &[s1.clone()], &qq, &t).unwrap().is_one());
    assert!(phi_a_coeff(&theta(3, &[]), &[s1.clone(), s2.clone(), q(5, 3)], &qq, &t).unwrap().is_one());
    let r = s2.clone() / s1.clone();
    let one = Q::one();
    let want = (one.clone() - t.clone()) * (one.clone() - t.clone() * r.clone()) * (qq.clone() / t.clone())
        / ((one.clone() - qq.clone()) * (one - qq.clone() * r));
    assert_eq!(phi_a_coeff(&theta(2, &[(0, 1, 1)]), &[s1.clone(), s2.clone()], &qq, &t).unwrap(), want);
    assert!(phi_a_coeff(&theta(2, &[(1, 0, 1)]), &[s1, s2], &qq, &t).is_err());
}

#[test]
fn psi_c2_coefficient_examples() {
    let (s1, s2, qq, t) = (q(3, 5), q(-7, 2), q(2, 9), q(4, 11));
    assert!(psi_c2_coeff(0, 0, 0, 0, &s1, &s2, &qq, &t).unwrap().is_one());
    let r = s2.clone() / s1.clone();
    let one = Q::one();
    let want = (one.clone() - t.clone()) * (one.clone() - t.clone() * r.clone()) * (qq.clone() / t.clone())
        / ((one.clone() - qq.clone()) * (one - qq.clone() * r));
    assert_eq!(psi_c2_coeff(1, 0, 0, 0, &s1, &s2, &qq, &t).unwrap(), want);
}

#[test]
fn macdonald_a_oracle_small_cases() {
    let (qq, t) = (q(2, 9), q(4, 11));
    let one = Q::one();
    let p1 = oracle_p_a(&p("1"), 3, &qq, &t).unwrap();
    assert_eq!(p1, monomial_a::<Q>(&p("1"), 3).unwrap());
    let p2 = oracle_p_a(&p("2"), 2, &qq, &t).unwrap();
    let c = (one.clone() + qq.clone()) * (one.clone() - t.clone()) / (one - qq.clone() * t.clone());
    let want = monomial_a::<Q>(&p("2"), 2).unwrap().plus(&monomial_a::<Q>(&p("1,1"), 2).unwrap().scale(&c));
    assert_eq!(p2, want);
    let e = eigenvalue_a(&p("2"), 2, &qq, &t).unwrap();
    assert_eq!(apply_macdonald_a(&p2, &qq, &t).unwrap(), p2.scale(&e));
    let one_var = LaurentPoly::constant(2, Q::one());
    assert_eq!(apply_macdonald_a(&one_var, &qq, &t).unwrap(), one_var.scale(&(Q::one() + t)));
}

#[test]
fn phi_a_terminates_at_partitions() {
    for (k, (uq, ut)) in points(11, 2).into_iter().enumerate() {
        let (qq, t) = (uq.clone() * uq, ut.clone() * ut);
        for (n, l) in [(1, ""), (2, "1"), (2, "2,1"), (3, "1,1"), (3, "2,1"), (4, "1,1"), (4, "2,1,1")] {
            let lam = p(l);
            let order = lam.weight() * (n as u32 - 1) + 1;
            pass(&phi_a_eigencheck(n, &lam, &qq, &t, order).unwrap());
            if k == 0 {
                let r = phi_a_eigencheck(n, &lam, &qq, &t, 0).unwrap();
                if lam.weight() > 0 && n > 1 {
                    assert_eq!(r.verdict(), Verdict::Inconclusive, "{r}");
                }
            }
        }
    }
}

#[test]
fn c2_conjecture_at_partitions() {
    for (uq, ut) in points(12, 3) {
        for l in ["", "1", "1,1", "2", "2,1", "2,2"] {
            let lam = p(l);
            pass(&verify_c2_conjecture(&lam, &uq, &ut, 4 * lam.weight() + 2).unwrap());
        }
    }
}

#[test]
fn c2_series_is_the_eigenfunction() {
    for (k, (uq, ut)) in points(13, 3).into_iter().enumerate() {
        let s = spectral(100 + k as u64, 2);
        pass(&compare_psi_c2_with_solver(&s[0], &s[1], &uq, &ut, 6).unwrap());
    }
}

#[test]
fn c3_rectangular_conjecture() {
    let (uq, ut) = points(14, 1).remove(0);
    for l3 in 0..=2 {
        pass(&verify_c3_rect(l3, &uq, &ut, 9 * l3 + 2).unwrap());
    }
    let r = verify_c3_rect(1, &uq, &ut, 4).unwrap();
    assert_eq!(r.verdict(), Verdict::Inconclusive, "{r}");
}

#[test]
fn folded_a1_is_c1() {
    for (k, (uq, ut)) in points(15, 3).into_iter().enumerate() {
        let s = spectral(200 + k as u64, 1);
        pass(&verify_folded_a(&s, &uq, &ut, 8).unwrap());
    }
}

#[test]
fn folded_decompositions() {
    for (k, (uq, ut)) in points(16, 2).into_iter().enumerate() {
        pass(&verify_folded_a(&spectral(300 + k as u64, 2), &uq, &ut, 5).unwrap());
        pass(&verify_folded_a(&spectral(400 + k as u64, 3), &uq, &ut, 3).unwrap());
    }
}

#[test]
fn mismatches_are_reported() {
    let (uq, ut) = points(17, 1).remove(0);
    let pp = CParams::b_equals_t(uq.clone() * uq.clone(), ut.clone() * ut.clone());
    let s = spectral(500, 2);
    let phi = phi_c_series(&s, &pp, 4).unwrap();
    let mut other = phi.clone();
    other.add_term(vec![1, 1], Q::one());
    assert_eq!(compare_series(&phi, &other).0, Verdict::Fail);
    let lam = p("1");
    let mut poly = mck::koornwinder::oracle_p(&lam, 2, &mck::koornwinder::KoornwinderParams::cc(ut.clone(), uq.clone(), ut.clone() * ut)).unwrap().to_laurent();
    poly.add_term(vec![0, 1], Q::one());
    let (s1, s2) = (pp.t.clone() * pp.t.clone() * pp.q.clone(), pp.t.clone());
    let series = psi_c2_series(&s1, &s2, &pp.q, &pp.t, 6).unwrap();
    assert_eq!(compare_with_polynomial(&series, &lam, &poly.minus(&LaurentPoly::monomial(vec![0, 1], Q::one()))).0, Verdict::Pass);
    assert_eq!(compare_with_polynomial(&series, &lam, &poly).0, Verdict::Fail);
}

#[test]
fn solver_is_normalized() {
    let (uq, ut) = points(18, 1).remove(0);
    let pp = CParams::b_equals_t(uq.clone() * uq, ut.clone() * ut);
    for n in 1..=3 {
        let phi = phi_c_series(&spectral(600 + n as u64, n), &pp, 3).unwrap();
        assert!(phi.coeff(&vec![0; n]).is_one());
        assert!(phi.coeffs.keys().all(|k| height(k) <= 3));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn keys_round_trip(key in prop::collection::vec(0u32..6, 1..4)) {
        let n = key.len();
        let a = RootKind::C.exponents(n, &key);
        prop_assert_eq!(RootKind::C.key_of(&a), Some(key.clone()));
        let ka = &key[..n - 1];
        let a = RootKind::A.exponents(n, ka);
        prop_assert_eq!(a.iter().sum::<i32>(), 0);
        prop_assert_eq!(RootKind::A.key_of(&a), Some(ka.to_vec()));
    }

    #[test]
    fn geometric_inverts_one_minus(k in prop::collection::vec(0u32..3, 2), c in 1i64..9, order in 1u32..8) {
        prop_assume!(height(&k) > 0);
        let c = q(c, 7);
        let g = TruncSeries::geometric(RootKind::C, 2, order, &c, &k);
        let f = TruncSeries::one_minus(RootKind::C, 2, order, &c, &k);
        prop_assert_eq!(g.times(&f), TruncSeries::one(RootKind::C, 2, order));
    }
}
