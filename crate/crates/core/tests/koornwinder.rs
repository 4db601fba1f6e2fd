use std::time::Instant;

use mck::exactalg::{Field, RationalExpr, SpecField};
use mck::koornwinder::*;
use mck::symfunc::{elementary, interpolation, monomial_sym, LaurentSym, Partition};
use mck::transition::{Family, TransParams};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = BigRational;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn q(a: i64, b: i64) -> Q {
    Q::new(a.into(), b.into())
}

fn draws(seed: u64, k: usize) -> Vec<KoornwinderParams<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..k).map(|_| KoornwinderParams::random(&mut rng, 50)).collect()
}

fn type_c(p: &KoornwinderParams<Q>) -> KoornwinderParams<Q> {
    KoornwinderParams::new(p.a.clone(), p.a.negate(), p.c.clone(), p.c.negate(), p.q.clone(), p.t.clone())
}

fn trans(p: &KoornwinderParams<Q>) -> TransParams<Q> {
    TransParams::new(p.a.times(&p.a), p.c.times(&p.c), p.t.clone())
}

#[test]
fn operator_basics() {
    let k = &draws(1, 1)[0];
    let one = LaurentSym::constant(2, Q::one());
    assert!(apply_d_scaled(&one, k).unwrap().is_zero());
    assert!(eigenvalue_scaled(&p(""), k, 3).unwrap().is_zero());
    let al2 = k.alpha_sq().unwrap();
    let e1 = eigenvalue_scaled(&p("1"), k, 1).unwrap();
    assert_eq!(e1, al2.times(&k.q.minus(&Q::one())).plus(&k.q.inverse().unwrap().minus(&Q::one())));
    let m0 = monomial_sym::<Q>(&p(""), 2).unwrap();
    let m1 = monomial_sym::<Q>(&p("1"), 2).unwrap();
    let sum = apply_d_scaled(&m0.plus(&m1), k).unwrap();
    assert_eq!(sum, apply_d_scaled(&m0, k).unwrap().plus(&apply_d_scaled(&m1, k).unwrap()));
}

#[test]
fn askey_wilson_degree_one() {
    for k in draws(2, 3) {
        let pol = oracle_p(&p("1"), 1, &k).unwrap();
        assert!(pol.coeff(&p("1")).is_one());
        assert!(eigen_residual(&pol, &p("1"), &k).unwrap().is_zero());
        let d = apply_d_scaled(&monomial_sym(&p("1"), 1).unwrap(), &k).unwrap();
        assert_eq!(d.coeff(&p("1")), eigenvalue_scaled(&p("1"), &k, 1).unwrap());
    }
}

#[test]
fn eigenvalues_of_columns_are_distinct() {
    for k in draws(3, 5) {
        let e: Vec<Q> = (0..=3).map(|r| eigenvalue_scaled(&Partition::column(r), &k, 3).unwrap()).collect();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                assert_ne!(e[i], e[j]);
            }
        }
    }
}

#[test]
fn schur_point_oracle() {
    let (h, f) = (q(2, 3), q(4, 9));
    let k = KoornwinderParams::new(h.clone(), h.negate(), f.clone(), f.negate(), f.clone(), f.clone());
    let pol = oracle_p(&p("1,1"), 2, &k).unwrap();
    let mut want = monomial_sym::<Q>(&p("1,1"), 2).unwrap();
    want.add_term(p(""), Q::one());
    assert_eq!(pol, want);
}

#[test]
fn fourfold_matches_oracle() {
    let start = Instant::now();
    for k in draws(7, 5) {
        for n in 1..=3 {
            for r in 0..=n {
                let lam = Partition::column(r);
                let four = p_fourfold(n, r, &k).unwrap();
                let oracle = oracle_p(&lam, n, &k).unwrap();
                assert_eq!(four, oracle, "n={n} r={r}");
                assert!(four.coeff(&lam).is_one());
                assert!(eigen_residual(&four, &lam, &k).unwrap().is_zero());
            }
        }
    }
    eprintln!("fourfold vs oracle: {:?}", start.elapsed());
}

#[test]
fn type_c_routes_agree() {
    for k in draws(8, 5) {
        let kc = type_c(&k);
        let tp = trans(&kc);
        for n in 1..=3 {
            for r in 0..=n {
                let four = p_fourfold(n, r, &kc).unwrap();
                assert_eq!(four, p_twofold(n, r, &tp).unwrap(), "twofold n={n} r={r}");
                assert_eq!(four, p_via_e(n, r, &tp).unwrap(), "B route n={n} r={r}");
                assert_eq!(four, p_via_c(n, r, &tp).unwrap(), "C route n={n} r={r}");
                assert_eq!(four, oracle_p(&Partition::column(r), n, &kc).unwrap(), "oracle n={n} r={r}");
                for (l, c) in &four.coeffs {
                    if (r - l.len()) % 2 == 1 {
                        assert!(c.is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn odd_coefficients_vanish_at_type_c() {
    let kc = type_c(&draws(9, 1)[0]);
    let s = kc.t.pow_i(2).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let v = c_o(&kc, &s, i, j).unwrap();
            assert_eq!(v.is_one(), i == 0 && j == 0);
            assert_eq!(v.is_zero(), i + j > 0);
        }
    }
}

#[test]
fn symbolic_routes() {
    let tp = TransParams::generic();
    for n in 1..=4 {
        for r in 0..=n {
            assert_eq!(p_via_e(n, r, &tp).unwrap(), p_via_c(n, r, &tp).unwrap(), "n={n} r={r}");
            assert_eq!(e_from_p(n, r, &tp).unwrap(), elementary::<RationalExpr>(n, r).unwrap(), "n={n} r={r}");
        }
    }
}

#[test]
fn schur_c_rows() {
    let rows = [vec![1, 1, 2, 5, 14], vec![1, 2, 5, 14, 42], vec![1, 3, 9, 28], vec![1, 4, 14, 48]];
    let n = 4;
    for (i, row) in rows.iter().enumerate() {
        let r = n - i;
        let pol = p_via_c_spec(n, r, &SpecField::schur_c()).unwrap();
        for (j, want) in row.iter().take(r / 2 + 1).enumerate() {
            assert_eq!(pol.coeff(&Partition::column(r - 2 * j)), RationalExpr::from_int(*want), "r={r} j={j}");
        }
        assert_eq!(pol, schur_one_column(Family::C, n, r).unwrap());
        assert_eq!(p_via_e_spec(n, r, &SpecField::schur_d()).unwrap(), schur_one_column(Family::D, n, r).unwrap());
    }
}

#[test]
fn schur_and_kostka() {
    let s = schur_one_column::<Q>(Family::C, 2, 2).unwrap();
    let mut want = monomial_sym::<Q>(&p("1,1"), 2).unwrap();
    want.add_term(p(""), Q::one());
    assert_eq!(s, want);
    for n in 1..=4 {
        for r in 0..=n {
            assert_eq!(schur_one_column::<RationalExpr>(Family::D, n, r).unwrap(), elementary(n, r).unwrap());
            for fam in [Family::C, Family::D] {
                assert_eq!(kostka_expansion(fam, n, r).unwrap(), schur_one_column(fam, n, r).unwrap(), "{fam:?} n={n} r={r}");
            }
        }
    }
}

#[test]
fn interpolation_round_trips() {
    let start = Instant::now();
    for k in draws(10, 3) {
        let n = 3;
        for r in 0..=n {
            let tr = interp_transitions(n, r, &k).unwrap();
            let direct = interpolation(n, r, &k.a, &k.t).unwrap();
            assert_eq!(tr.p_from_interp, p_fourfold(n, r, &k).unwrap(), "r={r}");
            assert_eq!(tr.interp_from_p, direct, "r={r}");
            assert_eq!(tr.interp_from_e, direct, "r={r}");
        }
    }
    eprintln!("interpolation round trips: {:?}", start.elapsed());
}
