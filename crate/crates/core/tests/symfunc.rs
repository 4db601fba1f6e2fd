use mck::exactalg::{parse_expr, Field, RationalExpr};
use mck::symfunc::*;
use num_rational::BigRational;
use proptest::prelude::*;

type Q = BigRational;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn q(v: i64) -> Q {
    Q::from_i64(v)
}

#[test]
fn monomial_examples() {
    let m0 = monomial_sym::<Q>(&p(""), 3).unwrap();
    assert_eq!(m0.to_laurent(), LaurentPoly::constant(3, q(1)));
    let m1 = monomial_sym::<Q>(&p("1"), 1).unwrap().to_laurent();
    assert_eq!(m1, LaurentPoly::var(1, 0, false).plus(&LaurentPoly::var(1, 0, true)));
    let m11 = monomial_sym::<Q>(&p("1,1"), 2).unwrap().to_laurent();
    assert_eq!(m11.len(), 4);
    assert!(m11.terms.values().all(|c| c.is_one()));
    assert_eq!(orbit(&p("2,1"), 3).len(), 24);
    assert_eq!(orbit(&p("3,2,1"), 3).len(), 48);
    assert_eq!(orbit(&p("1,1"), 2).len(), 4);
    assert!(monomial_sym::<Q>(&p("1,1,1"), 2).is_err());
}

#[test]
fn elementary_examples() {
    assert_eq!(elementary::<Q>(3, 0).unwrap(), LaurentSym::constant(3, q(1)));
    let e2 = elementary::<Q>(2, 2).unwrap();
    let mut want = monomial_sym::<Q>(&p("1,1"), 2).unwrap();
    want.add_term(p(""), q(2));
    assert_eq!(e2, want);
    for r in 0..=3 {
        assert_eq!(elementary::<Q>(3, r).unwrap(), elementary::<Q>(3, 6 - r).unwrap(), "r={r}");
    }
    assert!(elementary::<Q>(2, 5).is_err());
}

#[test]
fn elementary_matches_binomial_form() {
    for n in 1..=5 {
        for r in 0..=n {
            assert_eq!(elementary::<Q>(n, r).unwrap(), elementary_binomial::<Q>(n, r).unwrap(), "n={n} r={r}");
        }
    }
}

#[test]
fn product_of_generators_is_unitriangular() {
    for (n, lambda) in [(2, "2,1"), (2, "2,2"), (3, "3,1"), (3, "2,2,1"), (3, "3,2")] {
        let lambda = p(lambda);
        let mut prod = LaurentSym::<Q>::constant(n, q(1));
        for &part in lambda.parts() {
            prod = prod.times(&elementary(n, part as usize).unwrap());
        }
        let (lead, c) = prod.leading().unwrap();
        assert_eq!(*lead, lambda.conjugate(), "n={n} lambda={lambda}");
        assert!(c.is_one());
        assert!(prod.coeffs.keys().all(|mu| dominance_leq(mu, &lambda.conjugate())));
    }
}

#[test]
fn m1_squared() {
    let m1 = monomial_sym::<Q>(&p("1"), 2).unwrap();
    let sq = m1.times(&m1);
    assert_eq!(sq.coeff(&p("2")), q(1));
    assert_eq!(sq.coeff(&p("1,1")), q(2));
    assert_eq!(sq.coeff(&p("")), q(4));
    assert_eq!(sq.coeffs.len(), 3);
    let direct = LaurentSym::from_laurent(&m1.to_laurent().times(&m1.to_laurent())).unwrap();
    assert_eq!(sq, direct);
    let m1 = monomial_sym::<Q>(&p("1"), 1).unwrap();
    assert_eq!(m1.times(&m1).coeff(&p("")), q(2));
}

#[test]
fn interpolation_examples() {
    let (a, t) = (parse_expr("a").unwrap(), parse_expr("t").unwrap());
    assert_eq!(interpolation(3, 0, &a, &t).unwrap(), LaurentSym::constant(3, RationalExpr::one()));
    let e1 = interpolation(1, 1, &a, &t).unwrap();
    assert!(e1.coeff(&p("1")).is_one());
    assert_eq!(e1.coeff(&p("")), parse_expr("-a - 1/a").unwrap());
    let e21 = interpolation(2, 1, &a, &t).unwrap();
    assert!(e21.coeff(&p("1")).is_one());
    assert_eq!(e21.coeff(&p("")), parse_expr("-a - 1/a - t*a - 1/(t*a)").unwrap());
    assert!(interpolation(2, 3, &a, &t).is_err());
}

#[test]
fn interpolation_is_symmetric_up_to_three() {
    let (a, t) = (q(3) / q(7), q(-5) / q(2));
    for n in 1..=3 {
        for r in 0..=n {
            let e = interpolation(n, r, &a, &t).unwrap();
            assert_eq!(e.leading().unwrap().0, &Partition::column(r));
        }
    }
}

#[test]
fn display_form() {
    let e2 = elementary::<RationalExpr>(2, 2).unwrap();
    assert_eq!(e2.to_string(), "1 * m[1,1] + 2 * m[]");
    assert_eq!(LaurentSym::<Q>::zero(2).to_string(), "0");
}

fn arb_sym(n: usize) -> impl Strategy<Value = LaurentSym<Q>> {
    let part = prop::collection::vec(0u32..4, n).prop_map(Partition::new);
    prop::collection::vec((part, -9i64..10, 1i64..5), 0..5).prop_map(move |terms| {
        let mut s = LaurentSym::zero(n);
        for (l, a, b) in terms {
            s.add_term(l, q(a) / q(b));
        }
        s
    })
}

fn generators(n: usize) -> Vec<(Vec<usize>, Vec<bool>)> {
    let id: Vec<usize> = (0..n).collect();
    let mut out = vec![(id.clone(), (0..n).map(|i| i == 0).collect())];
    if n > 1 {
        let mut sw = id;
        sw.swap(0, 1);
        out.push((sw, vec![false; n]));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn raw_view_round_trips_and_is_invariant(s in (1usize..=3).prop_flat_map(arb_sym)) {
        let n = s.n;
        let raw = s.to_laurent();
        for (perm, flip) in generators(n) {
            prop_assert_eq!(raw.act(&perm, &flip), raw.clone());
        }
        prop_assert_eq!(LaurentSym::from_laurent(&raw).unwrap(), s);
    }

    #[test]
    fn product_matches_raw_product(a in arb_sym(2), b in arb_sym(2)) {
        let direct = LaurentSym::from_laurent(&a.to_laurent().times(&b.to_laurent())).unwrap();
        prop_assert_eq!(a.times(&b), direct);
    }

    #[test]
    fn dominance_is_a_partial_order(x in prop::collection::vec(0u32..4, 3), y in prop::collection::vec(0u32..4, 3)) {
        let (x, y) = (Partition::new(x), Partition::new(y));
        prop_assert!(dominance_leq(&x, &x));
        if dominance_leq(&x, &y) && dominance_leq(&y, &x) {
            prop_assert_eq!(&x, &y);
        }
        if dominance_leq(&x, &y) {
            prop_assert!(x <= y);
        }
    }
}

#[test]
fn non_invariant_input_is_rejected() {
    let x = LaurentPoly::<Q>::var(2, 0, false);
    assert!(matches!(LaurentSym::from_laurent(&x), Err(SymError::NotInvariant(_))));
}
