//! Rational functions over the fixed alphabet, kept in reduced form.
//!
//! The denominator is stored factored as `const * monomial * prod f_i^k_i`.
//! Products cancel factors across operands and sums cancel against the
//! least common denominator by trial division, with a modular divisibility
//! test in front of every trial so that hopeless divisions are skipped.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::error::AlgError;
use super::factor::factorize;
use super::int::Int;
use super::mono::{self, Mono, Var};
use super::poly::{modular_divides, MultiPoly, ZPoly};

#[derive(Clone, Debug)]
pub struct RationalExpr {
    num: ZPoly,
    den_c: Int,
    den_m: Mono,
    den_f: Vec<(ZPoly, u32)>,
}

const PROBE: [u64; 8] = [
    0x1b87_3593_a5c1_2f01,
    0x0bb6_7ae8_584c_aa73,
    0x1d2a_3f4e_7c91_b2e5,
    0x0f13_9b07_64d3_51c9,
    0x17c4_ad2e_9f85_0c3b,
    0x09e3_779b_97f4_a7c1,
    0x1a0f_62d9_3c58_e84d,
    0x05be_c8a1_d47f_3963,
];

/// Divides `num` by as many copies of the factors as possible.
fn cancel_factors(mut num: ZPoly, den_f: &mut Vec<(ZPoly, u32)>) -> ZPoly {
    if num.is_zero() || den_f.is_empty() {
        return num;
    }
    let mut image = num.modular_image(&PROBE);
    for (f, k) in den_f.iter_mut() {
        let fi = f.modular_image(&PROBE);
        while *k > 0 && modular_divides(&image, &fi) {
            match num.div_exact(f) {
                Some(q) => {
                    num = q;
                    *k -= 1;
                    image = num.modular_image(&PROBE);
                }
                None => break,
            }
        }
    }
    den_f.retain(|(_, k)| *k > 0);
    num
}

fn merge_factors(x: &[(ZPoly, u32)], y: &[(ZPoly, u32)], take_max: bool) -> Vec<(ZPoly, u32)> {
    let mut out: Vec<(ZPoly, u32)> = x.to_vec();
    for (f, k) in y {
        match out.iter_mut().find(|(g, _)| g == f) {
            Some(e) => e.1 = if take_max { e.1.max(*k) } else { e.1 + k },
            None => out.push((f.clone(), *k)),
        }
    }
    out.sort();
    out
}

impl RationalExpr {
    fn build(num: ZPoly, den_c: Int, den_m: Mono, mut den_f: Vec<(ZPoly, u32)>) -> RationalExpr {
        if num.is_zero() {
            return RationalExpr::zero();
        }
        let mut num = cancel_factors(num, &mut den_f);
        let mut den_c = den_c;
        let mut den_m = den_m;
        let g = mono::gcd(num.mono_content(), den_m);
        if g != 0 {
            num = num.div_mono(g);
            den_m = mono::div(den_m, g).unwrap();
        }
        let g = num.int_content().gcd(&den_c);
        if !g.is_one() {
            num = num.div_int(&g);
            den_c = den_c.div_exact(&g).unwrap();
        }
        den_f.sort();
        RationalExpr { num, den_c, den_m, den_f }
    }

    pub(crate) fn from_zpoly(p: ZPoly) -> RationalExpr {
        RationalExpr { num: p, den_c: Int::one(), den_m: 0, den_f: Vec::new() }
    }

    pub fn zero() -> RationalExpr {
        RationalExpr::from_zpoly(ZPoly::zero())
    }

    pub fn one() -> RationalExpr {
        RationalExpr::from_zpoly(ZPoly::one())
    }

    pub fn from_int(v: i64) -> RationalExpr {
        RationalExpr::from_zpoly(ZPoly::constant(Int::from(v)))
    }

    pub fn from_bigint(v: &BigInt) -> RationalExpr {
        RationalExpr::from_zpoly(ZPoly::constant(Int::from(v)))
    }

    pub fn from_rational(r: &BigRational) -> RationalExpr {
        RationalExpr::build(
            ZPoly::constant(Int::from(r.numer())),
            Int::from(r.denom()),
            0,
            Vec::new(),
        )
    }

    pub fn var(v: Var) -> RationalExpr {
        RationalExpr::from_zpoly(ZPoly::var(v))
    }

    /// `v^k` for any integer `k`.
    pub fn var_pow(v: Var, k: i64) -> RationalExpr {
        let m = mono::single(v.index(), k.unsigned_abs() as u32);
        if k >= 0 {
            RationalExpr::from_zpoly(ZPoly::term(m, Int::one()))
        } else {
            RationalExpr { num: ZPoly::one(), den_c: Int::one(), den_m: m, den_f: Vec::new() }
        }
    }

    pub fn from_poly(p: &MultiPoly) -> RationalExpr {
        RationalExpr::build(p.num.clone(), p.den.clone(), 0, Vec::new())
    }

    /// Quotient of two polynomials; fails if `den` is zero.
    pub fn from_fraction(num: &MultiPoly, den: &MultiPoly) -> Result<RationalExpr, AlgError> {
        RationalExpr::from_poly(num).try_div(&RationalExpr::from_poly(den))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den_is_one()
    }

    fn den_is_one(&self) -> bool {
        self.den_c.is_one() && self.den_m == 0 && self.den_f.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den_m == 0 && self.den_f.is_empty()
    }

    /// The value as a rational constant, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.is_polynomial() {
            return None;
        }
        let c = self.num.as_constant()?;
        Some(BigRational::new(c.to_big(), self.den_c.to_big()))
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    pub(crate) fn num_zpoly(&self) -> &ZPoly {
        &self.num
    }

    pub(crate) fn den_parts(&self) -> (&Int, Mono, &[(ZPoly, u32)]) {
        (&self.den_c, self.den_m, &self.den_f)
    }

    pub(crate) fn den_zpoly(&self) -> ZPoly {
        let mut acc = ZPoly::term(self.den_m, self.den_c.clone());
        for (f, k) in &self.den_f {
            for _ in 0..*k {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// Expanded numerator.
    pub fn num(&self) -> MultiPoly {
        MultiPoly::from_parts(self.num.clone(), Int::one())
    }

    /// Expanded denominator; its lowest term has a positive coefficient.
    pub fn den(&self) -> MultiPoly {
        MultiPoly::from_parts(self.den_zpoly(), Int::one())
    }

    pub fn neg(&self) -> RationalExpr {
        RationalExpr { num: self.num.neg(), ..self.clone() }
    }

    pub fn add(&self, o: &RationalExpr) -> RationalExpr {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den_c == o.den_c && self.den_m == o.den_m && self.den_f == o.den_f {
            return RationalExpr::build(self.num.add(&o.num), self.den_c.clone(), self.den_m, self.den_f.clone());
        }
        let lc = self.den_c.mul(&o.den_c).div_exact(&self.den_c.gcd(&o.den_c)).unwrap();
        let lm = mono::lcm(self.den_m, o.den_m);
        let lf = merge_factors(&self.den_f, &o.den_f, true);
        let lift = |x: &RationalExpr| -> ZPoly {
            let mut p = x
                .num
                .mul_mono(mono::div(lm, x.den_m).unwrap())
                .scale(&lc.div_exact(&x.den_c).unwrap());
            for (f, k) in &lf {
                let have = x.den_f.iter().find(|(g, _)| g == f).map_or(0, |e| e.1);
                for _ in have..*k {
                    p = p.mul(f);
                }
            }
            p
        };
        RationalExpr::build(lift(self).add(&lift(o)), lc, lm, lf)
    }

    pub fn sub(&self, o: &RationalExpr) -> RationalExpr {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RationalExpr) -> RationalExpr {
        if self.is_zero() || o.is_zero() {
            return RationalExpr::zero();
        }
        let mut fx = self.den_f.clone();
        let mut fy = o.den_f.clone();
        let mut a = cancel_factors(self.num.clone(), &mut fy);
        let mut b = cancel_factors(o.num.clone(), &mut fx);
        let (mut cx, mut cy) = (self.den_c.clone(), o.den_c.clone());
        let (mut mx, mut my) = (self.den_m, o.den_m);
        let g = mono::gcd(a.mono_content(), my);
        if g != 0 {
            a = a.div_mono(g);
            my = mono::div(my, g).unwrap();
        }
        let g = mono::gcd(b.mono_content(), mx);
        if g != 0 {
            b = b.div_mono(g);
            mx = mono::div(mx, g).unwrap();
        }
        let g = a.int_content().gcd(&cy);
        if !g.is_one() {
            a = a.div_int(&g);
            cy = cy.div_exact(&g).unwrap();
        }
        let g = b.int_content().gcd(&cx);
        if !g.is_one() {
            b = b.div_int(&g);
            cx = cx.div_exact(&g).unwrap();
        }
        let mut den_f = merge_factors(&fx, &fy, false);
        den_f.sort();
        RationalExpr { num: a.mul(&b), den_c: cx.mul(&cy), den_m: mono::mul(mx, my), den_f }
    }

    pub fn try_inv(&self) -> Result<RationalExpr, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let fac = factorize(&self.num);
        let mut num = self.den_zpoly();
        let mut den_c = fac.unit;
        if den_c.is_negative() {
            num = num.neg();
            den_c = den_c.neg();
        }
        Ok(RationalExpr::build(num, den_c, fac.mono, fac.factors))
    }

    pub fn try_div(&self, o: &RationalExpr) -> Result<RationalExpr, AlgError> {
        Ok(self.mul(&o.try_inv()?))
    }

    pub fn pow(&self, k: u32) -> RationalExpr {
        let mut den_f = self.den_f.clone();
        for e in den_f.iter_mut() {
            e.1 *= k;
        }
        RationalExpr {
            num: self.num.pow(k),
            den_c: self.den_c.pow(k),
            den_m: mono::pow(self.den_m, k),
            den_f,
        }
    }

    pub fn try_powi(&self, k: i64) -> Result<RationalExpr, AlgError> {
        let p = self.pow(k.unsigned_abs() as u32);
        if k >= 0 {
            Ok(p)
        } else {
            p.try_inv()
        }
    }

    /// Value at a rational point given in alphabet order; `None` at a pole.
    pub fn eval(&self, point: &[BigRational; 8]) -> Option<BigRational> {
        let mut d = ZPoly::term(self.den_m, self.den_c.clone()).eval(point);
        for (f, k) in &self.den_f {
            d *= num_traits::pow(f.eval(point), *k as usize);
        }
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    /// Whether the value is a polynomial with nonnegative integer coefficients.
    pub fn is_nonneg_integral_poly(&self) -> bool {
        self.is_polynomial()
            && self.den_c.is_one()
            && self.num.terms().iter().all(|(_, c)| !c.is_negative())
    }

    /// Coefficients of a polynomial in `t` alone, indexed by degree.
    pub fn t_coefficients(&self) -> Option<Vec<BigRational>> {
        if !self.is_polynomial() {
            return None;
        }
        let ti = Var::T.index();
        let mut out: Vec<BigRational> = Vec::new();
        for (m, c) in self.num.terms() {
            if *m != mono::single(ti, mono::exp(*m, ti)) {
                return None;
            }
            let k = mono::exp(*m, ti) as usize;
            if out.len() <= k {
                out.resize(k + 1, BigRational::zero());
            }
            out[k] = BigRational::new(c.to_big(), self.den_c.to_big());
        }
        Some(out)
    }

    pub(crate) fn from_parts_unchecked(num: ZPoly, den_c: Int, den_m: Mono, den_f: Vec<(ZPoly, u32)>) -> RationalExpr {
        RationalExpr::build(num, den_c, den_m, den_f)
    }
}

impl PartialEq for RationalExpr {
    fn eq(&self, o: &RationalExpr) -> bool {
        if self.num == o.num && self.den_c == o.den_c && self.den_m == o.den_m && self.den_f == o.den_f {
            return true;
        }
        self.sub(o).is_zero()
    }
}

impl Eq for RationalExpr {}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.to_string();
        if self.den_is_one() {
            return f.write_str(&num);
        }
        let den = self.den_zpoly();
        if self.num.len() > 1 {
            write!(f, "({num})")?;
        } else {
            f.write_str(&num)?;
        }
        if den.as_constant().is_some() {
            write!(f, "/{den}")
        } else {
            write!(f, "/({den})")
        }
    }
}

impl From<i64> for RationalExpr {
    fn from(v: i64) -> RationalExpr {
        RationalExpr::from_int(v)
    }
}

impl From<Var> for RationalExpr {
    fn from(v: Var) -> RationalExpr {
        RationalExpr::var(v)
    }
}

impl std::str::FromStr for RationalExpr {
    type Err = AlgError;
    fn from_str(s: &str) -> Result<RationalExpr, AlgError> {
        super::parse::parse_expr(s)
    }
}

macro_rules! forward_ops {
    ($tr:ident, $m:ident, $call:ident) => {
        impl std::ops::$tr<&RationalExpr> for &RationalExpr {
            type Output = RationalExpr;
            fn $m(self, o: &RationalExpr) -> RationalExpr {
                RationalExpr::$call(self, o)
            }
        }
        impl std::ops::$tr<RationalExpr> for RationalExpr {
            type Output = RationalExpr;
            fn $m(self, o: RationalExpr) -> RationalExpr {
                RationalExpr::$call(&self, &o)
            }
        }
    };
}

forward_ops!(Add, add, add);
forward_ops!(Sub, sub, sub);
forward_ops!(Mul, mul, mul);

impl std::ops::Neg for RationalExpr {
    type Output = RationalExpr;
    fn neg(self) -> RationalExpr {
        RationalExpr::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> RationalExpr {
        RationalExpr::var(Var::T)
    }

    fn one() -> RationalExpr {
        RationalExpr::one()
    }

    #[test]
    fn canonical_text() {
        let num = (one() - t().pow(2)).pow(2);
        let den = one() - t().pow(3).mul(&RationalExpr::from_int(2));
        let e = num.try_div(&den).unwrap();
        assert_eq!(e.to_string(), "(1 - 2*t^2 + t^4)/(1 - 2*t^3)");
        let reduced: RationalExpr = "(1 - 2*t^2 + t^4)/(1 - t^3)".parse().unwrap();
        assert_eq!(reduced.to_string(), "(1 + t - t^2 - t^3)/(1 + t + t^2)");
    }

    #[test]
    fn spec_examples() {
        let x = t().try_div(&(one() - t())).unwrap();
        let y = t().pow(2).try_div(&(one() - t())).unwrap();
        assert_eq!((&x + &y).to_string(), "(t + t^2)/(1 - t)");
        let z = (one() - t().pow(2)).try_div(&(one() - t())).unwrap() - one();
        assert_eq!(z, t());
        assert_eq!(z.to_string(), "t");
        assert_eq!((one() + one()).to_string(), "2");
    }

    #[test]
    fn cancellation_through_cyclotomics() {
        let a = (one() - t().pow(6)).try_div(&(one() - t().pow(2))).unwrap();
        let b = one().try_div(&(one() + t().pow(2) + t().pow(4))).unwrap();
        assert!((a * b).is_one());
    }

    #[test]
    fn division_by_zero() {
        assert!(one().try_div(&RationalExpr::zero()).is_err());
    }
}
