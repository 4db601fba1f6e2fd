//! Substitution maps into specialized fields.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::error::AlgError;
use super::expr::RationalExpr;
use super::int::Int;
use super::mono::{self, Var, ALPHABET};
use super::poly::ZPoly;

/// One simultaneous substitution `v^power -> image`.
#[derive(Clone, Debug, Default)]
pub struct Stage {
    images: [Option<(u32, RationalExpr)>; 8],
}

impl Stage {
    pub fn new() -> Stage {
        Stage::default()
    }

    /// Substitute `v -> image`.
    pub fn map(mut self, v: Var, image: RationalExpr) -> Stage {
        self.images[v.index()] = Some((1, image));
        self
    }

    /// Substitute `v^2 -> image`; odd powers of `v` are then rejected.
    pub fn map_square(mut self, v: Var, image: RationalExpr) -> Stage {
        self.images[v.index()] = Some((2, image));
        self
    }

    fn touches(&self, p: &ZPoly) -> bool {
        ALPHABET.iter().any(|v| self.images[v.index()].is_some() && p.uses_var(v.index()))
    }
}

/// A named composition of substitution stages applied left to right.
#[derive(Clone, Debug)]
pub struct SpecField {
    name: String,
    stages: Vec<Stage>,
}

fn tpow(k: u32) -> RationalExpr {
    RationalExpr::var_pow(Var::T, k as i64)
}

impl SpecField {
    pub fn new(name: impl Into<String>, stages: Vec<Stage>) -> SpecField {
        SpecField { name: name.into(), stages }
    }

    /// The identity map: everything stays symbolic.
    pub fn generic() -> SpecField {
        SpecField::new("generic", Vec::new())
    }

    /// `a^2 -> b`, `c^2 -> q b`.
    pub fn cnb(b: RationalExpr) -> SpecField {
        let name = format!("cnb:{b}");
        let qb = RationalExpr::var(Var::Q).mul(&b);
        SpecField::new(name, vec![Stage::new().map_square(Var::A, b).map_square(Var::C, qb)])
    }

    /// `a^2 -> 1`, `c^2 -> q`.
    pub fn dn() -> SpecField {
        let s = Stage::new()
            .map_square(Var::A, RationalExpr::one())
            .map_square(Var::C, RationalExpr::var(Var::Q));
        SpecField::new("dn", vec![s])
    }

    /// `a^2 -> t`, `c^2 -> t^2`, `q -> t`.
    pub fn schur_c() -> SpecField {
        let s = Stage::new()
            .map_square(Var::A, tpow(1))
            .map_square(Var::C, tpow(2))
            .map(Var::Q, tpow(1));
        SpecField::new("schur-c", vec![s])
    }

    /// `a^2 -> 1`, `c^2 -> t`, `q -> t`.
    pub fn schur_d() -> SpecField {
        let s = Stage::new()
            .map_square(Var::A, RationalExpr::one())
            .map_square(Var::C, tpow(1))
            .map(Var::Q, tpow(1));
        SpecField::new("schur-d", vec![s])
    }

    /// `a^2 -> t`, `c^2 -> q t`, then `q -> 0`.
    pub fn hl_c() -> SpecField {
        let s = Stage::new()
            .map_square(Var::A, tpow(1))
            .map_square(Var::C, RationalExpr::var(Var::Q).mul(&tpow(1)));
        let z = Stage::new().map(Var::Q, RationalExpr::zero());
        SpecField::new("hl-c", vec![s, z])
    }

    /// `a^2 -> 1`, `c^2 -> q`, then `q -> 0`.
    pub fn hl_d() -> SpecField {
        let mut f = SpecField::dn();
        f.name = "hl-d".into();
        f.stages.push(Stage::new().map(Var::Q, RationalExpr::zero()));
        f
    }

    /// Parses one of `generic`, `cnb:<b>`, `dn`, `schur-c`, `schur-d`, `hl-c`, `hl-d`.
    pub fn named(s: &str) -> Result<SpecField, AlgError> {
        match s {
            "generic" => Ok(SpecField::generic()),
            "dn" => Ok(SpecField::dn()),
            "schur-c" => Ok(SpecField::schur_c()),
            "schur-d" => Ok(SpecField::schur_d()),
            "hl-c" => Ok(SpecField::hl_c()),
            "hl-d" => Ok(SpecField::hl_d()),
            _ => match s.strip_prefix("cnb:") {
                Some(b) => Ok(SpecField::cnb(b.parse()?)),
                None => Err(AlgError::InvalidSubstitution(format!("unknown spec `{s}`"))),
            },
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_generic(&self) -> bool {
        self.stages.is_empty()
    }

    pub fn apply(&self, e: &RationalExpr) -> Result<RationalExpr, AlgError> {
        let mut cur = e.clone();
        for s in &self.stages {
            cur = substitute_stage(&cur, s)?;
        }
        Ok(cur)
    }
}

impl fmt::Display for SpecField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Applies `map` to `e`; errors if a denominator factor maps to zero.
pub fn substitute(e: &RationalExpr, map: &SpecField) -> Result<RationalExpr, AlgError> {
    map.apply(e)
}

/// `coefficient * x^exponents` with signed exponents.
type LaurentTerm = (BigRational, [i64; 8]);

fn as_laurent_monomial(e: &RationalExpr) -> Option<LaurentTerm> {
    let (c, m, f) = e.den_parts();
    if !f.is_empty() {
        return None;
    }
    let num = e.num_zpoly();
    if num.is_zero() {
        return Some((BigRational::zero(), [0; 8]));
    }
    if num.len() != 1 {
        return None;
    }
    let (nm, nc) = num.lowest();
    let top = mono::to_exps(*nm);
    let bot = mono::to_exps(m);
    let exps = std::array::from_fn(|v| top[v] as i64 - bot[v] as i64);
    Some((BigRational::new(nc.to_big(), c.to_big()), exps))
}

fn laurent_to_expr(terms: Vec<LaurentTerm>) -> RationalExpr {
    let terms: Vec<LaurentTerm> = terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
    if terms.is_empty() {
        return RationalExpr::zero();
    }
    let mut low = [0i64; 8];
    let mut den = BigInt::one();
    for (c, e) in &terms {
        for v in 0..8 {
            low[v] = low[v].min(e[v]);
        }
        den = num_integer::lcm(den, c.denom().clone());
    }
    let raw = terms
        .iter()
        .map(|(c, e)| {
            let ex: [u32; 8] = std::array::from_fn(|v| (e[v] - low[v]) as u32);
            (mono::from_exps(&ex), Int::from_big(c.numer() * (&den / c.denom())))
        })
        .collect();
    let den_m = mono::from_exps(&low.map(|x| (-x) as u32));
    RationalExpr::from_parts_unchecked(ZPoly::from_terms(raw), Int::from_big(den), den_m, Vec::new())
}

fn image_of_poly(p: &ZPoly, stage: &Stage) -> Result<RationalExpr, AlgError> {
    for (m, _) in p.terms() {
        for (v, img) in stage.images.iter().enumerate() {
            if let Some((pw, _)) = img {
                if mono::exp(*m, v) % pw != 0 {
                    return Err(AlgError::InvalidSubstitution(format!(
                        "odd power of {} under a square substitution",
                        ALPHABET[v]
                    )));
                }
            }
        }
    }
    let fast: Option<Vec<Option<(u32, LaurentTerm)>>> = stage
        .images
        .iter()
        .map(|img| match img {
            None => Some(None),
            Some((pw, e)) => as_laurent_monomial(e).map(|l| Some((*pw, l))),
        })
        .collect();
    if let Some(images) = fast {
        let mut out = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let e = mono::to_exps(*m);
            let mut coef = BigRational::from_integer(c.to_big());
            let mut exps = [0i64; 8];
            for v in 0..8 {
                match &images[v] {
                    None => exps[v] += e[v] as i64,
                    Some((pw, (ic, ie))) => {
                        let k = (e[v] / pw) as i64;
                        if k > 0 {
                            coef *= num_traits::pow(ic.clone(), k as usize);
                            for w in 0..8 {
                                exps[w] += ie[w] * k;
                            }
                        }
                    }
                }
            }
            out.push((coef, exps));
        }
        return Ok(laurent_to_expr(out));
    }
    let mut acc = RationalExpr::zero();
    for (m, c) in p.terms() {
        let e = mono::to_exps(*m);
        let mut term = RationalExpr::from_bigint(&c.to_big());
        for v in 0..8 {
            if e[v] == 0 {
                continue;
            }
            match &stage.images[v] {
                None => term = term.mul(&RationalExpr::var_pow(ALPHABET[v], e[v] as i64)),
                Some((pw, img)) => term = term.mul(&img.pow(e[v] / pw)),
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

fn substitute_stage(e: &RationalExpr, stage: &Stage) -> Result<RationalExpr, AlgError> {
    let (c, m, f) = e.den_parts();
    let den_touched = f.iter().any(|(p, _)| stage.touches(p)) || stage.touches(&ZPoly::term(m, Int::one()));
    if !den_touched && !stage.touches(e.num_zpoly()) {
        return Ok(e.clone());
    }
    let mut acc = image_of_poly(e.num_zpoly(), stage)?;
    let vanish = |p: &ZPoly| AlgError::VanishingDenominator(p.to_string());
    let mono_img = image_of_poly(&ZPoly::term(m, c.clone()), stage)?;
    if mono_img.is_zero() {
        return Err(vanish(&ZPoly::term(m, c.clone())));
    }
    acc = acc.try_div(&mono_img)?;
    for (p, k) in f {
        let img = image_of_poly(p, stage)?;
        if img.is_zero() {
            return Err(vanish(p));
        }
        acc = acc.mul(&img.try_inv()?.pow(*k));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> RationalExpr {
        s.parse().unwrap()
    }

    #[test]
    fn spec_examples() {
        let u2 = p("u^2");
        let to_u = SpecField::new(
            "u",
            vec![Stage::new().map(Var::A, p("u")).map(Var::T, u2.clone()).map(Var::Q, u2.clone())],
        );
        assert_eq!(substitute(&p("a^2"), &to_u).unwrap(), u2);
        assert!(substitute(&p("(1-q)/(1-t)"), &to_u).unwrap().is_one());
        let ones = SpecField::new(
            "ones",
            vec![Stage::new().map(Var::Q, RationalExpr::one()).map(Var::T, RationalExpr::one())],
        );
        assert!(matches!(
            substitute(&p("1/(1-q*t)"), &ones),
            Err(AlgError::VanishingDenominator(_))
        ));
    }

    #[test]
    fn square_substitution() {
        let e = p("(1 - a^2*t)/(1 - a^2*c^2*t^3)");
        let r = substitute(&e, &SpecField::schur_c()).unwrap();
        assert_eq!(r, p("(1 - t^2)/(1 - t^6)"));
        assert!(substitute(&p("a*t"), &SpecField::dn()).is_err());
    }

    #[test]
    fn limit_stage() {
        let e = p("(1 - q*t)/(1 - c^2*t)");
        assert_eq!(substitute(&e, &SpecField::hl_c()).unwrap(), RationalExpr::one());
    }
}
