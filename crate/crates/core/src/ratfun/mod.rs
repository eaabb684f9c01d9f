//! Rational functions in `q` with integer coefficients, kept in a unique
//! normal form: coprime numerator and denominator, joint content removed,
//! positive leading coefficient in the denominator.

mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use poly::Poly;

use crate::error::{Error, Result};
use crate::series::{Coeff, TruncSeries, Var};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFun { num, den: Poly::constant(BigInt::one()) };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        if den.lc().is_negative() {
            c = -c;
        }
        num = num.div_scalar(&c);
        den = den.div_scalar(&c);
        RatFun { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::constant(BigInt::one()) }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_poly(Poly::constant(c.into()))
    }

    pub fn zero() -> Self {
        Self::constant(0)
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_power(k: i64) -> Self {
        let m = Poly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFun { num: Poly::constant(BigInt::one()), den: m }
        }
    }

    /// `num/den` from ascending integer coefficient lists.
    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(Poly::from_ints(num), Poly::from_ints(den))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&o.den))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::normalized(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(k.unsigned_abs()).expect("exponent fits u32");
        Ok(RatFun { num: base.num.pow(e), den: base.den.pow(e) })
    }

    /// `f(−q)`
    pub fn subst_neg(&self) -> Self {
        Self::normalized(self.num.subst_neg(), self.den.subst_neg())
    }

    /// `f(1/q)`, cleared of negative powers. The result may have a pole at
    /// `q = 0`.
    pub fn subst_inv(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let num = self.num.reverse().mul(&Poly::monomial(BigInt::one(), dd));
        let den = self.den.reverse().mul(&Poly::monomial(BigInt::one(), dn));
        Self::normalized(num, den)
    }

    /// Equality by cross-multiplication.
    pub fn rf_eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    /// Whether `f(1/q) = f(q)`.
    pub fn is_inversion_symmetric(&self) -> bool {
        self.rf_eq(&self.subst_inv())
    }

    /// Maclaurin expansion through `q^N`.
    pub fn expand(&self, trunc: usize) -> Result<TruncSeries> {
        if self.den.coeff(0).is_zero() {
            return Err(Error::PoleAtZero);
        }
        let to_series = |p: &Poly| {
            TruncSeries::from_coeffs(Var::Q, trunc, p.coeffs().iter().map(|c| Coeff::from(c.clone())))
        };
        to_series(&self.num).mul(&to_series(&self.den).inverse()?)
    }

    pub fn to_json(&self) -> RatFunJson {
        let s = |p: &Poly| p.coeffs().iter().map(ToString::to_string).collect();
        RatFunJson { num: s(&self.num), den: s(&self.den) }
    }

    pub fn from_json(j: &RatFunJson) -> Result<Self> {
        let parse = |v: &[String]| {
            v.iter()
                .map(|s| s.parse::<BigInt>().map_err(|_| Error::Json(format!("bad integer {s:?}"))))
                .collect::<Result<Vec<_>>>()
                .map(Poly::new)
        };
        Self::new(parse(&j.num)?, parse(&j.den)?)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.coeff(0).is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// Wire form of [`RatFun`]: ascending decimal-string coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatFunJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::from_ints(n, d).unwrap()
    }

    fn p1() -> RatFun {
        rf(&[0, 1], &[1, -2, 1])
    }

    #[test]
    fn normal_form_is_unique() {
        let a = rf(&[0, -2], &[-2, 4, -2]);
        assert_eq!(a, p1());
        assert_eq!(a.num(), &Poly::from_ints(&[0, 1]));
        assert_eq!(a.den(), &Poly::from_ints(&[1, -2, 1]));
        assert_eq!(rf(&[0], &[3, 1]), RatFun::zero());
        assert_eq!(RatFun::from_ints(&[1], &[0]), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_operations() {
        assert_eq!(p1().mul(&RatFun::one()), p1());
        assert_eq!(p1().add(&p1()), rf(&[0, 2], &[1, -2, 1]));
        assert_eq!(p1().pow(2).unwrap(), rf(&[0, 0, 1], &[1, -4, 6, -4, 1]));
        assert!(p1().div(&p1()).unwrap().rf_eq(&RatFun::one()));
        assert_eq!(RatFun::zero().pow(-1), Err(Error::DivisionByZero));
        assert_eq!(p1().div(&RatFun::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn expansion() {
        let s = p1().expand(4).unwrap();
        assert_eq!(s, TruncSeries::from_ints(Var::Q, 4, &[0, 1, 2, 3, 4]));
        assert_eq!(RatFun::one().expand(3).unwrap(), TruncSeries::one(Var::Q, 3));
        let p2 = rf(&[0, 0, 0, 2], &[1, -2, 1]).mul(&rf(&[1], &[1, -2, 1])).mul(&rf(&[1], &[1, 2, 1]));
        assert_eq!(p2.expand(5).unwrap(), TruncSeries::from_ints(Var::Q, 5, &[0, 0, 0, 2, 4, 10]));
        assert_eq!(RatFun::q_power(-1).expand(3), Err(Error::PoleAtZero));
    }

    #[test]
    fn substitutions() {
        assert_eq!(p1().subst_neg(), rf(&[0, -1], &[1, 2, 1]));
        assert_eq!(RatFun::constant(7).subst_neg(), RatFun::constant(7));
        assert_eq!(p1().subst_neg().subst_neg(), p1());
        assert!(p1().is_inversion_symmetric());
        let inv_q = RatFun::q_power(1).subst_inv();
        assert_eq!(inv_q.num(), &Poly::from_ints(&[1]));
        assert_eq!(inv_q.den(), &Poly::from_ints(&[0, 1]));
        assert!(inv_q.expand(2).is_err());
        assert_eq!(RatFun::constant(-3).subst_inv(), RatFun::constant(-3));
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let other = RatFun::constant(-1).mul(&rf(&[0, -1], &[1, -2, 1]));
        assert!(p1().rf_eq(&other));
        assert!(!p1().rf_eq(&rf(&[0, 1], &[1, 2, 1])));
    }

    #[test]
    fn json_round_trip() {
        let j = p1().to_json();
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, r#"{"num":["0","1"],"den":["1","-2","1"]}"#);
        let back: RatFunJson = serde_json::from_str(&text).unwrap();
        assert_eq!(RatFun::from_json(&back).unwrap(), p1());
    }

    fn arb_ratfun() -> impl Strategy<Value = RatFun> {
        (prop::collection::vec(-4i64..=4, 0..5), prop::collection::vec(-4i64..=4, 0..4), -4i64..=4)
            .prop_filter_map("nonzero constant term", |(n, mut d, c0)| {
                if c0 == 0 {
                    return None;
                }
                d.insert(0, c0);
                RatFun::from_ints(&n, &d).ok()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn expand_matches_series_division(f in arb_ratfun(), n in 0usize..=30) {
            let num = TruncSeries::from_coeffs(Var::Q, n, f.num().coeffs().iter().map(|c| Coeff::from(c.clone())));
            let den = TruncSeries::from_coeffs(Var::Q, n, f.den().coeffs().iter().map(|c| Coeff::from(c.clone())));
            prop_assert_eq!(f.expand(n).unwrap(), num.mul(&den.inverse().unwrap()).unwrap());
        }

        #[test]
        fn subst_inv_is_involution(f in arb_ratfun()) {
            prop_assert!(f.subst_inv().subst_inv().rf_eq(&f));
        }

        #[test]
        fn add_mul_consistent(f in arb_ratfun(), g in arb_ratfun()) {
            let lhs = f.add(&g).mul(&f);
            let rhs = f.mul(&f).add(&g.mul(&f));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
