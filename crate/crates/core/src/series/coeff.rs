//! Exact Gaussian rationals `a + b·i`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Coeff {
    pub re: BigRational,
    pub im: BigRational,
}

impl Coeff {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Coeff { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Coeff { re, im: BigRational::zero() }
    }

    pub fn i() -> Self {
        Coeff { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Coeff::real(BigRational::new(num.into(), den.into()))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_real() && self.re.is_integer()
    }

    /// The integer value, when the coefficient is a real integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.re.to_integer())
    }

    pub fn conj(&self) -> Coeff {
        Coeff { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|²`
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Coeff { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn scale_int(&self, k: i64) -> Coeff {
        let k = BigRational::from_integer(k.into());
        Coeff { re: &self.re * &k, im: &self.im * &k }
    }

    pub fn div_int(&self, k: i64) -> Coeff {
        let k = BigRational::from_integer(k.into());
        Coeff { re: &self.re / &k, im: &self.im / &k }
    }

    /// Decimal-string encoding `[re_num, re_den]` or
    /// `[re_num, re_den, im_num, im_den]` when the imaginary part is nonzero.
    pub fn to_strings(&self) -> Vec<String> {
        let mut out = vec![self.re.numer().to_string(), self.re.denom().to_string()];
        if !self.is_real() {
            out.push(self.im.numer().to_string());
            out.push(self.im.denom().to_string());
        }
        out
    }

    pub fn from_strings(parts: &[String]) -> Option<Coeff> {
        fn ratio(n: &str, d: &str) -> Option<BigRational> {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        match parts {
            [rn, rd] => Some(Coeff::real(ratio(rn, rd)?)),
            [rn, rd, inn, id] => Some(Coeff::new(ratio(rn, rd)?, ratio(inn, id)?)),
            _ => None,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "({} {} {}i)", self.re, sign, self.im.abs())
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::real(BigRational::from_integer(v.into()))
    }
}

impl From<BigInt> for Coeff {
    fn from(v: BigInt) -> Self {
        Coeff::real(BigRational::from_integer(v))
    }
}

impl From<BigRational> for Coeff {
    fn from(v: BigRational) -> Self {
        Coeff::real(v)
    }
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Coeff {
    fn one() -> Self {
        Coeff::real(BigRational::one())
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        Coeff { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        Coeff { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, o: &Coeff) -> Coeff {
        if self.im.is_zero() && o.im.is_zero() {
            return Coeff::real(&self.re * &o.re);
        }
        Coeff {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

/// Panics on division by zero, like the rational division it wraps.
impl<'a> Div<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn div(self, o: &Coeff) -> Coeff {
        if o.im.is_zero() {
            return Coeff { re: &self.re / &o.re, im: &self.im / &o.re };
        }
        self * &o.inv().expect("division by zero coefficient")
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff { re: -self.re, im: -self.im }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for Coeff {
            type Output = Coeff;
            fn $f(self, o: Coeff) -> Coeff {
                (&self).$f(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, o: &Coeff) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, o: &Coeff) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(d)?;
        Coeff::from_strings(&parts).ok_or_else(|| D::Error::custom("bad coefficient encoding"))
    }
}
