//! Truncated power series `Σ_{k=0}^{N} c_k x^k` with an explicit order `N`.
//!
//! Binary operations produce the minimum of the operand orders, and asking
//! for a coefficient past the order is an error rather than a zero.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Coeff, Var};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    var: Var,
    coeffs: Vec<Coeff>,
}

impl TruncSeries {
    pub fn zero(var: Var, trunc: usize) -> Self {
        TruncSeries { var, coeffs: vec![Coeff::zero(); trunc + 1] }
    }

    pub fn one(var: Var, trunc: usize) -> Self {
        Self::monomial(var, trunc, 0, Coeff::one())
    }

    /// `c·x^k`, which is zero when `k > trunc`.
    pub fn monomial(var: Var, trunc: usize, k: usize, c: Coeff) -> Self {
        let mut s = Self::zero(var, trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from leading coefficients, padding with zeros or
    /// dropping terms past `trunc`.
    pub fn from_coeffs(var: Var, trunc: usize, coeffs: impl IntoIterator<Item = Coeff>) -> Self {
        let mut c: Vec<Coeff> = coeffs.into_iter().take(trunc + 1).collect();
        c.resize(trunc + 1, Coeff::zero());
        TruncSeries { var, coeffs: c }
    }

    pub fn from_ints(var: Var, trunc: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(var, trunc, coeffs.iter().map(|&c| Coeff::from(c)))
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Inclusive truncation order.
    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&Coeff> {
        self.coeffs
            .get(k)
            .ok_or(Error::BeyondTruncation { exp: k as i64, trunc: self.trunc() as i64 })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        let t = trunc.min(self.trunc());
        TruncSeries { var: self.var, coeffs: self.coeffs[..=t].to_vec() }
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    fn check(&self, o: &Self) -> Result<usize> {
        if self.var != o.var {
            return Err(Error::VarMismatch(self.var, o.var));
        }
        Ok(self.trunc().min(o.trunc()))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let t = self.check(o)?;
        let coeffs = (0..=t).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect();
        Ok(TruncSeries { var: self.var, coeffs })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        let t = self.check(o)?;
        let coeffs = (0..=t).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect();
        Ok(TruncSeries { var: self.var, coeffs })
    }

    pub fn neg(&self) -> Self {
        TruncSeries { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, s: &Coeff) -> Self {
        TruncSeries { var: self.var, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        let t = self.check(o)?;
        let mut out = vec![Coeff::zero(); t + 1];
        for (i, a) in self.coeffs[..=t].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs[..=t - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Ok(TruncSeries { var: self.var, coeffs: out })
    }

    /// Multiplies by `x^k`; the order is unchanged, so the top `k` known
    /// terms shift out.
    pub fn shift(&self, k: usize) -> Self {
        let t = self.trunc();
        let coeffs = (0..=t)
            .map(|e| if e < k { Coeff::zero() } else { self.coeffs[e - k].clone() })
            .collect();
        TruncSeries { var: self.var, coeffs }
    }

    /// `f(x) ↦ f(−x)`
    pub fn subst_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        TruncSeries { var: self.var, coeffs }
    }

    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].inv().ok_or(Error::NotInvertible)?;
        let t = self.trunc();
        let mut out: Vec<Coeff> = Vec::with_capacity(t + 1);
        out.push(c0.clone());
        for n in 1..=t {
            let mut acc = Coeff::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += &(a * &out[n - k]);
                }
            }
            out.push(-(&acc * &c0));
        }
        Ok(TruncSeries { var: self.var, coeffs: out })
    }

    /// `s^k`; negative `k` inverts first.
    pub fn int_pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.var, self.trunc());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    pub fn derivative_times_x(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(k, c)| c.scale_int(k as i64)).collect();
        TruncSeries { var: self.var, coeffs }
    }

    /// Formal exponential; requires a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpDomain);
        }
        let t = self.trunc();
        let kf = self.derivative_times_x();
        let mut out: Vec<Coeff> = Vec::with_capacity(t + 1);
        out.push(Coeff::one());
        for n in 1..=t {
            let mut acc = Coeff::zero();
            for k in 1..=n {
                if !kf.coeffs[k].is_zero() {
                    acc += &(&kf.coeffs[k] * &out[n - k]);
                }
            }
            out.push(acc.div_int(n as i64));
        }
        Ok(TruncSeries { var: self.var, coeffs: out })
    }

    /// Formal logarithm; requires constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogDomain);
        }
        let t = self.trunc();
        let mut out: Vec<Coeff> = vec![Coeff::zero(); t + 1];
        // n·l_n = n·f_n − Σ_{k=1}^{n−1} k·l_k·f_{n−k}
        for n in 1..=t {
            let mut acc = self.coeffs[n].scale_int(n as i64);
            for k in 1..n {
                if !out[k].is_zero() && !self.coeffs[n - k].is_zero() {
                    acc -= &(&out[k].scale_int(k as i64) * &self.coeffs[n - k]);
                }
            }
            out[n] = acc.div_int(n as i64);
        }
        Ok(TruncSeries { var: self.var, coeffs: out })
    }

    /// `outer(inner)` for an inner series with zero constant term. The
    /// result lives in `inner`'s variable.
    pub fn substitute(outer: &Self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::SubstituteDomain);
        }
        // Unknown outer terms x^{N+1}, … enter at order (N+1)·val(inner).
        let val = inner.valuation().unwrap_or(inner.trunc() + 1);
        let t = inner.trunc().min((outer.trunc() + 1) * val - 1);
        Ok(Self::horner(outer.coeffs(), &inner.truncate(t)))
    }

    /// `p(inner)` for a polynomial `p` given by its ascending coefficients.
    /// Any inner series is allowed since `p` has finite support.
    pub fn substitute_polynomial(outer: &[Coeff], inner: &Self) -> Self {
        Self::horner(outer, inner)
    }

    fn horner(outer: &[Coeff], inner: &Self) -> Self {
        let t = inner.trunc();
        let mut acc = Self::zero(inner.var, t);
        for c in outer.iter().rev() {
            acc = acc.mul(inner).expect("same variable");
            acc.coeffs[0] += c;
        }
        acc
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson { var: self.var, trunc: self.trunc(), coeffs: self.coeffs.clone() }
    }

    pub fn from_json(j: SeriesJson) -> Result<Self> {
        if j.coeffs.len() != j.trunc + 1 {
            return Err(Error::Json(format!(
                "series has {} coefficients but trunc {}",
                j.coeffs.len(),
                j.trunc
            )));
        }
        Ok(TruncSeries { var: j.var, coeffs: j.coeffs })
    }
}

/// Wire form of [`TruncSeries`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesJson {
    pub var: Var,
    pub trunc: usize,
    pub coeffs: Vec<Coeff>,
}

/// The MacMahon function `∏_{m≥1} (1 − q^m)^{−m}` through `q^N`.
pub fn mcmahon(trunc: usize) -> TruncSeries {
    let mut c = vec![Coeff::zero(); trunc + 1];
    c[0] = Coeff::one();
    // Dividing by (1 − q^m) is a stride-m running sum.
    for m in 1..=trunc {
        for _ in 0..m {
            for k in m..=trunc {
                let prev = c[k - m].clone();
                c[k] += &prev;
            }
        }
    }
    TruncSeries { var: Var::Q, coeffs: c }
}
