//! Truncated Laurent series `Σ_{k=lead}^{trunc} c_k x^k`.
//!
//! The stored lead coefficient is nonzero unless the series is identically
//! zero to its order, in which case no coefficients are stored and
//! `lead = trunc + 1`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Coeff, TruncSeries, Var};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    var: Var,
    lead: i64,
    trunc: i64,
    coeffs: Vec<Coeff>,
}

impl LaurentSeries {
    /// Series with the given coefficients starting at exponent `lead`,
    /// known through exponent `trunc`.
    pub fn new(var: Var, lead: i64, trunc: i64, coeffs: Vec<Coeff>) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize((trunc - lead + 1).max(0) as usize, Coeff::zero());
        let mut s = LaurentSeries { var, lead, trunc, coeffs };
        s.normalize();
        s
    }

    pub fn zero(var: Var, trunc: i64) -> Self {
        LaurentSeries { var, lead: trunc + 1, trunc, coeffs: Vec::new() }
    }

    /// `x^shift · s`
    pub fn from_series(s: &TruncSeries, shift: i64) -> Self {
        Self::new(s.var(), shift, shift + s.trunc() as i64, s.coeffs().to_vec())
    }

    fn normalize(&mut self) {
        let nz = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.coeffs.len());
        self.coeffs.drain(..nz);
        self.lead += nz as i64;
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn lead(&self) -> i64 {
        self.lead
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero coefficients with their exponents, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Coeff)> {
        self.coeffs.iter().enumerate().map(move |(k, c)| (self.lead + k as i64, c))
    }

    pub fn coeff(&self, e: i64) -> Result<Coeff> {
        if e > self.trunc {
            return Err(Error::BeyondTruncation { exp: e, trunc: self.trunc });
        }
        if e < self.lead {
            return Ok(Coeff::zero());
        }
        Ok(self.coeffs[(e - self.lead) as usize].clone())
    }

    pub fn truncate(&self, trunc: i64) -> Self {
        let t = trunc.min(self.trunc);
        let keep = (t - self.lead + 1).max(0) as usize;
        Self::new(self.var, self.lead.min(t + 1), t, self.coeffs[..keep.min(self.coeffs.len())].to_vec())
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.var != o.var {
            return Err(Error::VarMismatch(self.var, o.var));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let trunc = self.trunc.min(o.trunc);
        let lead = self.lead.min(o.lead).min(trunc + 1);
        let coeffs = (lead..=trunc)
            .map(|e| &self.coeff(e).expect("within order") + &o.coeff(e).expect("within order"))
            .collect();
        Ok(Self::new(self.var, lead, trunc, coeffs))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentSeries { coeffs: self.coeffs.iter().map(|c| -c).collect(), ..self.clone() }
    }

    pub fn scale(&self, s: &Coeff) -> Self {
        Self::new(self.var, self.lead, self.trunc, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Relative precision: number of known coefficients from the lead on.
    fn rel(&self) -> i64 {
        self.trunc - self.lead
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        if self.is_zero() || o.is_zero() {
            // x^a·O(x^{t+1}) against a series with lead ≥ b
            let trunc = (self.trunc + o.lead).min(o.trunc + self.lead);
            return Ok(Self::zero(self.var, trunc));
        }
        let lead = self.lead + o.lead;
        let trunc = (self.trunc + o.lead).min(o.trunc + self.lead);
        let n = (trunc - lead + 1) as usize;
        let mut out = vec![Coeff::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Ok(Self::new(self.var, lead, trunc, out))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        if o.is_zero() {
            return Err(Error::DegenerateDenominator);
        }
        let rel = if self.is_zero() { self.trunc - self.lead } else { self.rel() }.min(o.rel());
        let unit = TruncSeries::from_coeffs(self.var, o.rel() as usize, o.coeffs.iter().cloned());
        let inv = LaurentSeries::from_series(&unit.inverse()?, -o.lead);
        if self.is_zero() {
            return Ok(Self::zero(self.var, self.lead - o.lead + rel));
        }
        let q = self.mul(&inv)?;
        Ok(q.truncate(self.lead - o.lead + rel))
    }

    /// `s^k` for `k ≥ 1`; `s^0` is `1` known to the relative precision of `s`.
    pub fn int_pow(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(Self::new(self.var, 0, self.rel().max(0), vec![Coeff::from(1)]));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> LaurentJson {
        LaurentJson { var: self.var, lead: self.lead, trunc: self.trunc, coeffs: self.coeffs.clone() }
    }

    pub fn from_json(j: LaurentJson) -> Result<Self> {
        if j.lead > j.trunc + 1 || j.coeffs.len() as i64 != j.trunc - j.lead + 1 {
            return Err(Error::Json("laurent series length does not match lead/trunc".into()));
        }
        Ok(Self::new(j.var, j.lead, j.trunc, j.coeffs))
    }
}

/// Wire form of [`LaurentSeries`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaurentJson {
    pub var: Var,
    pub lead: i64,
    pub trunc: i64,
    pub coeffs: Vec<Coeff>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(lead: i64, trunc: i64, c: &[i64]) -> LaurentSeries {
        LaurentSeries::new(Var::U, lead, trunc, c.iter().map(|&x| Coeff::from(x)).collect())
    }

    #[test]
    fn lead_is_normalized() {
        let s = u(-3, 2, &[0, 0, 5, 1]);
        assert_eq!(s.lead(), -1);
        assert_eq!(s.coeff(-3).unwrap(), Coeff::zero());
        assert_eq!(s.coeff(-1).unwrap(), Coeff::from(5));
        assert!(s.coeff(3).is_err());
        let z = u(-2, 4, &[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.lead(), 5);
    }

    #[test]
    fn add_takes_min_lead_and_trunc() {
        let a = u(-2, 4, &[1, 0, 1]);
        let b = u(0, 2, &[3, 1]);
        let s = a.add(&b).unwrap();
        assert_eq!((s.lead(), s.trunc()), (-2, 2));
        assert_eq!(s.coeff(0).unwrap(), Coeff::from(4));
        assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn mul_and_div_track_precision() {
        // u^{-2}(1 + u^2 + O(u^5)) squared: u^{-4}(1 + 2u^2 + ...) known through u^1
        let a = u(-2, 2, &[1, 0, 1]);
        let sq = a.mul(&a).unwrap();
        assert_eq!((sq.lead(), sq.trunc()), (-4, 0));
        assert_eq!(sq.coeff(-2).unwrap(), Coeff::from(2));
        let back = sq.div(&a).unwrap();
        assert_eq!(back.trunc(), 2);
        assert_eq!(back, a.truncate(back.trunc()));
        assert_eq!(a.div(&LaurentSeries::zero(Var::U, 3)), Err(Error::DegenerateDenominator));
    }

    #[test]
    fn json_round_trip() {
        let a = u(-2, 1, &[1, 0, 7, -1]).scale(&Coeff::from_ratio(1, 12));
        let j = serde_json::to_string(&a.to_json()).unwrap();
        let back = LaurentSeries::from_json(serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, a);
    }
}
