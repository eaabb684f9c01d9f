//! Series in `v` whose coefficients are truncated `q`-series.

use num_traits::Zero;

use crate::series::{Coeff, TruncSeries, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct QvSeries {
    /// `coeffs[d]` is the `v^d` coefficient.
    coeffs: Vec<TruncSeries>,
}

impl QvSeries {
    pub fn one(q_trunc: usize, v_trunc: usize) -> Self {
        let mut coeffs = vec![TruncSeries::zero(Var::Q, q_trunc); v_trunc + 1];
        coeffs[0] = TruncSeries::one(Var::Q, q_trunc);
        QvSeries { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<TruncSeries>) -> Self {
        QvSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[TruncSeries] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<TruncSeries> {
        self.coeffs
    }

    /// In-place multiplication by `1 + c·q^m·v^k`.
    pub fn mul_binomial(&mut self, c: &Coeff, m: usize, k: usize) {
        let qt = self.coeffs[0].trunc();
        if m > qt || k >= self.coeffs.len() || c.is_zero() {
            return;
        }
        for d in (k..self.coeffs.len()).rev() {
            let add = self.coeffs[d - k].shift(m).scale(c);
            self.coeffs[d] = self.coeffs[d].add(&add).expect("q-series");
        }
    }

    /// Multiplies every `v`-coefficient by a `q`-series.
    pub fn mul_q(&self, s: &TruncSeries) -> Self {
        QvSeries { coeffs: self.coeffs.iter().map(|c| c.mul(s).expect("q-series")).collect() }
    }
}
