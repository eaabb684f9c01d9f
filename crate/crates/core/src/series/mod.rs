//! Exact formal power series and Laurent series over Gaussian rationals.

mod coeff;
mod laurent;
mod trunc;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use coeff::Coeff;
pub use laurent::{LaurentJson, LaurentSeries};
pub use trunc::{mcmahon, SeriesJson, TruncSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    Q,
    V,
    U,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::Q => "q",
            Var::V => "v",
            Var::U => "u",
        })
    }
}

/// Writes `Σ c_k x^k + O(x^{trunc+1})`, skipping zero terms.
fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    var: Var,
    terms: impl Iterator<Item = (i64, &'a Coeff)>,
    trunc: i64,
) -> fmt::Result {
    use num_traits::{One, Zero};
    let mut first = true;
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        match e {
            0 => write!(f, "{c}")?,
            _ if c.is_one() => write!(f, "{var}^{e}")?,
            _ => write!(f, "{c}*{var}^{e}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    write!(f, " + O({var}^{})", trunc + 1)
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs().iter().enumerate().map(|(k, c)| (k as i64, c));
        write_terms(f, self.var(), terms, self.trunc() as i64)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.var(), self.terms(), self.trunc())
    }
}
