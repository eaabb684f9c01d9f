//! DT partition functions of super-rigid curve configurations, the GW side
//! from the multiple-cover formula, the change of variables `q = −e^{iu}`
//! and the coefficient-by-coefficient correspondence check.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::partitions::enumerate_partitions;
use crate::ratfun::{Poly, RatFun};
use crate::schur::pd_schur;
use crate::series::{mcmahon, Coeff, LaurentSeries, TruncSeries, Var};
use crate::vertex::pd_product;

/// `count` pairwise disjoint super-rigid rational curves, each of degree
/// `class_degree` against the chosen line class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpecies {
    pub count: u64,
    pub class_degree: u32,
}

impl CurveSpecies {
    pub fn new(count: u64, class_degree: u32) -> Result<Self> {
        if count == 0 || class_degree == 0 {
            return Err(Error::InvalidSpecies(format!("{count}:{class_degree}")));
        }
        Ok(CurveSpecies { count, class_degree })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Geometry {
    pub label: String,
    pub euler_char: i64,
    pub species: Vec<CurveSpecies>,
}

impl Geometry {
    /// A single super-rigid curve of class degree 1.
    pub fn toy() -> Self {
        Geometry {
            label: "toy".into(),
            euler_char: 0,
            species: vec![CurveSpecies { count: 1, class_degree: 1 }],
        }
    }

    /// Parses `"count:class,count:class"`.
    pub fn parse_species(s: &str) -> Result<Vec<CurveSpecies>> {
        s.split(',')
            .map(|item| {
                let (c, e) = item
                    .trim()
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidSpecies(item.to_string()))?;
                let count = c.trim().parse().map_err(|_| Error::InvalidSpecies(item.to_string()))?;
                let class = e.trim().parse().map_err(|_| Error::InvalidSpecies(item.to_string()))?;
                CurveSpecies::new(count, class)
            })
            .collect()
    }
}

/// Generic quintic threefold: 2875 lines, 609250 conics. The Euler
/// characteristic −200 is standard external data; only the unreduced
/// partition function uses it.
pub fn quintic_preset() -> Geometry {
    Geometry {
        label: "quintic".into(),
        euler_char: -200,
        species: vec![
            CurveSpecies { count: 2875, class_degree: 1 },
            CurveSpecies { count: 609_250, class_degree: 2 },
        ],
    }
}

/// Multiplicities `(d_1, …, d_s)`, all positive.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiplicityVector(Vec<u32>);

impl MultiplicityVector {
    pub fn new(d: &[i64]) -> Result<Self> {
        d.iter()
            .map(|&x| u32::try_from(x).ok().filter(|&v| v > 0).ok_or(Error::NonPositiveMultiplicity(x)))
            .collect::<Result<Vec<_>>>()
            .map(MultiplicityVector)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl FromStr for MultiplicityVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Self::default());
        }
        let v = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::InvalidSpecies(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&v)
    }
}

/// `Z(Y, 0) = M(−q)^χ` through `q^N`.
pub fn z_degree_zero(euler_char: i64, trunc: usize) -> TruncSeries {
    mcmahon(trunc).subst_neg().int_pow(euler_char).expect("M(-q) has constant term 1")
}

/// `(−1)^d P_d(−q)` in closed form.
pub fn signed_pd(d: u32) -> RatFun {
    let f = pd_schur(d).subst_neg();
    if d % 2 == 1 {
        f.neg()
    } else {
        f
    }
}

/// `Z(Y, C) = M(−q)^χ ∏_i (−1)^{d_i} P_{d_i}(−q)` through `q^N`, from the
/// product expansion of `P_d`.
pub fn z_contribution(euler_char: i64, dvec: &MultiplicityVector, trunc: usize) -> TruncSeries {
    dvec.as_slice().iter().fold(z_degree_zero(euler_char, trunc), |acc, &d| {
        let mut f = pd_product(d, trunc).subst_neg();
        if d % 2 == 1 {
            f = f.neg();
        }
        acc.mul(&f).expect("q-series")
    })
}

/// `Z′(Y, C) = ∏_i (−1)^{d_i} P_{d_i}(−q)`
pub fn z_reduced(dvec: &MultiplicityVector) -> RatFun {
    dvec.as_slice().iter().fold(RatFun::one(), |acc, &d| acc.mul(&signed_pd(d)))
}

/// `count! / ((count − ℓ)! ∏_d m_d!)` for multiplicity counts `m_d` with
/// `ℓ = Σ m_d`: the number of ways to hand the multiplicities to distinct
/// curves.
fn assignment_weight(count: u64, multiplicities: &[u32]) -> BigInt {
    let mut mult = std::collections::BTreeMap::<u32, u64>::new();
    for &d in multiplicities {
        *mult.entry(d).or_default() += 1;
    }
    let len = multiplicities.len() as u64;
    if len > count {
        return BigInt::zero();
    }
    let falling: BigInt = (0..len).map(|k| BigInt::from(count - k)).product();
    let denom: BigInt = mult
        .values()
        .map(|&m| (1..=m).map(BigInt::from).product::<BigInt>())
        .product();
    falling / denom
}

/// Reduced DT partition function of class degree `D`, summed over all
/// cycles supported on the geometry's curves.
pub fn z_reduced_class(geom: &Geometry, degree: u32) -> RatFun {
    let dmax = degree as usize;
    let signed: Vec<RatFun> = (0..=degree).map(signed_pd).collect();
    let mut total: Vec<RatFun> = vec![RatFun::zero(); dmax + 1];
    total[0] = RatFun::one();
    for sp in &geom.species {
        let e = sp.class_degree as usize;
        let mut g = vec![RatFun::zero(); dmax + 1];
        for t in 0..=dmax / e {
            let mut acc = RatFun::zero();
            for mu in enumerate_partitions(t as u32) {
                let w = assignment_weight(sp.count, mu.parts());
                if w.is_zero() {
                    continue;
                }
                let term = mu.parts().iter().fold(RatFun::one(), |a, &d| a.mul(&signed[d as usize]));
                acc = acc.add(&term.scale(&w));
            }
            g[t * e] = acc;
        }
        let mut next = vec![RatFun::zero(); dmax + 1];
        for (a, fa) in total.iter().enumerate() {
            if fa.is_zero() {
                continue;
            }
            for (b, gb) in g.iter().enumerate().take(dmax + 1 - a) {
                if !gb.is_zero() {
                    next[a + b] = next[a + b].add(&fa.mul(gb));
                }
            }
        }
        total = next;
    }
    total.swap_remove(dmax)
}

/// `Σ_g c(g, d) u^{2g−2} = (1/d) (2 sin(du/2))^{−2}` through `u^{2G−2}`.
pub fn gw_c(d: u32, genus_cutoff: u32) -> LaurentSeries {
    let g = genus_cutoff as usize;
    // 2 sin(du/2) = du · S(u), S(u) = Σ_k (−1)^k (d/2)^{2k} u^{2k} / (2k+1)!
    let half = Coeff::from_ratio(i64::from(d), 2);
    let half_sq = &half * &half;
    let mut s = TruncSeries::zero(Var::U, 2 * g);
    let mut term = Coeff::one();
    for k in 0..=g {
        if k > 0 {
            term = (&term * &half_sq).div_int(-((2 * k) as i64 * (2 * k + 1) as i64));
        }
        s = s.add(&TruncSeries::monomial(Var::U, 2 * g, 2 * k, term.clone())).expect("u-series");
    }
    let inv_sq = s.int_pow(-2).expect("S(0) = 1");
    let d3 = i64::from(d).pow(3);
    LaurentSeries::from_series(&inv_sq, -2).scale(&Coeff::from_ratio(1, d3))
}

/// The constant 1, known far enough past the working cutoff that products
/// with it never limit precision.
fn exact_one(work_cutoff: u32, degree: u32) -> LaurentSeries {
    let t = 2 * i64::from(work_cutoff) + 2 * i64::from(degree) + 2;
    LaurentSeries::new(Var::U, 0, t, vec![Coeff::one()])
}

/// `exp` of a `v`-series with Laurent coefficients and no constant term.
fn v_exp(f: &[LaurentSeries], one: LaurentSeries) -> Result<Vec<LaurentSeries>> {
    let top = one.trunc();
    let mut e = vec![one];
    for n in 1..f.len() {
        let mut acc = LaurentSeries::zero(Var::U, top);
        for k in 1..=n {
            if f[k].is_zero() {
                continue;
            }
            acc = acc.add(&f[k].mul(&e[n - k])?.scale(&Coeff::from(k as i64)))?;
        }
        e.push(acc.scale(&Coeff::from_ratio(1, n as i64)));
    }
    Ok(e)
}

/// `log` of a `v`-series with Laurent coefficients and constant term 1.
pub fn v_log(e: &[LaurentSeries]) -> Result<Vec<LaurentSeries>> {
    let trunc = e.first().map_or(0, LaurentSeries::trunc);
    let mut l = vec![LaurentSeries::zero(Var::U, trunc)];
    for n in 1..e.len() {
        let mut acc = e[n].scale(&Coeff::from(n as i64));
        for k in 1..n {
            if l[k].is_zero() || e[n - k].is_zero() {
                continue;
            }
            acc = acc.sub(&l[k].mul(&e[n - k])?.scale(&Coeff::from(k as i64)))?;
        }
        l.push(acc.scale(&Coeff::from_ratio(1, n as i64)));
    }
    Ok(l)
}

/// The GW potential `Σ_j count_j Σ_d gw_c(d) v^{d·e_j}` as `v`-coefficients
/// `0..=D`, each through `u^{2G−2}`.
pub fn gw_potential(geom: &Geometry, degree: u32, genus_cutoff: u32) -> Vec<LaurentSeries> {
    let dmax = degree as usize;
    let top = 2 * i64::from(genus_cutoff) - 2;
    let mut f = vec![LaurentSeries::zero(Var::U, top); dmax + 1];
    for sp in &geom.species {
        let e = sp.class_degree as usize;
        for d in 1..=dmax / e {
            let c = gw_c(d as u32, genus_cutoff).scale(&Coeff::from(BigInt::from(sp.count)));
            f[d * e] = f[d * e].add(&c).expect("u-series");
        }
    }
    f
}

/// `1 + Σ_D Z′_GW v^D = exp(potential)`: the coefficients `0..=D`, each
/// exact through `u^{2G−2}`.
pub fn zgw_series(geom: &Geometry, degree: u32, genus_cutoff: u32) -> Vec<LaurentSeries> {
    // A v^D term multiplies up to D potential terms of lead u^{−2}, each
    // costing two orders of u; work at a raised cutoff.
    let work = genus_cutoff + degree.saturating_sub(1);
    let top = 2 * i64::from(genus_cutoff) - 2;
    let f = gw_potential(geom, degree, work);
    let e = v_exp(&f, exact_one(work, degree)).expect("u-series");
    e.into_iter()
        .map(|s| {
            debug_assert!(s.trunc() >= top);
            s.truncate(top)
        })
        .collect()
}

/// `Z′_GW` of class degree `D` through `u^{2G−2}`.
pub fn zgw_reduced_class(geom: &Geometry, degree: u32, genus_cutoff: u32) -> LaurentSeries {
    zgw_series(geom, degree, genus_cutoff).swap_remove(degree as usize)
}

/// `−e^{iu}` through `u^K`.
fn minus_exp_iu(trunc: usize) -> TruncSeries {
    let mut c = Coeff::from(-1);
    let mut coeffs = Vec::with_capacity(trunc + 1);
    for k in 0..=trunc {
        if k > 0 {
            c = (&c * &Coeff::i()).div_int(k as i64);
        }
        coeffs.push(c.clone());
    }
    TruncSeries::from_coeffs(Var::U, trunc, coeffs)
}

/// `f(−e^{iu})` through `u^{2G−2}` without realness checks.
pub fn dt_in_u_unchecked(f: &RatFun, genus_cutoff: u32) -> Result<LaurentSeries> {
    let top = 2 * i64::from(genus_cutoff) - 2;
    let deg = f.den().degree().unwrap_or(0).max(f.num().degree().unwrap_or(0));
    // pole order at u = 0 is at most deg(den)
    let work = (top.max(0) as usize) + 2 * deg + 2;
    let inner = minus_exp_iu(work);
    let lift = |p: &Poly| {
        let c: Vec<Coeff> = p.coeffs().iter().map(|x| Coeff::from(x.clone())).collect();
        LaurentSeries::from_series(&TruncSeries::substitute_polynomial(&c, &inner), 0)
    };
    let q = lift(f.num()).div(&lift(f.den()))?;
    if q.trunc() < top {
        return Err(Error::DegenerateDenominator);
    }
    Ok(q.truncate(top))
}

/// `f(−e^{iu})` through `u^{2G−2}`; every coefficient must be real and
/// every odd power must vanish.
pub fn dt_in_u(f: &RatFun, genus_cutoff: u32) -> Result<LaurentSeries> {
    let s = dt_in_u_unchecked(f, genus_cutoff)?;
    for (e, c) in s.terms() {
        if !c.is_real() {
            return Err(Error::NonRealCoefficient(e));
        }
        if e % 2 != 0 && !c.is_zero() {
            return Err(Error::OddPowerTerm(e));
        }
    }
    Ok(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRow {
    pub u_exp: i64,
    pub dt: Coeff,
    pub gw: Coeff,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub target: String,
    pub rows: Vec<ReportRow>,
    pub q_inv_symmetric: bool,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Closed forms printed for the generic quintic in degrees 1 and 2.
pub fn quintic_printed_form(degree: u32) -> Option<RatFun> {
    match degree {
        // 2875 q/(1−q)²
        1 => Some(RatFun::from_ints(&[0, 2875], &[1, -2, 1]).expect("nonzero")),
        // −3503187500/(q − q^{−1})⁴ = −3503187500 q⁴/(q² − 1)⁴
        2 => Some(
            RatFun::new(
                Poly::monomial(BigInt::from(-3_503_187_500i64), 4),
                Poly::from_ints(&[-1, 0, 1]).pow(4),
            )
            .expect("nonzero"),
        ),
        _ => None,
    }
}

/// DT = GW under `q = −e^{iu}` for class degree `D`, compared from the
/// lowest pole (at most `u^{−2D}`, never above `u^{−2}`) through `u^{2G−2}`, together with the `q ↦ 1/q` symmetry of `Z′_DT`.
pub fn correspondence_check(geom: &Geometry, degree: u32, genus_cutoff: u32, exec: Exec) -> VerificationReport {
    let target = format!("{} degree {} genus-cutoff {}", geom.label, degree, genus_cutoff);
    let top = 2 * i64::from(genus_cutoff) - 2;
    let (dt_side, gw) = exec.join(
        || {
            let z = z_reduced_class(geom, degree);
            let u = dt_in_u_unchecked(&z, genus_cutoff);
            (z, u)
        },
        || zgw_reduced_class(geom, degree, genus_cutoff),
    );
    let (z, dt) = dt_side;
    let q_inv_symmetric = z.is_inversion_symmetric();
    let mut notes = vec![format!("Z'_DT = {z}")];
    let dt = match dt {
        Ok(s) => s,
        Err(e) => {
            notes.push(format!("u-expansion of Z'_DT failed: {e}"));
            return VerificationReport { target, rows: Vec::new(), q_inv_symmetric, verdict: Verdict::Fail, notes };
        }
    };
    let mut rows = Vec::new();
    let mut all_real = true;
    let mut odd_vanish = true;
    // degree D has poles up to u^{−2D}
    let lowest = dt.lead().min(gw.lead()).min(-2);
    for e in lowest..=top {
        let a = dt.coeff(e).expect("within cutoff");
        let b = gw.coeff(e).expect("within cutoff");
        all_real &= a.is_real() && b.is_real();
        if e % 2 != 0 {
            odd_vanish &= a.is_zero() && b.is_zero();
        }
        rows.push(ReportRow { u_exp: e, equal: a == b, dt: a, gw: b });
    }
    if !all_real {
        notes.push("nonzero imaginary part in a u-coefficient".into());
    }
    if !odd_vanish {
        notes.push("nonzero odd power of u".into());
    }
    if !q_inv_symmetric {
        notes.push("Z'_DT is not invariant under q -> 1/q".into());
    }
    if geom.label == "quintic" {
        if let Some(printed) = quintic_printed_form(degree) {
            let agree = printed.rf_eq(&z);
            notes.push(format!(
                "informational: printed closed form {printed} {} the computed Z'_DT",
                if agree { "agrees with" } else { "differs from" }
            ));
        }
    }
    let ok = rows.iter().all(|r| r.equal) && all_real;
    VerificationReport {
        target,
        rows,
        q_inv_symmetric,
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        notes,
    }
}
