//! Named identity checks bundled by the `verify` command.

use serde::{Deserialize, Serialize};

use crate::dtgw::{correspondence_check, quintic_preset, z_degree_zero, Geometry, VerificationReport};
use crate::exec::Exec;
use crate::partitions::partitions_up_to;
use crate::schur::{cauchy_check, pd_schur};
use crate::series::{Coeff, TruncSeries, Var};
use crate::vertex::{app_counts, bivariate_check, p_gf, pd_product_all, VertexCounter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Quintic,
    Toy,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        CheckResult { name: name.to_string(), pass, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
    pub reports: Vec<VerificationReport>,
    pub verdict: crate::dtgw::Verdict,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.verdict == crate::dtgw::Verdict::Pass
    }
}

/// `p(n, d)` by enumeration against `M(q)² P_d(q)` for `n ≤ N`, `d ≤ D`.
pub fn box_counting_lemma(max_n: u64, max_d: u32, exec: Exec) -> CheckResult {
    let counter = VertexCounter::new();
    let table = counter.p_table(max_n, max_d, exec);
    let mut bad = Vec::new();
    for (d, row) in table.iter().enumerate() {
        let gf = p_gf(d as u32, max_n as usize);
        for b in row {
            let want = gf.coeff(b.n as usize).expect("within order");
            if Coeff::from(num_bigint::BigInt::from(b.count.clone())) != *want {
                bad.push(format!("p({},{})", b.n, d));
            }
        }
    }
    CheckResult::new(
        "box-counting-lemma",
        bad.is_empty(),
        format!("n<={max_n}, d<={max_d}; mismatches: [{}]", bad.join(", ")),
    )
}

/// Product, Schur-sum and closed-form expansions of `P_d` agree.
pub fn pd_agreement(max_d: u32, trunc: usize) -> CheckResult {
    let product = pd_product_all(max_d, trunc);
    let bad: Vec<String> = (0..=max_d)
        .filter(|&d| {
            let closed = pd_schur(d).expand(trunc).expect("no pole at q = 0");
            closed != product[d as usize]
        })
        .map(|d| d.to_string())
        .collect();
    CheckResult::new("pd-agreement", bad.is_empty(), format!("d<={max_d} through q^{trunc}; mismatches: [{}]", bad.join(", ")))
}

pub fn pd_inversion_symmetry(max_d: u32) -> CheckResult {
    let bad: Vec<String> =
        (0..=max_d).filter(|&d| !pd_schur(d).is_inversion_symmetric()).map(|d| d.to_string()).collect();
    CheckResult::new("pd-inversion-symmetry", bad.is_empty(), format!("d<={max_d}; asymmetric: [{}]", bad.join(", ")))
}

pub fn one_leg_vertex(max_size: u32, trunc: usize, exec: Exec) -> CheckResult {
    let counter = VertexCounter::new();
    let shapes = partitions_up_to(max_size);
    let ok = exec.map(&shapes, |l| counter.vertex_one_leg_check(l, trunc));
    let bad: Vec<String> =
        shapes.iter().zip(&ok).filter(|(_, &p)| !p).map(|(l, _)| format!("({l})")).collect();
    CheckResult::new(
        "one-leg-vertex",
        bad.is_empty(),
        format!("|lambda|<={max_size} through q^{trunc}; failing: [{}]", bad.join(", ")),
    )
}

pub fn cauchy(q_trunc: usize, v_trunc: usize, exec: Exec) -> CheckResult {
    let pass = cauchy_check(q_trunc, v_trunc, exec);
    CheckResult::new("cauchy-identity", pass, format!("through q^{q_trunc}, v^{v_trunc}"))
}

pub fn bivariate(q_trunc: usize, v_trunc: u32, exec: Exec) -> CheckResult {
    let pass = bivariate_check(&VertexCounter::new(), q_trunc, v_trunc, exec);
    CheckResult::new("bivariate-box-counting", pass, format!("through q^{q_trunc}, v^{v_trunc}"))
}

pub fn partition_identities(max_size: u32) -> CheckResult {
    let bad: Vec<String> = partitions_up_to(max_size)
        .into_iter()
        .filter(|l| {
            let rhs = l.size() + l.b2() + l.transpose().b2();
            let hooks: u64 = l.hook_lengths().iter().map(|&h| u64::from(h)).sum();
            l.leg_weight() != rhs || hooks != rhs
        })
        .map(|l| format!("({l})"))
        .collect();
    CheckResult::new("partition-identities", bad.is_empty(), format!("|lambda|<={max_size}; failing: [{}]", bad.join(", ")))
}

/// `log M(q) = Σ_n σ₂(n) q^n / n`, independent of the product expansion.
pub fn mcmahon_log(trunc: usize) -> TruncSeries {
    let coeffs = (0..=trunc).map(|n| {
        if n == 0 {
            return Coeff::from(0);
        }
        let s: i64 = (1..=n as i64).filter(|m| n as i64 % m == 0).map(|m| m * m).sum();
        Coeff::from_ratio(s, n as i64)
    });
    TruncSeries::from_coeffs(Var::Q, trunc, coeffs)
}

/// `M(−q)^χ` against `exp(χ log M(−q))`, and `M(−q)` against signed
/// plane-partition counts.
pub fn degree_zero(chis: &[i64], trunc: usize, pp_trunc: usize) -> CheckResult {
    let log_neg = mcmahon_log(trunc).subst_neg();
    let mut bad = Vec::new();
    for &chi in chis {
        let want = log_neg.scale(&Coeff::from(chi)).exp().expect("zero constant term");
        if z_degree_zero(chi, trunc) != want {
            bad.push(format!("chi={chi}"));
        }
    }
    let pp = app_counts(&crate::partitions::Partition::empty(), pp_trunc as u64);
    let signed = TruncSeries::from_coeffs(
        Var::Q,
        pp_trunc,
        pp.iter().enumerate().map(|(n, &c)| Coeff::from(if n % 2 == 0 { c as i64 } else { -(c as i64) })),
    );
    if z_degree_zero(1, pp_trunc) != signed {
        bad.push("chi=1 vs plane partitions".into());
    }
    CheckResult::new(
        "degree-zero",
        bad.is_empty(),
        format!("chi in {chis:?} through q^{trunc}; plane partitions through q^{pp_trunc}; failing: [{}]", bad.join(", ")),
    )
}

/// Runs a suite. `degree` restricts the correspondence checks to a single
/// class degree.
pub fn run_suite(suite: Suite, degree: Option<u32>, genus_cutoff: u32, exec: Exec) -> SuiteReport {
    let mut checks = Vec::new();
    let mut reports = Vec::new();
    let pick = |default: &[u32]| -> Vec<u32> { degree.map_or_else(|| default.to_vec(), |d| vec![d]) };
    if matches!(suite, Suite::All) {
        checks.push(partition_identities(8));
        checks.push(pd_agreement(6, 30));
        checks.push(pd_inversion_symmetry(6));
        checks.push(box_counting_lemma(12, 4, exec));
        checks.push(one_leg_vertex(3, 8, exec));
        checks.push(cauchy(12, 4, exec));
        checks.push(bivariate(10, 3, exec));
        checks.push(degree_zero(&[-200, 0, 3], 15, 12));
    }
    if matches!(suite, Suite::Quintic | Suite::All) {
        let q = quintic_preset();
        for d in pick(&[1, 2]) {
            reports.push(correspondence_check(&q, d, genus_cutoff, exec));
        }
    }
    if matches!(suite, Suite::Toy | Suite::All) {
        let t = Geometry::toy();
        for d in pick(&[1, 2, 3, 4]) {
            reports.push(correspondence_check(&t, d, genus_cutoff, exec));
        }
    }
    let ok = checks.iter().all(|c| c.pass) && reports.iter().all(|r| r.passed() && r.q_inv_symmetric);
    SuiteReport {
        suite,
        checks,
        reports,
        verdict: if ok { crate::dtgw::Verdict::Pass } else { crate::dtgw::Verdict::Fail },
    }
}
