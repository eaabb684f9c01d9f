//! End-to-end acceptance criteria. Each criterion prints one PASS/FAIL line
//! straight to stderr so the lines survive output capture.

use std::io::Write;
use std::process::Command;

use rigid_dt::dtgw::{correspondence_check, quintic_preset, z_degree_zero, z_reduced_class, Geometry};
use rigid_dt::schur::{cauchy_check, pd_schur};
use rigid_dt::vertex::{bivariate_check, pd_product, VertexCounter};
use rigid_dt::{enumerate_partitions, Cell, Coeff, Exec, Partition};

const GENUS_CUTOFF: u32 = 6;

fn line(n: u32, title: &str, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "criterion {n:>2} [{tag}] {title}: {detail}");
}

/// Plane partitions of each size up to `max`, one row partition at a time
/// under the row above.
fn plane_partition_counts(max: usize) -> Vec<i128> {
    fn rows(left: usize, above: &[usize], acc: &mut Vec<i128>, used: usize) {
        acc[used] += 1;
        // Every nonempty row fitting under `above` with total at most `left`.
        let mut row = Vec::new();
        fn next(
            col: usize,
            cap: usize,
            left: usize,
            above: &[usize],
            row: &mut Vec<usize>,
            acc: &mut Vec<i128>,
            used: usize,
            row_sum: usize,
        ) {
            if col < above.len() {
                for h in 1..=cap.min(above[col]).min(left) {
                    row.push(h);
                    rows(left - h, row, acc, used + row_sum + h);
                    next(col + 1, h, left - h, above, row, acc, used, row_sum + h);
                    row.pop();
                }
            }
        }
        next(0, usize::MAX, left, above, &mut row, acc, used, 0);
    }
    let mut acc = vec![0i128; max + 1];
    rows(max, &vec![max; max], &mut acc, 0);
    acc
}

/// Coefficients of `v^d` in `prod_{m>=1} (1 + q^m v)^m` through `q^n`.
fn pd_naive(max_d: usize, n: usize) -> Vec<Vec<i128>> {
    let mut t = vec![vec![0i128; n + 1]; max_d + 1];
    t[0][0] = 1;
    for m in 1..=n {
        for _ in 0..m {
            for d in (1..=max_d).rev() {
                for k in (m..=n).rev() {
                    t[d][k] += t[d - 1][k - m];
                }
            }
        }
    }
    t
}

fn mul_trunc(a: &[i128], b: &[i128]) -> Vec<i128> {
    let n = a.len().min(b.len());
    (0..n).map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum()).collect()
}

fn series_ints(s: &rigid_dt::TruncSeries, n: usize) -> Vec<Coeff> {
    (0..=n).map(|k| s.coeff(k).unwrap().clone()).collect()
}

fn ints(v: &[i128]) -> Vec<Coeff> {
    v.iter().map(|&x| Coeff::from(i64::try_from(x).unwrap())).collect()
}

fn box_counting() -> bool {
    let (max_n, max_d) = (12usize, 4usize);
    let pp = plane_partition_counts(max_n);
    let m2 = mul_trunc(&pp, &pp);
    let pd = pd_naive(max_d, max_n);
    let table = VertexCounter::new().p_table(max_n as u64, max_d as u32, Exec::Parallel);
    let mut bad = Vec::new();
    for d in 0..=max_d {
        let want = mul_trunc(&m2, &pd[d]);
        for n in 0..=max_n {
            let got = &table[d][n];
            if got.n != n as u64 || got.count != num_bigint::BigUint::try_from(want[n]).unwrap() {
                bad.push(format!("p({n},{d})"));
            }
        }
    }
    let pass = bad.is_empty();
    line(1, "box-counting lemma", pass, &format!("n<=12, d<=4, mismatches {bad:?}"));
    pass
}

fn pd_triple() -> bool {
    let n = 30;
    let naive = pd_naive(6, n);
    let mut bad = Vec::new();
    for d in 0..=6u32 {
        let oracle = ints(&naive[d as usize]);
        let product = series_ints(&pd_product(d, n), n);
        let closed = series_ints(&pd_schur(d).expand(n).unwrap(), n);
        if product != oracle || closed != oracle {
            bad.push(d);
        }
    }
    let pass = bad.is_empty();
    line(2, "P_d product / Schur sum / expansion", pass, &format!("d<=6 through q^30, mismatches {bad:?}"));
    pass
}

fn inversion() -> bool {
    let mut bad = Vec::new();
    for d in 0..=6 {
        let p = pd_schur(d);
        if !p.rf_eq(&p.subst_inv()) {
            bad.push(format!("P_{d}"));
        }
    }
    let q = quintic_preset();
    for d in [1, 2] {
        let z = z_reduced_class(&q, d);
        if !z.rf_eq(&z.subst_inv()) {
            bad.push(format!("quintic D={d}"));
        }
    }
    let pass = bad.is_empty();
    line(3, "q -> 1/q invariance", pass, &format!("P_d for d<=6, quintic D in {{1,2}}, failures {bad:?}"));
    pass
}

fn one_leg() -> bool {
    let counter = VertexCounter::new();
    let shapes: Vec<Partition> = (0..=3).flat_map(enumerate_partitions).collect();
    let bad: Vec<String> =
        shapes.iter().filter(|l| !counter.vertex_one_leg_check(l, 8)).map(|l| format!("({l})")).collect();
    let pass = bad.is_empty() && shapes.len() == 7;
    line(4, "one-leg vertex", pass, &format!("{} shapes |λ|<=3 through q^8, failures {bad:?}", shapes.len()));
    pass
}

fn cauchy_bivariate() -> bool {
    let c = cauchy_check(12, 4, Exec::Parallel);
    let b = bivariate_check(&VertexCounter::new(), 10, 3, Exec::Parallel);
    let pass = c && b;
    line(5, "Cauchy and bivariate identities", pass, &format!("cauchy(12,4)={c}, bivariate(q^10,v^3)={b}"));
    pass
}

fn partition_stats() -> bool {
    let mut bad = Vec::new();
    let mut seen = 0;
    for d in 0..=8 {
        for l in enumerate_partitions(d) {
            seen += 1;
            let parts = l.parts();
            let conj: Vec<usize> =
                (0..parts.first().copied().unwrap_or(0) as usize).map(|j| parts.iter().filter(|&&p| p as usize > j).count()).collect();
            let mut hooks = 0u64;
            let mut legs = 0u64;
            for (i, &p) in parts.iter().enumerate() {
                for j in 0..p as usize {
                    hooks += (p as usize - j - 1 + conj[j] - i - 1 + 1) as u64;
                    legs += (i + j + 1) as u64;
                }
            }
            // Sum of binom(row length, 2) equals the sum of column indices.
            let b2 = |xs: &[usize]| xs.iter().map(|&x| (x * x.saturating_sub(1) / 2) as u64).sum::<u64>();
            let rows: Vec<usize> = parts.iter().map(|&p| p as usize).collect();
            let (b, bt) = (b2(&rows), b2(&conj));
            let size = l.size();
            let lib_hooks: u64 = l.hook_lengths().iter().map(|&h| h as u64).sum();
            let lib_cell = l.cells().all(|c: Cell| l.hook_length(c).is_ok());
            if legs != size + b + bt
                || hooks != size + b + bt
                || l.leg_weight() != legs
                || lib_hooks != hooks
                || l.b2() != b
                || l.transpose().b2() != bt
                || !lib_cell
            {
                bad.push(format!("({l})"));
            }
        }
    }
    let pass = bad.is_empty();
    line(6, "leg weight and total hook length", pass, &format!("{seen} partitions |λ|<=8, failures {bad:?}"));
    pass
}

fn correspondence() -> (bool, Vec<rigid_dt::dtgw::VerificationReport>) {
    let mut reports = Vec::new();
    let q = quintic_preset();
    for d in [1, 2] {
        reports.push(correspondence_check(&q, d, GENUS_CUTOFF, Exec::Parallel));
    }
    for d in 1..=4 {
        reports.push(correspondence_check(&Geometry::toy(), d, GENUS_CUTOFF, Exec::Parallel));
    }
    let mut bad = Vec::new();
    for r in &reports {
        let covered = (-2..=10).all(|e| r.rows.iter().any(|row| row.u_exp == e));
        let rows_ok = r.rows.iter().all(|row| {
            row.equal && row.dt.is_real() && (row.u_exp % 2 == 0 || num_traits::Zero::is_zero(&row.dt))
        });
        if !(r.passed() && covered && rows_ok) {
            bad.push(r.target.clone());
        }
    }
    let pass = bad.is_empty();
    line(7, "GW/DT correspondence", pass, &format!("quintic D<=2, toy D<=4, G=6, u^-2..u^10, failures {bad:?}"));
    (pass, reports)
}

fn degree_zero() -> bool {
    let n = 15;
    // log M(q) = sum_n sigma_2(n) q^n / n, then exp by the power-sum recurrence.
    let sigma2 = |k: i64| (1..=k).filter(|d| k % d == 0).map(|d| d * d).sum::<i64>();
    let mut bad = Vec::new();
    for chi in [-200i64, 0, 3] {
        // Coefficients of x d/dx log M(-q)^chi.
        let dl: Vec<Coeff> = (0..=n as i64)
            .map(|k| if k == 0 { Coeff::from(0) } else { Coeff::from(chi * sigma2(k) * if k % 2 == 1 { -1 } else { 1 }) })
            .collect();
        let mut a = vec![Coeff::from(1)];
        for k in 1..=n {
            let mut s = Coeff::from(0);
            for j in 1..=k {
                s += &(dl[j].clone() * a[k - j].clone());
            }
            a.push(s.div_int(k as i64));
        }
        if series_ints(&z_degree_zero(chi, n), n) != a {
            bad.push(format!("chi={chi}"));
        }
    }
    let pp = plane_partition_counts(12);
    let signed: Vec<i128> = pp.iter().enumerate().map(|(k, &c)| if k % 2 == 1 { -c } else { c }).collect();
    if series_ints(&z_degree_zero(1, 12), 12) != ints(&signed) {
        bad.push("chi=1".into());
    }
    let pass = bad.is_empty();
    line(8, "degree-zero series", pass, &format!("chi in {{-200,0,3}} through q^15, chi=1 through q^12, failures {bad:?}"));
    pass
}

fn quintic_display(reports: &[rigid_dt::dtgw::VerificationReport], consistent: bool) -> bool {
    let quintic: Vec<_> = reports.iter().filter(|r| r.target.contains("quintic")).collect();
    let noted: Vec<String> = quintic
        .iter()
        .flat_map(|r| r.notes.iter().filter(|n| n.starts_with("informational: printed closed form")).cloned())
        .collect();
    let pass = quintic.len() == 2 && noted.len() == 2 && consistent;
    line(9, "quintic printed-form comparison", pass, &noted.join(" | "));
    pass
}

fn determinism() -> bool {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_rigid-dt"))
            .args(["verify", "--suite", "all"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let pass = a.status.success() && b.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    line(10, "determinism of verify --suite all", pass, &format!("{} bytes, exit {:?}", a.stdout.len(), a.status.code()));
    pass
}

#[test]
fn acceptance_criteria() {
    let mut results = vec![box_counting(), pd_triple(), inversion(), one_leg(), cauchy_bivariate(), partition_stats()];
    let (corr, reports) = correspondence();
    results.push(corr);
    results.push(degree_zero());
    results.push(quintic_display(&reports, corr));
    results.push(determinism());
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, &p)| !p).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
