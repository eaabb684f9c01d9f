//! Three-dimensional partitions with one infinite leg, the box-counting
//! function `p(n, d)` by enumeration and by generating function, and the
//! one-leg vertex identity.
//!
//! A 3D partition asymptotic to `λ` along the z-axis is stored as a height
//! function on cells outside `λ`; the columns over `λ` are implicitly
//! infinite and impose no constraint. Its renormalized volume is the sum of
//! the finite heights.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::Zero;
use parking_lot::RwLock;
use serde::{Serialize, Serializer};

use crate::bivar::QvSeries;
use crate::exec::Exec;
use crate::partitions::{enumerate_partitions, partitions_up_to, Cell, Partition};
use crate::schur::{cauchy_product, schur_principal_rat};
use crate::series::{mcmahon, Coeff, TruncSeries, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticPP {
    shape: Partition,
    heights: BTreeMap<Cell, u32>,
}

impl AsymptoticPP {
    /// Validates that keys avoid `λ`, heights are positive and weakly
    /// decrease along rows and columns.
    pub fn new(shape: Partition, heights: BTreeMap<Cell, u32>) -> Option<Self> {
        let pp = AsymptoticPP { shape, heights };
        pp.is_valid().then_some(pp)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn heights(&self) -> &BTreeMap<Cell, u32> {
        &self.heights
    }

    pub fn height(&self, cell: Cell) -> Option<u32> {
        if self.shape.contains(cell) {
            return None;
        }
        Some(self.heights.get(&cell).copied().unwrap_or(0))
    }

    pub fn volume(&self) -> u64 {
        self.heights.values().map(|&h| u64::from(h)).sum()
    }

    fn is_valid(&self) -> bool {
        self.heights.iter().all(|(&c, &h)| {
            if h == 0 || self.shape.contains(c) {
                return false;
            }
            let up = c.row.checked_sub(1).map(|r| Cell::new(r, c.col));
            let left = c.col.checked_sub(1).map(|k| Cell::new(c.row, k));
            [up, left].into_iter().flatten().all(|n| self.height(n).map_or(true, |hn| hn >= h))
        })
    }
}

/// Depth-first enumeration over complement cells in row-major order,
/// heights tried in descending order.
struct Search<'a, F> {
    shape: &'a Partition,
    max_volume: u64,
    /// `rows[i][k]` is the height at column `λ_i + k`.
    rows: Vec<Vec<u32>>,
    visit: F,
}

impl<F: FnMut(u64, &[Vec<u32>])> Search<'_, F> {
    fn run(&mut self) {
        self.rows.push(Vec::new());
        self.cell(0, self.max_volume);
    }

    fn height(&self, i: usize, j: usize) -> Option<u32> {
        let start = self.shape.part(i) as usize;
        if j < start {
            return None;
        }
        Some(self.rows.get(i).and_then(|r| r.get(j - start)).copied().unwrap_or(0))
    }

    fn finish(&mut self, remaining: u64) {
        (self.visit)(self.max_volume - remaining, &self.rows);
    }

    fn cell(&mut self, i: usize, remaining: u64) {
        if remaining == 0 {
            self.finish(remaining);
            return;
        }
        let start = self.shape.part(i) as usize;
        let j = start + self.rows[i].len();
        let mut bound = remaining;
        if i > 0 {
            if let Some(h) = self.height(i - 1, j) {
                bound = bound.min(u64::from(h));
            }
        }
        if j > start {
            bound = bound.min(u64::from(*self.rows[i].last().expect("nonempty row")));
        }
        for h in (1..=bound).rev() {
            self.rows[i].push(h as u32);
            self.cell(i, remaining - h);
            self.rows[i].pop();
        }
        // Height 0 closes the row. An empty row at or below the last part
        // of λ forces every later row to be empty.
        if self.rows[i].is_empty() && i >= self.shape.len() {
            self.finish(remaining);
            return;
        }
        self.rows.push(Vec::new());
        self.cell(i + 1, remaining);
        self.rows.pop();
    }
}

fn to_pp(shape: &Partition, rows: &[Vec<u32>]) -> AsymptoticPP {
    let mut heights = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        let start = shape.part(i) as usize;
        for (k, &h) in row.iter().enumerate() {
            heights.insert(Cell::new(i, start + k), h);
        }
    }
    AsymptoticPP { shape: shape.clone(), heights }
}

/// Calls `f` on every partition asymptotic to `λ` with renormalized volume
/// exactly `m`.
pub fn for_each_app(shape: &Partition, m: u64, mut f: impl FnMut(&AsymptoticPP)) {
    let mut s = Search {
        shape,
        max_volume: m,
        rows: Vec::new(),
        visit: |vol: u64, rows: &[Vec<u32>]| {
            if vol == m {
                f(&to_pp(shape, rows));
            }
        },
    };
    s.run();
}

/// Counts of partitions asymptotic to `λ` for every volume `0..=max`.
pub fn app_counts(shape: &Partition, max_volume: u64) -> Vec<u64> {
    let mut counts = vec![0u64; max_volume as usize + 1];
    let mut s = Search {
        shape,
        max_volume,
        rows: Vec::new(),
        visit: |vol: u64, _: &[Vec<u32>]| counts[vol as usize] += 1,
    };
    s.run();
    counts
}

/// Memoized enumeration counts per shape. Safe to share across threads;
/// concurrent fills of the same shape store identical results.
#[derive(Debug, Default)]
pub struct VertexCounter {
    memo: RwLock<HashMap<Partition, Vec<u64>>>,
}

impl VertexCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Counts for volumes `0..=max`.
    pub fn counts(&self, shape: &Partition, max_volume: u64) -> Vec<u64> {
        let want = max_volume as usize + 1;
        if let Some(c) = self.memo.read().get(shape) {
            if c.len() >= want {
                return c[..want].to_vec();
            }
        }
        let c = app_counts(shape, max_volume);
        let mut memo = self.memo.write();
        let slot = memo.entry(shape.clone()).or_default();
        if slot.len() < c.len() {
            *slot = c.clone();
        }
        c
    }

    pub fn enumerate_app(&self, shape: &Partition, m: u64) -> u64 {
        self.counts(shape, m)[m as usize]
    }

    /// Fills the memo for every shape of size `≤ max_d` up to the volume
    /// that `p(n, d)` with `n ≤ max_n` can need.
    pub fn prefill(&self, max_n: u64, max_d: u32, exec: Exec) {
        let shapes: Vec<_> = partitions_up_to(max_d)
            .into_iter()
            .filter(|l| l.leg_weight() <= max_n)
            .collect();
        exec.map(&shapes, |l| self.counts(l, max_n - l.leg_weight()));
    }

    pub fn p_enumerate(&self, n: u64, d: u32) -> BoxCount {
        let mut count = BigUint::zero();
        for l in enumerate_partitions(d) {
            let w = l.leg_weight();
            if w > n {
                continue;
            }
            let c = self.counts(&l, n - w);
            let rest = (n - w) as usize;
            for a in 0..=rest {
                count += BigUint::from(c[a]) * BigUint::from(c[rest - a]);
            }
        }
        BoxCount { n, d, count }
    }

    /// `p(n, d)` for all `n ≤ max_n`, `d ≤ max_d`, indexed `[d][n]`.
    pub fn p_table(&self, max_n: u64, max_d: u32, exec: Exec) -> Vec<Vec<BoxCount>> {
        self.prefill(max_n, max_d, exec);
        let ds: Vec<u32> = (0..=max_d).collect();
        exec.map(&ds, |&d| (0..=max_n).map(|n| self.p_enumerate(n, d)).collect())
    }

    /// Checks `q^{b2(λ)} Σ_π q^{|π|} = M(q) s_{λ^t}(q)` through `q^N`.
    pub fn vertex_one_leg_check(&self, shape: &Partition, trunc: usize) -> bool {
        let counts = self.counts(shape, trunc as u64);
        let lhs = TruncSeries::from_coeffs(Var::Q, trunc, counts.iter().map(|&c| Coeff::from(c as i64)))
            .shift(shape.b2() as usize);
        let rhs = schur_principal_rat(&shape.transpose())
            .expand(trunc)
            .and_then(|s| s.mul(&mcmahon(trunc)))
            .expect("no pole at q = 0");
        lhs == rhs
    }
}

/// `p(n, d)`: the number of triples `(π₀, λ, π_∞)` with `|λ| = d` and
/// `n = |π₀| + |π_∞| + Σ_{(i,j)∈λ} (i+j+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoxCount {
    pub n: u64,
    pub d: u32,
    #[serde(serialize_with = "as_decimal")]
    pub count: BigUint,
}

impl BoxCount {
    /// `(−1)^{n−d} p(n, d)`, the signed count of the local model.
    pub fn signed(&self) -> num_bigint::BigInt {
        let c = num_bigint::BigInt::from(self.count.clone());
        if (self.n + u64::from(self.d)) % 2 == 1 {
            -c
        } else {
            c
        }
    }
}

fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Number of partitions asymptotic to `λ` with renormalized volume `m`.
pub fn enumerate_app(shape: &Partition, m: u64) -> u64 {
    app_counts(shape, m)[m as usize]
}

pub fn p_enumerate(n: u64, d: u32) -> BoxCount {
    VertexCounter::new().p_enumerate(n, d)
}

pub fn signed_local(n: u64, d: u32) -> num_bigint::BigInt {
    p_enumerate(n, d).signed()
}

/// `v^d`-coefficient of `∏_{m≥1} (1 + q^m v)^m` through `q^N`, each factor
/// expanded binomially.
pub fn pd_product(d: u32, trunc: usize) -> TruncSeries {
    pd_product_all(d, trunc).swap_remove(d as usize)
}

/// `P_0, …, P_D` through `q^N` from one product expansion.
pub fn pd_product_all(max_d: u32, trunc: usize) -> Vec<TruncSeries> {
    let dmax = max_d as usize;
    let mut coeffs = vec![TruncSeries::zero(Var::Q, trunc); dmax + 1];
    coeffs[0] = TruncSeries::one(Var::Q, trunc);
    for m in 1..=trunc {
        // (1 + q^m v)^m = Σ_k binom(m, k) q^{mk} v^k
        let mut next = coeffs.clone();
        let mut binom: i64 = 1;
        for k in 1..=m.min(dmax) {
            binom = binom * (m - k + 1) as i64 / k as i64;
            if m * k > trunc {
                break;
            }
            let c = Coeff::from(binom);
            for dd in k..=dmax {
                let add = coeffs[dd - k].shift(m * k).scale(&c);
                next[dd] = next[dd].add(&add).expect("q-series");
            }
        }
        coeffs = next;
    }
    coeffs
}

/// `M(q)² P_d(q)` through `q^N`.
pub fn p_gf(d: u32, trunc: usize) -> TruncSeries {
    let m = mcmahon(trunc);
    m.mul(&m).and_then(|m2| m2.mul(&pd_product(d, trunc))).expect("q-series")
}

pub fn vertex_one_leg_check(shape: &Partition, trunc: usize) -> bool {
    VertexCounter::new().vertex_one_leg_check(shape, trunc)
}

/// Compares `Σ_{n≤N, d≤D} p(n,d) q^n v^d` against
/// `M(q)² ∏_{i,j} (1 + q^{i+j−1} v)` coefficient-wise.
pub fn bivariate_check(counter: &VertexCounter, q_trunc: usize, v_trunc: u32, exec: Exec) -> bool {
    let table = counter.p_table(q_trunc as u64, v_trunc, exec);
    let enumerated: Vec<TruncSeries> = table
        .iter()
        .map(|row| {
            TruncSeries::from_coeffs(
                Var::Q,
                q_trunc,
                row.iter().map(|b| Coeff::from(num_bigint::BigInt::from(b.count.clone()))),
            )
        })
        .collect();
    let m = mcmahon(q_trunc);
    let m2 = m.mul(&m).expect("q-series");
    let rhs = QvSeries::from_coeffs(cauchy_product(q_trunc, v_trunc as usize)).mul_q(&m2);
    enumerated.as_slice() == rhs.coeffs()
}
