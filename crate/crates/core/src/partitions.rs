//! Integer partitions, Young-diagram cells and the hook/weight statistics
//! used by the vertex and Schur computations.
//!
//! Cells are 0-based `(row, col)` in English convention: `(i, j)` lies in
//! `λ` iff `j < λ_i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. The empty partition is
/// a legal value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Row length `λ_i`, zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (cell.col as u64) < u64::from(self.part(cell.row))
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| Cell::new(i, j)))
    }

    pub fn hook_length(&self, cell: Cell) -> Result<u32> {
        if !self.contains(cell) {
            return Err(Error::InvalidCell { row: cell.row, col: cell.col });
        }
        let arm = self.part(cell.row) as usize - cell.col - 1;
        let leg = self.0[cell.row..]
            .iter()
            .take_while(|&&p| p as usize > cell.col)
            .count()
            - 1;
        Ok((arm + leg + 1) as u32)
    }

    /// Hook lengths of all cells, row-major.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.transpose();
        self.cells()
            .map(|c| (self.part(c.row) as usize - c.col) as u32 + conj.part(c.col) - c.row as u32 - 1)
            .collect()
    }

    /// `Σ_i binom(λ_i, 2)`
    pub fn b2(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p) * u64::from(p.saturating_sub(1)) / 2).sum()
    }

    /// `Σ_{(i,j)∈λ} (i + j + 1)`, the renormalization weight of an infinite
    /// leg of shape `λ`.
    pub fn leg_weight(&self) -> u64 {
        self.cells().map(|c| (c.row + c.col + 1) as u64).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, `""` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// All partitions of `d`, lexicographically decreasing.
pub fn enumerate_partitions(d: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `d`, grouped by size ascending.
pub fn partitions_up_to(d: u32) -> Vec<Partition> {
    (0..=d).flat_map(enumerate_partitions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // Euler's pentagonal recurrence, independent of the enumerator.
    fn partition_numbers(n: usize) -> Vec<u64> {
        let mut t = vec![0i64; n + 1];
        t[0] = 1;
        for i in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let s = if k % 2 == 1 { 1 } else { -1 };
                t[i] += s * t[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    t[i] += s * t[i - g2];
                }
                k += 1;
            }
        }
        t.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_partitions(5).len(), 7);
    }

    #[test]
    fn enumerate_counts_match_pentagonal_recurrence() {
        let counts = partition_numbers(30);
        for d in 0..=30u32 {
            let parts = enumerate_partitions(d);
            assert_eq!(parts.len() as u64, counts[d as usize], "d = {d}");
            assert!(parts.windows(2).all(|w| w[0] > w[1]), "order at d = {d}");
            assert!(parts.iter().all(|l| l.size() == u64::from(d)));
        }
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn hook_examples() {
        assert_eq!(p(&[1]).hook_length(Cell::new(0, 0)).unwrap(), 1);
        assert_eq!(p(&[2, 1]).hook_length(Cell::new(0, 0)).unwrap(), 3);
        assert_eq!(p(&[3, 1]).hook_length(Cell::new(0, 1)).unwrap(), 2);
        assert_eq!(
            p(&[3, 1]).hook_length(Cell::new(1, 1)),
            Err(Error::InvalidCell { row: 1, col: 1 })
        );
        assert!(Partition::empty().hook_length(Cell::new(0, 0)).is_err());
    }

    #[test]
    fn b2_and_leg_weight_examples() {
        assert_eq!(Partition::empty().b2(), 0);
        assert_eq!(p(&[2]).b2(), 1);
        assert_eq!(p(&[3, 2]).b2(), 4);
        assert_eq!(p(&[1]).leg_weight(), 1);
        assert_eq!(p(&[2]).leg_weight(), 3);
        assert_eq!(Partition::empty().leg_weight(), 0);
    }

    #[test]
    fn weight_and_hook_identities_up_to_eight() {
        for l in partitions_up_to(8) {
            let t = l.transpose();
            let rhs = l.size() + l.b2() + t.b2();
            assert_eq!(l.leg_weight(), rhs, "{l}");
            let hooks: u64 = l.hook_lengths().iter().map(|&h| u64::from(h)).sum();
            assert_eq!(hooks, rhs, "{l}");
        }
    }

    #[test]
    fn hook_lengths_agree_with_cellwise() {
        for l in partitions_up_to(7) {
            let direct: Vec<u32> = l.cells().map(|c| l.hook_length(c).unwrap()).collect();
            assert_eq!(direct, l.hook_lengths());
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 2, 1]).to_string(), "3,2,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1u32..8, 0..8).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition(v)
        })
    }

    proptest! {
        #[test]
        fn transpose_is_involution(l in arb_partition()) {
            let t = l.transpose();
            prop_assert_eq!(t.size(), l.size());
            prop_assert_eq!(t.transpose(), l);
        }

        #[test]
        fn hook_multiset_is_transpose_invariant(l in arb_partition()) {
            let mut a = l.hook_lengths();
            let mut b = l.transpose().hook_lengths();
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
        }
    }
}
