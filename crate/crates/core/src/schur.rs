//! Principal specializations `s_λ(q) = s_λ(1, q, q², …)` from the hook
//! formula, the Schur-sum form of `P_d`, and the Cauchy identity.

use crate::bivar::QvSeries;
use crate::exec::Exec;
use crate::partitions::{enumerate_partitions, partitions_up_to, Partition};
use crate::ratfun::{Poly, RatFun};
use crate::series::{Coeff, TruncSeries};

/// `s_λ(q) = q^{b2(λ^t)} ∏_{x∈λ} (1 − q^{h(x)})^{−1}`
pub fn schur_principal_rat(lambda: &Partition) -> RatFun {
    let den = lambda.hook_lengths().into_iter().fold(Poly::from_ints(&[1]), |acc, h| {
        acc.mul(&Poly::new(one_minus_q_pow(h as usize)))
    });
    RatFun::new(Poly::monomial(1.into(), lambda.transpose().b2() as usize), den)
        .expect("hook product is nonzero")
}

fn one_minus_q_pow(h: usize) -> Vec<num_bigint::BigInt> {
    let mut v = vec![num_bigint::BigInt::from(0); h + 1];
    v[0] = 1.into();
    v[h] = (-1).into();
    v
}

/// Checks `s_{λ^t}(q) = q^{b2(λ) − b2(λ^t)} s_λ(q)` exactly.
pub fn schur_transpose_check(lambda: &Partition) -> bool {
    let t = lambda.transpose();
    let shift = lambda.b2() as i64 - t.b2() as i64;
    let rhs = RatFun::q_power(shift).mul(&schur_principal_rat(lambda));
    schur_principal_rat(&t).rf_eq(&rhs)
}

/// `P_d(q) = q^d Σ_{λ⊢d} s_λ(q) s_{λ^t}(q)`
pub fn pd_schur(d: u32) -> RatFun {
    let sum = enumerate_partitions(d).iter().fold(RatFun::zero(), |acc, l| {
        acc.add(&schur_principal_rat(l).mul(&schur_principal_rat(&l.transpose())))
    });
    RatFun::q_power(i64::from(d)).mul(&sum)
}

/// `∏_{i,j≥1} (1 + q^{i+j−1} v)` through `(q^N, v^D)`, one factor per
/// cell `(i, j)`. Factors with `i + j − 1 > N` cannot contribute.
pub fn cauchy_product(q_trunc: usize, v_trunc: usize) -> Vec<TruncSeries> {
    let mut acc = QvSeries::one(q_trunc, v_trunc);
    let one = Coeff::from(1);
    for i in 1..=q_trunc {
        for j in 1..=q_trunc + 1 - i {
            acc.mul_binomial(&one, i + j - 1, 1);
        }
    }
    acc.into_coeffs()
}

/// `Σ_{|λ|≤D} s_λ(q) s_{λ^t}(q) q^{|λ|} v^{|λ|}` through `(q^N, v^D)`.
pub fn cauchy_schur_side(q_trunc: usize, v_trunc: usize, exec: Exec) -> Vec<TruncSeries> {
    let shapes = partitions_up_to(v_trunc as u32);
    let terms = exec.map(&shapes, |l| {
        let f = schur_principal_rat(l)
            .mul(&schur_principal_rat(&l.transpose()))
            .mul(&RatFun::q_power(l.size() as i64));
        (l.size() as usize, f.expand(q_trunc).expect("no pole at q = 0"))
    });
    let mut out = vec![TruncSeries::zero(crate::series::Var::Q, q_trunc); v_trunc + 1];
    for (d, s) in terms {
        out[d] = out[d].add(&s).expect("q-series");
    }
    out
}

/// Cauchy identity: both sides agree through `(q^N, v^D)`.
pub fn cauchy_check(q_trunc: usize, v_trunc: usize, exec: Exec) -> bool {
    cauchy_schur_side(q_trunc, v_trunc, exec) == cauchy_product(q_trunc, v_trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Var;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn principal_specializations() {
        assert_eq!(schur_principal_rat(&Partition::empty()), RatFun::one());
        assert_eq!(schur_principal_rat(&p(&[1])), RatFun::from_ints(&[1], &[1, -1]).unwrap());
        let expect = RatFun::from_ints(&[0, 1], &[1, -1]).unwrap().mul(&RatFun::from_ints(&[1], &[1, 0, -1]).unwrap());
        assert_eq!(schur_principal_rat(&p(&[1, 1])), expect);
    }

    // s_λ(1, q, q², …) as a sum over semistandard tableaux: brute force
    // over weakly-increasing rows / strictly-increasing columns with
    // entries bounded by the q-order.
    fn ssyt_series(l: &Partition, n: usize) -> Vec<i64> {
        let cells: Vec<_> = l.cells().collect();
        let mut counts = vec![0i64; n + 1];
        let mut fill = vec![0usize; cells.len()];
        fn rec(k: usize, cells: &[crate::partitions::Cell], fill: &mut Vec<usize>, sum: usize, n: usize, counts: &mut Vec<i64>) {
            if k == cells.len() {
                counts[sum] += 1;
                return;
            }
            let c = cells[k];
            let mut lo = 0;
            if c.col > 0 {
                lo = lo.max(fill[k - 1]);
            }
            if c.row > 0 {
                let above = cells.iter().position(|x| x.row == c.row - 1 && x.col == c.col).unwrap();
                lo = lo.max(fill[above] + 1);
            }
            for v in lo..=n {
                if sum + v > n {
                    break;
                }
                fill[k] = v;
                rec(k + 1, cells, fill, sum + v, n, counts);
            }
        }
        rec(0, &cells, &mut fill, 0, n, &mut counts);
        counts
    }

    #[test]
    fn hook_formula_matches_tableaux() {
        for l in partitions_up_to(5) {
            let s = schur_principal_rat(&l).expand(10).unwrap();
            assert_eq!(s, TruncSeries::from_ints(Var::Q, 10, &ssyt_series(&l, 10)), "{l}");
        }
    }

    #[test]
    fn transpose_identity() {
        assert!(schur_transpose_check(&p(&[1])));
        assert!(schur_transpose_check(&p(&[2])));
        let lhs = schur_principal_rat(&p(&[1, 1]));
        assert_eq!(lhs, RatFun::q_power(1).mul(&schur_principal_rat(&p(&[2]))));
        assert!(partitions_up_to(8).iter().all(schur_transpose_check));
    }

    #[test]
    fn pd_from_schur_sum() {
        assert_eq!(pd_schur(0), RatFun::one());
        assert_eq!(pd_schur(1), RatFun::from_ints(&[0, 1], &[1, -2, 1]).unwrap());
        let den = Poly::from_ints(&[1, -1]).pow(4).mul(&Poly::from_ints(&[1, 1]).pow(2));
        assert_eq!(pd_schur(2), RatFun::new(Poly::from_ints(&[0, 0, 0, 2]), den).unwrap());
    }

    #[test]
    fn principal_specializations_are_positive() {
        for l in partitions_up_to(6) {
            let s = schur_principal_rat(&l).expand(20).unwrap();
            for c in s.coeffs() {
                let z = c.to_integer().expect("integer coefficient");
                assert!(z >= 0.into(), "{l}");
            }
        }
    }

    #[test]
    fn cauchy_identity() {
        assert!(cauchy_check(0, 0, Exec::Sequential));
        assert!(cauchy_check(12, 4, Exec::Parallel));
        assert!(cauchy_check(20, 6, Exec::Parallel));
    }
}
