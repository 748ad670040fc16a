//! Counting partitions of given diagonal lengths by their generator count.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::HilbertFunction;

/// `binom(n, k)`, zero whenever `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n as u64 - i) / BigUint::from(i + 1);
    }
    acc
}

fn block_sizes(t: &HilbertFunction, i: usize) -> (i64, i64) {
    (t.delta(i) as i64, t.delta(i + 1) as i64)
}

/// `A_i = binom(t_{i-1} - t_{i+1} + 1, t_i - t_{i+1})`.
pub fn block_count(t: &HilbertFunction, i: usize) -> BigUint {
    let (low, high) = block_sizes(t, i);
    binomial(low + high + 1, high)
}

/// Special partitions of the component `T_i`:
/// `binom(t_{i-1} - t_{i+1} + 1, t_i - t_{i+1} - δ - 1)` with `δ = max{2t_i - t_{i+1} - t_{i-1}, 0}`.
pub fn block_special_count(t: &HilbertFunction, i: usize) -> BigUint {
    let (low, high) = block_sizes(t, i);
    let delta = (high - low).max(0);
    binomial(low + high + 1, high - delta - 1)
}

pub fn count_partitions(t: &HilbertFunction) -> BigUint {
    t.blocks().map(|i| block_count(t, i)).product()
}

/// Single-block `μ(T, k)` with `s = d + 1 - t` and `δ = max{t + 1 - s, 0}`.
pub fn mu_single(t: &HilbertFunction, k: i64) -> Result<BigUint> {
    let (s, tt) = t.single_block_params()?;
    let (s, tt) = (s as i64, tt as i64);
    let delta = (tt + 1 - s).max(0);
    let n = s + tt;
    Ok(if k == s + delta {
        binomial(n, s) - binomial(n, s + delta + 1)
    } else if k > s + delta && k <= n {
        binomial(n, k) - binomial(n, k + 1)
    } else {
        BigUint::zero()
    })
}

/// Number of single-block partitions with `κ(P) ≥ k`, valid above the generic value.
pub fn at_least_single(t: &HilbertFunction, k: i64) -> Result<BigUint> {
    let (s, tt) = t.single_block_params()?;
    Ok(binomial((s + tt) as i64, k))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaDistribution {
    pub counts: BTreeMap<usize, BigUint>,
    pub total: BigUint,
    pub generic: usize,
    pub special: BigUint,
}

impl KappaDistribution {
    pub fn mu(&self, k: usize) -> BigUint {
        self.counts.get(&k).cloned().unwrap_or_default()
    }
}

fn single_distribution(t: &HilbertFunction) -> BTreeMap<i64, BigUint> {
    let (s, tt) = t.single_block_params().expect("components are single-block");
    (1..=(s + tt) as i64)
        .filter_map(|k| {
            let v = mu_single(t, k).expect("single-block");
            (!v.is_zero()).then_some((k, v))
        })
        .collect()
}

/// `μ(T, k)` for every `k`, convolving the component distributions.
pub fn kappa_distribution(t: &HilbertFunction) -> KappaDistribution {
    let Some(j) = t.socle_degree() else {
        return finish(t, BTreeMap::from([(1, BigUint::one())]));
    };
    let d = t.order();
    if t.blocks().is_empty() {
        return finish(t, BTreeMap::from([(d + 1, BigUint::one())]));
    }
    let mut acc: BTreeMap<i64, BigUint> = BTreeMap::from([(0, BigUint::one())]);
    for (_, component) in t.single_block_components() {
        let dist = single_distribution(&component);
        let mut next = BTreeMap::new();
        for (a, x) in &acc {
            for (b, y) in &dist {
                *next.entry(a + b).or_insert_with(BigUint::zero) += x * y;
            }
        }
        acc = next;
    }
    let shift = (t.t(d) as i64 - d as i64) - (t.t(j) as i64 - j as i64);
    let counts = acc.into_iter().map(|(sum, v)| ((sum - shift) as usize, v)).collect();
    finish(t, counts)
}

fn finish(t: &HilbertFunction, counts: BTreeMap<usize, BigUint>) -> KappaDistribution {
    let generic = t.kappa();
    let total = counts.values().sum();
    let special = counts.iter().filter(|(&k, _)| k > generic).map(|(_, v)| v).sum();
    KappaDistribution { counts, total, generic, special }
}

pub fn mu(t: &HilbertFunction, k: usize) -> BigUint {
    kappa_distribution(t).mu(k)
}

/// Special partitions by inclusion-exclusion over the set of special components.
///
/// `e[m]` accumulates `Σ_{|λ| = m} S_λ A_{rest}` one block at a time.
pub fn count_special(t: &HilbertFunction) -> BigUint {
    let mut e: Vec<BigInt> = vec![BigInt::one()];
    for i in t.blocks() {
        let a = BigInt::from(block_count(t, i));
        let s = BigInt::from(block_special_count(t, i));
        let mut next = vec![BigInt::zero(); e.len() + 1];
        for (m, v) in e.iter().enumerate() {
            next[m] += v * &a;
            next[m + 1] += v * &s;
        }
        e = next;
    }
    let total: BigInt =
        e.iter().enumerate().skip(1).map(|(m, v)| if m % 2 == 1 { v.clone() } else { -v.clone() }).sum();
    debug_assert!(!total.is_negative());
    total.to_biguint().expect("special count is non-negative")
}

/// Plain subset-sum form of the same inclusion-exclusion, exponential in the block count.
pub fn count_special_by_subsets(t: &HilbertFunction) -> BigUint {
    let blocks: Vec<usize> = t.blocks().collect();
    let n = blocks.len();
    let mut total = BigInt::zero();
    for mask in 1u64..(1u64 << n) {
        let term: BigInt = blocks
            .iter()
            .enumerate()
            .map(|(b, &i)| BigInt::from(if mask >> b & 1 == 1 { block_special_count(t, i) } else { block_count(t, i) }))
            .product();
        if mask.count_ones() % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total.to_biguint().expect("special count is non-negative")
}

/// The Hilbert function of a complete intersection shape.
///
/// `plateau = 0` gives `(1, ..., d, d-1, ..., 1)`; `plateau = k ≥ 2` repeats
/// the peak `d` at `k` consecutive degrees.
pub fn ci_shape(d: usize, plateau: usize) -> Result<HilbertFunction> {
    if d < 2 {
        return Err(Error::InvalidShape(format!("order {d} is below 2")));
    }
    if plateau == 1 {
        return Err(Error::InvalidShape("a plateau needs length 0 or at least 2".into()));
    }
    let mut values: Vec<usize> = (1..=d).collect();
    values.extend(std::iter::repeat_n(d, plateau.saturating_sub(1)));
    values.extend((1..d).rev());
    HilbertFunction::new(values)
}

/// Partitions of the complete intersection shape with `κ(P) = 2`, computed as `A - S`.
pub fn ci_jordan_count(d: usize, plateau: usize) -> Result<BigUint> {
    let t = ci_shape(d, plateau)?;
    Ok(count_partitions(&t) - count_special(&t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> HilbertFunction {
        s.parse().unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn partition_counts() {
        assert_eq!(count_partitions(&t("1,2,3,4,2")), big(10));
        assert_eq!(count_partitions(&t("1,2,3,2,1")), big(9));
        assert_eq!(count_partitions(&t("1,1")), big(2));
    }

    #[test]
    fn single_block_mu() {
        let tt = t("1,2,3,4,2");
        let got: Vec<BigUint> = (2..=6).map(|k| mu_single(&tt, k).unwrap()).collect();
        assert_eq!(got, vec![big(0), big(5), big(4), big(1), big(0)]);
        assert_eq!(count_special(&tt), big(5));
        assert_eq!(binomial(5, 4), big(5));
        assert!(mu_single(&t("1,2,3,4,3,2"), 3).is_err());
    }

    #[test]
    fn multiblock_mu() {
        let tt = t("1,2,3,4,5,4,2");
        let dist = kappa_distribution(&tt);
        assert_eq!(dist.total, count_partitions(&tt));
        let a = ci_shape(3, 0).unwrap();
        assert_eq!(mu(&a, 2), big(4));
    }

    #[test]
    fn special_counts() {
        for d in 2..=6u32 {
            let tt = ci_shape(d as usize, 0).unwrap();
            assert_eq!(count_special(&tt), big(3u64.pow(d - 1) - 2u64.pow(d - 1)));
        }
        assert_eq!(count_special(&t("1,2,3,4,4,4")), big(0));
    }

    #[test]
    fn ci_counts() {
        assert_eq!(ci_shape(4, 0).unwrap(), t("1,2,3,4,3,2,1"));
        assert_eq!(ci_jordan_count(4, 0).unwrap(), big(8));
        assert_eq!(ci_jordan_count(3, 2).unwrap(), big(8));
        assert_eq!(ci_jordan_count(2, 0).unwrap(), big(2));
        assert!(matches!(ci_jordan_count(3, 1), Err(Error::InvalidShape(_))));
        assert!(matches!(ci_jordan_count(1, 0), Err(Error::InvalidShape(_))));
    }
}
