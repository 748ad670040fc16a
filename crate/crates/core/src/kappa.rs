//! Generic generator counts `κ(P)` of the cells `V(E_P)`, computed from hook codes.

use serde::{Deserialize, Serialize};

use crate::components::decompose;
use crate::error::{Error, Result};
use crate::hilbert::{HilbertFunction, PlateauSplit};
use crate::hookcode::{hook_code, CodeBlock};
use crate::partitions::{Monomial, Partition};

/// Number of minimal generators in each degree `d, d+1, ..., j+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorProfile {
    pub start_degree: usize,
    pub counts: Vec<usize>,
}

impl GeneratorProfile {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn at(&self, degree: usize) -> usize {
        degree.checked_sub(self.start_degree).and_then(|k| self.counts.get(k)).copied().unwrap_or(0)
    }

    /// Counts indexed from degree 0.
    pub fn dense(&self) -> Vec<usize> {
        let mut out = vec![0; self.start_degree];
        out.extend_from_slice(&self.counts);
        out
    }
}

/// Run-length statistics of one nonempty block `h_i = (h_1^l_1, ..., h_n^l_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCodeStats {
    pub degree: usize,
    pub delta_low: usize,
    pub delta_high: usize,
    pub runs: Vec<(usize, usize)>,
    pub tau: Vec<i64>,
    pub r: Vec<i64>,
    pub g: Vec<i64>,
    pub theta: Vec<i64>,
}

pub fn runs(parts: &[usize]) -> Vec<(usize, usize)> {
    parts.chunk_by(|a, b| a == b).map(|run| (run[0], run.len())).collect()
}

/// `τ_k = Σ_{j≥k} l_j - h_k`.
pub fn taus(runs: &[(usize, usize)]) -> Vec<i64> {
    (0..runs.len()).map(|k| runs[k..].iter().map(|&(_, l)| l as i64).sum::<i64>() - runs[k].0 as i64).collect()
}

impl BlockCodeStats {
    fn from_block(block: &CodeBlock, delta_low: usize, delta_high: usize) -> Self {
        let runs = runs(&block.parts);
        let tau = taus(&runs);
        let (r, g) = case_forms(&runs, delta_low as i64, delta_high as i64);
        let theta = g.iter().zip(&r).map(|(g, r)| g - r).collect();
        BlockCodeStats { degree: block.degree, delta_low, delta_high, runs, tau, r, g, theta }
    }

    pub fn n(&self) -> usize {
        self.runs.len()
    }

    /// `r_{i,k}` and `g_{i,k}` in the compact closed form.
    pub fn compact_forms(&self) -> (Vec<i64>, Vec<i64>) {
        let n = self.runs.len() as i64;
        let last = self.runs.last().map_or(0, |&(h, _)| h) as i64;
        let tail_bonus = (1 - last).max(0);
        let mut r = Vec::new();
        let mut g = Vec::new();
        for k in 0..self.runs.len() {
            let h = self.runs[k].0 as i64;
            let below: i64 = self.runs[k..].iter().map(|&(_, l)| l as i64).sum();
            let kk = k as i64 + 1;
            r.push(h - (n + 1 - kk) + tail_bonus);
            g.push(below - (n + 1 - kk) + tail_bonus + (h - self.delta_low as i64).max(0));
        }
        (r, g)
    }

    /// Minimal generators in degree `i+1`: `max{δ_{i+1} - δ_i, 0, τ_k}`.
    pub fn beta(&self) -> usize {
        let rise = self.delta_high as i64 - self.delta_low as i64;
        self.tau.iter().copied().chain([rise, 0]).max().unwrap_or(0) as usize
    }

    /// Corner monomials of `E_P` in degree `i+1`.
    pub fn corners(&self) -> usize {
        self.g[0] as usize
    }
}

/// Case-split forms, distinguishing `h_n > 0` from `h_n = 0`.
fn case_forms(runs: &[(usize, usize)], delta_low: i64, delta_high: i64) -> (Vec<i64>, Vec<i64>) {
    let n = runs.len() as i64;
    let full = runs[0].0 as i64 == delta_low + 1;
    let zero_tail = runs[runs.len() - 1].0 == 0;
    let shift = if zero_tail { 1 } else { 0 };
    let mut r = Vec::new();
    let mut g = Vec::new();
    for k in 0..runs.len() {
        let kk = k as i64 + 1;
        r.push(runs[k].0 as i64 - (n + 1 - kk) + shift);
        if k == 0 {
            let base = delta_high - n + shift;
            g.push(if full { base + 1 } else { base });
        } else {
            let below: i64 = runs[k..].iter().map(|&(_, l)| l as i64).sum();
            g.push(below - (n + 1 - kk) + shift);
        }
    }
    (r, g)
}

pub fn block_stats(p: &Partition, i: usize) -> Result<BlockCodeStats> {
    let t = p.diagonal_lengths();
    if !t.blocks().contains(&i) {
        return Err(t.out_of_range(i));
    }
    if t.delta(i + 1) == 0 {
        return Err(Error::EmptyBlock(i));
    }
    let code = hook_code(p);
    let block = code.block(i).expect("every block degree is present");
    Ok(BlockCodeStats::from_block(block, t.delta(i), t.delta(i + 1)))
}

/// Stats for every nonempty block of `P`.
pub fn all_block_stats(p: &Partition) -> Vec<BlockCodeStats> {
    let t = p.diagonal_lengths();
    hook_code(p)
        .blocks
        .iter()
        .filter(|b| !b.parts.is_empty())
        .map(|b| BlockCodeStats::from_block(b, t.delta(b.degree), t.delta(b.degree + 1)))
        .collect()
}

/// `κ(P) = s + max{t + 1 - s, 0, τ_k}` for `T = (1, ..., d, t)`.
pub fn kappa_single_block(p: &Partition) -> Result<usize> {
    let t = p.diagonal_lengths();
    let (s, tt) = t.single_block_params()?;
    let code = hook_code(p);
    let taus = code.blocks.first().map(|b| taus(&runs(&b.parts))).unwrap_or_default();
    let extra = taus.into_iter().chain([tt as i64 + 1 - s as i64, 0]).max().unwrap_or(0);
    Ok(s + extra as usize)
}

pub fn beta_profile(p: &Partition) -> GeneratorProfile {
    let t = p.diagonal_lengths();
    let d = t.order();
    let mut counts = vec![d + 1 - t.t(d)];
    let stats = all_block_stats(p);
    for i in t.blocks() {
        counts.push(stats.iter().find(|s| s.degree == i).map_or(0, BlockCodeStats::beta));
    }
    GeneratorProfile { start_degree: d, counts }
}

pub fn kappa(p: &Partition) -> usize {
    beta_profile(p).total()
}

pub fn is_special(p: &Partition) -> bool {
    kappa(p) != p.diagonal_lengths().kappa()
}

/// Single-block specialness: some `τ_k` exceeds `max{t + 1 - s, 0}`.
pub fn is_special_single_block(p: &Partition) -> Result<bool> {
    let t = p.diagonal_lengths();
    let (s, tt) = t.single_block_params()?;
    let delta = (tt as i64 + 1 - s as i64).max(0);
    let code = hook_code(p);
    Ok(code.blocks.first().is_some_and(|b| taus(&runs(&b.parts)).into_iter().any(|tau| tau > delta)))
}

/// Specialness read off the components: `P` is special iff some `P_i` is.
pub fn is_special_componentwise(p: &Partition) -> bool {
    decompose(p).entries.iter().any(|e| {
        e.hilbert.is_single_block()
            && !e.partition.is_empty()
            && kappa_single_block(&e.partition).unwrap() != e.hilbert.kappa()
    })
}

/// `κ(P) = Σ κ(P_i) - (t_d - t_j) - (j - d)`.
pub fn kappa_via_components(p: &Partition) -> usize {
    let t = p.diagonal_lengths();
    let Some(j) = t.socle_degree() else { return 1 };
    let d = t.order();
    if t.blocks().is_empty() {
        return d + 1;
    }
    let sum: i64 = decompose(p)
        .entries
        .iter()
        .map(|e| {
            if e.v2.is_empty() {
                t.delta(e.degree) as i64 + 1
            } else {
                kappa_single_block(&e.partition).expect("components are single-block") as i64
            }
        })
        .sum();
    let total = sum - (t.t(d) as i64 - t.t(j) as i64) - (j as i64 - d as i64);
    total as usize
}

/// Cuts `P` along a plateau split of its Hilbert function.
///
/// In the plateau degree the cells form an x-side run of `b` rows and a
/// y-side run of `a` columns; `P(2)` is what lies beyond both.
pub fn split_partition(p: &Partition, split: &PlateauSplit) -> (Partition, Partition) {
    let i = split.start;
    let cells = p.standard_monomials(i);
    let rows = cells.iter().enumerate().take_while(|&(k, m)| m.ydeg == k).count();
    let cols = cells.iter().rev().enumerate().take_while(|&(k, m)| m.xdeg == k).count();
    assert_eq!(rows + cols, split.plateau, "plateau degree cells of {p} are not two runs");
    let first = Partition::from_rows(
        p.parts().iter().enumerate().map(|(r, &len)| if r < rows { len } else { len.min(cols) }).collect(),
    );
    let second = Partition::from_rows(p.parts().iter().skip(rows).map(|&len| len.saturating_sub(cols)).collect());
    (first, second)
}

/// `κ(P) = Σ κ(P(k)) - r + 1` over the elementary factors.
pub fn kappa_via_elementary(p: &Partition) -> usize {
    match p.diagonal_lengths().plateau_split() {
        None => kappa(p),
        Some(split) => {
            let (first, second) = split_partition(p, &split);
            kappa_via_elementary(&first) + kappa_via_elementary(&second) - 1
        }
    }
}

/// Single-block recursion through `(I : x)`, which removes the first column.
pub fn kappa_by_recursion(p: &Partition) -> Result<usize> {
    let t = p.diagonal_lengths();
    let (s, tt) = t.single_block_params()?;
    if tt == 0 {
        return Ok(s);
    }
    let code = hook_code(p);
    let last = *code.blocks[0].parts.last().expect("single block has t parts");
    let below = kappa_by_recursion(&p.without_first_column())?;
    Ok(if last == 0 { below + 1 } else { below.max(s) })
}

/// `b_i(E_P)` for degrees `d, ..., j+1`.
pub fn monomial_betti(p: &Partition) -> GeneratorProfile {
    let t = p.diagonal_lengths();
    let d = t.order();
    let mut counts = vec![d + 1 - t.t(d)];
    let stats = all_block_stats(p);
    for i in t.blocks() {
        counts.push(stats.iter().find(|s| s.degree == i).map_or(0, BlockCodeStats::corners));
    }
    GeneratorProfile { start_degree: d, counts }
}

/// Corner monomials of `E_P` grouped by degree.
pub fn corner_profile(p: &Partition) -> Vec<usize> {
    let corners: Vec<Monomial> = p.corner_monomials();
    let top = corners.iter().map(Monomial::degree).max().unwrap_or(0);
    let mut out = vec![0; top + 1];
    for m in corners {
        out[m.degree()] += 1;
    }
    out
}

pub fn kappa_t(t: &HilbertFunction) -> usize {
    t.kappa()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn single_block_values() {
        assert_eq!(kappa_single_block(&p("4,3,2,2,1")).unwrap(), 5);
        assert_eq!(kappa_single_block(&p("7,7,5,4,4,3,1,1")).unwrap(), 6);
        assert_eq!(kappa_single_block(&p("3,1")).unwrap(), 2);
        assert_eq!(kappa_single_block(&p("2,2,1")).unwrap(), 3);
        assert!(matches!(kappa_single_block(&p("6,3,3,3")), Err(Error::NotSingleBlock(_))));
    }

    #[test]
    fn worked_profiles() {
        let big = p("15,12^4,11,7,6^2,5,3^4");
        let prof = beta_profile(&big);
        assert_eq!(prof.counts, vec![4, 2, 0, 1]);
        assert_eq!(corner_profile(&big)[15..], [1, 1]);
        assert_eq!(prof.total(), 7);
        assert_eq!(kappa_via_components(&big), 7);

        let flat = p("10^2,4,3^2,2^5");
        assert_eq!(kappa(&flat), 5);
        assert_eq!(kappa_via_components(&flat), 5);
        assert_eq!(kappa_via_elementary(&flat), 5);
        let split = flat.diagonal_lengths().plateau_split().unwrap();
        assert_eq!(split_partition(&flat, &split), (p("10^2,2^8"), p("2,1,1")));

        let nine = p("14^2,12,11^2,10,7^2,5^3,4,3,1");
        let prof = beta_profile(&nine);
        assert_eq!((prof.at(14), prof.at(15)), (5, 1));
        assert_eq!(block_stats(&nine, 14).unwrap().tau[1], 1);

        assert_eq!(kappa(&p("5,3,1")), 2);
        assert_eq!(kappa(&p("3,3,1,1,1")), 3);
    }

    #[test]
    fn special_flags() {
        assert!(is_special(&p("3,3,1,1,1")));
        assert!(!is_special(&p("5,3,1")));
        assert!(!is_special(&p("5,4,2,1")));
    }

    #[test]
    fn betti_examples() {
        let q = p("9,7,7,6,4,4,2,1");
        let b = monomial_betti(&q);
        assert_eq!((b.at(8), b.at(9), b.total()), (5, 2, 7));
        assert_eq!(block_stats(&q, 8).unwrap().corners(), 2);
        assert_eq!(monomial_betti(&p("1")).counts, vec![2]);
    }

    #[test]
    fn generic_block_stats() {
        let t: HilbertFunction = "1,2,3,4,3,2".parse().unwrap();
        let generic = p("6,5,3,1");
        for i in t.blocks() {
            let st = block_stats(&generic, i).unwrap();
            assert_eq!((st.g[0], st.r[0]), (st.delta_high as i64, st.delta_low as i64));
        }
    }

    #[test]
    fn empty_block_rejected() {
        assert!(matches!(block_stats(&p("10^2,4,3^2,2^5"), 8), Err(Error::EmptyBlock(8))));
    }
}
