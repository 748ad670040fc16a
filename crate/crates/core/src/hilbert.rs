//! Hilbert functions `T = (1, 2, ..., d, t_d, ..., t_j)` of height-two graded quotients.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::text;

/// A validated Hilbert function with order `d` and socle degree `j`.
///
/// `values` never carries trailing zeros. The empty sequence stands for the
/// zero quotient and only arises as a degenerate component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HilbertFunction {
    values: Vec<usize>,
    order: usize,
}

/// The box `height × width` bounding block `degree` of every hook code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockBox {
    pub degree: usize,
    pub height: usize,
    pub width: usize,
}

impl BlockBox {
    pub fn area(&self) -> usize {
        self.height * self.width
    }
}

impl HilbertFunction {
    pub fn new(mut values: Vec<usize>) -> Result<Self> {
        while values.last() == Some(&0) {
            values.pop();
        }
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        Self::validated(values)
    }

    fn validated(values: Vec<usize>) -> Result<Self> {
        let order = values.iter().enumerate().position(|(i, &t)| t != i + 1).unwrap_or(values.len());
        if let Some(&t) = values.get(order) {
            if t > order {
                return Err(Error::NonUnimodalShape(format!("t_{order} = {t} exceeds the order {order}")));
            }
        }
        let tail = &values[order.min(values.len())..];
        if let Some(k) = tail.iter().position(|&t| t == 0) {
            return Err(Error::NonUnimodalShape(format!("t_{} = 0 before the end", order + k)));
        }
        if let Some(k) = tail.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NonUnimodalShape(format!(
                "t_{} = {} < t_{} = {}",
                order + k,
                tail[k],
                order + k + 1,
                tail[k + 1]
            )));
        }
        Ok(HilbertFunction { values, order })
    }

    /// Diagonal counts of an order ideal; always of the required shape.
    pub(crate) fn from_partition_counts(values: Vec<usize>) -> Self {
        Self::validated(values).expect("diagonal counts of a partition form a Hilbert function")
    }

    /// `(1, 2, ..., m)`; for `m = 0` the zero quotient.
    pub fn triangle(m: usize) -> Self {
        HilbertFunction { values: (1..=m).collect(), order: m }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Length of the sequence, i.e. `j + 1`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Socle degree `j`; `None` for the zero quotient.
    pub fn socle_degree(&self) -> Option<usize> {
        self.values.len().checked_sub(1)
    }

    pub fn weight(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn t(&self, i: usize) -> usize {
        self.values.get(i).copied().unwrap_or(0)
    }

    pub fn is_triangle(&self) -> bool {
        self.order == self.values.len()
    }

    /// At most one nonempty block: `T = (1, ..., d, t)`.
    pub fn is_single_block(&self) -> bool {
        self.values.len() <= self.order + 1
    }

    /// Degrees `d..=j` indexing the blocks of a hook code.
    pub fn blocks(&self) -> Range<usize> {
        self.order..self.values.len()
    }

    /// `δ_i = t_{i-1} - t_i` with `t_{d-1} = d`; negative below the order.
    pub fn signed_delta(&self, i: usize) -> isize {
        let before = if i == 0 { self.order } else { self.t(i - 1) };
        before as isize - self.t(i) as isize
    }

    /// `δ_i` for `i ≥ d`.
    pub fn delta(&self, i: usize) -> usize {
        let v = self.signed_delta(i);
        debug_assert!(v >= 0 && (i >= self.order || self.order == 0));
        v.max(0) as usize
    }

    /// `(δ_d, ..., δ_{j+1})`.
    pub fn deltas(&self) -> Vec<usize> {
        (self.order..=self.values.len()).map(|i| self.delta(i)).collect()
    }

    pub fn block_box(&self, i: usize) -> BlockBox {
        BlockBox { degree: i, height: self.delta(i + 1), width: 1 + self.delta(i) }
    }

    pub fn boxes(&self) -> Vec<BlockBox> {
        self.blocks().map(|i| self.block_box(i)).collect()
    }

    /// Generic number of generators over `G_T`: `1 + δ_d + Σ_{i≥d} [δ_{i+1} - δ_i]^+`.
    pub fn kappa(&self) -> usize {
        let d = self.order;
        let rises: usize = (d..=self.values.len())
            .map(|i| (self.delta(i + 1) as isize - self.delta(i) as isize).max(0) as usize)
            .sum();
        1 + self.delta(d) + rises
    }

    /// `dim G_T = Σ (δ_i + 1) δ_{i+1}`.
    pub fn dim(&self) -> usize {
        self.boxes().iter().map(BlockBox::area).sum()
    }

    /// `s = d + 1 - t_d` and `t = t_d` of a single-block function.
    pub fn single_block_params(&self) -> Result<(usize, usize)> {
        if !self.is_single_block() {
            return Err(Error::NotSingleBlock(self.to_string()));
        }
        let t = self.t(self.order);
        Ok((self.order + 1 - t, t))
    }

    /// The single-block component `(1, ..., d_i, δ_{i+1})` of block `i`, `d_i = δ_i + δ_{i+1}`.
    pub fn component(&self, i: usize) -> Result<HilbertFunction> {
        if !self.blocks().contains(&i) {
            return Err(self.out_of_range(i));
        }
        let (low, high) = (self.delta(i), self.delta(i + 1));
        let mut values: Vec<usize> = (1..=low + high).collect();
        values.push(high);
        while values.last() == Some(&0) {
            values.pop();
        }
        Ok(Self::validated(values).expect("components have the required shape"))
    }

    pub fn single_block_components(&self) -> Vec<(usize, HilbertFunction)> {
        self.blocks().map(|i| (i, self.component(i).expect("block in range"))).collect()
    }

    pub(crate) fn out_of_range(&self, i: usize) -> Error {
        Error::DegreeOutOfRange { degree: i, low: self.order, high: self.values.len().saturating_sub(1) }
    }

    /// Splits off the first plateau `t_i = ... = t_{i+k} = s < d`, `k ≥ 1`.
    pub fn plateau_split(&self) -> Option<PlateauSplit> {
        let d = self.order;
        let start = (d..self.values.len().saturating_sub(1))
            .find(|&i| self.values[i] == self.values[i + 1] && self.values[i] < d)?;
        let s = self.values[start];
        let end = (start..self.values.len()).take_while(|&u| self.values[u] == s).last()?;
        let first: Vec<usize> = (0..self.values.len())
            .map(|u| {
                if u < s {
                    u + 1
                } else if u <= end {
                    s
                } else {
                    self.values[u]
                }
            })
            .collect();
        let second: Vec<usize> = (0..=start - s).map(|u| self.values[u + s] - s).collect();
        Some(PlateauSplit {
            first: HilbertFunction::from_partition_counts(strip(first)),
            second: HilbertFunction::from_partition_counts(strip(second)),
            plateau: s,
            start,
        })
    }

    /// Fully splits into elementary factors; `[self]` when already elementary.
    pub fn elementary_factors(&self) -> Vec<HilbertFunction> {
        match self.plateau_split() {
            None => vec![self.clone()],
            Some(split) => {
                let mut out = split.first.elementary_factors();
                out.extend(split.second.elementary_factors());
                out
            }
        }
    }

    pub fn is_elementary(&self) -> bool {
        self.plateau_split().is_none()
    }
}

fn strip(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// One split of `T` at a plateau of height `s` starting at degree `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlateauSplit {
    pub first: HilbertFunction,
    pub second: HilbertFunction,
    pub plateau: usize,
    pub start: usize,
}

impl PlateauSplit {
    /// Inverse of the split: `t_u = first_u + second_{u-s}`.
    pub fn splice(&self) -> HilbertFunction {
        let s = self.plateau;
        let values =
            (0..self.first.len()).map(|u| self.first.t(u) + if u >= s { self.second.t(u - s) } else { 0 }).collect();
        HilbertFunction::from_partition_counts(strip(values))
    }
}

/// All Hilbert functions of total weight at most `max_weight`, excluding the zero quotient.
pub fn all_with_weight_at_most(max_weight: usize) -> Vec<HilbertFunction> {
    let mut out = Vec::new();
    for d in 1.. {
        let prefix = d * (d + 1) / 2;
        if prefix > max_weight {
            break;
        }
        let mut tail = Vec::new();
        tails(d, max_weight - prefix, &mut tail, &mut |tail| {
            let mut values: Vec<usize> = (1..=d).collect();
            values.extend_from_slice(tail);
            out.push(HilbertFunction::validated(values).expect("generated shape is valid"));
        });
    }
    out
}

fn tails(cap: usize, budget: usize, tail: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    emit(tail);
    for part in (1..=cap.min(budget)).rev() {
        tail.push(part);
        tails(part, budget - part, tail, emit);
        tail.pop();
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text::join(&self.values))
    }
}

impl FromStr for HilbertFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Err(Error::EmptyInput);
        }
        let values =
            text::items(s).into_iter().map(|(offset, item)| text::number(offset, item)).collect::<Result<Vec<_>>>()?;
        HilbertFunction::new(values)
    }
}

impl Serialize for HilbertFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HilbertFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let values = Vec::<usize>::deserialize(deserializer)?;
        if values.iter().all(|&v| v == 0) {
            return Ok(HilbertFunction::triangle(0));
        }
        HilbertFunction::new(values).map_err(serde::de::Error::custom)
    }
}
