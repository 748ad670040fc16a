//! Single-block components `P_i` of a partition, cut out by row and column deletion.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hilbert::HilbertFunction;
use crate::partitions::{Monomial, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEntry {
    pub degree: usize,
    #[serde(rename = "T_i")]
    pub hilbert: HilbertFunction,
    #[serde(rename = "P_i")]
    pub partition: Partition,
    #[serde(rename = "V_i1")]
    pub v1: Vec<Monomial>,
    #[serde(rename = "V_i2")]
    pub v2: Vec<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComponentDecomposition {
    pub entries: Vec<ComponentEntry>,
}

/// `(V_i1, V_i2)` for a block degree `i`.
///
/// `V_i1` is the horizontal border `A_i`, plus one vertical-border monomial when
/// `x^i` is not a cell: the one of largest ydeg still below the top of `A_i`.
/// `V_i2` holds the first `δ_{i+1}` hands of degree `i`.
pub fn component_sets(p: &Partition, i: usize) -> Result<(Vec<Monomial>, Vec<Monomial>)> {
    let t = p.diagonal_lengths();
    if !t.blocks().contains(&i) {
        return Err(t.out_of_range(i));
    }
    let (horizontal, vertical) = p.border_monomials(i);
    let mut v1 = horizontal.clone();
    if !p.contains(Monomial::new(i, 0)) {
        let top = horizontal.first().map(|m| m.ydeg);
        if let Some(&m) = vertical.iter().rev().find(|m| top.is_none_or(|y| m.ydeg < y)) {
            v1.push(m);
            v1.sort();
        }
    }
    let v2 = p.hands_of_degree(i).into_iter().take(t.delta(i + 1)).collect();
    Ok((v1, v2))
}

/// Keeps only the columns `α` and rows `β` of the monomials `x^α y^β` in `V_i1 ∪ V_i2`.
pub fn component_partition(p: &Partition, i: usize) -> Result<Partition> {
    let (v1, v2) = component_sets(p, i)?;
    Ok(restrict(p, v1.iter().chain(&v2)))
}

fn restrict<'a>(p: &Partition, monomials: impl Iterator<Item = &'a Monomial>) -> Partition {
    let mut cols = BTreeSet::new();
    let mut rows = BTreeSet::new();
    for m in monomials {
        cols.insert(m.xdeg);
        rows.insert(m.ydeg);
    }
    let parts = rows.iter().map(|&r| cols.iter().filter(|&&c| c < p.row_len(r)).count()).collect();
    Partition::from_rows(parts)
}

/// Components for every block degree. Empty blocks give the triangle `Δ_{δ_i}`.
pub fn decompose(p: &Partition) -> ComponentDecomposition {
    let t = p.diagonal_lengths();
    let entries = t
        .blocks()
        .map(|i| {
            let (v1, v2) = component_sets(p, i).expect("block in range");
            let partition =
                if v2.is_empty() { Partition::staircase(t.delta(i)) } else { restrict(p, v1.iter().chain(&v2)) };
            ComponentEntry { degree: i, hilbert: t.component(i).expect("block in range"), partition, v1, v2 }
        })
        .collect();
    ComponentDecomposition { entries }
}

impl ComponentDecomposition {
    pub fn get(&self, degree: usize) -> Option<&ComponentEntry> {
        self.entries.iter().find(|e| e.degree == degree)
    }
}
