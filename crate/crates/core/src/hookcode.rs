//! Difference-one hook codes and the bijection between `P(T)` and `Q(T)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{BlockBox, HilbertFunction};
use crate::partitions::{enumerate_partitions, Partition};
use crate::text;

/// The partition `h_i` attached to degree `i`. Parts are non-increasing and
/// may include trailing zeros, one part per row of the box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CodeBlock {
    pub degree: usize,
    pub parts: Vec<usize>,
}

impl CodeBlock {
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts with trailing zeros dropped.
    pub fn nonzero_parts(&self) -> &[usize] {
        let n = self.parts.iter().take_while(|&&p| p > 0).count();
        &self.parts[..n]
    }

    fn fits(&self, b: &BlockBox) -> bool {
        self.parts.len() <= b.height
            && self.parts.iter().all(|&p| p <= b.width)
            && self.parts.windows(2).all(|w| w[0] >= w[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HookCode {
    pub blocks: Vec<CodeBlock>,
}

impl HookCode {
    pub fn size(&self) -> usize {
        self.blocks.iter().map(CodeBlock::size).sum()
    }

    pub fn block(&self, degree: usize) -> Option<&CodeBlock> {
        self.blocks.iter().find(|b| b.degree == degree)
    }

    /// Pads every block with zeros to its box height, checking that it fits `𝔅(T)`.
    pub fn normalized(&self, t: &HilbertFunction) -> Result<HookCode> {
        let boxes = t.boxes();
        let overflow = || Error::BoxOverflow(format!("{self} in boxes of {t}"));
        if self.blocks.len() > boxes.len() {
            return Err(overflow());
        }
        let mut blocks = Vec::with_capacity(boxes.len());
        for b in &boxes {
            let mut parts = match self.block(b.degree) {
                Some(block) => block.parts.clone(),
                None => Vec::new(),
            };
            while parts.len() > b.height && parts.last() == Some(&0) {
                parts.pop();
            }
            let block = CodeBlock { degree: b.degree, parts };
            if !block.fits(b) {
                return Err(overflow());
            }
            let mut parts = block.parts;
            parts.resize(b.height, 0);
            blocks.push(CodeBlock { degree: b.degree, parts });
        }
        if self.blocks.iter().any(|blk| boxes.iter().all(|b| b.degree != blk.degree)) {
            return Err(overflow());
        }
        Ok(HookCode { blocks })
    }

    /// Subscripted rendering `(1)_4,(2,1)_5`; empty blocks render as `()_i`.
    pub fn human(&self) -> String {
        self.blocks.iter().map(|b| format!("({})_{}", text::join(&b.parts), b.degree)).collect::<Vec<_>>().join(",")
    }

    /// Codes covered by `self`: one box removed from one block.
    pub fn lower_covers(&self) -> Vec<HookCode> {
        let mut out = Vec::new();
        for (bi, block) in self.blocks.iter().enumerate() {
            for k in 0..block.parts.len() {
                let v = block.parts[k];
                if v > 0 && block.parts.get(k + 1).is_none_or(|&next| next < v) {
                    let mut lower = self.clone();
                    lower.blocks[bi].parts[k] -= 1;
                    out.push(lower);
                }
            }
        }
        out
    }
}

impl fmt::Display for HookCode {
    /// `4:1;5:2,1`, with an empty block written `6:`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> =
            self.blocks.iter().map(|b| format!("{}:{}", b.degree, text::join(&b.parts))).collect();
        write!(f, "{}", blocks.join(";"))
    }
}

impl FromStr for HookCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        if s.trim().is_empty() {
            return Ok(HookCode { blocks });
        }
        let mut offset = 0;
        for chunk in s.split(';') {
            let (label, body) = chunk
                .split_once(':')
                .ok_or_else(|| Error::Parse { position: offset, message: "expected `degree:parts`".into() })?;
            let lead = label.len() - label.trim_start().len();
            let degree = text::number(offset + lead, label.trim())?;
            let body_offset = offset + label.len() + 1;
            let parts = if body.trim().is_empty() {
                Vec::new()
            } else {
                text::items(body)
                    .into_iter()
                    .map(|(o, item)| text::number(body_offset + o, item))
                    .collect::<Result<Vec<_>>>()?
            };
            if parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Parse { position: body_offset, message: "parts must not increase".into() });
            }
            blocks.push(CodeBlock { degree, parts });
            offset += chunk.len() + 1;
        }
        Ok(HookCode { blocks })
    }
}

/// `Q(P)`: for each block degree `i`, the first `δ_{i+1}` hands of degree `i`
/// each record how many difference-one hooks end at them.
pub fn hook_code(p: &Partition) -> HookCode {
    let t = p.diagonal_lengths();
    let hooks = p.difference_one_hooks();
    let blocks = t
        .blocks()
        .map(|i| {
            let height = t.delta(i + 1);
            let mut parts: Vec<usize> = p
                .hands_of_degree(i)
                .into_iter()
                .take(height)
                .map(|hand| hooks.iter().filter(|h| h.hand == hand).count())
                .collect();
            debug_assert_eq!(parts.len(), height);
            parts.resize(height, 0);
            CodeBlock { degree: i, parts }
        })
        .collect();
    HookCode { blocks }
}

/// Blockwise complement inside the boxes of `T`.
pub fn complement(q: &HookCode, t: &HilbertFunction) -> Result<HookCode> {
    let q = q.normalized(t)?;
    let blocks = q
        .blocks
        .iter()
        .zip(t.boxes())
        .map(|(block, b)| CodeBlock {
            degree: block.degree,
            parts: block.parts.iter().rev().map(|&v| b.width - v).collect(),
        })
        .collect();
    Ok(HookCode { blocks })
}

/// Non-increasing sequences of length `height` with entries at most `width`, descending lex.
pub fn partitions_in_box(height: usize, width: usize) -> Vec<Vec<usize>> {
    fn fill(height: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == height {
            out.push(cur.clone());
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            fill(height, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    fill(height, width, &mut Vec::new(), &mut out);
    out
}

/// All of `Q(T)`, as the product of the box partitions block by block.
pub fn enumerate_codes(t: &HilbertFunction) -> Vec<HookCode> {
    let mut codes = vec![HookCode { blocks: Vec::new() }];
    for b in t.boxes() {
        let choices = partitions_in_box(b.height, b.width);
        codes = codes
            .into_iter()
            .flat_map(|code| {
                choices.iter().map(move |parts| {
                    let mut next = code.clone();
                    next.blocks.push(CodeBlock { degree: b.degree, parts: parts.clone() });
                    next
                })
            })
            .collect();
    }
    codes
}

/// The top element `𝔅(T)`: every box filled.
pub fn max_code(t: &HilbertFunction) -> HookCode {
    HookCode {
        blocks: t.boxes().into_iter().map(|b| CodeBlock { degree: b.degree, parts: vec![b.width; b.height] }).collect(),
    }
}

/// Lookup table for the bijection `P(T) → Q(T)`.
#[derive(Debug, Clone)]
pub struct CodeTable {
    t: HilbertFunction,
    by_code: HashMap<HookCode, Partition>,
}

impl CodeTable {
    pub fn new(t: &HilbertFunction) -> Self {
        let by_code = enumerate_partitions(t).into_iter().map(|p| (hook_code(&p), p)).collect();
        CodeTable { t: t.clone(), by_code }
    }

    pub fn len(&self) -> usize {
        self.by_code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_code.is_empty()
    }

    pub fn partition(&self, q: &HookCode) -> Result<Partition> {
        let q = q.normalized(&self.t)?;
        self.by_code
            .get(&q)
            .cloned()
            .ok_or_else(|| Error::BoxOverflow(format!("no partition of {} has code {q}", self.t)))
    }
}

pub fn partition_from_code(q: &HookCode, t: &HilbertFunction) -> Result<Partition> {
    CodeTable::new(t).partition(q)
}

/// Cover relations of the product lattice `Q(T)`, directed from larger to smaller code.
pub fn hasse_diagram(t: &HilbertFunction) -> Vec<(HookCode, HookCode)> {
    enumerate_codes(t)
        .into_iter()
        .flat_map(|upper| upper.lower_covers().into_iter().map(move |lower| (upper.clone(), lower)))
        .collect()
}
