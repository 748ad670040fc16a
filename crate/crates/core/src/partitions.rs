//! Partitions as Ferrers diagrams of standard monomials.
//!
//! Row `r` of a partition `P` holds the monomials `x^c y^r` for `c < p_r`;
//! these fill the complement `C_P` of the monomial ideal `E_P`. Rows and
//! columns are 0-based.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hilbert::HilbertFunction;
use crate::text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub xdeg: usize,
    pub ydeg: usize,
}

impl Monomial {
    pub const fn new(xdeg: usize, ydeg: usize) -> Self {
        Monomial { xdeg, ydeg }
    }

    pub const fn degree(&self) -> usize {
        self.xdeg + self.ydeg
    }

    /// Canonical text form `x^a*y^b`, used by the JSON renderings.
    pub fn exponent_form(&self) -> String {
        format!("x^{}*y^{}", self.xdeg, self.ydeg)
    }
}

/// Degree first, then lex order `x^i < x^{i-1}y < ... < y^i` inside one degree.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.ydeg.cmp(&other.ydeg))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn power(f: &mut fmt::Formatter<'_>, var: char, e: usize) -> fmt::Result {
            match e {
                0 => Ok(()),
                1 => write!(f, "{var}"),
                _ => write!(f, "{var}^{e}"),
            }
        }
        if self.degree() == 0 {
            return write!(f, "1");
        }
        power(f, 'x', self.xdeg)?;
        power(f, 'y', self.ydeg)
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Accepts `1`, `x^2y`, `x^2*y^1`, `y^3` and similar.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::new(0, 0));
        }
        let bytes = s.as_bytes();
        let (mut xdeg, mut ydeg) = (None, None);
        let mut pos = 0;
        while pos < bytes.len() {
            let var = bytes[pos];
            let slot = match var {
                b'x' => &mut xdeg,
                b'y' => &mut ydeg,
                b'*' if pos > 0 => {
                    pos += 1;
                    continue;
                }
                _ => return Err(Error::Parse { position: pos, message: format!("unexpected `{}`", var as char) }),
            };
            if slot.is_some() {
                return Err(Error::Parse { position: pos, message: "repeated variable".into() });
            }
            pos += 1;
            let mut exp = 1;
            if bytes.get(pos) == Some(&b'^') {
                let start = pos + 1;
                let end = start + bytes[start..].iter().take_while(|b| b.is_ascii_digit()).count();
                exp = text::number(start, &s[start..end])?;
                pos = end;
            }
            *slot = Some(exp);
        }
        if xdeg.is_none() && ydeg.is_none() {
            return Err(Error::Parse { position: 0, message: "expected a monomial".into() });
        }
        Ok(Monomial::new(xdeg.unwrap_or(0), ydeg.unwrap_or(0)))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.exponent_form())
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A hook of `P` at `corner`: the arm runs right along the row, the leg down the column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hook {
    pub corner: Monomial,
    pub arm: usize,
    pub leg: usize,
    pub hand: Monomial,
    pub foot: Monomial,
}

impl Hook {
    pub fn difference(&self) -> isize {
        self.arm as isize - self.leg as isize
    }
}

/// A non-increasing sequence of positive parts.
///
/// The empty partition exists only as the degenerate triangle arising in
/// component decompositions; [`Partition::new`] and the parser reject it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(k) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NotAPartition(format!("part {} is zero", k + 1)));
        }
        if let Some(k) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!(
                "parts increase at position {}: {} < {}",
                k + 1,
                parts[k],
                parts[k + 1]
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds from row lengths, dropping zero rows. May return the empty partition.
    pub(crate) fn from_rows(mut rows: Vec<usize>) -> Self {
        rows.retain(|&p| p > 0);
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts: rows }
    }

    /// The staircase `(m, m-1, ..., 1)`, whose ideal is the power `(x,y)^m`.
    pub fn staircase(m: usize) -> Self {
        Partition { parts: (1..=m).rev().collect() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    pub fn col_len(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > c).count()
    }

    /// Whether `m` is a standard monomial, i.e. a cell of the diagram.
    pub fn contains(&self, m: Monomial) -> bool {
        m.xdeg < self.row_len(m.ydeg)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row_len(0);
        Partition { parts: (0..width).map(|c| self.col_len(c)).collect() }
    }

    pub fn cells(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &p)| (0..p).map(move |c| Monomial::new(c, r)))
    }

    pub fn diagonal_lengths(&self) -> HilbertFunction {
        let top = self.parts.iter().enumerate().map(|(r, &p)| r + p).max().unwrap_or(0);
        let mut t = vec![0; top];
        for m in self.cells() {
            t[m.degree()] += 1;
        }
        HilbertFunction::from_partition_counts(t)
    }

    /// Standard monomials of degree `i` in increasing ydeg.
    pub fn standard_monomials(&self, i: usize) -> Vec<Monomial> {
        (0..=i).map(|b| Monomial::new(i - b, b)).filter(|&m| self.contains(m)).collect()
    }

    /// Last cell of each row, in increasing ydeg.
    pub fn hands(&self) -> Vec<Monomial> {
        self.parts.iter().enumerate().map(|(r, &p)| Monomial::new(p - 1, r)).collect()
    }

    /// Hands of degree `i` in increasing ydeg.
    pub fn hands_of_degree(&self, i: usize) -> Vec<Monomial> {
        self.hands().into_iter().filter(|m| m.degree() == i).collect()
    }

    /// Minimal monomial generators of `E_P`, in increasing ydeg.
    pub fn corner_monomials(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut previous = usize::MAX;
        for (r, &p) in self.parts.iter().chain(std::iter::once(&0)).enumerate() {
            if p < previous {
                out.push(Monomial::new(p, r));
            }
            previous = p;
        }
        out
    }

    pub fn hook_at(&self, cell: Monomial) -> Option<Hook> {
        if !self.contains(cell) {
            return None;
        }
        let (c, r) = (cell.xdeg, cell.ydeg);
        let arm = self.row_len(r) - c;
        let leg = self.col_len(c) - r;
        Some(Hook { corner: cell, arm, leg, hand: Monomial::new(c + arm - 1, r), foot: Monomial::new(c, r + leg - 1) })
    }

    pub fn hooks(&self) -> Vec<Hook> {
        self.cells().filter_map(|m| self.hook_at(m)).collect()
    }

    pub fn difference_one_hooks(&self) -> Vec<Hook> {
        self.hooks().into_iter().filter(|h| h.difference() == 1).collect()
    }

    /// Degree-`i` horizontal border `A_i` and vertical border `B_i` of `E_P`.
    ///
    /// `x^a y^b` is in `A_i` when it lies in `E_P` and `x^a y^(b-1)` is a cell;
    /// it is in `B_i` when it lies in `E_P` and `x^(a-1) y^b` is a cell.
    pub fn border_monomials(&self, i: usize) -> (Vec<Monomial>, Vec<Monomial>) {
        let mut horizontal = Vec::new();
        let mut vertical = Vec::new();
        for b in 0..=i {
            let m = Monomial::new(i - b, b);
            if self.contains(m) {
                continue;
            }
            if b > 0 && self.contains(Monomial::new(m.xdeg, b - 1)) {
                horizontal.push(m);
            }
            if m.xdeg > 0 && self.contains(Monomial::new(m.xdeg - 1, b)) {
                vertical.push(m);
            }
        }
        (horizontal, vertical)
    }

    /// Drops the first column.
    pub(crate) fn without_first_column(&self) -> Partition {
        Partition::from_rows(self.parts.iter().map(|&p| p - 1).collect())
    }
}

impl fmt::Display for Partition {
    /// Runs of equal parts are written with exponent shorthand, `15,12^4,11`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for run in self.parts.chunk_by(|a, b| a == b) {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            match run.len() {
                1 => write!(f, "{}", run[0])?,
                n => write!(f, "{}^{}", run[0], n)?,
            }
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut parts = Vec::new();
        for (offset, item) in text::items(s) {
            let (base, reps) = match item.split_once('^') {
                Some((b, e)) => (b.trim(), text::number(offset + b.len() + 1, e.trim())?),
                None => (item, 1),
            };
            let value = text::number(offset, base)?;
            if value == 0 || reps == 0 {
                return Err(Error::Parse { position: offset, message: "parts and exponents must be positive".into() });
            }
            parts.extend(std::iter::repeat_n(value, reps));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        if parts.is_empty() {
            return Ok(Partition::from_rows(parts));
        }
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions with diagonal lengths `T`, in descending lex order of parts.
///
/// Rows are placed top to bottom. Row `r` is the last row meeting degree `r`,
/// so once it is placed that degree must be full.
pub fn enumerate_partitions(t: &HilbertFunction) -> Vec<Partition> {
    let target = t.values();
    let mut counts = vec![0usize; target.len()];
    let mut rows = Vec::new();
    let mut out = Vec::new();
    place_row(target, &mut counts, &mut rows, &mut out);
    out
}

fn place_row(target: &[usize], counts: &mut [usize], rows: &mut Vec<usize>, out: &mut Vec<Partition>) {
    let r = rows.len();
    if r >= target.len() || counts[r] == target[r] {
        if counts == target {
            out.push(Partition::from_rows(rows.clone()));
        }
        return;
    }
    if counts[r] + 1 != target[r] {
        return;
    }
    let cap = rows.last().copied().unwrap_or(usize::MAX).min(target.len() - r);
    let mut fits = 0;
    while fits < cap && counts[r + fits] < target[r + fits] {
        fits += 1;
    }
    for len in (1..=fits).rev() {
        for c in counts[r..r + len].iter_mut() {
            *c += 1;
        }
        rows.push(len);
        place_row(target, counts, rows, out);
        rows.pop();
        for c in counts[r..r + len].iter_mut() {
            *c -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn m(x: usize, y: usize) -> Monomial {
        Monomial::new(x, y)
    }

    #[test]
    fn diagonal_lengths_examples() {
        assert_eq!(p("5,3,1").diagonal_lengths().values(), &[1, 2, 3, 2, 1]);
        assert_eq!(p("1").diagonal_lengths().values(), &[1]);
        assert_eq!(p("4,3,1").diagonal_lengths().values(), &[1, 2, 3, 2]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("6,5,3,1").conjugate(), p("4,3,3,2,2,1"));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    }

    #[test]
    fn corners() {
        assert_eq!(
            p("9,7,7,6,4,4,2,1").corner_monomials(),
            vec![m(9, 0), m(7, 1), m(6, 3), m(4, 4), m(2, 6), m(1, 7), m(0, 8)]
        );
        assert_eq!(p("1").corner_monomials(), vec![m(1, 0), m(0, 1)]);
        assert_eq!(p("2,2").corner_monomials(), vec![m(2, 0), m(0, 2)]);
    }

    #[test]
    fn difference_one_hook_examples() {
        let hooks = p("4,1,1").difference_one_hooks();
        assert_eq!(hooks.len(), 2);
        assert!(hooks.iter().any(|h| h.corner == m(0, 0) && h.hand == m(3, 0) && h.foot == m(0, 2)));

        let hooks = p("4,3,1").difference_one_hooks();
        assert!(hooks.iter().any(|h| h.corner == m(1, 0)
            && h.arm == 3
            && h.leg == 2
            && h.hand == m(3, 0)
            && h.foot == m(1, 1)));

        assert!(p("1").difference_one_hooks().is_empty());
    }

    #[test]
    fn border_examples() {
        let (a, b) = p("1").border_monomials(1);
        assert_eq!((a, b), (vec![m(0, 1)], vec![m(1, 0)]));

        let q = p("5,5,5,3,1,1,1");
        let (a5, b5) = q.border_monomials(5);
        assert_eq!(a5, vec![m(1, 4)]);
        assert!(b5.contains(&m(5, 0)));
        let (a6, _) = q.border_monomials(6);
        assert_eq!(a6, vec![m(3, 3), m(2, 4)]);

        let (a, _) = p("9,7,7,4,4,2,1,1").border_monomials(7);
        for want in [m(4, 3), m(2, 5), m(1, 6)] {
            assert!(a.contains(&want));
        }
    }

    #[test]
    fn enumeration_examples() {
        let t = |v: &[usize]| HilbertFunction::new(v.to_vec()).unwrap();
        assert_eq!(enumerate_partitions(&t(&[1, 2, 3, 4, 2])).len(), 10);
        assert_eq!(enumerate_partitions(&t(&[1, 1])), vec![p("2"), p("1,1")]);
        assert_eq!(enumerate_partitions(&t(&[1, 2, 3, 2, 1])).len(), 9);
    }

    #[test]
    fn text_round_trip() {
        let q = p("15,12^4,11,7,6^2,5,3^4");
        assert_eq!(q.parts().len(), 14);
        assert_eq!(q.to_string(), "15,12^4,11,7,6^2,5,3^4");
        assert_eq!(p("(5, 3, 1)"), p("5,3,1"));
        assert!(matches!("".parse::<Partition>(), Err(Error::EmptyInput)));
        assert!(matches!("3,x".parse::<Partition>(), Err(Error::Parse { position: 2, .. })));
        assert!("1,3".parse::<Partition>().is_err());
    }

    #[test]
    fn monomial_text() {
        for s in ["1", "x", "y^3", "x^4y^3", "xy^6"] {
            assert_eq!(s.parse::<Monomial>().unwrap().to_string(), s);
        }
        assert_eq!("x^4*y^3".parse::<Monomial>().unwrap(), m(4, 3));
        assert_eq!(m(0, 2).exponent_form(), "x^0*y^2");
    }
}
