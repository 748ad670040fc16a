//! Degree-bounded span closures of homogeneous ideals in `k[x, y]`.

use hookcells::Monomial;

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::form::HomogeneousForm;

/// A reduced row-echelon basis of a subspace of `R_i`.
///
/// Each row is monic at its pivot, the highest y-degree it touches, and every
/// other row vanishes in that column.
#[derive(Debug, Clone)]
pub struct Span {
    field: PrimeModulus,
    width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(field: PrimeModulus, degree: usize) -> Self {
        Self { field, width: degree + 1, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let a = v[c];
            if a != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = f.sub(*x, f.mul(a, r));
                    }
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        debug_assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        let Some(c) = v.iter().rposition(|&a| a != 0) else { return false };
        let f = self.field;
        let inv = f.inv(v[c]);
        v.iter_mut().for_each(|a| *a = f.mul(*a, inv));
        for row in &mut self.rows {
            let a = row[c];
            if a != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = f.sub(*x, f.mul(a, r));
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|&a| a == 0)
    }

    /// Pivot y-degrees in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

/// The spans `I_0, ..., I_bound` of the ideal generated by some forms.
#[derive(Debug, Clone)]
pub struct GradedIdealBasis {
    field: PrimeModulus,
    spans: Vec<Span>,
    products: Vec<usize>,
}

impl GradedIdealBasis {
    pub fn closure(generators: &[HomogeneousForm], bound: usize, field: PrimeModulus) -> Result<Self> {
        Ok(Self::closure_within(generators, bound, field, None)?.expect("closure without a cap never gives up"))
    }

    /// Like [`closure`](Self::closure), but gives up as soon as `dim I_i`
    /// exceeds `max_dims[i]`.
    pub fn closure_within(
        generators: &[HomogeneousForm],
        bound: usize,
        field: PrimeModulus,
        max_dims: Option<&[usize]>,
    ) -> Result<Option<Self>> {
        if let Some(g) = generators.iter().find(|g| g.degree > bound) {
            return Err(Error::AboveBound { degree: g.degree, bound });
        }
        let mut spans: Vec<Span> = Vec::with_capacity(bound + 1);
        let mut products = Vec::with_capacity(bound + 1);
        for i in 0..=bound {
            let mut span = Span::new(field, i);
            if let Some(prev) = spans.last() {
                for row in prev.rows() {
                    let mut by_x = row.clone();
                    by_x.push(0);
                    span.insert(by_x);
                    let mut by_y = Vec::with_capacity(i + 1);
                    by_y.push(0);
                    by_y.extend_from_slice(row);
                    span.insert(by_y);
                }
            }
            products.push(span.rank());
            for g in generators.iter().filter(|g| g.degree == i) {
                span.insert(g.coefficients.iter().map(|&c| field.reduce(c as u64)).collect());
            }
            if max_dims.is_some_and(|m| span.rank() > m.get(i).copied().unwrap_or(i + 1)) {
                return Ok(None);
            }
            spans.push(span);
        }
        Ok(Some(Self { field, spans, products }))
    }

    pub fn field(&self) -> PrimeModulus {
        self.field
    }

    pub fn bound(&self) -> usize {
        self.spans.len() - 1
    }

    pub fn dim(&self, i: usize) -> usize {
        self.spans[i].rank()
    }

    /// `dim R_i - dim I_i` for `i ≤ bound`, without trailing zeros.
    pub fn hilbert_function(&self) -> Vec<usize> {
        let mut h: Vec<usize> = self.spans.iter().enumerate().map(|(i, s)| i + 1 - s.rank()).collect();
        while h.last() == Some(&0) {
            h.pop();
        }
        h
    }

    /// Monomials of `in(I)` degree by degree, in increasing y-degree.
    pub fn initial_ideal(&self) -> Vec<Vec<Monomial>> {
        self.spans
            .iter()
            .enumerate()
            .map(|(i, s)| s.pivots().into_iter().map(|k| Monomial::new(i - k, k)).collect())
            .collect()
    }

    /// `μ_i = dim I_i - dim (R_1 I_{i-1})_i` for each degree.
    pub fn minimal_generator_counts(&self) -> Vec<usize> {
        self.spans.iter().zip(&self.products).map(|(s, &p)| s.rank() - p).collect()
    }

    pub fn contains(&self, f: &HomogeneousForm) -> bool {
        self.spans.get(f.degree).is_some_and(|s| s.contains(&f.coefficients))
    }

    pub fn basis(&self, i: usize) -> Vec<HomogeneousForm> {
        self.spans[i].rows().iter().map(|r| HomogeneousForm { degree: i, coefficients: r.clone() }).collect()
    }
}

pub fn hilbert_function(generators: &[HomogeneousForm], bound: usize, field: PrimeModulus) -> Result<Vec<usize>> {
    Ok(GradedIdealBasis::closure(generators, bound, field)?.hilbert_function())
}

pub fn initial_ideal(generators: &[HomogeneousForm], bound: usize, field: PrimeModulus) -> Result<Vec<Vec<Monomial>>> {
    Ok(GradedIdealBasis::closure(generators, bound, field)?.initial_ideal())
}

pub fn minimal_generator_count(
    generators: &[HomogeneousForm],
    bound: usize,
    field: PrimeModulus,
) -> Result<Vec<usize>> {
    Ok(GradedIdealBasis::closure(generators, bound, field)?.minimal_generator_counts())
}
