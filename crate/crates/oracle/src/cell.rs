//! Points of the cell `V(E_P)` over a prime field.
//!
//! Each corner monomial `c` of `E_P` gets the generator `c + Σ a_m m`, where `m`
//! runs over standard monomials of the same degree and lower y-degree. Every
//! ideal of the cell has exactly one such reduced system, and a tuple lies in
//! the cell iff the ideal it generates has the Hilbert function of `P`.

use hookcells::{HilbertFunction, Monomial, Partition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::form::HomogeneousForm;
use crate::ideal::GradedIdealBasis;

const SEED: u64 = 0x6b61_7070_6121;

#[derive(Debug, Clone)]
pub struct CellChart {
    partition: Partition,
    hilbert: HilbertFunction,
    corners: Vec<Monomial>,
    /// `(corner index, y-degree of the tail monomial)` per parameter.
    parameters: Vec<(usize, usize)>,
    max_dims: Vec<usize>,
    pivots: Vec<Vec<usize>>,
}

/// An accepted generator system together with its per-degree generator counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellPoint {
    pub tuple: Vec<u32>,
    pub generators: Vec<HomogeneousForm>,
    pub counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellScan {
    pub prime: u32,
    pub parameters: usize,
    pub exhaustive: bool,
    pub tuples_tested: u64,
    pub accepted: u64,
    /// Accepted points whose initial ideal differs from `E_P`.
    pub pivot_mismatches: u64,
    pub min_total: Option<usize>,
    /// Degree-wise minimum of `μ_i`, indexed from degree 0.
    pub min_profile: Option<Vec<usize>>,
}

impl CellChart {
    pub fn new(partition: &Partition) -> Self {
        let hilbert = partition.diagonal_lengths();
        let corners = partition.corner_monomials();
        let mut parameters = Vec::new();
        for (n, c) in corners.iter().enumerate() {
            for k in 0..c.ydeg {
                if partition.contains(Monomial::new(c.degree() - k, k)) {
                    parameters.push((n, k));
                }
            }
        }
        let bound = hilbert.len();
        let max_dims = (0..=bound).map(|i| i + 1 - hilbert.t(i)).collect();
        let pivots =
            (0..=bound).map(|i| (0..=i).filter(|&k| !partition.contains(Monomial::new(i - k, k))).collect()).collect();
        Self { partition: partition.clone(), hilbert, corners, parameters, max_dims, pivots }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn socle_degree(&self) -> usize {
        self.hilbert.len() - 1
    }

    /// Closures run to this degree, where `I` already fills `R_i`.
    pub fn bound(&self) -> usize {
        self.hilbert.len()
    }

    pub fn parameter_count(&self) -> usize {
        self.parameters.len()
    }

    pub fn parameters(&self) -> Vec<(Monomial, Monomial)> {
        self.parameters
            .iter()
            .map(|&(n, k)| {
                let c = self.corners[n];
                (c, Monomial::new(c.degree() - k, k))
            })
            .collect()
    }

    /// `p^N`, or `None` past `u64`.
    pub fn tuple_count(&self, field: PrimeModulus) -> Option<u64> {
        (field.value() as u64).checked_pow(self.parameters.len() as u32)
    }

    pub fn check_field(&self, p: u32) -> Result<PrimeModulus> {
        PrimeModulus::for_socle(p, self.socle_degree())
    }

    pub fn generators(&self, tuple: &[u32]) -> Vec<HomogeneousForm> {
        let mut gens: Vec<HomogeneousForm> = self.corners.iter().map(|&c| HomogeneousForm::monomial(c)).collect();
        for (&(n, k), &a) in self.parameters.iter().zip(tuple) {
            gens[n].coefficients[k] = a;
        }
        gens
    }

    /// Generator counts of the ideal, if the tuple lies in the cell.
    /// The flag records whether the pivots matched `E_P`.
    pub fn evaluate(&self, tuple: &[u32], field: PrimeModulus) -> Option<(Vec<usize>, bool)> {
        let gens = self.generators(tuple);
        let basis = GradedIdealBasis::closure_within(&gens, self.bound(), field, Some(&self.max_dims))
            .expect("corner degrees never exceed the bound")?;
        if (0..=self.bound()).any(|i| basis.dim(i) != self.max_dims[i]) {
            return None;
        }
        let pivots_ok = basis
            .initial_ideal()
            .iter()
            .zip(&self.pivots)
            .all(|(mons, want)| mons.iter().map(|m| m.ydeg).eq(want.iter().copied()));
        Some((basis.minimal_generator_counts(), pivots_ok))
    }

    fn tuple_at(&self, field: PrimeModulus, exhaustive: bool, index: u64) -> Vec<u32> {
        let p = field.value();
        if exhaustive {
            let mut rest = index;
            (0..self.parameters.len())
                .map(|_| {
                    let digit = (rest % p as u64) as u32;
                    rest /= p as u64;
                    digit
                })
                .collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ p as u64);
            rng.set_stream(index);
            (0..self.parameters.len()).map(|_| rng.gen_range(0..p)).collect()
        }
    }

    /// Exhaustive when `p^N ≤ budget`, otherwise `budget` seeded uniform samples.
    fn plan(&self, field: PrimeModulus, budget: u64) -> Result<(bool, u64)> {
        if budget == 0 {
            return Err(Error::ZeroBudget);
        }
        Ok(match self.tuple_count(field) {
            Some(n) if n <= budget => (true, n),
            _ => (false, budget),
        })
    }

    pub fn scan(&self, field: PrimeModulus, budget: u64) -> Result<CellScan> {
        let (exhaustive, tested) = self.plan(field, budget)?;
        let tally = (0..tested)
            .into_par_iter()
            .fold(Tally::default, |mut acc, index| {
                if let Some((counts, ok)) = self.evaluate(&self.tuple_at(field, exhaustive, index), field) {
                    acc.add(counts, ok);
                }
                acc
            })
            .reduce(Tally::default, Tally::merge);
        Ok(CellScan {
            prime: field.value(),
            parameters: self.parameters.len(),
            exhaustive,
            tuples_tested: tested,
            accepted: tally.accepted,
            pivot_mismatches: tally.mismatches,
            min_total: tally.min_total,
            min_profile: tally.min_profile,
        })
    }
}

#[derive(Default)]
struct Tally {
    accepted: u64,
    mismatches: u64,
    min_total: Option<usize>,
    min_profile: Option<Vec<usize>>,
}

impl Tally {
    fn add(&mut self, counts: Vec<usize>, pivots_ok: bool) {
        self.accepted += 1;
        self.mismatches += !pivots_ok as u64;
        let total = counts.iter().sum();
        self.min_total = Some(self.min_total.map_or(total, |m| m.min(total)));
        self.min_profile = Some(match self.min_profile.take() {
            None => counts,
            Some(m) => m.into_iter().zip(counts).map(|(a, b)| a.min(b)).collect(),
        });
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.accepted += other.accepted;
        self.mismatches += other.mismatches;
        self.min_total = match (self.min_total, other.min_total) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        if let Some(p) = other.min_profile {
            self.min_profile = Some(match self.min_profile.take() {
                None => p,
                Some(m) => m.into_iter().zip(p).map(|(a, b)| a.min(b)).collect(),
            });
        }
        self
    }
}

/// Every accepted generator system among the tuples the budget allows.
pub fn cell_points(partition: &Partition, p: u32, budget: u64) -> Result<Vec<CellPoint>> {
    let chart = CellChart::new(partition);
    let field = chart.check_field(p)?;
    let (exhaustive, tested) = chart.plan(field, budget)?;
    let points: Vec<CellPoint> = (0..tested)
        .filter_map(|index| {
            let tuple = chart.tuple_at(field, exhaustive, index);
            let (counts, _) = chart.evaluate(&tuple, field)?;
            Some(CellPoint { generators: chart.generators(&tuple), tuple, counts })
        })
        .collect();
    if points.is_empty() {
        return Err(Error::BudgetExhausted { prime: p, tested });
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn two_by_two_is_a_line_of_accepted_points() {
        let chart = CellChart::new(&part("2,2"));
        let names: Vec<String> = chart.parameters().iter().map(|(c, m)| format!("{c}:{m}")).collect();
        assert_eq!(names, ["y^2:xy"]);
        let points = cell_points(&part("2,2"), 5, 100).unwrap();
        assert_eq!(points.len(), 5);
    }

    #[test]
    fn four_one_forces_b_equal_minus_a_squared() {
        let p = 7;
        let chart = CellChart::new(&part("4,1"));
        let names: Vec<String> = chart.parameters().iter().map(|(c, m)| format!("{c}:{m}")).collect();
        assert_eq!(names, ["xy:x^2", "y^2:x^2"]);
        let points = cell_points(&part("4,1"), p, 1000).unwrap();
        assert_eq!(points.len(), p as usize);
        let f = PrimeModulus::new(p).unwrap();
        for pt in &points {
            let (a, b) = (pt.tuple[0], pt.tuple[1]);
            assert_eq!(b, f.neg(f.mul(a, a)));
        }
    }

    #[test]
    fn rigid_cells_are_points() {
        let chart = CellChart::new(&part("4,3,2,2,1"));
        assert_eq!(chart.parameter_count(), 0);
        let points = cell_points(&part("4,3,2,2,1"), 7, 10).unwrap();
        assert_eq!(points.len(), 1);
        assert!(points[0].tuple.is_empty());
    }

    #[test]
    fn scans_agree_with_listing() {
        let chart = CellChart::new(&part("5,3,1"));
        let f = chart.check_field(7).unwrap();
        let scan = chart.scan(f, 1 << 20).unwrap();
        assert!(scan.exhaustive);
        assert_eq!(scan.accepted as usize, cell_points(&part("5,3,1"), 7, 1 << 20).unwrap().len());
        assert_eq!(scan.pivot_mismatches, 0);
        assert_eq!(scan.min_total, Some(2));
    }

    #[test]
    fn sampling_is_deterministic() {
        let chart = CellChart::new(&part("5,3,1"));
        let f = chart.check_field(7).unwrap();
        let a = chart.scan(f, 50).unwrap();
        assert!(!a.exhaustive);
        assert_eq!(a, chart.scan(f, 50).unwrap());
        assert!(matches!(chart.scan(f, 0), Err(Error::ZeroBudget)));
        assert!(matches!(cell_points(&part("3,1"), 3, 10), Err(Error::PrimeTooSmall { .. })));
    }
}
