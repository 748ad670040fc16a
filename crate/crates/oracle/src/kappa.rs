//! The generic generator count of a cell as the minimum over its points,
//! rerun over successive primes until two consecutive primes agree.

use hookcells::Partition;
use serde::{Deserialize, Serialize};

use crate::cell::{CellChart, CellScan};
use crate::error::{Error, Result};
use crate::field::PrimeModulus;

const MAX_PRIMES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleKappa {
    pub total: usize,
    /// Degree-wise minimum of `μ_i`, indexed from degree 0.
    pub profile: Vec<usize>,
    pub stable: bool,
    pub scans: Vec<CellScan>,
}

impl OracleKappa {
    pub fn last_scan(&self) -> &CellScan {
        self.scans.last().expect("at least one scan")
    }

    pub fn pivot_mismatches(&self) -> u64 {
        self.scans.iter().map(|s| s.pivot_mismatches).sum()
    }
}

/// Starts at the smallest admissible prime that is at least 5.
pub fn oracle_kappa(partition: &Partition, budget: u64) -> Result<OracleKappa> {
    let chart = CellChart::new(partition);
    let start = PrimeModulus::smallest_for_socle(chart.socle_degree());
    run(&chart, start, budget)
}

pub fn oracle_kappa_from(partition: &Partition, prime: u32, budget: u64) -> Result<OracleKappa> {
    let chart = CellChart::new(partition);
    let start = chart.check_field(prime)?;
    run(&chart, start, budget)
}

fn run(chart: &CellChart, mut field: PrimeModulus, budget: u64) -> Result<OracleKappa> {
    let mut scans: Vec<CellScan> = Vec::new();
    loop {
        let scan = chart.scan(field, budget)?;
        let (Some(total), Some(profile)) = (scan.min_total, scan.min_profile.clone()) else {
            return Err(Error::BudgetExhausted { prime: scan.prime, tested: scan.tuples_tested });
        };
        let stable = scans
            .last()
            .is_some_and(|prev| prev.min_total == Some(total) && prev.min_profile.as_ref() == Some(&profile));
        scans.push(scan);
        if stable || scans.len() == MAX_PRIMES || chart.parameter_count() == 0 {
            return Ok(OracleKappa { total, profile, stable: stable || chart.parameter_count() == 0, scans });
        }
        field = field.next();
    }
}
