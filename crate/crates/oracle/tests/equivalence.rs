//! Oracle against formulas on every partition of small diagonal lengths.

use hookcells::hilbert::all_with_weight_at_most;
use hookcells::kappa::{beta_profile, kappa};
use hookcells::partitions::enumerate_partitions;
use hookcells_oracle::{oracle_kappa_from, CellChart, PrimeModulus};

const WEIGHT: usize = 10;
const PRIME: u32 = 11;
const BUDGET: u64 = 1_000_000;

#[test]
fn oracle_matches_formulas_on_every_small_cell() {
    let mut checked = 0;
    let mut skipped = 0;
    let mut failures = Vec::new();
    for t in all_with_weight_at_most(WEIGHT) {
        for p in enumerate_partitions(&t) {
            let chart = CellChart::new(&p);
            let field = PrimeModulus::new(PRIME).unwrap();
            if chart.tuple_count(field).is_none_or(|n| n > BUDGET) {
                skipped += 1;
                continue;
            }
            let got = oracle_kappa_from(&p, PRIME, BUDGET).unwrap();
            checked += 1;
            if got.total != kappa(&p) || got.profile != beta_profile(&p).dense() || got.pivot_mismatches() > 0 {
                failures.push(format!("{p}: oracle {} {:?}, formula {}", got.total, got.profile, kappa(&p)));
            }
        }
    }
    eprintln!("checked {checked} cells, skipped {skipped} over budget");
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(checked > 100);
}
