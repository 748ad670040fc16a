use hookcells::hilbert::all_with_weight_at_most;
use hookcells::kappa::monomial_betti;
use hookcells::partitions::enumerate_partitions;
use hookcells::{Monomial, Partition};
use hookcells_oracle::{cell_points, oracle_kappa_from, CellChart, GradedIdealBasis, HomogeneousForm, PrimeModulus};
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..9, 1..8).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn forms() -> impl Strategy<Value = Vec<HomogeneousForm>> {
    prop::collection::vec(
        (1usize..5).prop_flat_map(|deg| {
            prop::collection::vec(0u32..7, deg + 1)
                .prop_map(move |coefficients| HomogeneousForm { degree: deg, coefficients })
        }),
        1..4,
    )
}

proptest! {
    #[test]
    fn monomial_ideals_have_the_corner_betti_numbers(p in partition()) {
        let t = p.diagonal_lengths();
        let gens: Vec<_> = p.corner_monomials().into_iter().map(HomogeneousForm::monomial).collect();
        let basis = GradedIdealBasis::closure(&gens, t.len(), PrimeModulus::new(7).unwrap()).unwrap();
        prop_assert_eq!(basis.hilbert_function(), t.values().to_vec());
        prop_assert_eq!(basis.minimal_generator_counts(), monomial_betti(&p).dense());
    }

    #[test]
    fn closure_is_stable_under_multiplication(gens in forms()) {
        let field = PrimeModulus::new(7).unwrap();
        let basis = GradedIdealBasis::closure(&gens, 6, field).unwrap();
        for i in 0..6 {
            for f in basis.basis(i) {
                let by_x = HomogeneousForm { degree: i + 1, coefficients: f.coefficients.iter().copied().chain([0]).collect() };
                let by_y = HomogeneousForm { degree: i + 1, coefficients: [0].into_iter().chain(f.coefficients.iter().copied()).collect() };
                prop_assert!(basis.contains(&by_x) && basis.contains(&by_y));
            }
            let pivots: Vec<Monomial> = basis.initial_ideal()[i].clone();
            prop_assert_eq!(pivots.len(), basis.dim(i));
            for f in basis.basis(i) {
                prop_assert!(pivots.contains(&f.initial_monomial().unwrap()));
            }
        }
        let counts: usize = basis.minimal_generator_counts().iter().sum();
        prop_assert!(counts <= gens.len());
    }
}

#[test]
fn accepted_points_have_initial_ideal_e_p() {
    let field = PrimeModulus::new(7).unwrap();
    for t in all_with_weight_at_most(7) {
        for p in enumerate_partitions(&t) {
            if t.len() >= 7 {
                continue;
            }
            for point in cell_points(&p, 7, 20_000).unwrap() {
                let basis = GradedIdealBasis::closure(&point.generators, t.len(), field).unwrap();
                assert_eq!(basis.hilbert_function(), t.values());
                for (i, mons) in basis.initial_ideal().iter().enumerate() {
                    assert!(mons.iter().all(|m| !p.contains(*m)), "{p} degree {i}");
                }
            }
        }
    }
}

#[test]
fn minimum_does_not_grow_with_the_field() {
    for t in all_with_weight_at_most(7) {
        for p in enumerate_partitions(&t) {
            let chart = CellChart::new(&p);
            let mut last = usize::MAX;
            let mut prime = PrimeModulus::smallest_for_socle(chart.socle_degree());
            for _ in 0..3 {
                let scan = chart.scan(prime, 1_000_000).unwrap();
                let total = scan.min_total.unwrap();
                assert!(total <= last, "{p} over GF({})", prime.value());
                last = total;
                prime = prime.next();
            }
            assert!(
                oracle_kappa_from(&p, chart.check_field(prime.value()).unwrap().value(), 1_000_000).unwrap().stable
            );
        }
    }
}
