use hookcells::components::decompose;
use hookcells::counting::{count_partitions, kappa_distribution};
use hookcells::hookcode::{complement, hook_code, CodeTable};
use hookcells::kappa::{beta_profile, kappa, kappa_via_components, kappa_via_elementary};
use hookcells::{HilbertFunction, HookCode, Partition};
use num_bigint::BigUint;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..12, 1..10).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn hilbert_function() -> impl Strategy<Value = HilbertFunction> {
    (1usize..7, prop::collection::vec(1usize..7, 0..6)).prop_map(|(d, mut tail)| {
        tail.iter_mut().for_each(|v| *v = (*v).min(d));
        tail.sort_unstable_by(|a, b| b.cmp(a));
        let mut values: Vec<usize> = (1..=d).collect();
        values.extend(tail);
        HilbertFunction::new(values).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution_preserving_diagonals(p in partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.conjugate(), p.clone());
        prop_assert_eq!(c.diagonal_lengths(), p.diagonal_lengths());
        prop_assert_eq!(p.diagonal_lengths().weight(), p.weight());
    }

    #[test]
    fn conjugate_code_is_the_complement(p in partition()) {
        let t = p.diagonal_lengths();
        let q = hook_code(&p);
        prop_assert_eq!(hook_code(&p.conjugate()), complement(&q, &t).unwrap());
        prop_assert_eq!(q.size(), p.difference_one_hooks().len());
        prop_assert!(q.size() <= t.dim());
    }

    #[test]
    fn kappa_routes_agree(p in partition()) {
        let k = kappa(&p);
        prop_assert_eq!(kappa_via_components(&p), k);
        prop_assert_eq!(kappa_via_elementary(&p), k);
        prop_assert!(k >= p.diagonal_lengths().kappa());
        prop_assert!(k <= p.corner_monomials().len());
        let prof = beta_profile(&p);
        prop_assert_eq!(prof.counts.len(), p.diagonal_lengths().len() + 1 - prof.start_degree);
    }

    #[test]
    fn components_shift_the_code(p in partition()) {
        let code = hook_code(&p);
        for e in decompose(&p).entries {
            prop_assert_eq!(e.partition.diagonal_lengths(), e.hilbert.clone());
            let sub = hook_code(&e.partition);
            let parts = sub.blocks.first().map(|b| b.parts.clone()).unwrap_or_default();
            prop_assert_eq!(&parts, &code.block(e.degree).unwrap().parts);
        }
    }

    #[test]
    fn text_and_json_round_trip(p in partition()) {
        let t = p.diagonal_lengths();
        let q = hook_code(&p);
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(t.to_string().parse::<HilbertFunction>().unwrap(), t.clone());
        prop_assert_eq!(q.to_string().parse::<HookCode>().unwrap(), q.clone());
        let json = serde_json::to_string(&(&p, &t, &q)).unwrap();
        let back: (Partition, HilbertFunction, HookCode) = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, (p, t, q));
    }

    #[test]
    fn distribution_sums_to_the_partition_count(t in hilbert_function()) {
        let dist = kappa_distribution(&t);
        prop_assert_eq!(&dist.total, &count_partitions(&t));
        prop_assert_eq!(dist.counts.keys().next().copied(), Some(t.kappa()));
        let boxes: usize = t.boxes().iter().map(|b| b.area()).sum();
        prop_assert_eq!(boxes, t.dim());
        prop_assert!(t.kappa() > t.delta(t.order()));
    }

    #[test]
    fn elementary_split_splices_back(t in hilbert_function()) {
        if let Some(split) = t.plateau_split() {
            prop_assert_eq!(split.splice(), t.clone());
        }
        for f in t.elementary_factors() {
            prop_assert!(f.is_elementary());
        }
    }

    #[test]
    fn code_table_inverts_hook_code(t in hilbert_function()) {
        prop_assume!(count_partitions(&t) <= BigUint::from(400u32));
        let table = CodeTable::new(&t);
        prop_assert_eq!(BigUint::from(table.len()), count_partitions(&t));
        for q in hookcells::hookcode::enumerate_codes(&t) {
            let p = table.partition(&q).unwrap();
            prop_assert_eq!(hook_code(&p), q);
        }
    }
}
