//! `N_i` lies in the kick-off ideal exactly when `λ_i ≠ 0`.

use hookcells::Monomial;
use hookcells_oracle::{kick_off_generators, kicked_off, PrimeModulus};

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n)
        .flat_map(|last| {
            choose(last, k - 1).into_iter().map(move |mut c| {
                c.push(last);
                c
            })
        })
        .collect()
}

#[test]
fn membership_follows_the_support_of_lambda() {
    let field = PrimeModulus::new(13).unwrap();
    let mut cases = 0;
    for d in 2..=10usize {
        for m in 1..=3usize.min(d / 2) {
            for betas in choose(d - m, m) {
                let targets: Vec<Monomial> = betas.iter().map(|&b| Monomial::new(d + 1 - b, b)).collect();
                for support in 0u32..(1 << m) {
                    for scale in [1u32, 7] {
                        let lambdas: Vec<u32> = (0..m)
                            .map(|i| if support >> i & 1 == 1 { (scale * (i as u32 + 2)) % 13 } else { 0 })
                            .collect();
                        let forms = kick_off_generators(d, m, &lambdas, &targets, field).unwrap();
                        let got = kicked_off(d, &forms, &targets, field).unwrap();
                        let want: Vec<bool> = lambdas.iter().map(|&l| l != 0).collect();
                        assert_eq!(got, want, "d={d} m={m} targets={targets:?} lambdas={lambdas:?}");
                        cases += 1;
                    }
                }
            }
        }
    }
    assert!(cases > 1000);
}
