//! Killing degree `d+1` corners with relations among consecutive degree `d` corners.
//!
//! With `K_i = x^{m-i} y^{d-m+i}` and targets `N_i = x^{α_i} y^{β_i}`, the forms
//! `f_0 = K_0` and
//! `f_{i+1} = x^{m-i-1} y (u_i + λ_i x^{α_i-1-m+i} y^{β_i}) + λ_{i+1} x^{α_{i+1}-1} y^{β_{i+1}}`
//! satisfy `x f_{i+1} - y f_i = λ_{i+1} N_{i+1}`.

use hookcells::Monomial;

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::form::HomogeneousForm;
use crate::ideal::GradedIdealBasis;

fn check_targets(d: usize, m: usize, targets: &[Monomial]) -> Result<()> {
    if let Some(n) = targets.iter().find(|n| n.degree() != d + 1) {
        return Err(Error::InvalidTarget(format!("{n} does not have degree {}", d + 1)));
    }
    if targets.windows(2).any(|w| w[0].ydeg >= w[1].ydeg) {
        return Err(Error::InvalidTarget("y-degrees must increase".into()));
    }
    if let Some(n) = targets.last().filter(|n| n.ydeg >= d - m) {
        return Err(Error::InvalidTarget(format!("{n} has y-degree at least {}", d - m)));
    }
    Ok(())
}

/// Adds `c · x^a y^b` to a form of degree `a + b`.
fn add_term(f: &mut [u32], b: usize, c: u32, field: PrimeModulus) {
    f[b] = field.add(f[b], c);
}

pub fn kick_off_generators(
    d: usize,
    m: usize,
    lambdas: &[u32],
    targets: &[Monomial],
    field: PrimeModulus,
) -> Result<Vec<HomogeneousForm>> {
    if lambdas.len() != m {
        return Err(Error::ArityMismatch { what: "coefficients", expected: m, got: lambdas.len() });
    }
    if targets.len() != m {
        return Err(Error::ArityMismatch { what: "targets", expected: m, got: targets.len() });
    }
    if 2 * m > d {
        return Err(Error::DegreeTooSmall { d, m });
    }
    check_targets(d, m, targets)?;
    let lambda = |i: usize| if i == 0 { 0 } else { field.reduce(lambdas[i - 1] as u64) };
    let target = |i: usize| targets[i - 1];

    // u_i has degree d - m + i; u_0 = y^{d-m}.
    let mut u = vec![0u32; d - m + 1];
    u[d - m] = 1;
    let mut forms = Vec::with_capacity(m + 1);
    for i in 0..=m {
        // f_i = x^{m-i} u_i + λ_i x^{α_i - 1} y^{β_i}
        let mut f = vec![0u32; d + 1];
        for (b, &c) in u.iter().enumerate() {
            add_term(&mut f, b, c, field);
        }
        if i > 0 {
            add_term(&mut f, target(i).ydeg, lambda(i), field);
        }
        forms.push(HomogeneousForm { degree: d, coefficients: f });
        if i < m {
            // u_{i+1} = y (u_i + λ_i x^{α_i - 1 - m + i} y^{β_i})
            let mut inner = u.clone();
            if i > 0 {
                add_term(&mut inner, target(i).ydeg, lambda(i), field);
            }
            u = std::iter::once(0).chain(inner).collect();
        }
    }
    Ok(forms)
}

/// Which targets lie in the ideal generated by the kick-off forms.
pub fn kicked_off(d: usize, forms: &[HomogeneousForm], targets: &[Monomial], field: PrimeModulus) -> Result<Vec<bool>> {
    let basis = GradedIdealBasis::closure(forms, d + 1, field)?;
    Ok(targets.iter().map(|&n| basis.contains(&HomogeneousForm::monomial(n))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf13() -> PrimeModulus {
        PrimeModulus::new(13).unwrap()
    }

    fn shift_difference(f: &HomogeneousForm, g: &HomogeneousForm, field: PrimeModulus) -> Vec<u32> {
        // x g - y f, in degree d + 1
        let mut out: Vec<u32> = g.coefficients.iter().copied().chain([0]).collect();
        for (b, &c) in f.coefficients.iter().enumerate() {
            out[b + 1] = field.sub(out[b + 1], c);
        }
        out
    }

    #[test]
    fn consecutive_relations_produce_the_targets() {
        let f = gf13();
        let (d, m) = (7, 3);
        let targets = [Monomial::new(8, 0), Monomial::new(6, 2), Monomial::new(5, 3)];
        let lambdas = [2, 5, 7];
        let forms = kick_off_generators(d, m, &lambdas, &targets, f).unwrap();
        for i in 0..m {
            assert_eq!(forms[i].initial_monomial(), Some(Monomial::new(m - i, d - m + i)));
            let mut want = vec![0; d + 2];
            want[targets[i].ydeg] = lambdas[i];
            assert_eq!(shift_difference(&forms[i], &forms[i + 1], f), want);
        }
        assert_eq!(kicked_off(d, &forms, &targets, f).unwrap(), vec![true; 3]);
    }

    #[test]
    fn one_slot() {
        let f = gf13();
        let n = [Monomial::new(4, 0)];
        let forms = kick_off_generators(3, 1, &[1], &n, f).unwrap();
        assert_eq!(forms[0].to_string(), "xy^2");
        assert_eq!(forms[1].to_string(), "y^3 + x^3");
        assert_eq!(kicked_off(3, &forms, &n, f).unwrap(), vec![true]);
        let forms = kick_off_generators(3, 1, &[0], &n, f).unwrap();
        assert_eq!(kicked_off(3, &forms, &n, f).unwrap(), vec![false]);
    }

    #[test]
    fn degree_four_two_slots() {
        let f = gf13();
        let n = [Monomial::new(5, 0), Monomial::new(4, 1)];
        let forms = kick_off_generators(4, 2, &[1, 1], &n, f).unwrap();
        assert_eq!(kicked_off(4, &forms, &n, f).unwrap(), vec![true, true]);
        let forms = kick_off_generators(4, 2, &[0, 0], &n, f).unwrap();
        assert!(forms.iter().all(|g| g.terms().count() == 1));
        assert_eq!(kicked_off(4, &forms, &n, f).unwrap(), vec![false, false]);
    }

    #[test]
    fn bad_input() {
        let f = gf13();
        let n = [Monomial::new(5, 0), Monomial::new(4, 1)];
        assert!(matches!(kick_off_generators(4, 2, &[1], &n, f), Err(Error::ArityMismatch { .. })));
        assert!(matches!(kick_off_generators(3, 2, &[1, 1], &n, f), Err(Error::DegreeTooSmall { .. })));
        let bad = [Monomial::new(4, 1), Monomial::new(5, 0)];
        assert!(matches!(kick_off_generators(4, 2, &[1, 1], &bad, f), Err(Error::InvalidTarget(_))));
        let high = [Monomial::new(5, 0), Monomial::new(3, 2)];
        assert!(matches!(kick_off_generators(4, 2, &[1, 1], &high, f), Err(Error::InvalidTarget(_))));
    }
}
