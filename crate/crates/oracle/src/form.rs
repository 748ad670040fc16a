use std::fmt;

use hookcells::Monomial;
use serde::{Deserialize, Serialize};

/// A form of degree `i`, coefficients indexed by the y-degree `0..=i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomogeneousForm {
    pub degree: usize,
    pub coefficients: Vec<u32>,
}

impl HomogeneousForm {
    pub fn zero(degree: usize) -> Self {
        Self { degree, coefficients: vec![0; degree + 1] }
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut f = Self::zero(m.degree());
        f.coefficients[m.ydeg] = 1;
        f
    }

    pub fn coefficient(&self, ydeg: usize) -> u32 {
        self.coefficients.get(ydeg).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }

    /// The term of highest y-degree.
    pub fn initial_monomial(&self) -> Option<Monomial> {
        let k = self.coefficients.iter().rposition(|&c| c != 0)?;
        Some(Monomial::new(self.degree - k, k))
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, u32)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (Monomial::new(self.degree - k, k), c))
    }
}

impl fmt::Display for HomogeneousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Monomial, u32)> = self.terms().collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            match (*c, m.degree()) {
                (1, 0) => write!(f, "1")?,
                (1, _) => write!(f, "{m}")?,
                (c, 0) => write!(f, "{c}")?,
                (c, _) => write!(f, "{c}{m}")?,
            }
        }
        Ok(())
    }
}
