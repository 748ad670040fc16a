//! Arithmetic in the prime field GF(p).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    (2..).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u32) -> u32 {
    (n + 1..).find(|&k| is_prime(k)).expect("primes are unbounded")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeModulus {
    p: u32,
}

impl PrimeModulus {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(Self { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// A prime exceeding `socle + 1`.
    pub fn for_socle(p: u32, socle: usize) -> Result<Self> {
        let m = Self::new(p)?;
        if (p as usize) <= socle + 1 {
            return Err(Error::PrimeTooSmall { prime: p, socle });
        }
        Ok(m)
    }

    /// The first admissible prime at least 5.
    pub fn smallest_for_socle(socle: usize) -> Self {
        let floor = (socle as u32 + 1).max(4);
        Self { p: next_prime(floor) }
    }

    pub fn next(self) -> Self {
        Self { p: next_prime(self.p) }
    }

    pub fn value(self) -> u32 {
        self.p
    }

    pub fn reduce(self, a: u64) -> u32 {
        (a % self.p as u64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 + b as u64)
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 + self.p as u64 - b as u64)
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 * b as u64)
    }

    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        self.pow(a, self.p as u64 - 2)
    }
}

impl TryFrom<u32> for PrimeModulus {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        Self::new(p)
    }
}

impl From<PrimeModulus> for u32 {
    fn from(m: PrimeModulus) -> u32 {
        m.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert_eq!(next_prime(4), 5);
        assert_eq!(next_prime(7), 11);
        assert!(PrimeModulus::new(9).is_err());
        assert_eq!(PrimeModulus::smallest_for_socle(2).value(), 5);
        assert_eq!(PrimeModulus::smallest_for_socle(5).value(), 7);
        assert_eq!(PrimeModulus::smallest_for_socle(6).value(), 11);
        assert!(matches!(PrimeModulus::for_socle(3, 2), Err(Error::PrimeTooSmall { .. })));
        assert!(PrimeModulus::for_socle(5, 3).is_ok());
    }

    #[test]
    fn inverses() {
        let f = PrimeModulus::new(13).unwrap();
        for a in 1..13 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.sub(2, 5), 10);
        assert_eq!(f.neg(0), 0);
    }
}
