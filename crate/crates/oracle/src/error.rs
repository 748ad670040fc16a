use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("prime {prime} must exceed {} (socle degree {socle} plus one)", socle + 1)]
    PrimeTooSmall { prime: u32, socle: usize },
    #[error("budget must be at least 1")]
    ZeroBudget,
    #[error("no accepted point among {tested} tuples over GF({prime})")]
    BudgetExhausted { prime: u32, tested: u64 },
    #[error("expected {expected} {what}, got {got}")]
    ArityMismatch { what: &'static str, expected: usize, got: usize },
    #[error("2m = {} exceeds d = {d}", 2 * m)]
    DegreeTooSmall { d: usize, m: usize },
    #[error("invalid kick-off target: {0}")]
    InvalidTarget(String),
    #[error("generator of degree {degree} lies above the bound {bound}")]
    AboveBound { degree: usize, bound: usize },
    #[error(transparent)]
    Core(#[from] hookcells::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
