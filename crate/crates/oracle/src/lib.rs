//! Exact verification of generator counts over prime fields.
//!
//! Everything here is plain linear algebra in `k[x, y]`, degree by degree:
//! no Gröbner machinery and no rational arithmetic.

pub mod cell;
pub mod error;
pub mod field;
pub mod form;
pub mod ideal;
pub mod kappa;
pub mod kickoff;

pub use cell::{cell_points, CellChart, CellPoint, CellScan};
pub use error::{Error, Result};
pub use field::PrimeModulus;
pub use form::HomogeneousForm;
pub use ideal::{hilbert_function, initial_ideal, minimal_generator_count, GradedIdealBasis};
pub use kappa::{oracle_kappa, oracle_kappa_from, OracleKappa};
pub use kickoff::{kick_off_generators, kicked_off};
