//! Combinatorics of graded Artinian quotients `k[x,y]/I` of height two.
//!
//! Partitions stand for monomial ideals `E_P`, Hilbert functions for the
//! varieties `G_T`, and hook codes for the affine cells of `G_T`.

pub mod components;
pub mod counting;
pub mod error;
pub mod hilbert;
pub mod hookcode;
pub mod kappa;
pub mod partitions;
mod text;

pub use components::{decompose, ComponentDecomposition, ComponentEntry};
pub use error::Error;
pub use hilbert::{BlockBox, HilbertFunction};
pub use hookcode::{CodeBlock, HookCode};
pub use partitions::{Hook, Monomial, Partition};
