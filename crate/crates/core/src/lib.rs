//! Exact computation of Todd and L polynomials, the forgotten and g bases of
//! symmetric functions, series-reversion coefficients, and the Hirzebruch,
//! Buchstaber and Bernoulli denominator identities.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod arith;
pub mod error;
pub mod genera;
pub mod linalg;
pub mod numbers;
pub mod partition;
pub mod render;
pub mod reversion;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use symfunc::{BasisTag, SymFn};
