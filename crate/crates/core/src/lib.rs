//! Exact computer algebra for the Lie algebra of regular differential
//! operators on the circle, its anti-involutions and central extensions,
//! realizations by banded infinite matrices over truncated polynomial rings,
//! and the classification data of quasifinite highest-weight modules.

pub mod diffop;
pub mod error;
pub mod exact;
pub mod involution;
pub mod matrix;
pub mod random;
pub mod verify;
pub mod weight;
#[cfg(test)]
mod strategies;

pub use diffop::DiffOp;
pub use error::{Error, Result};
pub use involution::{SignChoice, SymmetricP};
