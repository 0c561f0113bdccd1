//! Exact computational toolkit for additive and multiplicative Sidon sets.
//!
//! The crate builds the extremal ground sets (prime products `P·Q`, triple
//! prime products, the dyadic progression union), computes additive and
//! multiplicative energies exactly, extracts Sidon and low-energy subsets,
//! and runs the seeded scaling experiments that compare these quantities
//! against their predicted power laws.

pub mod cli;
pub mod energy;
pub mod error;
pub mod graph;
pub mod low_energy;
pub mod primes;
pub mod report;
pub mod rng;
pub mod scaling;
pub mod sets;
pub mod sidon;

pub use energy::{EnergyReport, Mode};
pub use error::{Error, Result};
pub use graph::{C4Witness, ProductGraph};
pub use low_energy::LowEnergyResult;
pub use primes::PrimePool;
pub use scaling::{Fit, ScalingSeries};
pub use sets::{GroundSet, SampleSpec};
pub use sidon::{MaxSubsetResult, SidonVerdict, SidonWitness};

