//! Admissible colored partitions on the staircase arrays `N_w`, the periodic
//! products conjectured to generate them, and the machinery to compare the two.
//!
//! - [`lattice`]: weights, rows, the maxima recursion and the path condition
//! - [`counting`]: merged-state DP, brute-force oracle, dimension counts
//! - [`congruence`]: D-schemes, congruence triangles, product builders, residue notation
//! - [`qseries`]: exact truncated series, product expansion, exponent fitting

pub mod congruence;
pub mod counting;
mod error;
pub mod lattice;
pub mod qseries;

pub use congruence::{even_product, lepowsky_product, parse_residue_spec, PeriodicProduct};
pub use counting::{count_admissible, CountTable, Execution};
pub use error::{Error, Result};
pub use lattice::WeightVector;
pub use qseries::{expand, fit_exponents, Series};
