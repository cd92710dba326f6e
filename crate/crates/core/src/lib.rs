//! Exact log canonical thresholds of anticanonical divisors on degree-1
//! del Pezzo surfaces with ADE singularities.
//!
//! Everything is exact rational and machine-checkable:
//!
//! * [`resolution`]: Dynkin resolution graphs, exceptional intersection
//!   matrices, pullback coefficients and intersection numbers;
//! * [`polytope`]: an exact LP engine (simplex with Bland's rule, Fourier-
//!   Motzkin elimination, brute-force vertex enumeration) whose optima,
//!   infeasibilities and implications all carry verifiable certificates;
//! * [`local`]: the local multiplicity inequality at a crossing point, its
//!   parameter family, derived-consequence checks and the infinitely-near
//!   blow-up chain with its termination bound;
//! * [`lct`]: thresholds of weighted SNC arrangements and combinatorial
//!   blow-up programs for curve germs (node, cusp, tacnode, corner passages);
//! * [`catalog`]: admissible singularity configurations, the threshold
//!   table with witness divisors, and LP-certified lower bounds for every
//!   row;
//! * [`cli`]: the JSON command-line interface over all of the above.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod lct;
pub mod local;
pub mod polytope;
pub mod rational;
pub mod resolution;

pub use error::{Error, Result};
pub use rational::Rat;
