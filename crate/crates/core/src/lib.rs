//! Exact computations in the integral cohomology ring of the type-A Peterson
//! variety, in the basis of Peterson Schubert classes `ϖ_J`.
//!
//! Structure constants `d_JK^L` of `ϖ_J · ϖ_K = Σ_L d_JK^L ϖ_L` are produced by
//! three independent engines:
//!
//! * [`diagrams`]: the left-right diagram game with rational row weights,
//! * [`cohomology`]: repeated application of the run rule for `ϖ_i · ϖ_a⋯ϖ_b`,
//! * [`linalg`]: Gaussian elimination modulo the relations `ϖ_i α_i = 0`.
//!
//! [`index_set`] and [`symmetric_group`] house the combinatorics of subsets of
//! the Dynkin vertex set `[n-1]` and of the fixed points `w_J`.

pub mod cli;
pub mod cohomology;
pub mod diagrams;
pub mod error;
pub mod index_set;
pub mod linalg;
pub mod symmetric_group;

pub use cohomology::{CohomologyClass, Rational};
pub use diagrams::{GameRow, LeftRightDiagram, Move};
pub use error::{Error, Result};
pub use index_set::{ComponentDecomposition, IndexSet, MAX_RANK};
pub use linalg::{LinalgOracle, Monomial};
pub use symmetric_group::Permutation;
