//! Weighted arithmetic, geometric and harmonic means of positive-definite
//! Hermitian matrices, together with a numerical harness that checks the
//! inequalities relating them: the Young chain AM >= GM >= HM, the
//! r-combination bounds with their counter-example gap at 1 < r < 2, and
//! the two-sided bounds on the weighted geometric mean under a Loewner
//! ordering hypothesis.
//!
//! The crate is organized as:
//!
//! - [`hermit`]: dense Hermitian eigendecomposition, spectral-calculus
//!   matrix functions and tolerance-aware Loewner comparison;
//! - [`means`]: the three weighted operator means and their scalar
//!   representing functions;
//! - [`scalarfn`]: the scalar proof functions, exposed for grid checks;
//! - [`catalog`]: the inequality statements as expression trees, checked
//!   at scalar or operator instances;
//! - [`sampling`]: reproducible random matrices, ordered pairs and grids;
//! - [`search`]: counter-example scanning and randomized certification;
//! - [`cli`]: verification suites, reports, CSV curves (used by the
//!   `opmeans` binary).
//!
//! See the `examples/` directory for runnable entry points per capability.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod hermit;
pub mod means;
pub mod sampling;
pub mod scalarfn;
pub mod search;

pub use error::{Error, Result};
pub use hermit::{loewner_compare, HermitianMatrix, LoewnerRelation, LoewnerVerdict};
pub use means::{
    arithmetic_mean, geometric_mean, harmonic_mean, mean, representing_function, MeanKind, Weight,
};
