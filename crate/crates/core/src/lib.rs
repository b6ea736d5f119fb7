//! Linear models of computation.
//!
//! - [`interval`]: partially inconsistent interval numbers, their bilattice
//!   structure, and monotonic sequences with involutive steps.
//! - [`metric`]: the partial metric, the signed lower distance and the
//!   interval-valued relaxed metric built from them.
//! - [`dframe`]: intervals as pairs of open rays and as signed multisets.
//! - [`measure`]: finite signed measures, Hahn–Jordan decomposition and
//!   linear operators as program denotations.
//! - [`sampler`]: two-channel signed samplers closed under linear combination.
//! - [`dataflow`]: generalized images and dataflow programs wired by a real
//!   weight matrix, with continuous program transformation.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod dataflow;
pub mod dframe;
pub mod interval;
pub mod measure;
pub mod metric;
pub mod sampler;
pub mod scalar;

pub use interval::{ExtReal, Pii};
pub use measure::{Atom, LinearOp, SignedMeasure};
pub use scalar::Scalar;
