//! Signed samplers: streams of samples on a positive and a negative channel.
//!
//! A [`SamplerSpec`] is either a probability distribution over atoms (a leaf)
//! or a linear combination of sub-specs with nonzero real coefficients. Its
//! stream interleaves the children at rates proportional to their share of
//! the total path mass, and flips the channel of every sample that passes
//! through a negative coefficient. Scaling the signed empirical frequencies by
//! the total mass recovers the exact signed measure.

mod estimate;
mod kernel;
mod rng;
mod spec;
mod stream;

pub use estimate::{estimate, estimate_with, tv_error_bound, EstimationReport};
pub use kernel::{push_through, Pushed};
pub use spec::{branch_sampler, SamplerSpec};
pub use stream::{stream, Schedule, SpecStream};

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use thiserror::Error;

use crate::measure::{Atom, SignedMeasure};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SamplerError {
    #[error("leaf is not a probability distribution: {0}")]
    InvalidLeaf(String),
    #[error("combination has no children")]
    EmptyCombo,
    #[error("combination coefficient {0} must be finite and nonzero")]
    BadCoefficient(f64),
    #[error("branch probability {0} must lie strictly between 0 and 1")]
    AlphaOutOfRange(f64),
    #[error("column `{atom}` has absolute mass {mass}, expected 1")]
    ColumnMassNotOne { atom: String, mass: f64 },
    #[error("atom mismatch: {0}")]
    AtomMismatch(String),
    #[error("at least one sample is required")]
    ZeroSamples,
    #[error("invalid sampler spec: {0}")]
    Json(String),
}

/// The channel a sample travels on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedSample {
    pub atom: Atom,
    pub sign: Sign,
}

impl fmt::Display for SignedSample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == Sign::Pos { '+' } else { '-' };
        write!(f, "({},{s}1)", self.atom)
    }
}

/// Anything that emits signed samples whose scaled signed frequencies
/// converge to a known signed measure.
pub trait SignedSource {
    /// The measure the stream estimates.
    fn exact_semantics(&self) -> SignedMeasure;

    /// Scale factor from signed frequencies to the measure.
    fn target_mass(&self) -> f64;

    /// Every atom a sample can land on.
    fn atoms(&self) -> BTreeSet<Atom>;

    /// An endless deterministic stream for `seed`.
    fn sampler(&self, seed: u64, schedule: Schedule) -> Box<dyn Iterator<Item = SignedSample> + '_>;

    /// Nesting level of stream transformers, used to key their generators.
    fn depth(&self) -> u64 {
        0
    }
}
