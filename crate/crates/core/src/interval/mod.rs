//! Partially inconsistent interval numbers.
//!
//! A [`Pii`] is a pair `[a,b]` of extended reals with no ordering constraint:
//! `a <= b` is an ordinary segment, `b < a` a pseudosegment. Addition and the
//! component-wise ("true") minus make them an abelian group and a 2-D vector
//! space; the informational and material orders make them a bilattice.

mod bilattice;
mod ext_real;
mod pii;
mod sequence;

pub use bilattice::{ginsberg_involution, FourValued};
pub use ext_real::ExtReal;
pub use pii::Pii;
pub use sequence::{classify_step, SequenceCheck, SequenceChecker, SequenceLimit, StepKind};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("opposite infinities meet in one component")]
    InfinityClash,
    #[error("zero times an infinite endpoint is undefined")]
    UndefinedProduct,
    #[error("interval {0} is not confined to the bounds [{1},{2}]")]
    OutOfConfinement(String, String, String),
    #[error("confinement bounds must be finite with lower <= upper")]
    InvalidBounds,
    #[error("sequence is empty")]
    EmptySequence,
    #[error("tolerance must be positive")]
    BadTolerance,
    #[error("endpoint is not finite")]
    NonFiniteEndpoint,
    #[error("parse error: {0}")]
    Parse(String),
}
