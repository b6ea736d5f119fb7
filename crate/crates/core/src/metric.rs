//! Partial metric `p`, signed lower distance `l`, and their pairing into an
//! interval-valued relaxed metric.
//!
//! Both distances are defined only for finite endpoints.

use crate::interval::{IntervalError, Pii};
use crate::scalar::Scalar;

/// Lower and upper distance bounds, `l` and `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistancePair<T = f64> {
    pub lower: T,
    pub upper: T,
}

impl<T: Scalar> DistancePair<T> {
    /// `[l, p]`; a pseudosegment when the self-distance of a pseudosegment is taken.
    pub fn as_pii(&self) -> Pii<T> {
        Pii::new(self.lower, self.upper)
    }
}

/// `max(b₁,b₂) − min(a₁,a₂)`. The self-distance of `[a,b]` is `b−a`,
/// negative for pseudosegments.
pub fn partial_metric<T: Scalar>(x: &Pii<T>, y: &Pii<T>) -> Result<T, IntervalError> {
    let (xa, xb) = x.finite_endpoints()?;
    let (ya, yb) = y.finite_endpoints()?;
    Ok(xb.max_of(yb) - xa.min_of(ya))
}

/// `max(a₁,a₂) − min(b₁,b₂)`: the gap for disjoint segments, negative on overlap.
pub fn lower_distance<T: Scalar>(x: &Pii<T>, y: &Pii<T>) -> Result<T, IntervalError> {
    let (xa, xb) = x.finite_endpoints()?;
    let (ya, yb) = y.finite_endpoints()?;
    Ok(xa.max_of(ya) - xb.min_of(yb))
}

pub fn relaxed_distance<T: Scalar>(x: &Pii<T>, y: &Pii<T>) -> Result<DistancePair<T>, IntervalError> {
    Ok(DistancePair { lower: lower_distance(x, y)?, upper: partial_metric(x, y)? })
}

/// `[a,b] ↦ [b,a]`; conjugates `l` into `p` and back.
pub fn swap<T: Scalar>(x: &Pii<T>) -> Pii<T> {
    x.swap()
}
