//! Intervals as pairs of open rays, and as signed multisets on the line.
//!
//! `[a,b]` corresponds to `⟨(−∞,a), (b,+∞)⟩`. Subtracting both rays from the
//! constant 1 (counting an overlap twice) gives the signed characteristic
//! function: 1 on a closed segment, −1 on the open gap of a pseudosegment.

use crate::interval::{ExtReal, IntervalError, Pii};
use crate::scalar::Scalar;

/// `⟨(−∞, lower_ray_end), (upper_ray_start, +∞)⟩`. Overlaps and gaps are both allowed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayPair<T = f64> {
    pub lower_ray_end: ExtReal<T>,
    pub upper_ray_start: ExtReal<T>,
}

impl<T: Scalar> RayPair<T> {
    /// The rays do not overlap; corresponds to a segment.
    pub fn is_consistent(&self) -> bool {
        self.lower_ray_end <= self.upper_ray_start
    }

    /// The rays cover the whole line; corresponds to a pseudosegment.
    pub fn is_total(&self) -> bool {
        self.upper_ray_start < self.lower_ray_end
    }

    pub fn lower_ray_contains(&self, t: T) -> bool {
        ExtReal::from(t) < self.lower_ray_end
    }

    pub fn upper_ray_contains(&self, t: T) -> bool {
        ExtReal::from(t) > self.upper_ray_start
    }

    /// Both rays of `self` are contained in the respective rays of `other`.
    pub fn rays_within(&self, other: &Self) -> bool {
        self.lower_ray_end <= other.lower_ray_end && other.upper_ray_start <= self.upper_ray_start
    }
}

pub fn to_ray_pair<T: Scalar>(x: &Pii<T>) -> RayPair<T> {
    RayPair { lower_ray_end: x.a, upper_ray_start: x.b }
}

pub fn from_ray_pair<T: Scalar>(r: &RayPair<T>) -> Pii<T> {
    Pii::from_ext(r.lower_ray_end, r.upper_ray_start)
}

/// Signed characteristic function at `t`, in {−1, 0, 1}.
///
/// Segments are closed (1 at their endpoints), pseudosegments are open
/// (0 at their endpoints), so points `[a,a]` count as segments.
pub fn char_value<T: Scalar>(x: &Pii<T>, t: T) -> i8 {
    let t = ExtReal::from(t);
    if x.is_segment() {
        i8::from(x.a <= t && t <= x.b)
    } else if x.b < t && t < x.a {
        -1
    } else {
        0
    }
}

/// `b − a`; negative for pseudosegments. Equals the self-distance `p(x,x)`.
pub fn signed_length<T: Scalar>(x: &Pii<T>) -> Result<T, IntervalError> {
    let (a, b) = x.finite_endpoints()?;
    Ok(b - a)
}
