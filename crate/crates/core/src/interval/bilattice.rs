use crate::scalar::Scalar;

use super::{ExtReal, IntervalError, Pii};

/// Ginsberg involution for intervals confined to `[lower, upper]`:
/// `[a,b] ↦ [lower+upper−b, lower+upper−a]`.
///
/// Monotone for ⊑, antitone for ≤, and self-inverse. With symmetric bounds
/// `[−c,c]` it coincides with the weak minus.
pub fn ginsberg_involution<T: Scalar>(x: &Pii<T>, lower: T, upper: T) -> Result<Pii<T>, IntervalError> {
    let (lo, hi) = (ExtReal::from(lower), ExtReal::from(upper));
    if !lo.is_finite() || !hi.is_finite() || hi < lo {
        return Err(IntervalError::InvalidBounds);
    }
    let inside = |e: ExtReal<T>| lo <= e && e <= hi;
    if !inside(x.a) || !inside(x.b) {
        return Err(IntervalError::OutOfConfinement(x.to_string(), lo.to_string(), hi.to_string()));
    }
    let (a, b) = x.finite_endpoints()?;
    let s = lower + upper;
    Ok(Pii::new(s - b, s - a))
}

/// Belnap's four truth values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FourValued {
    False,
    True,
    /// No information.
    Bottom,
    /// Contradiction.
    Top,
}

impl FourValued {
    pub const ALL: [FourValued; 4] = [FourValued::False, FourValued::True, FourValued::Bottom, FourValued::Top];

    /// `f ↦ [0,0]`, `t ↦ [1,1]`, `⊥ ↦ [0,1]`, `⊤ ↦ [1,0]`.
    pub fn embed<T: Scalar>(self) -> Pii<T> {
        let (z, o) = (T::zero(), T::one());
        match self {
            FourValued::False => Pii::new(z, z),
            FourValued::True => Pii::new(o, o),
            FourValued::Bottom => Pii::new(z, o),
            FourValued::Top => Pii::new(o, z),
        }
    }
}
