use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use crate::scalar::Scalar;

use super::IntervalError;

/// A real number extended with −∞ and +∞.
///
/// The derived order puts `NegInf` below every finite value and `PosInf`
/// above, which is the order used for all interval comparisons.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub enum ExtReal<T = f64> {
    NegInf,
    Finite(T),
    PosInf,
}

impl<T: Scalar> ExtReal<T> {
    pub fn zero() -> Self {
        ExtReal::Finite(T::zero())
    }

    pub fn one() -> Self {
        ExtReal::Finite(T::one())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn finite(&self) -> Option<T> {
        match *self {
            ExtReal::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Sum of two extended reals; `(+∞) + (−∞)` is rejected.
    pub fn checked_add(self, other: Self) -> Result<Self, IntervalError> {
        use ExtReal::*;
        match (self, other) {
            (Finite(x), Finite(y)) => Ok(Finite(x + y)),
            (PosInf, NegInf) | (NegInf, PosInf) => Err(IntervalError::InfinityClash),
            (PosInf, _) | (_, PosInf) => Ok(PosInf),
            (NegInf, _) | (_, NegInf) => Ok(NegInf),
        }
    }

    pub fn checked_sub(self, other: Self) -> Result<Self, IntervalError> {
        self.checked_add(-other)
    }

    /// Product with a finite scalar; `0 · ±∞` is rejected.
    pub fn checked_scale(self, c: T) -> Result<Self, IntervalError> {
        use ExtReal::*;
        match self {
            Finite(x) => Ok(Finite(c * x)),
            _ if c.is_zero() => Err(IntervalError::UndefinedProduct),
            _ if c.is_negative() => Ok(-self),
            _ => Ok(self),
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn total_cmp(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }
}

impl<T: Scalar> From<T> for ExtReal<T> {
    /// Maps infinite floats onto the dedicated variants.
    ///
    /// Panics on NaN, which is not an extended real.
    fn from(value: T) -> Self {
        assert!(!value.is_nan(), "NaN is not an extended real");
        match value.infinity_sign() {
            Some(true) => ExtReal::PosInf,
            Some(false) => ExtReal::NegInf,
            None => ExtReal::Finite(value),
        }
    }
}

impl<T: Scalar> Neg for ExtReal<T> {
    type Output = Self;

    fn neg(self) -> Self {
        match self {
            ExtReal::NegInf => ExtReal::PosInf,
            ExtReal::PosInf => ExtReal::NegInf,
            ExtReal::Finite(x) => ExtReal::Finite(-x),
        }
    }
}

impl<T: Scalar> fmt::Display for ExtReal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::PosInf => f.write_str("inf"),
            // adding zero turns -0 into 0 for floats and is a no-op otherwise
            ExtReal::Finite(x) => write!(f, "{}", *x + T::zero()),
        }
    }
}

impl<T: Scalar + FromStr> FromStr for ExtReal<T> {
    type Err = IntervalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "inf" | "+inf" => Ok(ExtReal::PosInf),
            "-inf" => Ok(ExtReal::NegInf),
            _ => {
                let v: T = s.parse().map_err(|_| IntervalError::Parse(format!("bad number `{s}`")))?;
                if v.is_nan() {
                    return Err(IntervalError::Parse(format!("bad number `{s}`")));
                }
                Ok(ExtReal::from(v))
            }
        }
    }
}
