//! Number types usable as interval endpoints and measure weights.
//!
//! Everything in the crate is generic over [`Scalar`] so the algebraic laws
//! can be checked exactly with rationals while production code runs on `f64`.

use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::Signed;

pub trait Scalar: Copy + PartialOrd + Signed + Debug + Display + Send + Sync + 'static {
    /// `Some(true)` for +∞, `Some(false)` for −∞, `None` for finite values.
    fn infinity_sign(&self) -> Option<bool> {
        None
    }

    fn is_nan(&self) -> bool {
        false
    }

    fn from_f64(x: f64) -> Option<Self>;

    fn to_f64(&self) -> f64;

    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl Scalar for f64 {
    fn infinity_sign(&self) -> Option<bool> {
        if self.is_infinite() {
            Some(*self > 0.0)
        } else {
            None
        }
    }

    fn is_nan(&self) -> bool {
        f64::is_nan(*self)
    }

    fn from_f64(x: f64) -> Option<Self> {
        Some(x)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

macro_rules! rational_scalar {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            fn from_f64(x: f64) -> Option<Self> {
                Ratio::<$int>::approximate_float(x)
            }

            fn to_f64(&self) -> f64 {
                *self.numer() as f64 / *self.denom() as f64
            }
        }
    };
}

rational_scalar!(i64);
rational_scalar!(i128);
