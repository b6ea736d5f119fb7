use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use crate::scalar::Scalar;

use super::{ExtReal, IntervalError};

/// A partially inconsistent interval number `[a,b]`.
///
/// Equality is exact component equality; use [`Pii::approx_eq`] for
/// tolerance-based comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pii<T = f64> {
    pub a: ExtReal<T>,
    pub b: ExtReal<T>,
}

impl<T: Scalar> Pii<T> {
    /// Builds `[a,b]` from plain scalars. Float infinities become ±∞ endpoints.
    pub fn new(a: T, b: T) -> Self {
        Pii { a: a.into(), b: b.into() }
    }

    pub fn from_ext(a: ExtReal<T>, b: ExtReal<T>) -> Self {
        Pii { a, b }
    }

    pub fn point(v: T) -> Self {
        Pii::new(v, v)
    }

    pub fn zero() -> Self {
        Pii::point(T::zero())
    }

    pub fn is_segment(&self) -> bool {
        self.a <= self.b
    }

    pub fn is_pseudosegment(&self) -> bool {
        self.b < self.a
    }

    pub fn is_point(&self) -> bool {
        self.a == self.b
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite()
    }

    /// Both endpoints as scalars, or `NonFiniteEndpoint`.
    pub fn finite_endpoints(&self) -> Result<(T, T), IntervalError> {
        match (self.a.finite(), self.b.finite()) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(IntervalError::NonFiniteEndpoint),
        }
    }

    /// Component-wise sum.
    pub fn try_add(&self, other: &Self) -> Result<Self, IntervalError> {
        Ok(Pii { a: self.a.checked_add(other.a)?, b: self.b.checked_add(other.b)? })
    }

    /// `[a,b] ↦ [−b,−a]`. Monotone for ⊑ but not a group inverse.
    pub fn weak_minus(&self) -> Self {
        Pii { a: -self.b, b: -self.a }
    }

    /// `[a,b] ↦ [−a,−b]`, the group inverse. Swaps segments and pseudosegments.
    pub fn true_minus(&self) -> Self {
        Pii { a: -self.a, b: -self.b }
    }

    /// `c·[a,b] = [c·a, c·b]`, the scalar action of the 2-D vector space.
    pub fn scale(&self, c: T) -> Result<Self, IntervalError> {
        Ok(Pii { a: self.a.checked_scale(c)?, b: self.b.checked_scale(c)? })
    }

    /// `[a,b] ↦ [b,a]`.
    pub fn swap(&self) -> Self {
        Pii { a: self.b, b: self.a }
    }

    /// Informational order ⊑ (reverse inclusion): `a ≤ a'` and `b' ≤ b`.
    pub fn info_leq(&self, other: &Self) -> bool {
        self.a <= other.a && other.b <= self.b
    }

    /// Material order ≤ (component-wise).
    pub fn material_leq(&self, other: &Self) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    pub fn info_meet(&self, other: &Self) -> Self {
        Pii { a: self.a.min(other.a), b: self.b.max(other.b) }
    }

    /// Exists for every pair; disjoint segments join to a pseudosegment.
    pub fn info_join(&self, other: &Self) -> Self {
        Pii { a: self.a.max(other.a), b: self.b.min(other.b) }
    }

    pub fn material_meet(&self, other: &Self) -> Self {
        Pii { a: self.a.min(other.a), b: self.b.min(other.b) }
    }

    pub fn material_join(&self, other: &Self) -> Self {
        Pii { a: self.a.max(other.a), b: self.b.max(other.b) }
    }

    /// Component-wise closeness; infinite endpoints must match exactly.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        fn close<T: Scalar>(x: ExtReal<T>, y: ExtReal<T>, tol: T) -> bool {
            match (x, y) {
                (ExtReal::Finite(x), ExtReal::Finite(y)) => (x - y).abs() <= tol,
                (x, y) => x == y,
            }
        }
        close(self.a, other.a, tol) && close(self.b, other.b, tol)
    }
}

impl<T: Scalar> Add for Pii<T> {
    type Output = Pii<T>;

    /// Panics when opposite infinities meet; use [`Pii::try_add`] to handle that case.
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("interval addition")
    }
}

impl<T: Scalar> Neg for Pii<T> {
    type Output = Pii<T>;

    fn neg(self) -> Self {
        self.true_minus()
    }
}

impl<T: Scalar> fmt::Display for Pii<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

impl<T: Scalar + FromStr> FromStr for Pii<T> {
    type Err = IntervalError;

    /// Parses `[a,b]`; endpoints may be `inf`, `+inf` or `-inf`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| IntervalError::Parse(format!("expected `[a,b]`, got `{s}`")))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| IntervalError::Parse(format!("missing comma in `{s}`")))?;
        Ok(Pii { a: a.parse()?, b: b.parse()? })
    }
}
