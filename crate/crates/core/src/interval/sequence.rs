//! Monotonic sequences with involutive steps.
//!
//! Each step either moves up in the informational order or swaps the two
//! endpoints. A limit is read off after cancelling swap-and-back pairs, so
//! inserting such pairs anywhere never changes the verdict.

use crate::scalar::Scalar;

use super::{IntervalError, Pii};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Monotonic,
    Involution,
    Both,
    Neither,
}

impl StepKind {
    pub fn is_allowed(self) -> bool {
        self != StepKind::Neither
    }
}

/// Classifies the step `x → y`: monotonic when `x ⊑ y`, an involution when
/// `y` is `x` with its endpoints swapped.
pub fn classify_step<T: Scalar>(x: &Pii<T>, y: &Pii<T>) -> StepKind {
    match (x.info_leq(y), *y == x.swap()) {
        (true, true) => StepKind::Both,
        (true, false) => StepKind::Monotonic,
        (false, true) => StepKind::Involution,
        (false, false) => StepKind::Neither,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SequenceLimit<T = f64> {
    pub value: Pii<T>,
    /// The limit is (within tolerance) a point `[x,x]`.
    pub diagonal: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SequenceCheck<T = f64> {
    pub valid: bool,
    pub steps: Vec<StepKind>,
    pub limit: Option<SequenceLimit<T>>,
}

/// Validates sequences and detects their limits over a trailing window.
#[derive(Debug, Clone, Copy)]
pub struct SequenceChecker {
    pub window: usize,
}

impl Default for SequenceChecker {
    fn default() -> Self {
        SequenceChecker { window: 8 }
    }
}

impl SequenceChecker {
    pub fn new(window: usize) -> Self {
        SequenceChecker { window: window.max(1) }
    }

    pub fn check<T: Scalar>(&self, seq: &[Pii<T>], tol: T) -> Result<SequenceCheck<T>, IntervalError> {
        if seq.is_empty() {
            return Err(IntervalError::EmptySequence);
        }
        if tol <= T::zero() {
            return Err(IntervalError::BadTolerance);
        }
        let steps: Vec<StepKind> = seq.windows(2).map(|w| classify_step(&w[0], &w[1])).collect();
        let valid = steps.iter().all(|s| s.is_allowed());
        let limit = if valid { self.limit(&cancel_involution_pairs(seq), tol) } else { None };
        Ok(SequenceCheck { valid, steps, limit })
    }

    fn limit<T: Scalar>(&self, reduced: &[Pii<T>], tol: T) -> Option<SequenceLimit<T>> {
        if reduced.len() < self.window {
            return None;
        }
        let tail = &reduced[reduced.len() - self.window..];
        let mut ends = Vec::with_capacity(tail.len());
        for x in tail {
            ends.push(x.finite_endpoints().ok()?);
        }
        let spread = |pick: fn(&(T, T)) -> T| {
            let lo = ends.iter().map(pick).fold(pick(&ends[0]), T::min_of);
            let hi = ends.iter().map(pick).fold(pick(&ends[0]), T::max_of);
            hi - lo
        };
        if spread(|e| e.0) > tol || spread(|e| e.1) > tol {
            return None;
        }
        let value = *tail.last()?;
        let (a, b) = ends[ends.len() - 1];
        let diagonal = (a - b).abs() <= tol + tol;
        Some(SequenceLimit { value, diagonal })
    }
}

/// Removes every `x, swap(x), x` detour (for non-point `x`), repeatedly.
pub(crate) fn cancel_involution_pairs<T: Scalar>(seq: &[Pii<T>]) -> Vec<Pii<T>> {
    let mut out: Vec<Pii<T>> = Vec::with_capacity(seq.len());
    for &y in seq {
        if let [.., z, w] = out.as_slice() {
            if *w == z.swap() && z != w && y == *z {
                out.pop();
                continue;
            }
        }
        out.push(y);
    }
    out
}
