//! Finite-support signed measures, their vector-lattice structure, and
//! linear operators between them as program denotations.

mod csv_io;
mod op;

pub use csv_io::{read_measure_csv, read_operator_csv, write_measure_csv, write_operator_csv};
pub use op::{branch_operator, program_distance, LinearOp};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum MeasureError {
    #[error("atom sets do not match: {0}")]
    AtomMismatch(String),
    #[error("branch probability {0} must lie strictly between 0 and 1")]
    AlphaOutOfRange(f64),
    #[error("matrix shape {rows}x{cols} does not match {outputs} outputs x {inputs} inputs")]
    Dimension { rows: usize, cols: usize, outputs: usize, inputs: usize },
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("malformed csv: {0}")]
    Csv(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// An opaque point label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(pub String);

impl Atom {
    pub fn new(id: impl Into<String>) -> Self {
        Atom(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Atom {
    fn from(s: &str) -> Self {
        Atom(s.to_owned())
    }
}

/// A map from atoms to weights, stored without zero entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedMeasure<T = f64> {
    weights: BTreeMap<Atom, T>,
}

impl<T: Scalar> Default for SignedMeasure<T> {
    fn default() -> Self {
        SignedMeasure { weights: BTreeMap::new() }
    }
}

impl<T: Scalar> SignedMeasure<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn point(atom: impl Into<Atom>) -> Self {
        Self::from_weights([(atom.into(), T::one())])
    }

    /// Later entries for the same atom are summed in.
    pub fn from_weights<A: Into<Atom>>(weights: impl IntoIterator<Item = (A, T)>) -> Self {
        let mut m = Self::zero();
        for (a, w) in weights {
            m.add_at(a.into(), w);
        }
        m
    }

    fn add_at(&mut self, atom: Atom, w: T) {
        let v = self.weights.get(&atom).copied().unwrap_or_else(T::zero) + w;
        if v.is_zero() {
            self.weights.remove(&atom);
        } else {
            self.weights.insert(atom, v);
        }
    }

    /// Weight at `atom`, zero off the support.
    pub fn get(&self, atom: &Atom) -> T {
        self.weights.get(atom).copied().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, T)> {
        self.weights.iter().map(|(a, w)| (a, *w))
    }

    pub fn support(&self) -> impl Iterator<Item = &Atom> {
        self.weights.keys()
    }

    /// Number of atoms with nonzero weight.
    pub fn support_len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        let mut out = Self::zero();
        for atom in self.weights.keys().chain(other.weights.keys()) {
            if out.weights.contains_key(atom) {
                continue;
            }
            let v = f(self.get(atom), other.get(atom));
            if !v.is_zero() {
                out.weights.insert(atom.clone(), v);
            }
        }
        out
    }

    fn map(&self, f: impl Fn(T) -> T) -> Self {
        let weights = self.weights.iter().map(|(a, w)| (a.clone(), f(*w))).filter(|(_, w)| !w.is_zero()).collect();
        SignedMeasure { weights }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x - y)
    }

    pub fn scale(&self, c: T) -> Self {
        self.map(|w| c * w)
    }

    pub fn negate(&self) -> Self {
        self.map(|w| -w)
    }

    /// Every weight is nonnegative.
    pub fn is_positive(&self) -> bool {
        self.weights.values().all(|w| !w.is_negative())
    }

    /// `self ≤ other` iff `other − self` is a positive measure.
    pub fn material_leq(&self, other: &Self) -> bool {
        other.sub(self).is_positive()
    }

    /// Pointwise minimum `self ∧ other`.
    pub fn material_meet(&self, other: &Self) -> Self {
        self.zip_with(other, T::min_of)
    }

    /// Pointwise maximum `self ∨ other`.
    pub fn material_join(&self, other: &Self) -> Self {
        self.zip_with(other, T::max_of)
    }

    /// `μ⁺ = μ ∨ 0`, `μ⁻ = μ ∧ 0`.
    pub fn hahn_jordan(&self) -> JordanPair<T> {
        let zero = T::zero();
        JordanPair { positive: self.map(|w| w.max_of(zero)), negative: self.map(|w| w.min_of(zero)) }
    }

    /// Knowledge order: `ν ⊑ μ` iff `ν⁺ ≤ μ⁺` and `|ν⁻| ≤ |μ⁻|` pointwise.
    ///
    /// The negative parts are compared by magnitude; this is what makes
    /// `μ = μ⁺ ⊔ μ⁻` hold. The zero measure is the least element.
    pub fn info_leq(&self, other: &Self) -> bool {
        let (n, m) = (self.hahn_jordan(), other.hahn_jordan());
        n.positive.material_leq(&m.positive) && m.negative.material_leq(&n.negative)
    }

    /// Joins the Jordan parts separately (max of positive parts, most
    /// negative of negative parts) and adds the results.
    ///
    /// When the two joined parts have disjoint supports this is the least
    /// upper bound for [`SignedMeasure::info_leq`]; otherwise the sum cancels.
    pub fn info_join(&self, other: &Self) -> Self {
        let (n, m) = (self.hahn_jordan(), other.hahn_jordan());
        n.positive.material_join(&m.positive).add(&n.negative.material_meet(&m.negative))
    }

    /// Total variation norm: Σ |weight|.
    pub fn tv_norm(&self) -> T {
        self.weights.values().fold(T::zero(), |acc, w| acc + w.abs())
    }

    /// Σ weight.
    pub fn total_mass(&self) -> T {
        self.weights.values().fold(T::zero(), |acc, w| acc + *w)
    }
}

/// Hahn–Jordan parts: `positive ≥ 0`, `negative ≤ 0`, disjoint supports.
#[derive(Debug, Clone, PartialEq)]
pub struct JordanPair<T = f64> {
    pub positive: SignedMeasure<T>,
    pub negative: SignedMeasure<T>,
}

impl<T: Scalar> JordanPair<T> {
    pub fn recompose(&self) -> SignedMeasure<T> {
        self.positive.add(&self.negative)
    }
}
