use std::collections::{BTreeSet, HashMap};

use crate::scalar::Scalar;

use super::{Atom, MeasureError, SignedMeasure};

/// A dense matrix acting on measures over `inputs`, producing measures over
/// `outputs`. Measures are columns: `matrix[out][in]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearOp<T = f64> {
    inputs: Vec<Atom>,
    outputs: Vec<Atom>,
    entries: Vec<T>,
}

fn check_unique(atoms: &[Atom]) -> Result<(), MeasureError> {
    let mut seen = BTreeSet::new();
    for a in atoms {
        if !seen.insert(a) {
            return Err(MeasureError::DuplicateAtom(a.0.clone()));
        }
    }
    Ok(())
}

fn same_set(x: &[Atom], y: &[Atom]) -> bool {
    x.len() == y.len() && x.iter().collect::<BTreeSet<_>>() == y.iter().collect::<BTreeSet<_>>()
}

fn index_of(atoms: &[Atom]) -> HashMap<&Atom, usize> {
    atoms.iter().enumerate().map(|(i, a)| (a, i)).collect()
}

impl<T: Scalar> LinearOp<T> {
    pub fn new(inputs: Vec<Atom>, outputs: Vec<Atom>, rows: Vec<Vec<T>>) -> Result<Self, MeasureError> {
        check_unique(&inputs)?;
        check_unique(&outputs)?;
        let bad_shape = rows.len() != outputs.len() || rows.iter().any(|r| r.len() != inputs.len());
        if bad_shape {
            return Err(MeasureError::Dimension {
                rows: rows.len(),
                cols: rows.first().map_or(0, Vec::len),
                outputs: outputs.len(),
                inputs: inputs.len(),
            });
        }
        Ok(LinearOp { inputs, outputs, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(inputs: Vec<Atom>, outputs: Vec<Atom>, f: impl Fn(usize, usize) -> T) -> Result<Self, MeasureError> {
        check_unique(&inputs)?;
        check_unique(&outputs)?;
        let n = inputs.len();
        let entries = (0..outputs.len() * n).map(|k| f(k / n, k % n)).collect();
        Ok(LinearOp { inputs, outputs, entries })
    }

    pub fn identity(atoms: Vec<Atom>) -> Result<Self, MeasureError> {
        Self::from_fn(atoms.clone(), atoms, |o, i| if o == i { T::one() } else { T::zero() })
    }

    pub fn inputs(&self) -> &[Atom] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[Atom] {
        &self.outputs
    }

    /// Entry at (output index, input index).
    pub fn entry(&self, out: usize, inp: usize) -> T {
        self.entries[out * self.inputs.len() + inp]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.inputs.len().max(1)).take(self.outputs.len())
    }

    pub fn column(&self, inp: usize) -> impl Iterator<Item = T> + '_ {
        (0..self.outputs.len()).map(move |o| self.entry(o, inp))
    }

    pub fn apply(&self, mu: &SignedMeasure<T>) -> Result<SignedMeasure<T>, MeasureError> {
        let idx = index_of(&self.inputs);
        let mut col = vec![T::zero(); self.inputs.len()];
        for (atom, w) in mu.iter() {
            let i = idx
                .get(atom)
                .ok_or_else(|| MeasureError::AtomMismatch(format!("atom `{atom}` is not an operator input")))?;
            col[*i] = w;
        }
        Ok(SignedMeasure::from_weights(self.outputs.iter().enumerate().map(|(o, atom)| {
            let v = col.iter().enumerate().fold(T::zero(), |acc, (i, x)| acc + self.entry(o, i) * *x);
            (atom.clone(), v)
        })))
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &LinearOp<T>) -> Result<LinearOp<T>, MeasureError> {
        if !same_set(&first.outputs, &self.inputs) {
            return Err(MeasureError::AtomMismatch(
                "outputs of the first operator must be the inputs of the second".into(),
            ));
        }
        let mid = index_of(&first.outputs);
        let to_mid: Vec<usize> = self.inputs.iter().map(|a| mid[a]).collect();
        LinearOp::from_fn(first.inputs.clone(), self.outputs.clone(), |o, i| {
            to_mid.iter().enumerate().fold(T::zero(), |acc, (k, m)| acc + self.entry(o, k) * first.entry(*m, i))
        })
    }

    /// `other` re-indexed onto this operator's atom order.
    fn aligned(&self, other: &LinearOp<T>) -> Result<LinearOp<T>, MeasureError> {
        if !same_set(&self.inputs, &other.inputs) || !same_set(&self.outputs, &other.outputs) {
            return Err(MeasureError::AtomMismatch("operators act on different atoms".into()));
        }
        let (oi, oo) = (index_of(&other.inputs), index_of(&other.outputs));
        LinearOp::from_fn(self.inputs.clone(), self.outputs.clone(), |o, i| {
            other.entry(oo[&self.outputs[o]], oi[&self.inputs[i]])
        })
    }

    /// Entrywise `a·self + b·other`.
    pub fn lincomb(&self, a: T, other: &LinearOp<T>, b: T) -> Result<LinearOp<T>, MeasureError> {
        let other = self.aligned(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(x, y)| a * *x + b * *y).collect();
        Ok(LinearOp { inputs: self.inputs.clone(), outputs: self.outputs.clone(), entries })
    }

    pub fn sub(&self, other: &LinearOp<T>) -> Result<LinearOp<T>, MeasureError> {
        self.lincomb(T::one(), other, -T::one())
    }

    pub fn column_abs_sums(&self) -> Vec<T> {
        (0..self.inputs.len()).map(|i| self.column(i).fold(T::zero(), |acc, x| acc + x.abs())).collect()
    }

    /// Norm induced by the total variation norm: the largest column abs sum.
    pub fn op_norm(&self) -> T {
        self.column_abs_sums().into_iter().fold(T::zero(), T::max_of)
    }

    /// Nonnegative entries and every column summing to one within `tol`.
    pub fn is_stochastic_within(&self, tol: T) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
            && (0..self.inputs.len()).all(|i| {
                let s = self.column(i).fold(T::zero(), |acc, x| acc + x);
                (s - T::one()).abs() <= tol
            })
    }
}

impl LinearOp<f64> {
    /// Column sums equal to one within 1e−12.
    pub fn is_stochastic(&self) -> bool {
        self.is_stochastic_within(1e-12)
    }
}

/// Distance between two denotations: `op_norm(a − b)`.
pub fn program_distance<T: Scalar>(a: &LinearOp<T>, b: &LinearOp<T>) -> Result<T, MeasureError> {
    Ok(a.sub(b)?.op_norm())
}

/// Denotation of `if random < alpha then p else q`: `alpha·p + (1−alpha)·q`.
pub fn branch_operator<T: Scalar>(alpha: T, p: &LinearOp<T>, q: &LinearOp<T>) -> Result<LinearOp<T>, MeasureError> {
    if alpha <= T::zero() || alpha >= T::one() {
        return Err(MeasureError::AlphaOutOfRange(alpha.to_f64()));
    }
    p.lincomb(alpha, q, T::one() - alpha)
}
