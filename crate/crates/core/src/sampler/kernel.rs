use std::collections::{BTreeSet, HashMap};

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;

use crate::measure::{Atom, LinearOp, SignedMeasure};

use super::rng::keyed_rng;
use super::{SamplerError, Schedule, Sign, SignedSample, SignedSource};

const COLUMN_MASS_TOL: f64 = 1e-9;

struct Column {
    dist: WeightedIndex<f64>,
    signs: Vec<Sign>,
}

/// A signed source followed by a signed kernel at sample level.
///
/// An incoming sample at input atom `i` with sign `σ` moves to output atom
/// `o` with probability `|m[o][i]|` and leaves with sign `σ·sign(m[o][i])`.
pub struct Pushed<S> {
    inner: S,
    op: LinearOp,
    index: HashMap<Atom, usize>,
    columns: Vec<Column>,
}

/// Wraps `inner` so its samples pass through `op`.
///
/// Every column of `|op|` must sum to one, and every atom `inner` can emit
/// must be an input of `op`.
pub fn push_through<S: SignedSource>(op: LinearOp, inner: S) -> Result<Pushed<S>, SamplerError> {
    let mut columns = Vec::with_capacity(op.inputs().len());
    for (i, atom) in op.inputs().iter().enumerate() {
        let col: Vec<f64> = op.column(i).collect();
        let mass: f64 = col.iter().map(|x| x.abs()).sum();
        if (mass - 1.0).abs() > COLUMN_MASS_TOL || col.iter().any(|x| !x.is_finite()) {
            return Err(SamplerError::ColumnMassNotOne { atom: atom.0.clone(), mass });
        }
        columns.push(Column {
            dist: WeightedIndex::new(col.iter().map(|x| x.abs())).expect("column has mass one"),
            signs: col.iter().map(|x| Sign::of(*x)).collect(),
        });
    }
    let index: HashMap<Atom, usize> = op.inputs().iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    if let Some(a) = inner.atoms().iter().find(|a| !index.contains_key(*a)) {
        return Err(SamplerError::AtomMismatch(format!("atom `{a}` is not a kernel input")));
    }
    Ok(Pushed { inner, op, index, columns })
}

impl<S> Pushed<S> {
    pub fn op(&self) -> &LinearOp {
        &self.op
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }
}

impl<S: SignedSource> SignedSource for Pushed<S> {
    fn exact_semantics(&self) -> SignedMeasure {
        self.op.apply(&self.inner.exact_semantics()).expect("inner atoms checked at construction")
    }

    fn target_mass(&self) -> f64 {
        self.inner.target_mass()
    }

    fn atoms(&self) -> BTreeSet<Atom> {
        self.op.outputs().iter().cloned().collect()
    }

    fn sampler(&self, seed: u64, schedule: Schedule) -> Box<dyn Iterator<Item = SignedSample> + '_> {
        let mut rng = keyed_rng(seed, 1, &[self.depth() as usize]);
        let outputs = self.op.outputs();
        Box::new(self.inner.sampler(seed, schedule).map(move |s| {
            let col = &self.columns[self.index[&s.atom]];
            let o = col.dist.sample(&mut rng);
            SignedSample { atom: outputs[o].clone(), sign: s.sign * col.signs[o] }
        }))
    }

    fn depth(&self) -> u64 {
        self.inner.depth() + 1
    }
}
