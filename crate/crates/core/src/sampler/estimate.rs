use std::collections::BTreeMap;

use crate::measure::{Atom, SignedMeasure};

use super::{SamplerError, Schedule, Sign, SignedSource};

/// Signed histogram of a finite stream prefix, scaled to a measure estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimationReport {
    pub estimate: SignedMeasure,
    pub n: usize,
    pub target_mass: f64,
    pub tv_error_bound: f64,
    /// `(positive, negative)` sample counts per atom.
    pub counts: BTreeMap<Atom, (u64, u64)>,
}

impl EstimationReport {
    /// Total variation distance from the estimate to `exact`.
    pub fn tv_distance(&self, exact: &SignedMeasure) -> f64 {
        self.estimate.sub(exact).tv_norm()
    }

    pub fn within_bound(&self, exact: &SignedMeasure) -> bool {
        self.tv_distance(exact) <= self.tv_error_bound
    }
}

/// `4·mass·√(atoms/n)`, a loose distribution-free envelope for the TV error.
pub fn tv_error_bound(target_mass: f64, atom_count: usize, n: usize) -> f64 {
    4.0 * target_mass * (atom_count as f64 / n as f64).sqrt()
}

pub fn estimate<S: SignedSource + ?Sized>(source: &S, seed: u64, n: usize) -> Result<EstimationReport, SamplerError> {
    estimate_with(source, seed, n, Schedule::Stride)
}

pub fn estimate_with<S: SignedSource + ?Sized>(
    source: &S,
    seed: u64,
    n: usize,
    schedule: Schedule,
) -> Result<EstimationReport, SamplerError> {
    if n == 0 {
        return Err(SamplerError::ZeroSamples);
    }
    let mut counts: BTreeMap<Atom, (u64, u64)> = BTreeMap::new();
    for s in source.sampler(seed, schedule).take(n) {
        let c = counts.entry(s.atom).or_default();
        match s.sign {
            Sign::Pos => c.0 += 1,
            Sign::Neg => c.1 += 1,
        }
    }
    let target_mass = source.target_mass();
    let estimate = SignedMeasure::from_weights(
        counts.iter().map(|(a, (p, q))| (a.clone(), target_mass * (*p as f64 - *q as f64) / n as f64)),
    );
    Ok(EstimationReport {
        estimate,
        n,
        target_mass,
        tv_error_bound: tv_error_bound(target_mass, source.atoms().len(), n),
        counts,
    })
}
