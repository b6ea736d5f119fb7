use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::measure::{Atom, SignedMeasure};

use super::stream::{Schedule, SpecStream};
use super::{SamplerError, SignedSample, SignedSource};

const LEAF_MASS_TOL: f64 = 1e-9;

/// A probability leaf or a nonzero-coefficient linear combination of specs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SpecJson", into = "SpecJson")]
pub struct SamplerSpec {
    node: Node,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Node {
    Leaf(SignedMeasure),
    Combo(Vec<(f64, SamplerSpec)>),
}

impl SamplerSpec {
    /// A leaf drawing atoms from `dist`, which must be nonnegative with mass 1.
    pub fn leaf(dist: SignedMeasure) -> Result<Self, SamplerError> {
        if dist.is_zero() {
            return Err(SamplerError::InvalidLeaf("empty distribution".into()));
        }
        if let Some((a, w)) = dist.iter().find(|(_, w)| !w.is_finite() || *w < 0.0) {
            return Err(SamplerError::InvalidLeaf(format!("weight {w} at `{a}`")));
        }
        let mass = dist.total_mass();
        if (mass - 1.0).abs() > LEAF_MASS_TOL {
            return Err(SamplerError::InvalidLeaf(format!("total mass {mass}")));
        }
        Ok(SamplerSpec { node: Node::Leaf(dist) })
    }

    /// Point mass at `atom`.
    pub fn point(atom: impl Into<Atom>) -> Self {
        SamplerSpec { node: Node::Leaf(SignedMeasure::point(atom)) }
    }

    pub fn combo(children: Vec<(f64, SamplerSpec)>) -> Result<Self, SamplerError> {
        if children.is_empty() {
            return Err(SamplerError::EmptyCombo);
        }
        if let Some((c, _)) = children.iter().find(|(c, _)| !c.is_finite() || *c == 0.0) {
            return Err(SamplerError::BadCoefficient(*c));
        }
        Ok(SamplerSpec { node: Node::Combo(children) })
    }

    pub(crate) fn node(&self) -> &Node {
        &self.node
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.node, Node::Leaf(_))
    }

    /// Children of a combination; empty for a leaf.
    pub fn children(&self) -> &[(f64, SamplerSpec)] {
        match &self.node {
            Node::Leaf(_) => &[],
            Node::Combo(c) => c,
        }
    }

    /// `Σ c·⟦child⟧` for combinations, the distribution itself for leaves.
    pub fn exact_semantics(&self) -> SignedMeasure {
        match &self.node {
            Node::Leaf(d) => d.clone(),
            Node::Combo(children) => {
                children.iter().fold(SignedMeasure::zero(), |acc, (c, s)| acc.add(&s.exact_semantics().scale(*c)))
            }
        }
    }

    /// Sum over leaves of the absolute product of coefficients on the path.
    pub fn target_mass(&self) -> f64 {
        match &self.node {
            Node::Leaf(_) => 1.0,
            Node::Combo(children) => children.iter().map(|(c, s)| c.abs() * s.target_mass()).sum(),
        }
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        match &self.node {
            Node::Leaf(d) => d.support().cloned().collect(),
            Node::Combo(children) => children.iter().flat_map(|(_, s)| s.atoms()).collect(),
        }
    }

    pub fn sampler(&self, seed: u64, schedule: Schedule) -> SpecStream {
        SpecStream::new(self, seed, schedule)
    }
}

impl SignedSource for SamplerSpec {
    fn exact_semantics(&self) -> SignedMeasure {
        SamplerSpec::exact_semantics(self)
    }

    fn target_mass(&self) -> f64 {
        SamplerSpec::target_mass(self)
    }

    fn atoms(&self) -> BTreeSet<Atom> {
        SamplerSpec::atoms(self)
    }

    fn sampler(&self, seed: u64, schedule: Schedule) -> Box<dyn Iterator<Item = SignedSample> + '_> {
        Box::new(SamplerSpec::sampler(self, seed, schedule))
    }
}

/// `if random < alpha then p else q` as the combination `alpha·p + (1−alpha)·q`.
pub fn branch_sampler(alpha: f64, p: SamplerSpec, q: SamplerSpec) -> Result<SamplerSpec, SamplerError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(SamplerError::AlphaOutOfRange(alpha));
    }
    SamplerSpec::combo(vec![(alpha, p), (1.0 - alpha, q)])
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum SpecJson {
    Leaf(BTreeMap<String, f64>),
    Combo(Vec<(f64, SpecJson)>),
}

impl TryFrom<SpecJson> for SamplerSpec {
    type Error = SamplerError;

    fn try_from(j: SpecJson) -> Result<Self, SamplerError> {
        match j {
            SpecJson::Leaf(ws) => {
                SamplerSpec::leaf(SignedMeasure::from_weights(ws.into_iter().map(|(a, w)| (Atom(a), w))))
            }
            SpecJson::Combo(cs) => {
                SamplerSpec::combo(cs.into_iter().map(|(c, s)| Ok((c, SamplerSpec::try_from(s)?))).collect::<Result<
                    _,
                    SamplerError,
                >>(
                )?)
            }
        }
    }
}

impl From<SamplerSpec> for SpecJson {
    fn from(s: SamplerSpec) -> SpecJson {
        match s.node {
            Node::Leaf(d) => SpecJson::Leaf(d.iter().map(|(a, w)| (a.0.clone(), w)).collect()),
            Node::Combo(cs) => SpecJson::Combo(cs.into_iter().map(|(c, s)| (c, s.into())).collect()),
        }
    }
}

impl SamplerSpec {
    pub fn from_json(text: &str) -> Result<Self, SamplerError> {
        serde_json::from_str(text).map_err(|e| SamplerError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }
}
