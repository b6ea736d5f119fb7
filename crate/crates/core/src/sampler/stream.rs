use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand_chacha::ChaCha8Rng;

use crate::measure::Atom;

use super::rng::keyed_rng;
use super::spec::{Node, SamplerSpec};
use super::{Sign, SignedSample};

/// How a combination picks which child emits the next sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Schedule {
    /// Deterministic smooth weighted round robin; ties go to the lower index.
    #[default]
    Stride,
    /// Independent random choice with the same rates.
    Mixture,
}

enum Picker {
    Stride { weights: Vec<f64>, credit: Vec<f64> },
    Mixture { dist: WeightedIndex<f64>, rng: Box<ChaCha8Rng> },
}

impl Picker {
    fn pick(&mut self) -> usize {
        match self {
            Picker::Stride { weights, credit } => {
                let mut best = 0;
                for i in 0..weights.len() {
                    credit[i] += weights[i];
                    if credit[i] > credit[best] {
                        best = i;
                    }
                }
                credit[best] -= 1.0;
                best
            }
            Picker::Mixture { dist, rng } => dist.sample(rng.as_mut()),
        }
    }
}

enum StreamNode {
    Leaf { atoms: Vec<Atom>, dist: WeightedIndex<f64>, rng: Box<ChaCha8Rng> },
    Combo { children: Vec<(Sign, StreamNode)>, picker: Picker },
}

impl StreamNode {
    fn build(spec: &SamplerSpec, seed: u64, schedule: Schedule, path: &mut Vec<usize>) -> StreamNode {
        match spec.node() {
            Node::Leaf(d) => {
                let (atoms, ws): (Vec<Atom>, Vec<f64>) = d.iter().map(|(a, w)| (a.clone(), w)).unzip();
                StreamNode::Leaf {
                    atoms,
                    dist: WeightedIndex::new(ws).expect("leaf weights are a distribution"),
                    rng: Box::new(keyed_rng(seed, 0, path)),
                }
            }
            Node::Combo(cs) => {
                // a child's rate is its share of the total path mass
                let raw: Vec<f64> = cs.iter().map(|(c, s)| c.abs() * s.target_mass()).collect();
                let total: f64 = raw.iter().sum();
                let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
                let picker = match schedule {
                    Schedule::Stride => Picker::Stride { credit: vec![0.0; weights.len()], weights },
                    Schedule::Mixture => Picker::Mixture {
                        dist: WeightedIndex::new(&weights).expect("positive rates"),
                        rng: Box::new(keyed_rng(seed, 0, path)),
                    },
                };
                let children = cs
                    .iter()
                    .enumerate()
                    .map(|(i, (c, s))| {
                        path.push(i);
                        let child = StreamNode::build(s, seed, schedule, path);
                        path.pop();
                        (Sign::of(*c), child)
                    })
                    .collect();
                StreamNode::Combo { children, picker }
            }
        }
    }

    fn next(&mut self) -> SignedSample {
        match self {
            StreamNode::Leaf { atoms, dist, rng } => {
                SignedSample { atom: atoms[dist.sample(rng)].clone(), sign: Sign::Pos }
            }
            StreamNode::Combo { children, picker } => {
                let (sign, child) = &mut children[picker.pick()];
                let mut s = child.next();
                s.sign = s.sign * *sign;
                s
            }
        }
    }
}

/// Endless deterministic stream of signed samples from a spec.
pub struct SpecStream {
    root: StreamNode,
}

impl SpecStream {
    pub fn new(spec: &SamplerSpec, seed: u64, schedule: Schedule) -> Self {
        SpecStream { root: StreamNode::build(spec, seed, schedule, &mut Vec::new()) }
    }
}

impl Iterator for SpecStream {
    type Item = SignedSample;

    fn next(&mut self) -> Option<SignedSample> {
        Some(self.root.next())
    }
}

/// The first `n` samples of the stride-scheduled stream for `seed`.
pub fn stream(spec: &SamplerSpec, seed: u64, n: usize) -> Vec<SignedSample> {
    spec.sampler(seed, Schedule::Stride).take(n).collect()
}
