use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::image::GeneralizedImage;
use super::matrix::WeightMatrix;
use super::morph::MorphSchedule;
use super::program::DataflowProgram;
use super::template::TemplateKind;
use super::DataflowError;

/// Latched output image of every template.
pub type State = Vec<GeneralizedImage>;

/// Successive states of a run; `states[0]` is the initial state.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub states: Vec<State>,
}

impl Trace {
    pub fn ticks(&self) -> usize {
        self.states.len().saturating_sub(1)
    }

    pub fn last(&self) -> &State {
        self.states.last().expect("trace holds the initial state")
    }

    /// Output image of template `k` at every tick.
    pub fn series(&self, k: usize) -> impl Iterator<Item = &GeneralizedImage> {
        self.states.iter().map(move |s| &s[k])
    }

    /// Keeps only the first `n` templates of every state.
    pub fn project(&self, n: usize) -> Trace {
        Trace { states: self.states.iter().map(|s| s[..n].to_vec()).collect() }
    }

    /// Per tick, the largest pointwise difference over all templates.
    pub fn max_abs_diff(&self, other: &Trace) -> Vec<f64> {
        self.states
            .iter()
            .zip(&other.states)
            .map(|(x, y)| x.iter().zip(y).fold(0.0_f64, |m, (a, b)| m.max(a.max_abs_diff(b))))
            .collect()
    }

    pub fn bits_eq(&self, other: &Trace) -> bool {
        self.states.len() == other.states.len()
            && self
                .states
                .iter()
                .zip(&other.states)
                .all(|(x, y)| x.len() == y.len() && x.iter().zip(y).all(|(a, b)| a.bits_eq(b)))
    }
}

/// Steps programs. With a thread pool the per-slot and per-template work of
/// each phase is spread across threads; every value is still computed by the
/// same sequence of operations, so results are bit-identical to sequential
/// evaluation.
#[derive(Clone, Default)]
pub struct Engine {
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl Engine {
    pub fn sequential() -> Self {
        Engine { pool: None }
    }

    pub fn with_threads(threads: usize) -> Self {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build().expect("thread pool");
        Engine { pool: Some(Arc::new(pool)) }
    }

    fn map_indices<R: Send>(&self, n: usize, f: impl Fn(usize) -> R + Sync + Send) -> Vec<R> {
        match &self.pool {
            None => (0..n).map(f).collect(),
            Some(pool) => pool.install(|| (0..n).into_par_iter().map(f).collect()),
        }
    }

    /// All-zero images for every template.
    pub fn initial_state(prog: &DataflowProgram) -> State {
        vec![GeneralizedImage::zeros(prog.image_size()); prog.templates().len()]
    }

    fn check_inputs(
        prog: &DataflowProgram,
        state: &State,
        externals: &BTreeMap<String, GeneralizedImage>,
    ) -> Result<(), DataflowError> {
        if state.len() != prog.templates().len() {
            return Err(DataflowError::ShapeMismatch(format!(
                "state has {} images for {} templates",
                state.len(),
                prog.templates().len()
            )));
        }
        let p = prog.image_size();
        if let Some(img) = state.iter().find(|img| img.len() != p) {
            return Err(DataflowError::SizeMismatch { expected: p, got: img.len() });
        }
        for t in prog.templates() {
            if let TemplateKind::ExternalInput { name } = t {
                let img = externals.get(name).ok_or_else(|| DataflowError::MissingExternalInput(name.clone()))?;
                if img.len() != p {
                    return Err(DataflowError::SizeMismatch { expected: p, got: img.len() });
                }
            }
        }
        Ok(())
    }

    fn step_unchecked(
        &self,
        prog: &DataflowProgram,
        weights: &WeightMatrix,
        state: &State,
        externals: &BTreeMap<String, GeneralizedImage>,
    ) -> State {
        let p = prog.image_size();
        // linear phase; exact-zero weights are skipped so zero-wired
        // templates cannot perturb anything, not even the sign of a zero
        let inputs: Vec<GeneralizedImage> = self.map_indices(weights.shape().0, |j| {
            let mut acc = vec![0.0; p];
            for (w, img) in weights.row(j).iter().zip(state) {
                if *w == 0.0 {
                    continue;
                }
                for (a, v) in acc.iter_mut().zip(img.values()) {
                    *a += w * v;
                }
            }
            GeneralizedImage::new(acc)
        });
        // general phase
        self.map_indices(prog.templates().len(), |k| {
            let t = &prog.templates()[k];
            let ext = match t {
                TemplateKind::ExternalInput { name } => externals.get(name),
                _ => None,
            };
            t.compute(&inputs[prog.slots_of(k)], p, ext)
        })
    }

    pub fn step(
        &self,
        prog: &DataflowProgram,
        state: &State,
        externals: &BTreeMap<String, GeneralizedImage>,
    ) -> Result<State, DataflowError> {
        Self::check_inputs(prog, state, externals)?;
        Ok(self.step_unchecked(prog, prog.weights(), state, externals))
    }

    /// `ticks + 1` states starting from `initial`.
    pub fn run(
        &self,
        prog: &DataflowProgram,
        initial: State,
        externals: &BTreeMap<String, GeneralizedImage>,
        ticks: usize,
    ) -> Result<Trace, DataflowError> {
        self.run_with(prog, initial, externals, ticks, |_| prog.weights().clone())
    }

    /// Like [`Engine::run`], but the step out of tick `t` uses the schedule's
    /// matrix for `t` in place of the program's own weights.
    pub fn morph_run(
        &self,
        prog: &DataflowProgram,
        schedule: &MorphSchedule,
        initial: State,
        externals: &BTreeMap<String, GeneralizedImage>,
        ticks: usize,
    ) -> Result<Trace, DataflowError> {
        if schedule.start().shape() != prog.weights().shape() {
            return Err(DataflowError::ShapeMismatch(format!(
                "schedule matrices are {:?}, program needs {:?}",
                schedule.start().shape(),
                prog.weights().shape()
            )));
        }
        self.run_with(prog, initial, externals, ticks, |t| schedule.weights_at(t))
    }

    fn run_with(
        &self,
        prog: &DataflowProgram,
        initial: State,
        externals: &BTreeMap<String, GeneralizedImage>,
        ticks: usize,
        weights_at: impl Fn(usize) -> WeightMatrix,
    ) -> Result<Trace, DataflowError> {
        Self::check_inputs(prog, &initial, externals)?;
        let mut states = Vec::with_capacity(ticks + 1);
        states.push(initial);
        for t in 0..ticks {
            let next = self.step_unchecked(prog, &weights_at(t), &states[t], externals);
            states.push(next);
        }
        Ok(Trace { states })
    }
}
