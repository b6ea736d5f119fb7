//! A-priori bound on how far a run moves when its weights are perturbed.
//!
//! With a reference run under matrices `W_t` and a perturbed run under `W'_t`
//! from the same initial state, the input difference of slot `j` at tick `t`
//! is `W'_t (s'_t − s_t) + (W'_t − W_t) s_t`, so per template `k` fed by slot `j`
//!
//! ```text
//! e_{t+1}[k] ≤ L_k · ( Σ_m |W'_t[j][m]| e_t[m] + Σ_m |W'_t[j][m] − W_t[j][m]| ‖s_t[m]‖∞ )
//! ```
//!
//! where `L_k` is the template's Lipschitz constant. Products are not
//! globally Lipschitz and are rejected.

use super::engine::Trace;
use super::matrix::WeightMatrix;
use super::program::DataflowProgram;
use super::DataflowError;

/// Per-tick bound on the sup-norm distance between the reference run and
/// any run under `perturbed` weights. Index 0 (the shared initial state) is 0.
pub fn perturbation_bound(
    prog: &DataflowProgram,
    reference: &Trace,
    reference_weights: &[WeightMatrix],
    perturbed_weights: &[WeightMatrix],
) -> Result<Vec<f64>, DataflowError> {
    let ticks = reference_weights.len();
    if perturbed_weights.len() != ticks || reference.ticks() < ticks {
        return Err(DataflowError::ShapeMismatch(format!(
            "{ticks} reference matrices, {} perturbed, {} traced ticks",
            perturbed_weights.len(),
            reference.ticks()
        )));
    }
    let lips: Vec<f64> = prog
        .templates()
        .iter()
        .enumerate()
        .map(|(k, t)| t.lipschitz().ok_or(DataflowError::NotLipschitz(k)))
        .collect::<Result<_, _>>()?;
    let n = lips.len();
    let mut err = vec![0.0; n];
    let mut out = vec![0.0];
    for t in 0..ticks {
        let (w, wp) = (&reference_weights[t], &perturbed_weights[t]);
        let norms: Vec<f64> = reference.states[t].iter().map(|img| img.sup_norm()).collect();
        let next: Vec<f64> = (0..n)
            .map(|k| {
                prog.slots_of(k)
                    .map(|j| {
                        (0..n)
                            .map(|m| wp.get(j, m).abs() * err[m] + (wp.get(j, m) - w.get(j, m)).abs() * norms[m])
                            .sum::<f64>()
                    })
                    .fold(0.0, f64::max)
                    * lips[k]
            })
            .collect();
        err = next;
        out.push(err.iter().copied().fold(0.0, f64::max));
    }
    Ok(out)
}

/// `measured ≤ bound` tick by tick, allowing rounding slack relative to `scale`.
pub fn respects_bound(measured: &[f64], bound: &[f64], scale: f64) -> bool {
    let slack = 1e-10 * (1.0 + scale);
    measured.iter().zip(bound).all(|(m, b)| *m <= b + slack)
}
