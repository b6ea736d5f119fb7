//! Generalized images and dataflow programs whose wiring is a real matrix.
//!
//! A program is a list of fixed template operations plus a weight matrix
//! with one row per template input slot and one column per template output.
//! Each tick first forms every input as a weighted sum of the latched
//! outputs (the linear phase), then lets every template compute its new
//! output (the general phase). All variability lives in the matrix, so
//! programs can be changed continuously while they run.

mod continuity;
mod engine;
mod image;
mod io;
mod matrix;
mod morph;
mod pgm;
mod program;
mod template;

pub use continuity::{perturbation_bound, respects_bound};
pub use engine::{Engine, State, Trace};
pub use image::{image_lincomb, reflect_image, GeneralizedImage, Reflection};
pub use io::{read_trace_csv, write_trace_csv, MorphFile, ProgramFile};
pub use matrix::WeightMatrix;
pub use morph::{MorphSchedule, Ramp};
pub use pgm::{render_frame, render_pgm, MID_GRAY};
pub use program::{graft_template, DataflowProgram};
pub use template::TemplateKind;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DataflowError {
    #[error("image sizes differ: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("no image supplied for external input `{0}`")]
    MissingExternalInput(String),
    #[error("reflection mask is not symmetric about pair sum {0}")]
    AsymmetricMask(usize),
    #[error("render range requires lo < hi, got [{0}, {1}]")]
    BadRange(f64, f64),
    #[error("linear combination needs at least one image")]
    EmptyCombination,
    #[error("template {0} is not Lipschitz; no continuity bound exists")]
    NotLipschitz(usize),
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
