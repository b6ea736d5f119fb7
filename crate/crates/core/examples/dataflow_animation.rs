//! A small dataflow animation morphing between two wirings, written as PGM frames.
//!
//! `cargo run --example dataflow_animation -- OUT_DIR` (defaults to a directory under the system temp dir).

use std::collections::BTreeMap;
use std::path::PathBuf;

use linmodels::dataflow::{
    graft_template, render_frame, DataflowProgram, Engine, GeneralizedImage, MorphSchedule, Reflection, TemplateKind,
};

fn main() {
    let out =
        std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("linmodels_frames"));
    let size = 64;

    // a rotating wave: shift feeds itself, sin reads the shift
    let mut p = DataflowProgram::unwired(vec![TemplateKind::Shift { by: 1 }, TemplateKind::Sin], size).unwrap();
    p.connect(0, 0, 0, 1.0);
    p.connect(0, 1, 0, 3.0);

    // graft a reflection at zero weight, then ramp it in
    let g = graft_template(&p, TemplateKind::Reflect(Reflection::full(size))).unwrap();
    let mut target = g.clone();
    target.connect(0, 2, 0, 1.0);
    target.connect(2, 1, 0, 2.0);
    let schedule = MorphSchedule::new(g.weights().clone(), target.weights().clone(), 40).unwrap();

    let ramp: Vec<f64> = (0..size).map(|i| (i as f64 / size as f64 * std::f64::consts::TAU).sin()).collect();
    let init = vec![GeneralizedImage::new(ramp), GeneralizedImage::zeros(size), GeneralizedImage::zeros(size)];
    let trace = Engine::with_threads(2).morph_run(&g, &schedule, init, &BTreeMap::new(), 80).unwrap();

    std::fs::create_dir_all(&out).unwrap();
    for (t, state) in trace.states.iter().enumerate() {
        let bytes = render_frame(state, size, -1.0, 1.0).unwrap();
        std::fs::write(out.join(format!("frame_{t:05}.pgm")), bytes).unwrap();
    }
    println!("wrote {} frames, one row per template, to {}", trace.states.len(), out.display());
}
