//! JSON program and morph descriptors, and the CSV trace format.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::engine::{State, Trace};
use super::image::GeneralizedImage;
use super::matrix::WeightMatrix;
use super::morph::{MorphSchedule, Ramp};
use super::program::DataflowProgram;
use super::template::TemplateKind;
use super::DataflowError;

/// Program descriptor: `templates`, row-major `W`, and optionally an
/// initial state, constant external images and a render width.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProgramFile {
    pub image_size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<usize>,
    pub templates: Vec<TemplateKind>,
    #[serde(rename = "W")]
    pub weights: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub externals: BTreeMap<String, Vec<f64>>,
}

impl ProgramFile {
    pub fn from_json(text: &str) -> Result<Self, DataflowError> {
        serde_json::from_str(text).map_err(|e| DataflowError::Descriptor(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }

    pub fn program(&self) -> Result<DataflowProgram, DataflowError> {
        let w = WeightMatrix::from_rows(self.weights.clone(), self.templates.len())?;
        DataflowProgram::new(self.templates.clone(), w, self.image_size)
    }

    /// The given initial images, or all zeros.
    pub fn initial_state(&self) -> State {
        match &self.initial {
            Some(rows) => rows.iter().cloned().map(GeneralizedImage::new).collect(),
            None => vec![GeneralizedImage::zeros(self.image_size); self.templates.len()],
        }
    }

    pub fn externals(&self) -> BTreeMap<String, GeneralizedImage> {
        self.externals.iter().map(|(k, v)| (k.clone(), GeneralizedImage::new(v.clone()))).collect()
    }

    pub fn width(&self) -> usize {
        self.width.unwrap_or(self.image_size)
    }
}

/// Morph descriptor: target matrix, ramp length, and an optional explicit ramp.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphFile {
    #[serde(rename = "W_end")]
    pub weights_end: Vec<Vec<f64>>,
    pub ticks: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<f64>>,
}

impl MorphFile {
    pub fn from_json(text: &str) -> Result<Self, DataflowError> {
        serde_json::from_str(text).map_err(|e| DataflowError::Descriptor(e.to_string()))
    }

    /// Schedule from the program's own weights to `W_end`.
    pub fn schedule(&self, prog: &DataflowProgram) -> Result<MorphSchedule, DataflowError> {
        let end = WeightMatrix::from_rows(self.weights_end.clone(), prog.templates().len())?;
        let s = MorphSchedule::new(prog.weights().clone(), end, self.ticks)?;
        match &self.lambda {
            Some(v) => s.with_ramp(Ramp::Table(v.clone())),
            None => Ok(s),
        }
    }
}

fn csv_err(e: csv::Error) -> DataflowError {
    DataflowError::Descriptor(e.to_string())
}

/// One row per value: `tick,template,point,value`.
pub fn write_trace_csv<W: Write>(trace: &Trace, out: W) -> Result<(), DataflowError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["tick", "template", "point", "value"]).map_err(csv_err)?;
    for (t, state) in trace.states.iter().enumerate() {
        for (k, img) in state.iter().enumerate() {
            for (p, v) in img.values().iter().enumerate() {
                w.write_record([t.to_string(), k.to_string(), p.to_string(), v.to_string()]).map_err(csv_err)?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_trace_csv<R: Read>(input: R) -> Result<Trace, DataflowError> {
    let mut r = csv::Reader::from_reader(input);
    let mut cells: BTreeMap<(usize, usize, usize), f64> = BTreeMap::new();
    for rec in r.records() {
        let rec = rec.map_err(csv_err)?;
        let field = |i: usize| -> Result<&str, DataflowError> {
            rec.get(i).ok_or_else(|| DataflowError::Descriptor("short trace row".into()))
        };
        let idx = |i: usize| -> Result<usize, DataflowError> {
            field(i)?.parse().map_err(|_| DataflowError::Descriptor(format!("bad index in {rec:?}")))
        };
        let v: f64 = field(3)?.parse().map_err(|_| DataflowError::Descriptor(format!("bad value in {rec:?}")))?;
        cells.insert((idx(0)?, idx(1)?, idx(2)?), v);
    }
    let dims = cells.keys().fold((0, 0, 0), |d, k| (d.0.max(k.0 + 1), d.1.max(k.1 + 1), d.2.max(k.2 + 1)));
    if cells.len() != dims.0 * dims.1 * dims.2 {
        return Err(DataflowError::Descriptor("trace has missing entries".into()));
    }
    let mut vals = cells.into_values();
    let states = (0..dims.0)
        .map(|_| (0..dims.1).map(|_| GeneralizedImage::new(vals.by_ref().take(dims.2).collect())).collect())
        .collect();
    Ok(Trace { states })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataflow::Engine;

    const DECAY: &str = r#"{"image_size":1,"templates":[{"kind":"delay"}],"W":[[0.5]],"initial":[[8]]}"#;

    #[test]
    fn program_descriptor() {
        let f = ProgramFile::from_json(DECAY).unwrap();
        let p = f.program().unwrap();
        let tr = Engine::sequential().run(&p, f.initial_state(), &f.externals(), 3).unwrap();
        let v: Vec<f64> = tr.series(0).map(|i| i.values()[0]).collect();
        assert_eq!(v, vec![8.0, 4.0, 2.0, 1.0]);
        assert_eq!(ProgramFile::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn bad_descriptors() {
        assert!(ProgramFile::from_json("{").is_err());
        let f = ProgramFile::from_json(r#"{"image_size":1,"templates":[{"kind":"delay"}],"W":[[0.5,1]]}"#).unwrap();
        assert!(f.program().is_err());
        assert!(ProgramFile::from_json(r#"{"image_size":1,"templates":[],"W":[],"bogus":1}"#).is_err());
    }

    #[test]
    fn morph_descriptor() {
        let f = ProgramFile::from_json(DECAY).unwrap();
        let p = f.program().unwrap();
        let m = MorphFile::from_json(r#"{"W_end":[[1.0]],"ticks":2}"#).unwrap();
        let s = m.schedule(&p).unwrap();
        assert_eq!(s.weights_at(1).get(0, 0), 0.75);
        assert!(MorphFile::from_json(r#"{"W_end":[[1.0, 2.0]],"ticks":2}"#).unwrap().schedule(&p).is_err());
    }

    #[test]
    fn trace_csv_round_trip() {
        let f = ProgramFile::from_json(
            r#"{"image_size":3,"templates":[{"kind":"delay"},{"kind":"sin"}],"W":[[0.3,0.1],[1,0]],"initial":[[1,2,3],[0.1,0.2,0.3]]}"#,
        )
        .unwrap();
        let tr = Engine::sequential().run(&f.program().unwrap(), f.initial_state(), &f.externals(), 5).unwrap();
        let mut buf = Vec::new();
        write_trace_csv(&tr, &mut buf).unwrap();
        let back = read_trace_csv(buf.as_slice()).unwrap();
        assert!(back.bits_eq(&tr));
    }
}
