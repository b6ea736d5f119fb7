//! CSV forms: measures as `atom,weight` rows, operators as a matrix with a
//! header row of input atoms and a leading column of output atoms.
//!
//! Weights are written with the shortest representation that parses back to
//! the same `f64`, so reading what was written is bit-exact.

use std::io::{Read, Write};

use super::{Atom, LinearOp, MeasureError, SignedMeasure};

fn csv_err(e: csv::Error) -> MeasureError {
    MeasureError::Csv(e.to_string())
}

fn parse_weight(s: &str) -> Result<f64, MeasureError> {
    let v: f64 = s.trim().parse().map_err(|_| MeasureError::Csv(format!("bad number `{s}`")))?;
    if !v.is_finite() {
        return Err(MeasureError::Csv(format!("weight `{s}` is not finite")));
    }
    Ok(v)
}

pub fn write_measure_csv<W: Write>(mu: &SignedMeasure, out: W) -> Result<(), MeasureError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["atom", "weight"]).map_err(csv_err)?;
    for (atom, weight) in mu.iter() {
        w.write_record([atom.as_str(), &weight.to_string()]).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_measure_csv<R: Read>(input: R) -> Result<SignedMeasure, MeasureError> {
    let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
    let headers = r.headers().map_err(csv_err)?.clone();
    if headers.len() != 2 || &headers[0] != "atom" || &headers[1] != "weight" {
        return Err(MeasureError::Csv("expected header `atom,weight`".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut weights = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(csv_err)?;
        let atom = Atom::new(&rec[0]);
        if !seen.insert(atom.clone()) {
            return Err(MeasureError::DuplicateAtom(atom.0));
        }
        weights.push((atom, parse_weight(&rec[1])?));
    }
    Ok(SignedMeasure::from_weights(weights))
}

pub fn write_operator_csv<W: Write>(op: &LinearOp, out: W) -> Result<(), MeasureError> {
    let mut w = csv::Writer::from_writer(out);
    let header = std::iter::once("").chain(op.inputs().iter().map(Atom::as_str));
    w.write_record(header).map_err(csv_err)?;
    for (atom, row) in op.outputs().iter().zip(op.rows()) {
        let cells = std::iter::once(atom.0.clone()).chain(row.iter().map(|x| x.to_string()));
        w.write_record(cells).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_operator_csv<R: Read>(input: R) -> Result<LinearOp, MeasureError> {
    let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
    let headers = r.headers().map_err(csv_err)?.clone();
    if headers.len() < 2 {
        return Err(MeasureError::Csv("operator header needs at least one input atom".into()));
    }
    let inputs: Vec<Atom> = headers.iter().skip(1).map(Atom::new).collect();
    let mut outputs = Vec::new();
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(csv_err)?;
        outputs.push(Atom::new(&rec[0]));
        rows.push(rec.iter().skip(1).map(parse_weight).collect::<Result<Vec<_>, _>>()?);
    }
    LinearOp::new(inputs, outputs, rows)
}
