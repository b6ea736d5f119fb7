//! Generators shared by the property tests and the acceptance runner.
#![allow(dead_code)]

use std::collections::BTreeMap;

use linmodels::dataflow::{DataflowProgram, GeneralizedImage, Reflection, TemplateKind, WeightMatrix};
use linmodels::{Atom, ExtReal, LinearOp, Pii, SignedMeasure};
use num_rational::Ratio;
use proptest::prelude::*;

pub type Q = Ratio<i64>;

pub fn rat() -> impl Strategy<Value = Q> {
    (-1000i64..=1000, 1i64..=24).prop_map(|(n, d)| Q::new(n, d))
}

pub fn pii_q() -> impl Strategy<Value = Pii<Q>> {
    (rat(), rat()).prop_map(|(a, b)| Pii::new(a, b))
}

/// Segments with `a < b`.
pub fn strict_segment_q() -> impl Strategy<Value = Pii<Q>> {
    (rat(), rat()).prop_filter("distinct", |(a, b)| a != b).prop_map(|(a, b)| {
        if a < b {
            Pii::new(a, b)
        } else {
            Pii::new(b, a)
        }
    })
}

/// Quarter-integers: every sum and difference below is exact in f64.
pub fn quarter() -> impl Strategy<Value = f64> {
    (-400i32..=400).prop_map(|n| f64::from(n) / 4.0)
}

pub fn pii_f() -> impl Strategy<Value = Pii> {
    (quarter(), quarter()).prop_map(|(a, b)| Pii::new(a, b))
}

pub fn ext_end() -> impl Strategy<Value = ExtReal> {
    prop_oneof![
        8 => quarter().prop_map(ExtReal::Finite),
        1 => Just(ExtReal::NegInf),
        1 => Just(ExtReal::PosInf),
    ]
}

pub fn pii_ext() -> impl Strategy<Value = Pii> {
    (ext_end(), ext_end()).prop_map(|(a, b)| Pii::from_ext(a, b))
}

pub fn atom(i: usize) -> Atom {
    Atom::new(format!("a{i}"))
}

pub fn atoms(n: usize) -> Vec<Atom> {
    (0..n).map(atom).collect()
}

/// Measures over at most `max_atoms` atoms, zeros included.
pub fn measure_q(max_atoms: usize) -> impl Strategy<Value = SignedMeasure<Q>> {
    prop::collection::vec(prop_oneof![1 => Just(Q::from_integer(0)), 4 => rat()], 1..=max_atoms)
        .prop_map(|w| SignedMeasure::from_weights(w.into_iter().enumerate().map(|(i, x)| (atom(i), x))))
}

/// Measures over exactly the atoms `a0..a{n-1}` (some weights may be zero).
pub fn measure_f(n: usize) -> impl Strategy<Value = SignedMeasure> {
    prop::collection::vec(quarter(), n)
        .prop_map(|w| SignedMeasure::from_weights(w.into_iter().enumerate().map(|(i, x)| (atom(i), x))))
}

pub fn operator_f(n: usize) -> impl Strategy<Value = LinearOp> {
    prop::collection::vec(prop::collection::vec(-1.0f64..1.0, n), n)
        .prop_map(move |rows| LinearOp::new(atoms(n), atoms(n), rows).unwrap())
}

pub fn stochastic_f(n: usize) -> impl Strategy<Value = LinearOp> {
    prop::collection::vec(prop::collection::vec(0.01f64..1.0, n), n).prop_map(move |cols| {
        // `cols[j]` is column j, normalized to sum 1
        let sums: Vec<f64> = cols.iter().map(|c| c.iter().sum()).collect();
        LinearOp::from_fn(atoms(n), atoms(n), |i, j| cols[j][i] / sums[j]).unwrap()
    })
}

pub fn stochastic_q(n: usize) -> impl Strategy<Value = LinearOp<Q>> {
    prop::collection::vec(prop::collection::vec(1i64..20, n), n).prop_map(move |cols| {
        let sums: Vec<i64> = cols.iter().map(|c| c.iter().sum()).collect();
        LinearOp::from_fn(atoms(n), atoms(n), |i, j| Q::new(cols[j][i], sums[j])).unwrap()
    })
}

/// Templates that commute with linear combinations of their inputs.
pub fn linear_template(size: usize) -> impl Strategy<Value = TemplateKind> {
    let s = size as i64;
    prop_oneof![
        3 => Just(TemplateKind::Delay),
        2 => (-s..=s).prop_map(|by| TemplateKind::Shift { by }),
        1 => Just(TemplateKind::Const { value: 0.0 }),
        2 => Just(TemplateKind::Reflect(Reflection::full(size))),
    ]
}

/// Templates with a finite Lipschitz constant.
pub fn lipschitz_template(size: usize) -> impl Strategy<Value = TemplateKind> {
    prop_oneof![
        3 => linear_template(size),
        1 => Just(TemplateKind::Tanh),
        1 => Just(TemplateKind::Sin),
        1 => (-1.0f64..1.0).prop_map(|value| TemplateKind::Const { value }),
    ]
}

/// Weights with a sparse pattern and row sums bounded by 1 in absolute value.
pub fn weights(rows: usize, cols: usize) -> impl Strategy<Value = WeightMatrix> {
    prop::collection::vec(prop::collection::vec(prop_oneof![1 => Just(0.0), 1 => -1.0f64..1.0], cols), rows).prop_map(
        move |mut m| {
            for row in &mut m {
                let s: f64 = row.iter().map(|w| w.abs()).sum();
                if s > 1.0 {
                    row.iter_mut().for_each(|w| *w /= s);
                }
            }
            WeightMatrix::from_rows(m, cols).unwrap()
        },
    )
}

pub fn images(count: usize, size: usize) -> impl Strategy<Value = Vec<GeneralizedImage>> {
    prop::collection::vec(prop::collection::vec(-1.0f64..1.0, size).prop_map(GeneralizedImage::new), count)
}

/// A program built from `templates` with random weights of the right shape.
pub fn program_from(
    templates: impl Strategy<Value = Vec<TemplateKind>>,
    size: usize,
) -> impl Strategy<Value = DataflowProgram> {
    templates.prop_flat_map(move |ts| {
        let rows: usize = ts.iter().map(TemplateKind::arity).sum();
        let cols = ts.len();
        weights(rows, cols).prop_map(move |w| DataflowProgram::new(ts.clone(), w, size).unwrap())
    })
}

pub fn linear_program(max_size: usize, max_templates: usize) -> impl Strategy<Value = DataflowProgram> {
    (1..=max_size, 1..=max_templates)
        .prop_flat_map(|(p, t)| program_from(prop::collection::vec(linear_template(p), t), p))
}

pub fn lipschitz_program(max_size: usize, max_templates: usize) -> impl Strategy<Value = DataflowProgram> {
    (1..=max_size, 1..=max_templates)
        .prop_flat_map(|(p, t)| program_from(prop::collection::vec(lipschitz_template(p), t), p))
}

pub fn no_externals() -> BTreeMap<String, GeneralizedImage> {
    BTreeMap::new()
}
