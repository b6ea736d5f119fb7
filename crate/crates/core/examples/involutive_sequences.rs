//! Monotone sequences of interval numbers with inserted involutive steps.

use linmodels::interval::{classify_step, SequenceChecker};
use linmodels::Pii;

fn main() {
    let mut seq: Vec<Pii> = (1..=6).map(|k| Pii::new(1.0 - 1.0 / k as f64, 1.0 + 1.0 / k as f64)).collect();
    seq.extend(std::iter::repeat_n(Pii::point(1.0), 8));

    let checker = SequenceChecker::default();
    let base = checker.check(&seq, 1e-9).unwrap();
    println!("plain: valid={} limit={:?}", base.valid, base.limit);

    // detour through the swapped interval twice
    let x = seq[2];
    seq.splice(3..3, [x.swap(), x, x.swap(), x]);
    for w in seq.windows(2).take(8) {
        println!("  {} -> {}: {:?}", w[0], w[1], classify_step(&w[0], &w[1]));
    }
    let r = checker.check(&seq, 1e-9).unwrap();
    println!("with detours: valid={} limit={:?}", r.valid, r.limit);

    let broken = [Pii::new(0.0, 2.0), Pii::new(3.0, 4.0)];
    println!("non-sequence valid={}", checker.check(&broken, 1e-9).unwrap().valid);
}
