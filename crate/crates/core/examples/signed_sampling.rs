//! A negative combination of samplers, estimated from a signed stream.

use linmodels::sampler::{estimate_with, push_through, SamplerSpec, Schedule};
use linmodels::{Atom, LinearOp, SignedMeasure};

fn main() {
    let coin = SamplerSpec::leaf(SignedMeasure::from_weights([("heads", 0.5), ("tails", 0.5)])).unwrap();
    let spec = SamplerSpec::combo(vec![(2.0, coin), (-1.0, SamplerSpec::point("tails"))]).unwrap();
    println!("spec: {}", spec.to_json());
    println!("exact: {:?}", spec.exact_semantics());

    for n in [100, 10_000, 1_000_000] {
        for schedule in [Schedule::Stride, Schedule::Mixture] {
            let r = estimate_with(&spec, 42, n, schedule).unwrap();
            println!(
                "n={n:<8} {schedule:<8?} estimate {:?}  tv error {:.5} (bound {:.5})",
                r.estimate,
                r.tv_distance(&spec.exact_semantics()),
                r.tv_error_bound
            );
        }
    }

    // a signed kernel: heads stays heads, tails turns into negative heads
    let ht = vec![Atom::from("heads"), Atom::from("tails")];
    let k = LinearOp::new(ht.clone(), ht, vec![vec![1.0, -1.0], vec![0.0, 0.0]]).unwrap();
    let pushed = push_through(k, spec).unwrap();
    let r = estimate_with(&pushed, 42, 100_000, Schedule::Stride).unwrap();
    println!("pushed through kernel: {:?}", r.estimate);
}
