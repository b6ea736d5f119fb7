mod common;

use common::*;
use linmodels::measure::{branch_operator, program_distance};
use linmodels::{Atom, LinearOp, SignedMeasure};
use num_traits::Signed;
use proptest::prelude::*;

type M = SignedMeasure<Q>;

fn nonneg_q(max_atoms: usize) -> impl Strategy<Value = M> {
    measure_q(max_atoms).prop_map(|m| m.hahn_jordan().positive)
}

/// Denominators dividing 12 keep 8x8 products inside i64.
fn small_rat() -> impl Strategy<Value = Q> {
    (-100i64..=100, prop::sample::select(vec![1i64, 2, 3, 4, 6, 12])).prop_map(|(n, d)| Q::new(n, d))
}

fn operator_q(n: usize) -> impl Strategy<Value = LinearOp<Q>> {
    prop::collection::vec(prop::collection::vec(small_rat(), n), n)
        .prop_map(move |rows| LinearOp::new(atoms(n), atoms(n), rows).unwrap())
}

/// A measure over exactly `a0..a{n-1}`, as `apply` requires its support to be inputs.
fn measure_on_q(n: usize) -> impl Strategy<Value = M> {
    prop::collection::vec(small_rat(), n)
        .prop_map(|w| SignedMeasure::from_weights(w.into_iter().enumerate().map(|(i, x)| (atom(i), x))))
}

fn probability_q(n: usize) -> impl Strategy<Value = M> {
    prop::collection::vec(1i64..10, n).prop_map(|w| {
        let s: i64 = w.iter().sum();
        SignedMeasure::from_weights(w.into_iter().enumerate().map(|(i, x)| (atom(i), Q::new(x, s))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn vector_space(x in measure_q(16), y in measure_q(16), z in measure_q(16), c in rat(), d in rat()) {
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.add(&M::zero()), x.clone());
        prop_assert!(x.add(&x.negate()).is_zero());
        prop_assert_eq!(x.add(&y).scale(c), x.scale(c).add(&y.scale(c)));
        prop_assert_eq!(x.scale(c + d), x.scale(c).add(&x.scale(d)));
        prop_assert_eq!(x.scale(c * d), x.scale(d).scale(c));
        prop_assert_eq!(x.scale(Q::from_integer(1)), x);
    }

    #[test]
    fn hahn_jordan_is_exact_and_disjoint(mu in measure_q(16)) {
        let hj = mu.hahn_jordan();
        prop_assert_eq!(hj.recompose(), mu.clone());
        prop_assert_eq!(hj.positive.add(&hj.negative), mu);
        prop_assert!(hj.positive.is_positive());
        prop_assert!(hj.negative.negate().is_positive());
        prop_assert!(hj.positive.support().all(|a| !hj.negative.support().any(|b| a == b)));
    }

    #[test]
    fn hahn_jordan_is_minimal(mu in measure_q(16), rho in nonneg_q(16)) {
        // every other decomposition shifts a positive ρ between the parts
        let hj = mu.hahn_jordan();
        let (pi, nu) = (hj.positive.add(&rho), hj.negative.sub(&rho));
        prop_assert_eq!(pi.add(&nu), mu);
        prop_assert!(hj.positive.material_leq(&pi));
        prop_assert!(nu.material_leq(&hj.negative));
    }

    #[test]
    fn lattice_ordered_group_identity(mu in measure_q(16)) {
        prop_assert_eq!(mu.material_meet(&M::zero()).add(&mu.material_join(&M::zero())), mu);
    }

    #[test]
    fn knowledge_join_of_parts(mu in measure_q(16)) {
        let hj = mu.hahn_jordan();
        let j = hj.positive.info_join(&hj.negative);
        prop_assert_eq!(&j, &mu);
        prop_assert!(hj.positive.info_leq(&mu) && hj.negative.info_leq(&mu));
        prop_assert!(M::zero().info_leq(&mu));
    }

    #[test]
    fn tv_norm_axioms(x in measure_q(16), y in measure_q(16), c in rat()) {
        prop_assert!(x.add(&y).tv_norm() <= x.tv_norm() + y.tv_norm());
        prop_assert_eq!(x.scale(c).tv_norm(), c.abs() * x.tv_norm());
        prop_assert_eq!(x.tv_norm() == Q::from_integer(0), x.is_zero());
    }

    #[test]
    fn operator_norm_consistency(op in operator_q(8), mu in measure_on_q(8)) {
        prop_assert!(op.apply(&mu).unwrap().tv_norm() <= op.op_norm() * mu.tv_norm());
        let witness = atoms(8)
            .into_iter()
            .map(|a| op.apply(&SignedMeasure::point(a)).unwrap().tv_norm())
            .fold(Q::from_integer(0), |m, v| if v > m { v } else { m });
        prop_assert_eq!(witness, op.op_norm());
    }

    #[test]
    fn stochastic_preserves_probability(op in stochastic_q(6), mu in probability_q(6)) {
        prop_assert!(op.is_stochastic_within(Q::from_integer(0)));
        let nu = op.apply(&mu).unwrap();
        prop_assert!(nu.is_positive());
        prop_assert_eq!(nu.total_mass(), Q::from_integer(1));
    }

    #[test]
    fn branch_of_stochastic_is_stochastic(p in stochastic_f(4), q in stochastic_f(4)) {
        prop_assert!(p.is_stochastic() && q.is_stochastic());
        prop_assert!(branch_operator(0.3, &p, &q).unwrap().is_stochastic());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn program_distance_is_a_metric(a in operator_f(8), b in operator_f(8), c in operator_f(8)) {
        let d = |x: &LinearOp, y: &LinearOp| program_distance(x, y).unwrap();
        prop_assert_eq!(d(&a, &a), 0.0);
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert!(d(&a, &b) > 0.0 || a == b);
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c) + 1e-12);
    }
}

#[test]
fn branch_between_identity_and_swap_is_uniform() {
    let ab = vec![Atom::from("a"), Atom::from("b")];
    let id = LinearOp::identity(ab.clone()).unwrap();
    let sw = LinearOp::new(ab.clone(), ab, vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
    let b = branch_operator(0.5, &id, &sw).unwrap();
    assert!(b.rows().flatten().all(|&x| x == 0.5));
}

#[test]
fn operators_reject_foreign_atoms() {
    let id = LinearOp::<f64>::identity(atoms(2)).unwrap();
    assert!(id.apply(&SignedMeasure::point("zz")).is_err());
    let other = LinearOp::<f64>::identity(atoms(3)).unwrap();
    assert!(program_distance(&id, &other).is_err());
}
