//! Programs as linear operators on signed measures.

use linmodels::measure::{branch_operator, program_distance, write_measure_csv};
use linmodels::{Atom, LinearOp, SignedMeasure};

fn main() {
    let ab = vec![Atom::from("a"), Atom::from("b")];
    let stay = LinearOp::identity(ab.clone()).unwrap();
    let flip = LinearOp::new(ab.clone(), ab.clone(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
    let coin = branch_operator(0.5, &stay, &flip).unwrap();
    println!("branch(0.5, stay, flip) stochastic: {}", coin.is_stochastic());

    let mu = SignedMeasure::from_weights([("a", 2.0), ("b", -3.0)]);
    let parts = mu.hahn_jordan();
    println!("mu = {mu:?}");
    println!("mu+ = {:?}, mu- = {:?}, |mu| = {}", parts.positive, parts.negative, mu.tv_norm());
    println!("mu is the knowledge join of its parts: {}", parts.positive.info_join(&parts.negative) == mu);

    println!("flip applied to mu:");
    write_measure_csv(&flip.apply(&mu).unwrap(), std::io::stdout()).unwrap();

    println!("d(stay, flip) = {}", program_distance(&stay, &flip).unwrap());
    println!("d(stay, coin) = {}", program_distance(&stay, &coin).unwrap());
    let twice = coin.compose(&coin).unwrap();
    println!("coin after coin equals coin: {}", program_distance(&twice, &coin).unwrap() == 0.0);
}
