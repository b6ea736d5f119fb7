//! Addition, the two minuses, and the expression evaluator behind `linmodels interval`.

use linmodels::cli::eval_interval;
use linmodels::Pii;

fn main() {
    let x = Pii::new(1.0, 3.0);
    let y = Pii::new(5.0, 2.0);

    println!("x = {x}, y = {y} (a pseudosegment)");
    println!("x + y          = {}", x + y);
    println!("true minus  -x = {}", x.true_minus());
    println!("weak minus  ~x = {}", x.weak_minus());
    println!("x + (-x)       = {}", x + x.true_minus());
    let defect = x.weak_minus() + x;
    println!("~x + x         = {defect}, approximates [0,0]: {}", defect.info_leq(&Pii::zero()));
    println!("2.5 * x        = {}", x.scale(2.5).unwrap());

    for src in ["-[1,2]", "[0,2] - [0,2]", "meet_i([0,4], [1,6])", "[-inf,0] + [3,inf]"] {
        println!("{src:<22} => {}", eval_interval(src).unwrap());
    }
    println!("[-inf,0] + [inf,0]     => {}", eval_interval("[-inf,0] + [inf,0]").unwrap_err());
}
