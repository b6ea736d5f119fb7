//! Partial metric, lower distance, and the swap symmetry between them.

use linmodels::metric::{relaxed_distance, swap};
use linmodels::Pii;

fn main() {
    let pairs = [
        (Pii::new(0.0, 2.0), Pii::new(1.0, 1.0)),
        (Pii::new(0.0, 2.0), Pii::new(0.0, 2.0)),
        (Pii::new(1.0, 3.0), Pii::new(1.0, 3.0)),
        (Pii::new(3.0, 1.0), Pii::new(3.0, 1.0)),
        (Pii::new(0.0, 1.0), Pii::new(4.0, 6.0)),
    ];
    for (x, y) in pairs {
        let d = relaxed_distance(&x, &y).unwrap();
        let s = relaxed_distance(&swap(&x), &swap(&y)).unwrap();
        println!("{x} {y}: l={} p={} pair={}   swapped pair={}", d.lower, d.upper, d.as_pii(), s.as_pii());
    }
}
