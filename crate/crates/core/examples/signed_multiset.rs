//! Intervals as pairs of rays and as signed characteristic functions.

use linmodels::dframe::{char_value, signed_length, to_ray_pair};
use linmodels::Pii;

fn main() {
    for x in [Pii::new(-1.0, 2.0), Pii::new(2.0, -1.0), Pii::point(0.5)] {
        let r = to_ray_pair(&x);
        println!(
            "{x}: rays (-inf,{}) ({},inf), consistent={}, total={}, signed length {}",
            r.lower_ray_end,
            r.upper_ray_start,
            r.is_consistent(),
            r.is_total(),
            signed_length(&x).unwrap()
        );
        let row: String = (-3..=3)
            .map(|t| match char_value(&x, f64::from(t)) {
                1 => " +1",
                -1 => " -1",
                _ => "  0",
            })
            .collect();
        println!("  char on -3..=3:{row}");

        // the integral of the characteristic function is the signed length
        let h = 1e-3;
        let integral: f64 = (0..10_000).map(|k| f64::from(char_value(&x, -5.0 + (f64::from(k) + 0.5) * h)) * h).sum();
        println!("  integral over [-5,5] = {integral:.6}");
    }
}
