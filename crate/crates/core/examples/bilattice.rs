//! Both orders on interval numbers, the Ginsberg involution, and the
//! four-valued logic sitting inside [0,1].

use linmodels::interval::{ginsberg_involution, FourValued};
use linmodels::Pii;

fn main() {
    let x = Pii::new(0.0, 2.0);
    let y = Pii::new(1.0, 3.0);
    println!("info meet {}  info join {}", x.info_meet(&y), x.info_join(&y));
    println!("material meet {}  material join {}", x.material_meet(&y), x.material_join(&y));

    let g = |p: &Pii| ginsberg_involution(p, 0.0, 1.0).unwrap();
    let z = Pii::new(0.25, 0.5);
    println!("gji({z}) = {}, twice = {}", g(&z), g(&g(&z)));

    println!("\nmaterial order (row <= col):");
    table(|a, b| a.material_leq(&b));
    println!("\ninformational order (row ⊑ col):");
    table(|a, b| a.info_leq(&b));
}

fn table(leq: impl Fn(Pii, Pii) -> bool) {
    let name = |v: FourValued| format!("{v:?}");
    print!("{:>8}", "");
    for c in FourValued::ALL {
        print!("{:>8}", name(c));
    }
    println!();
    for r in FourValued::ALL {
        print!("{:>8}", name(r));
        for c in FourValued::ALL {
            print!("{:>8}", if leq(r.embed(), c.embed()) { "x" } else { "." });
        }
        println!();
    }
}
