//! Wheels have a closed-form labeling number, and optimal labelings come
//! from closed trails in the label graph K_r* (complete plus loops): each
//! trail arc becomes the labeled link of one rim vertex.

use linkirr::construct::{kstar_trail_plan, wheel_eta_formula, wheel_labeling};
use linkirr::io::write_labeled;
use linkirr::solver::{check_labeling, eta, Eta};

fn main() {
    println!("n : formula  (solver check for n <= 10)");
    for n in 3..=18 {
        let formula = wheel_eta_formula(n).unwrap();
        let solver = if n <= 10 {
            format!("  eta(W_{n}) = {}", eta(&linkirr::wheel(n)).value)
        } else {
            String::new()
        };
        println!("{n:2} : {formula}{solver}");
    }

    let plan = kstar_trail_plan(5, 15).unwrap();
    println!("\ntrail plan for W_15 over 5 labels (all 15 edges of K_5*):");
    for trail in &plan.arcs {
        println!("  {trail:?}");
    }
    let walks = plan.validate(15).unwrap();
    println!("  walk: {:?}", walks[0]);

    let l = wheel_labeling(15).unwrap();
    assert!(check_labeling(&l).irregular);
    assert_eq!(wheel_eta_formula(15).unwrap(), Eta::Finite(5));
    println!("\noptimal labeling of W_15 (hub 0, rim 1..=15):");
    print!("{}", write_labeled(&l));
}
