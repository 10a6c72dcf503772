//! Decide which graphs admit a link-irregular labeling at all. The
//! characterization is purely structural: a labeling exists unless two
//! vertices have isomorphic links built from the same original edges.

use linkirr::graph::{build_family, complete, cycle, wheel, FamilySpec};
use linkirr::links::{active_neighborhood, admits_labeling, necessary_report};

fn main() {
    let cases = [
        ("K_5", complete(5)),
        ("C_6", cycle(6)),
        ("W_6", wheel(6)),
        ("W_4", wheel(4)),
        ("Q_3", build_family(&FamilySpec::Hypercube(3)).unwrap()),
        (
            "K_{2,3}",
            build_family(&FamilySpec::CompleteMultipartite(vec![2, 3])).unwrap(),
        ),
    ];
    for (name, g) in &cases {
        let report = admits_labeling(g);
        match report.witness_pair {
            None => println!("{name}: feasible"),
            Some((x, y)) => {
                println!("{name}: infeasible — vertices {x} and {y} can never be told apart")
            }
        }
    }

    // the necessary conditions can be inspected separately
    let w4 = wheel(4);
    let nr = necessary_report(&w4);
    println!("\nW_4 necessary-condition report: {nr:?}");
    for v in 0..w4.order() {
        println!(
            "  active neighborhood of {v}: {:?}",
            active_neighborhood(&w4, v).unwrap()
        );
    }
}
