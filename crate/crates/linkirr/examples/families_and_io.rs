//! Build standard graph families and move them through the supported file
//! formats: graph6 for bare graphs, the labeled edge-list format for
//! labelings, and DOT for rendering.

use linkirr::graph::{build_family, FamilySpec, LabeledGraph};
use linkirr::io::{export_dot, parse_graph6, write_graph6, write_labeled};

fn main() {
    for spec in [
        FamilySpec::Complete(5),
        FamilySpec::Cycle(6),
        FamilySpec::Wheel(5),
        FamilySpec::Hypercube(3),
        FamilySpec::CompleteMultipartite(vec![2, 2, 1]),
    ] {
        let g = build_family(&spec).unwrap();
        let g6 = write_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&g6).unwrap(), g);
        println!(
            "{spec:?}: order {}, size {}, graph6 {g6}",
            g.order(),
            g.size()
        );
    }

    let w5 = build_family(&FamilySpec::Wheel(5)).unwrap();
    let labeled = LabeledGraph::distinct(w5);
    println!("\nlabeled edge-list of W_5 with all-distinct labels:");
    print!("{}", write_labeled(&labeled));
    println!("\nDOT rendering:");
    print!("{}", export_dot(&labeled));
}
