//! Every value n >= 1 is the labeling number of some graph: disjoint
//! triangles contribute three forced labels each, and link-irregular pads
//! (one label apiece) cover the remaining residues.

use linkirr::construct::h_family;
use linkirr::links::link;
use linkirr::solver::{check_labeling, eta, Eta};

fn main() {
    println!("n : order  size  labels  single-edge links");
    for n in 1..=7 {
        let (g, l) = h_family(n).unwrap();
        assert!(check_labeling(&l).irregular);
        let single_edge = (0..g.order())
            .filter(|&v| {
                let lv = link(&g, v).unwrap();
                lv.induced.graph().order() == 2 && lv.induced.graph().size() == 1
            })
            .count();
        println!(
            "{n} : {:5}  {:4}  {:6}  {:17}",
            g.order(),
            g.size(),
            l.distinct_label_count(),
            single_edge
        );
    }

    // each single-edge link pins one distinct label, so the count is a lower
    // bound; for small n the solver confirms exactness
    let (h4, _) = h_family(4).unwrap();
    assert_eq!(eta(&h4).value, Eta::Finite(4));
    println!("\nsolver confirms eta(H_4) = 4");
}
