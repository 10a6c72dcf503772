//! Cut-irregular graphs (all vertex-deleted subgraphs pairwise
//! non-isomorphic) correspond exactly to link-irregular 2-labelings of
//! complete graphs: color the graph's edges red and its non-edges blue.

use linkirr::construct::{
    g_family, is_cut_irregular, labeling_to_red_graph, red_graph_to_labeling,
};
use linkirr::graph::cycle;
use linkirr::solver::{check_labeling, find_cut_irregular_graphs};

fn main() {
    for order in 2..=6 {
        let classes = find_cut_irregular_graphs(order).unwrap();
        println!("order {order}: {} cut-irregular classes", classes.len());
    }

    println!("\nthe recursive family (order: size, cut-irregular):");
    for n in 6..=12 {
        let g = g_family(n).unwrap();
        println!(
            "  G_{n}: {} edges, {}",
            g.size(),
            is_cut_irregular(&g).cut_irregular
        );
    }

    let g6 = g_family(6).unwrap();
    let labeling = red_graph_to_labeling(&g6);
    assert!(check_labeling(&labeling).irregular);
    println!("\nred/blue labeling of K_6 from G_6 is link-irregular with 2 labels");
    assert_eq!(labeling_to_red_graph(&labeling).unwrap(), g6);
    println!("round trip back to G_6 holds");

    // a vertex-transitive graph can never be cut-irregular
    let c5 = red_graph_to_labeling(&cycle(5));
    println!(
        "C_5 red/blue labeling of K_5 link-irregular? {}",
        check_labeling(&c5).irregular
    );
}
