//! Exhaustive censuses over small isomorphism classes: how many graphs there
//! are, and how rare it is for the bare links to already tell every vertex
//! apart.

use linkirr::io::write_graph6;
use linkirr::solver::{enumerate_graph_classes, find_link_irregular_graphs};

fn main() {
    println!("order : classes  link-irregular");
    for order in 1..=7 {
        let classes = enumerate_graph_classes(order).unwrap();
        let li = find_link_irregular_graphs(order).unwrap();
        println!("{order:5} : {:7}  {:14}", classes.len(), li.len());
    }

    let six = find_link_irregular_graphs(6).unwrap();
    println!(
        "\nthe unique order-6 link-irregular graph: {} (graph6)",
        write_graph6(&six[0]).unwrap()
    );
    println!("edges: {:?}", six[0].edges());

    let seven = find_link_irregular_graphs(7).unwrap();
    println!("\nfirst three of the {} order-7 classes:", seven.len());
    for g in seven.iter().take(3) {
        println!("  {}", write_graph6(g).unwrap());
    }
}
