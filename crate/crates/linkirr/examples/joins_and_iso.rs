//! Join operations on labelings and the canonical-certificate machinery that
//! everything else is built on.

use linkirr::construct::{h_family, join_expand_labeling, strip_universal};
use linkirr::graph::{complete, cycle, join, wheel};
use linkirr::iso::{are_isomorphic_graphs, automorphisms, canonical_form_graph};
use linkirr::solver::check_labeling;

fn main() {
    // extend an optimal labeling of 2K_3 across a join with K_6, reusing its
    // six labels: cross edges all take one label, so no new labels appear
    let (g, l) = h_family(6).unwrap();
    let expanded = join_expand_labeling(&g, &l, 6).unwrap();
    assert!(check_labeling(&expanded).irregular);
    println!(
        "2K_3 ∨ K_6: order {}, size {}, still {} labels",
        expanded.graph().order(),
        expanded.graph().size(),
        expanded.distinct_label_count()
    );

    // stripping universal vertices inverts the join
    let (core, count) = strip_universal(&wheel(5));
    println!(
        "W_5 minus universal vertices: C_5? {} (removed {count})",
        core == cycle(5)
    );
    let (core, count) = strip_universal(&join(&g, &complete(2)));
    println!(
        "(2K_3 ∨ K_2) minus universal vertices: 2K_3? {} (removed {count})",
        core == g
    );

    // certificates are bytes: equal bytes <=> isomorphic
    let a = cycle(6);
    let b = a.permute(&[3, 1, 4, 0, 5, 2]);
    println!(
        "\nC_6 and a scrambled copy: certs equal = {}, are_isomorphic = {}",
        canonical_form_graph(&a) == canonical_form_graph(&b),
        are_isomorphic_graphs(&a, &b)
    );
    let aut = automorphisms(&a);
    println!("automorphism group of C_6 has order {}", aut.group_order);
}
