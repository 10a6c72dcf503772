//! Compute the exact minimum number of distinct labels for small graphs and
//! show the optimal witnesses the search returns.

use linkirr::graph::{complete, disjoint_union, Graph};
use linkirr::io::write_labeled;
use linkirr::solver::{brute_eta, check_labeling, eta, Eta};

fn main() {
    for n in 1..=5 {
        let res = eta(&complete(n));
        println!("K_{n}: eta = {}", res.value);
        if let Some(w) = &res.witness {
            assert!(check_labeling(w).irregular);
            print!("{}", write_labeled(w));
        }
    }

    // two disjoint triangles force six distinct labels: every edge is the
    // whole link of some vertex
    let two_k3 = disjoint_union(&complete(3), &complete(3));
    println!("2K_3: eta = {}", eta(&two_k3).value);

    // an apex over K_3 + K_1 needs only two labels, even though the graph
    // under the apex needs three — joins can lower the optimum
    let apex = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3)]).unwrap();
    let fast = eta(&apex);
    let slow = brute_eta(&apex, 3).unwrap();
    assert_eq!(fast.value, slow.value);
    println!("K_4 plus a pendant at the apex: eta = {}", fast.value);
    assert_eq!(fast.value, Eta::Finite(2));
}
