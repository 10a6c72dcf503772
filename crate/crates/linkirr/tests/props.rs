//! Randomized properties: serialization round-trips, isomorphism-engine
//! invariants against a factorial brute-force oracle, and solver agreement.

use proptest::prelude::*;

use linkirr::graph::{Graph, Label, LabeledGraph};
use linkirr::io::{parse_graph6, parse_labeled, write_graph6, write_labeled};
use linkirr::iso::{are_isomorphic, are_isomorphic_graphs, canonical_form};
use linkirr::solver::{brute_eta, check_labeling, eta, EdgePartitionCode, Eta};

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order)
        .prop_flat_map(|order| {
            let pairs = order * order.saturating_sub(1) / 2;
            (Just(order), prop::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(order, mask)| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..order {
                for v in u + 1..order {
                    if mask[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(order, edges).expect("generated edges are valid")
        })
}

fn arb_labeled(max_order: usize, max_label: Label) -> impl Strategy<Value = LabeledGraph> {
    arb_graph(max_order).prop_flat_map(move |g| {
        let m = g.size();
        prop::collection::vec(1..=max_label, m)
            .prop_map(move |labels| LabeledGraph::new(g.clone(), labels).expect("labels >= 1"))
    })
}

fn arb_labeled_with_perm(
    max_order: usize,
    max_label: Label,
) -> impl Strategy<Value = (LabeledGraph, Vec<usize>)> {
    arb_labeled(max_order, max_label).prop_flat_map(|l| {
        let n = l.graph().order();
        (Just(l), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

/// All permutations of `0..n` via Heap's algorithm; the factorial oracle.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut a, &mut out);
    out
}

fn iso_by_brute_force(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    if a.graph().order() != b.graph().order() {
        return false;
    }
    permutations(a.graph().order())
        .iter()
        .any(|p| &a.permute(p) == b)
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in arb_graph(20)) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn labeled_roundtrip(l in arb_labeled(12, 9)) {
        let text = write_labeled(&l);
        prop_assert_eq!(parse_labeled(&text).unwrap(), l);
    }

    #[test]
    fn partition_code_normalization(l in arb_labeled(8, 4)) {
        let code = EdgePartitionCode::from_labels(l.labels());
        prop_assert!(code.is_valid());
        let renamed = code.to_labeling(l.graph());
        // same partition of the edge set, in normal form
        prop_assert_eq!(EdgePartitionCode::from_labels(renamed.labels()), code);
    }

    #[test]
    fn cert_is_permutation_invariant((l, perm) in arb_labeled_with_perm(8, 3)) {
        let moved = l.permute(&perm);
        prop_assert_eq!(canonical_form(&l), canonical_form(&moved));
        prop_assert!(are_isomorphic(&l, &moved));
    }

    #[test]
    fn iso_matches_factorial_oracle(a in arb_labeled(5, 2), b in arb_labeled(5, 2)) {
        prop_assert_eq!(are_isomorphic(&a, &b), iso_by_brute_force(&a, &b));
    }

    #[test]
    fn unlabeled_iso_matches_factorial_oracle(a in arb_graph(5), b in arb_graph(5)) {
        let la = LabeledGraph::uniform(a.clone(), 1);
        let lb = LabeledGraph::uniform(b.clone(), 1);
        prop_assert_eq!(are_isomorphic_graphs(&a, &b), iso_by_brute_force(&la, &lb));
    }

    #[test]
    fn check_labeling_invariant_under_label_bijection(l in arb_labeled(7, 3)) {
        // any injective relabeling preserves (non-)irregularity
        let relabeled = l.relabel(|x| x * 7 + 1).unwrap();
        prop_assert_eq!(
            check_labeling(&l).irregular,
            check_labeling(&relabeled).irregular
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn eta_agrees_with_brute_force(g in arb_graph(5)) {
        let fast = eta(&g).value;
        match fast {
            Eta::Finite(v) => {
                prop_assert_eq!(brute_eta(&g, v.max(1)).unwrap().value, fast);
            }
            Eta::Infinite => {
                prop_assert_eq!(brute_eta(&g, 2).unwrap().value, Eta::Infinite);
            }
        }
    }

    #[test]
    fn eta_witness_is_valid_and_minimal_in_count(g in arb_graph(6)) {
        let res = eta(&g);
        if let (Eta::Finite(v), Some(w)) = (res.value, &res.witness) {
            prop_assert!(check_labeling(w).irregular);
            prop_assert_eq!(w.distinct_label_count(), v);
        }
    }
}
