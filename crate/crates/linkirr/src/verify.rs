//! Shared verification suite: every headline result is re-checked here, and
//! both the `verify-paper` CLI command and the acceptance tests run this
//! exact code.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::construct::{
    complete_labeling, g_family, h_family, is_cut_irregular, join_expand_labeling,
    kstar_trail_plan, labeling_to_red_graph, strip_universal, wheel_eta_formula, wheel_labeling,
    TrailPlan,
};
use crate::graph::{
    build_family, complete, cycle, disjoint_union, join, wheel, FamilySpec, Graph, Label,
    LabeledGraph, Vertex,
};
use crate::iso::{are_isomorphic, canonical_form, canonical_form_graph};
use crate::links::{admits_labeling, corollary_conditions, link};
use crate::solver::{
    brute_eta, check_labeling, enumerate_graph_classes, eta, exists_labeling_with,
    find_cut_irregular_graphs, find_link_irregular_graphs, Eta, SolverError,
};

pub const SUITE_VERSION: &str = "linkirr-verify-1";

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Discrepancy {
    pub graph: String,
    pub check: String,
    pub details: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_order: usize,
    pub checks: Vec<CheckOutcome>,
    /// Diagnostic only; an entry here does not fail the suite.
    pub discrepancies: Vec<Discrepancy>,
    pub assumptions: Vec<String>,
    /// Quarantined from the comparable body: not deterministic across runs.
    pub wall_times_ms: BTreeMap<String, u128>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The report without wall times, for byte-stable comparison.
    pub fn comparable_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut()
            .expect("report is an object")
            .remove("wall_times_ms");
        v
    }
}

struct Runner {
    max_order: usize,
    checks: Vec<CheckOutcome>,
    discrepancies: Vec<Discrepancy>,
    wall_times_ms: BTreeMap<String, u128>,
}

impl Runner {
    fn run(&mut self, name: &str, f: impl FnOnce(&mut Runner) -> Result<String, String>) {
        let start = Instant::now();
        let result = f(self);
        self.wall_times_ms
            .insert(name.to_string(), start.elapsed().as_millis());
        let (passed, details) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(CheckOutcome {
            name: name.to_string(),
            passed,
            details,
        });
    }
}

fn ensure(cond: bool, msg: impl Fn() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run_verification(max_order: usize) -> VerificationReport {
    let mut r = Runner {
        max_order,
        checks: Vec::new(),
        discrepancies: Vec::new(),
        wall_times_ms: BTreeMap::new(),
    };
    r.run("complete_graph_values", check_complete_values);
    r.run("link_irregular_census", check_li_census);
    r.run("cut_irregular_census", check_cut_census);
    r.run("two_labeling_correspondence", check_correspondence);
    r.run("wheel_table", check_wheel_table);
    r.run("w15_regression", check_w15_regression);
    r.run("feasibility_oracle_equivalence", check_oracle_equivalence);
    r.run("infeasible_families", check_infeasible_families);
    r.run("h_family_values", check_h_family);
    r.run("join_propositions", check_join_propositions);
    r.run("property_suites", check_property_suites);
    VerificationReport {
        suite: SUITE_VERSION.to_string(),
        max_order,
        checks: r.checks,
        discrepancies: r.discrepancies,
        assumptions: vec![
            "lower bounds of the join propositions are assumed, not searched".to_string(),
        ],
        wall_times_ms: r.wall_times_ms,
    }
}

fn check_complete_values(r: &mut Runner) -> Result<String, String> {
    let mut done = Vec::new();
    for (n, want) in [
        (1usize, Eta::Finite(0)),
        (2, Eta::Infinite),
        (3, Eta::Finite(3)),
        (4, Eta::Finite(3)),
        (5, Eta::Finite(3)),
    ] {
        if n > r.max_order {
            continue;
        }
        let res = eta(&complete(n));
        ensure(res.value == want, || {
            format!("eta(K_{n}) = {}, want {want}", res.value)
        })?;
        if let Some(w) = res.witness {
            ensure(check_labeling(&w).irregular, || {
                format!("K_{n} witness invalid")
            })?;
        }
        done.push(n);
    }
    for n in 6..=9usize {
        if n > r.max_order {
            continue;
        }
        let l = complete_labeling(n).map_err(|e| format!("K_{n}: {e}"))?;
        ensure(check_labeling(&l).irregular, || {
            format!("K_{n} 2-labeling invalid")
        })?;
        ensure(l.distinct_label_count() == 2, || {
            format!("K_{n} label count != 2")
        })?;
        ensure(exists_labeling_with(&complete(n), 1).is_none(), || {
            format!("K_{n} unexpectedly admits a 1-labeling")
        })?;
        done.push(n);
    }
    Ok(format!("orders checked: {done:?}"))
}

fn check_li_census(r: &mut Runner) -> Result<String, String> {
    let mut counts = Vec::new();
    for order in 1..=6.min(r.max_order) {
        let found = find_link_irregular_graphs(order).map_err(|e| e.to_string())?;
        let want = if order == 6 { 1 } else { 0 };
        ensure(found.len() == want, || {
            format!(
                "order {order}: {} link-irregular classes, want {want}",
                found.len()
            )
        })?;
        counts.push((order, found.len()));
    }
    Ok(format!("counts: {counts:?}"))
}

fn check_cut_census(r: &mut Runner) -> Result<String, String> {
    for order in 1..=5.min(r.max_order) {
        let found = find_cut_irregular_graphs(order).map_err(|e| e.to_string())?;
        ensure(found.is_empty(), || {
            format!("order {order}: unexpected cut-irregular class")
        })?;
    }
    let mut built = Vec::new();
    for n in 6..=12.min(r.max_order) {
        let g = g_family(n).map_err(|e| format!("g_family({n}): {e}"))?;
        ensure(is_cut_irregular(&g).cut_irregular, || {
            format!("g_family({n}) not cut-irregular")
        })?;
        let apexes = (0..n).filter(|&v| g.degree(v) == n - 1).count();
        let pendants = (0..n).filter(|&v| g.degree(v) == 1).count();
        let want = if n % 2 == 1 { (1, 0) } else { (0, 1) };
        // the fixed order-6 base predates the alternation and has a pendant
        if n >= 7 {
            ensure((apexes, pendants) == want, || {
                format!("g_family({n}): degree parity ({apexes}, {pendants}), want {want:?}")
            })?;
        }
        built.push(n);
    }
    Ok(format!("family orders: {built:?}"))
}

fn check_correspondence(r: &mut Runner) -> Result<String, String> {
    let mut summary = Vec::new();
    // K_1 is skipped: its only labeling is empty, so "2-labeling" is vacuous
    for n in 2..=7.min(r.max_order) {
        let two_labeling = exists_labeling_with(&complete(n), 2);
        let cut_classes = find_cut_irregular_graphs(n).map_err(|e| e.to_string())?;
        ensure(two_labeling.is_some() == !cut_classes.is_empty(), || {
            format!(
                "order {n}: 2-labeling present = {}, cut-irregular classes = {}",
                two_labeling.is_some(),
                cut_classes.len()
            )
        })?;
        if let Some(l) = two_labeling {
            let red = labeling_to_red_graph(&l).map_err(|e| format!("order {n}: {e}"))?;
            ensure(is_cut_irregular(&red).cut_irregular, || {
                format!("order {n}: red graph of found 2-labeling not cut-irregular")
            })?;
        }
        summary.push((n, cut_classes.len()));
    }
    Ok(format!("(order, cut-irregular classes): {summary:?}"))
}

const WHEEL_TABLE: [(usize, Option<usize>); 16] = [
    (3, Some(3)),
    (4, None),
    (5, Some(3)),
    (6, Some(5)),
    (7, Some(4)),
    (8, Some(5)),
    (9, Some(5)),
    (10, Some(5)),
    (11, Some(5)),
    (12, Some(5)),
    (13, Some(5)),
    (14, Some(5)),
    (15, Some(5)),
    (16, Some(6)),
    (17, Some(6)),
    (18, Some(6)),
];

fn check_wheel_table(r: &mut Runner) -> Result<String, String> {
    for (n, want) in WHEEL_TABLE {
        let got = wheel_eta_formula(n).map_err(|e| e.to_string())?;
        let want = want.map_or(Eta::Infinite, Eta::Finite);
        ensure(got == want, || {
            format!("wheel formula W_{n} = {got}, want {want}")
        })?;
    }
    let mut cross = Vec::new();
    for &(n, _) in WHEEL_TABLE.iter().take_while(|&&(n, _)| n <= 12) {
        if n + 1 > r.max_order {
            continue;
        }
        let formula = wheel_eta_formula(n).map_err(|e| e.to_string())?;
        let solved = eta(&wheel(n)).value;
        ensure(formula == solved, || {
            format!("W_{n}: formula {formula} vs solver {solved}")
        })?;
        if let Eta::Finite(labels) = formula {
            let l = wheel_labeling(n).map_err(|e| format!("wheel_labeling({n}): {e}"))?;
            ensure(check_labeling(&l).irregular, || {
                format!("W_{n} construction invalid")
            })?;
            ensure(l.distinct_label_count() == labels, || {
                format!("W_{n} construction label count != {labels}")
            })?;
        }
        cross.push(n);
    }
    Ok(format!(
        "formula table ok; solver and construction cross-check for n in {cross:?}"
    ))
}

const FIG3_SPOKES: [Label; 15] = [1, 4, 4, 4, 2, 3, 5, 3, 3, 2, 1, 2, 5, 1, 5];
const FIG3_ARCS: [(Label, Label); 15] = [
    (1, 1),
    (1, 2),
    (2, 2),
    (2, 3),
    (3, 3),
    (3, 4),
    (4, 4),
    (4, 5),
    (5, 5),
    (1, 5),
    (1, 3),
    (3, 5),
    (2, 5),
    (2, 4),
    (1, 4),
];

fn check_w15_regression(r: &mut Runner) -> Result<String, String> {
    if r.max_order < 16 {
        return Ok("skipped (max order below 16)".to_string());
    }
    let g = wheel(15);
    let mut labels = vec![1 as Label; g.size()];
    for (pos, &s) in FIG3_SPOKES.iter().enumerate() {
        labels[g.edge_index(0, pos + 1).expect("spoke edge")] = s;
    }
    let l = LabeledGraph::new(g, labels).expect("positive labels");
    ensure(check_labeling(&l).irregular, || {
        "fixed W_15 labeling invalid".to_string()
    })?;
    ensure(l.distinct_label_count() == 5, || {
        "fixed W_15 labeling label count != 5".to_string()
    })?;
    let plan = TrailPlan {
        r: 5,
        arcs: vec![FIG3_ARCS.to_vec()],
    };
    plan.validate(15)
        .map_err(|e| format!("fixed arc list: {e}"))?;
    kstar_trail_plan(5, 15).map_err(|e| format!("plan search (5, 15): {e}"))?;
    Ok("fixed W_15 labeling and arc list validate".to_string())
}

fn check_oracle_equivalence(r: &mut Runner) -> Result<String, String> {
    let mut total = 0usize;
    for order in 0..=7.min(r.max_order) {
        let classes = enumerate_graph_classes(order).map_err(|e| e.to_string())?;
        for g in classes.iter() {
            let theorem = admits_labeling(g).feasible;
            let oracle = check_labeling(&LabeledGraph::distinct(g.clone())).irregular;
            ensure(theorem == oracle, || {
                format!(
                    "order {order}, edges {:?}: characterization {theorem}, all-distinct check {oracle}",
                    g.edges()
                )
            })?;
            let corollary = corollary_conditions(g).feasible;
            if corollary != theorem {
                r.discrepancies.push(Discrepancy {
                    graph: format!("order {order}, edges {:?}", g.edges()),
                    check: "corollary_conditions".to_string(),
                    details: format!("corollary {corollary} vs characterization {theorem}"),
                });
            }
            total += 1;
        }
    }
    Ok(format!("{total} classes checked"))
}

fn prufer_to_tree(order: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; order];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(order - 1);
    let mut seq = seq.to_vec();
    for _ in 0..order - 2 {
        let leaf = (0..order).find(|&v| degree[v] == 1).expect("a leaf exists");
        let s = seq.remove(0);
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<Vertex> = (0..order).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(order, edges).expect("tree edges valid")
}

/// All isomorphism classes of trees of the given order.
pub fn enumerate_trees(order: usize) -> Vec<Graph> {
    match order {
        0 => vec![],
        1 => vec![Graph::empty(1)],
        2 => vec![complete(2)],
        _ => {
            let mut seen: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
            let len = order - 2;
            let mut seq = vec![0usize; len];
            loop {
                let t = prufer_to_tree(order, &seq);
                seen.entry(canonical_form_graph(&t).bytes).or_insert(t);
                // next sequence
                let mut i = len;
                while i > 0 {
                    i -= 1;
                    if seq[i] + 1 < order {
                        seq[i] += 1;
                        for s in &mut seq[i + 1..] {
                            *s = 0;
                        }
                        break;
                    }
                    if i == 0 {
                        return seen.into_values().collect();
                    }
                }
            }
        }
    }
}

fn partitions_with_big_part(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            if cur.iter().any(|&p| p >= 2) {
                out.push(cur.clone());
            }
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn check_infeasible_families(r: &mut Runner) -> Result<String, String> {
    let mut families = Vec::new();
    for n in 4..=10.min(r.max_order) {
        ensure(eta(&cycle(n)).value == Eta::Infinite, || {
            format!("C_{n} should be infeasible")
        })?;
        families.push(format!("C_{n}"));
    }
    for d in 2..=4usize {
        if 1 << d > r.max_order {
            continue;
        }
        let q = build_family(&FamilySpec::Hypercube(d)).map_err(|e| e.to_string())?;
        ensure(eta(&q).value == Eta::Infinite, || {
            format!("Q_{d} should be infeasible")
        })?;
        families.push(format!("Q_{d}"));
    }
    let mut trees = 0usize;
    for order in 2..=8.min(r.max_order) {
        for t in enumerate_trees(order) {
            ensure(eta(&t).value == Eta::Infinite, || {
                format!("tree of order {order}, edges {:?}", t.edges())
            })?;
            trees += 1;
        }
    }
    families.push(format!("{trees} trees"));
    let mut multipartite = 0usize;
    for n in 2..=7.min(r.max_order) {
        for parts in partitions_with_big_part(n) {
            let g = build_family(&FamilySpec::CompleteMultipartite(parts.clone()))
                .map_err(|e| e.to_string())?;
            ensure(eta(&g).value == Eta::Infinite, || {
                format!("complete multipartite {parts:?} should be infeasible")
            })?;
            multipartite += 1;
        }
    }
    families.push(format!("{multipartite} multipartite"));
    let mut bipartite = 0usize;
    for order in 2..=7.min(r.max_order) {
        let classes = enumerate_graph_classes(order).map_err(|e| e.to_string())?;
        for g in classes.iter() {
            if !g.is_connected() || !g.is_bipartite() {
                continue;
            }
            ensure(!admits_labeling(g).feasible, || {
                format!("connected bipartite order {order}, edges {:?}", g.edges())
            })?;
            bipartite += 1;
        }
    }
    families.push(format!("{bipartite} connected bipartite"));
    Ok(families.join(", "))
}

fn check_h_family(r: &mut Runner) -> Result<String, String> {
    let mut exact = Vec::new();
    let mut bounded = Vec::new();
    for n in 1..=7usize {
        let (g, l) = h_family(n).map_err(|e| format!("h_family({n}): {e}"))?;
        if g.order() > r.max_order {
            continue;
        }
        ensure(check_labeling(&l).irregular, || {
            format!("H_{n} labeling invalid")
        })?;
        ensure(l.distinct_label_count() == n, || {
            format!("H_{n} label count != {n}")
        })?;
        if n <= 4 {
            let solved = eta(&g).value;
            ensure(solved == Eta::Finite(n), || {
                format!("eta(H_{n}) = {solved}, want {n}")
            })?;
            exact.push(n);
        } else {
            // lower bound: each vertex whose link is a single edge pins a
            // distinct label onto that edge
            let single_edge_links = (0..g.order())
                .filter(|&v| {
                    let lv = link(&g, v).expect("v in range");
                    lv.induced.graph().order() == 2 && lv.induced.graph().size() == 1
                })
                .count();
            ensure(single_edge_links == n, || {
                format!("H_{n}: {single_edge_links} single-edge links, want {n}")
            })?;
            bounded.push(n);
        }
    }
    Ok(format!("exact: {exact:?}; counting bound: {bounded:?}"))
}

fn check_join_propositions(r: &mut Runner) -> Result<String, String> {
    if r.max_order < 12 {
        return Ok("skipped (max order below 12)".to_string());
    }
    let (g, l) = h_family(6).map_err(|e| e.to_string())?; // 2K_3, six labels
    let expanded = join_expand_labeling(&g, &l, 6).map_err(|e| e.to_string())?;
    ensure(expanded.graph().order() == 12, || {
        "join order mismatch".to_string()
    })?;
    ensure(expanded.distinct_label_count() == 6, || {
        "join introduced labels".to_string()
    })?;
    ensure(check_labeling(&expanded).irregular, || {
        "join labeling invalid".to_string()
    })?;

    let (core, count) = strip_universal(&wheel(5));
    ensure(count == 1 && core == cycle(5), || {
        "strip_universal(W_5) wrong".to_string()
    })?;
    let (core2, count2) = strip_universal(&join(&g, &complete(2)));
    ensure(count2 == 2 && core2 == g, || {
        "strip_universal(2K_3 v K_2) wrong".to_string()
    })?;
    Ok("upper-bound construction valid; lower bounds assumed".to_string())
}

/// Small deterministic PRNG so the randomized property suite needs no
/// external seed management.
struct XorShift64(u64);

impl XorShift64 {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn random_labeled(rng: &mut XorShift64) -> LabeledGraph {
    let order = 4 + rng.below(5) as usize; // 4..=8
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if rng.below(2) == 0 {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(order, edges).expect("valid edges");
    let labels = (0..g.size()).map(|_| 1 + rng.below(3) as Label).collect();
    LabeledGraph::new(g, labels).expect("positive labels")
}

fn random_perm(rng: &mut XorShift64, n: usize) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.below(i as u64 + 1) as usize);
    }
    p
}

fn check_property_suites(_r: &mut Runner) -> Result<String, String> {
    let mut rng = XorShift64(0x9e3779b97f4a7c15);
    let cases = 1000usize;
    for case in 0..cases {
        let a = random_labeled(&mut rng);
        let perm = random_perm(&mut rng, a.graph().order());
        let b = a.permute(&perm);
        ensure(canonical_form(&a) == canonical_form(&b), || {
            format!("case {case}: certificate not permutation-invariant")
        })?;
        ensure(are_isomorphic(&a, &b), || {
            format!("case {case}: iso check failed")
        })?;
        // a fresh label (outside the multiset) must break equivalence
        if a.graph().size() > 0 {
            let mut labels = a.labels().to_vec();
            labels[0] = 9;
            let c = LabeledGraph::new(a.graph().clone(), labels).expect("positive labels");
            ensure(!are_isomorphic(&a, &c), || {
                format!("case {case}: label change not detected")
            })?;
        }
    }

    let mut agreed = 0usize;
    for order in 0..=5usize {
        let classes = enumerate_graph_classes(order).map_err(|e| e.to_string())?;
        for g in classes.iter() {
            let fast = eta(g).value;
            let slow = match fast {
                Eta::Finite(v) => brute_eta(g, v.max(1)).map_err(|e| e.to_string())?.value,
                Eta::Infinite => match brute_eta(g, 2) {
                    Ok(res) => res.value,
                    Err(e) => return Err(e.to_string()),
                },
            };
            ensure(fast == slow, || {
                format!(
                    "order {order}, edges {:?}: eta {fast} vs brute {slow}",
                    g.edges()
                )
            })?;
            if let Eta::Finite(v) = fast {
                if v > 1 {
                    // one fewer label must not suffice
                    match brute_eta(g, v - 1) {
                        Err(SolverError::Inconclusive { .. }) => {}
                        other => {
                            return Err(format!(
                                "order {order}, edges {:?}: brute at {} gave {other:?}",
                                g.edges(),
                                v - 1
                            ))
                        }
                    }
                }
            }
            agreed += 1;
        }
    }
    let six = disjoint_union(&complete(3), &complete(3));
    ensure(eta(&six).value == Eta::Finite(6), || {
        "eta(2K_3) != 6".to_string()
    })?;
    ensure(
        brute_eta(&six, 6).map_err(|e| e.to_string())?.value == Eta::Finite(6),
        || "brute_eta(2K_3) != 6".to_string(),
    )?;
    Ok(format!(
        "{cases} randomized iso cases; {agreed} eta agreements"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts_match_known_sequence() {
        let want = [0usize, 1, 1, 1, 2, 3, 6, 11];
        for (order, &w) in want.iter().enumerate() {
            assert_eq!(enumerate_trees(order).len(), w, "order {order}");
        }
    }

    #[test]
    fn partitions_exclude_all_singletons() {
        assert!(partitions_with_big_part(3).contains(&vec![2, 1]));
        assert!(!partitions_with_big_part(3).contains(&vec![1, 1, 1]));
    }

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let a = run_verification(5);
        assert!(
            a.all_passed(),
            "{:#?}",
            a.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>()
        );
        let b = run_verification(5);
        assert_eq!(a.comparable_json(), b.comparable_json());
    }
}
