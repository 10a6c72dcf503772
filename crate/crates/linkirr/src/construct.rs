//! Constructive results: the cut-irregular family, complete-graph labelings,
//! wheel labelings driven by closed trails, the H_n family with prescribed
//! labeling number, and join expansion.

use std::sync::OnceLock;

use thiserror::Error;

use crate::graph::{complete, disjoint_union, join, Graph, Label, LabeledGraph, Vertex};
use crate::iso::canonical_form_graph;
use crate::solver::{check_labeling, find_link_irregular_graphs, Eta};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("infeasible parameter: {0}")]
    InfeasibleParameter(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no trail plan for r={r}, n={n}")]
    NoPlan { r: usize, n: usize },
    #[error("internal validation failed: {0}")]
    InternalValidation(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCheck {
    pub cut_irregular: bool,
    /// Lexicographically least pair whose vertex-deleted subgraphs are
    /// isomorphic.
    pub violating_pair: Option<(Vertex, Vertex)>,
}

/// A graph is cut-irregular when its vertex-deleted subgraphs are pairwise
/// non-isomorphic. Graphs with fewer than two vertices are excluded by
/// convention, matching [`crate::links::is_link_irregular_graph`].
pub fn is_cut_irregular(g: &Graph) -> CutCheck {
    let n = g.order();
    if n < 2 {
        return CutCheck {
            cut_irregular: false,
            violating_pair: None,
        };
    }
    let certs: Vec<_> = (0..n)
        .map(|v| {
            let rest: Vec<Vertex> = (0..n).filter(|&u| u != v).collect();
            canonical_form_graph(&g.induced(&rest))
        })
        .collect();
    for x in 0..n {
        for y in x + 1..n {
            if certs[x] == certs[y] {
                return CutCheck {
                    cut_irregular: false,
                    violating_pair: Some((x, y)),
                };
            }
        }
    }
    CutCheck {
        cut_irregular: true,
        violating_pair: None,
    }
}

const G6_EDGES: [(Vertex, Vertex); 7] = [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (4, 5)];

/// The cut-irregular family: the fixed order-6 base, then alternately joining
/// an apex (odd orders) or hanging a pendant off the lowest-index
/// minimum-degree vertex (even orders). The result is re-checked; failure
/// here would mean the recursion is wrong.
pub fn g_family(n: usize) -> Result<Graph, ConstructError> {
    if n < 6 {
        return Err(ConstructError::InfeasibleParameter(format!(
            "no cut-irregular graph of order {n} exists (need n >= 6)"
        )));
    }
    let g = if n == 6 {
        Graph::new(6, G6_EDGES.iter().copied()).expect("fixed edge list is valid")
    } else if n % 2 == 1 {
        join(&g_family(n - 1)?, &complete(1))
    } else {
        let prev = g_family(n - 1)?;
        let min_deg = (0..prev.order())
            .map(|v| prev.degree(v))
            .min()
            .expect("nonempty");
        let anchor = (0..prev.order())
            .find(|&v| prev.degree(v) == min_deg)
            .expect("some vertex attains the minimum");
        let mut edges: Vec<(Vertex, Vertex)> = prev.edges().to_vec();
        edges.push((anchor, n - 1));
        Graph::new(n, edges).expect("pendant edge is valid")
    };
    if !is_cut_irregular(&g).cut_irregular {
        return Err(ConstructError::InternalValidation(format!(
            "constructed order-{n} graph is not cut-irregular"
        )));
    }
    Ok(g)
}

/// Complete graph on `|g|` vertices with the edges of `g` labeled 1 ("red")
/// and the non-edges labeled 2 ("blue").
pub fn red_graph_to_labeling(g: &Graph) -> LabeledGraph {
    let n = g.order();
    let kn = complete(n);
    let labels = kn
        .edges()
        .iter()
        .map(|&(u, v)| if g.has_edge(u, v) { 1 } else { 2 })
        .collect();
    LabeledGraph::new(kn, labels).expect("labels 1 and 2 are positive")
}

/// Inverse direction: the subgraph carrying the lexicographically smaller of
/// the two labels of a 2-labeled complete graph.
pub fn labeling_to_red_graph(l: &LabeledGraph) -> Result<Graph, ConstructError> {
    let n = l.graph().order();
    if l.graph().size() != n * n.saturating_sub(1) / 2 {
        return Err(ConstructError::PreconditionViolated(
            "input graph is not complete".into(),
        ));
    }
    let distinct = l.distinct_labels();
    if distinct.len() != 2 {
        return Err(ConstructError::PreconditionViolated(format!(
            "expected exactly 2 distinct labels, got {}",
            distinct.len()
        )));
    }
    let red = distinct[0];
    let edges = l
        .graph()
        .edges()
        .iter()
        .zip(l.labels())
        .filter(|&(_, &lab)| lab == red)
        .map(|(&e, _)| e);
    Ok(Graph::new(n, edges).expect("subset of valid edges"))
}

/// Minimum label counts for complete graphs: 0, ∞, 3, 3, 3, then 2 forever.
pub fn complete_eta(n: usize) -> Eta {
    match n {
        0 | 1 => Eta::Finite(0),
        2 => Eta::Infinite,
        3..=5 => Eta::Finite(3),
        _ => Eta::Finite(2),
    }
}

/// An optimal link-irregular labeling of K_n: fixed 3-labelings for
/// n = 3, 4, 5 and the red/blue labeling of the cut-irregular family beyond.
pub fn complete_labeling(n: usize) -> Result<LabeledGraph, ConstructError> {
    if n < 3 {
        return Err(ConstructError::InfeasibleParameter(format!(
            "K_{n} has no link-irregular labeling"
        )));
    }
    let l = match n {
        3 => with_labels(3, &[((0, 1), 1), ((0, 2), 2), ((1, 2), 3)]),
        4 => with_labels(
            4,
            &[
                ((0, 1), 1),
                ((0, 3), 1),
                ((2, 3), 1),
                ((1, 2), 2),
                ((1, 3), 2),
                ((0, 2), 3),
            ],
        ),
        5 => {
            let special = [((0, 2), 2), ((0, 3), 2), ((3, 4), 2), ((0, 4), 3)];
            let kn = complete(5);
            let labels = kn
                .edges()
                .iter()
                .map(|&e| {
                    special
                        .iter()
                        .find(|&&(s, _)| s == e)
                        .map_or(1, |&(_, l)| l)
                })
                .collect();
            LabeledGraph::new(kn, labels).expect("positive labels")
        }
        _ => red_graph_to_labeling(&g_family(n)?),
    };
    if !check_labeling(&l).irregular {
        return Err(ConstructError::InternalValidation(format!(
            "K_{n} labeling is not link-irregular"
        )));
    }
    Ok(l)
}

fn with_labels(n: usize, assign: &[((Vertex, Vertex), Label)]) -> LabeledGraph {
    let kn = complete(n);
    let mut labels = vec![0; kn.size()];
    for &((u, v), l) in assign {
        labels[kn.edge_index(u, v).expect("edge of K_n")] = l;
    }
    LabeledGraph::new(kn, labels).expect("full assignment")
}

/// Largest wheel size reachable with `j` spoke labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WheelCap {
    pub j: usize,
    pub cap: usize,
}

pub fn wheel_cap(j: usize) -> WheelCap {
    let pairs = j * (j + 1) / 2;
    let cap = if j % 2 == 1 { pairs } else { pairs - j / 2 };
    WheelCap { j, cap }
}

/// Closed-form labeling number of the wheel W_n.
pub fn wheel_eta_formula(n: usize) -> Result<Eta, ConstructError> {
    match n {
        0..=2 => Err(ConstructError::InfeasibleParameter(format!(
            "W_{n} is not a wheel (need n >= 3)"
        ))),
        3 => Ok(Eta::Finite(3)),
        4 => Ok(Eta::Infinite),
        6 | 8 => Ok(Eta::Finite(5)),
        _ => {
            let j = (3..)
                .find(|&j| n <= wheel_cap(j).cap)
                .expect("caps are unbounded");
            Ok(Eta::Finite(j))
        }
    }
}

/// One closed trail (odd wheel) or two edge-disjoint closed trails of equal
/// length (even wheel) in K_r*, the complete graph on the labels `1..=r`
/// with a loop at every vertex. Arcs are unordered label pairs; a loop is
/// encoded as `(a, a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailPlan {
    pub r: usize,
    pub arcs: Vec<Vec<(Label, Label)>>,
}

impl TrailPlan {
    /// Checks all plan invariants for wheel size `n` and returns the vertex
    /// walk of each trail (label sequences of length `arcs + 1`, closed).
    pub fn validate(&self, n: usize) -> Result<Vec<Vec<Label>>, ConstructError> {
        let expected_lengths: Vec<usize> = if n % 2 == 1 {
            vec![n]
        } else {
            vec![n / 2, n / 2]
        };
        let lengths: Vec<usize> = self.arcs.iter().map(|t| t.len()).collect();
        if lengths != expected_lengths {
            return Err(ConstructError::InternalValidation(format!(
                "trail lengths {lengths:?}, expected {expected_lengths:?}"
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for trail in &self.arcs {
            for &(a, b) in trail {
                if a < 1 || b < a || b as usize > self.r {
                    return Err(ConstructError::InternalValidation(format!(
                        "arc ({a}, {b}) outside K_{}*",
                        self.r
                    )));
                }
                if !seen.insert((a, b)) {
                    return Err(ConstructError::InternalValidation(format!(
                        "repeated arc ({a}, {b})"
                    )));
                }
            }
        }
        self.arcs.iter().map(|t| trail_walk(t)).collect()
    }
}

/// Orients an unordered closed-trail arc sequence into a vertex walk.
fn trail_walk(arcs: &[(Label, Label)]) -> Result<Vec<Label>, ConstructError> {
    let (a0, b0) = arcs[0];
    'start: for start in [a0.min(b0), a0.max(b0)] {
        let mut walk = vec![start];
        let mut at = start;
        for &(a, b) in arcs {
            at = if at == a {
                b
            } else if at == b {
                a
            } else {
                continue 'start;
            };
            walk.push(at);
        }
        if at == start {
            return Ok(walk);
        }
    }
    Err(ConstructError::InternalValidation(
        "arc sequence is not a closed trail".into(),
    ))
}

/// Edges of K_r* in lexicographic order.
fn kstar_edges(r: usize) -> Vec<(Label, Label)> {
    let mut edges = Vec::new();
    for a in 1..=r as Label {
        for b in a..=r as Label {
            edges.push((a, b));
        }
    }
    edges
}

/// An edge subset supports a single closed trail iff every touched vertex has
/// even degree (a loop contributes 2) and the touched edges are connected.
fn is_eulerian_subset(edges: &[(Label, Label)], mask: u32, r: usize) -> bool {
    if mask == 0 {
        return false;
    }
    let mut deg = vec![0usize; r + 1];
    for (i, &(a, b)) in edges.iter().enumerate() {
        if mask & (1 << i) != 0 {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
    }
    if deg.iter().any(|&d| d % 2 == 1) {
        return false;
    }
    // connectivity over touched vertices
    let start = (1..=r).find(|&v| deg[v] > 0).expect("mask nonempty");
    let mut visited = vec![false; r + 1];
    let mut stack = vec![start];
    visited[start] = true;
    while let Some(v) = stack.pop() {
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask & (1 << i) == 0 {
                continue;
            }
            for (x, y) in [(a as usize, b as usize), (b as usize, a as usize)] {
                if x == v && !visited[y] {
                    visited[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    (1..=r).all(|v| deg[v] == 0 || visited[v])
}

/// Hierholzer circuit over the masked edge subset, as an arc sequence.
fn euler_circuit(edges: &[(Label, Label)], mask: u32, r: usize) -> Vec<(Label, Label)> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); r + 1];
    for (i, &(a, b)) in edges.iter().enumerate() {
        if mask & (1 << i) != 0 {
            incident[a as usize].push(i);
            if b != a {
                incident[b as usize].push(i);
            }
        }
    }
    let start = (1..=r)
        .find(|&v| !incident[v].is_empty())
        .expect("nonempty mask");
    let mut used = vec![false; edges.len()];
    let mut stack: Vec<usize> = vec![start];
    let mut circuit: Vec<usize> = Vec::new();
    let mut next_idx = vec![0usize; r + 1];
    while let Some(&v) = stack.last() {
        let mut advanced = false;
        while next_idx[v] < incident[v].len() {
            let e = incident[v][next_idx[v]];
            next_idx[v] += 1;
            if used[e] {
                continue;
            }
            used[e] = true;
            let (a, b) = edges[e];
            let w = if a as usize == v {
                b as usize
            } else {
                a as usize
            };
            stack.push(w);
            advanced = true;
            break;
        }
        if !advanced {
            circuit.push(v);
            stack.pop();
        }
    }
    circuit.reverse();
    circuit
        .windows(2)
        .map(|w| sorted_pair(w[0] as Label, w[1] as Label))
        .collect()
}

fn sorted_pair(a: Label, b: Label) -> (Label, Label) {
    (a.min(b), a.max(b))
}

/// Finds a trail plan for the wheel W_n with `r` labels by scanning edge
/// subsets of K_r* for Eulerian support(s) and extracting circuits. The scan
/// is over bitmasks, so the label count is limited to keep it tractable.
pub fn kstar_trail_plan(r: usize, n: usize) -> Result<TrailPlan, ConstructError> {
    let edges = kstar_edges(r);
    let m = edges.len();
    if m > 24 {
        return Err(ConstructError::InfeasibleParameter(format!(
            "trail search supports at most 24 K_r* edges, K_{r}* has {m}"
        )));
    }
    if n % 2 == 1 {
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize == n && is_eulerian_subset(&edges, mask, r) {
                let arcs = euler_circuit(&edges, mask, r);
                let plan = TrailPlan {
                    r,
                    arcs: vec![arcs],
                };
                plan.validate(n)?;
                return Ok(plan);
            }
        }
    } else {
        let half = n / 2;
        let candidates: Vec<u32> = (0u32..(1 << m))
            .filter(|&mask| {
                mask.count_ones() as usize == half && is_eulerian_subset(&edges, mask, r)
            })
            .collect();
        for (i, &s1) in candidates.iter().enumerate() {
            for &s2 in &candidates[i + 1..] {
                if s1 & s2 == 0 {
                    let plan = TrailPlan {
                        r,
                        arcs: vec![euler_circuit(&edges, s1, r), euler_circuit(&edges, s2, r)],
                    };
                    plan.validate(n)?;
                    return Ok(plan);
                }
            }
        }
    }
    Err(ConstructError::NoPlan { r, n })
}

/// Optimal link-irregular labeling of the wheel W_n (hub 0, rim `1..=n`).
/// Spoke labels are laid out from a trail plan along the step-2 rim orbits;
/// rim edges are labeled 1. W_3 = K_4 reuses the complete-graph labeling.
pub fn wheel_labeling(n: usize) -> Result<LabeledGraph, ConstructError> {
    if n < 3 {
        return Err(ConstructError::InfeasibleParameter(format!(
            "W_{n} is not a wheel (need n >= 3)"
        )));
    }
    if n == 4 {
        return Err(ConstructError::InfeasibleParameter(
            "W_4 has no link-irregular labeling".into(),
        ));
    }
    if n == 3 {
        return complete_labeling(4);
    }
    let Eta::Finite(r) = wheel_eta_formula(n)? else {
        unreachable!("only W_4 is infeasible")
    };
    let plan = kstar_trail_plan(r, n)?;
    let walks = plan.validate(n)?;
    wheel_labeling_from_plan(n, r, &walks)
}

/// The step-2 layout: the trail arc (w_t, w_{t+1}) becomes the labeled link
/// of the rim vertex between the two spokes it labels.
pub fn wheel_labeling_from_plan(
    n: usize,
    r: usize,
    walks: &[Vec<Label>],
) -> Result<LabeledGraph, ConstructError> {
    let mut spoke = vec![0 as Label; n]; // by rim position 0..n-1
    if n % 2 == 1 {
        let walk = &walks[0];
        for t in 0..n {
            spoke[(2 * t) % n] = walk[t];
        }
    } else {
        for t in 0..n / 2 {
            spoke[2 * t] = walks[0][t];
            spoke[(2 * t + 1) % n] = walks[1][t];
        }
    }
    let g = crate::graph::wheel(n);
    let mut labels = vec![1 as Label; g.size()];
    for (pos, &s) in spoke.iter().enumerate() {
        labels[g.edge_index(0, pos + 1).expect("spoke edge")] = s;
    }
    let l = LabeledGraph::new(g, labels).expect("positive labels");
    let distinct = l.distinct_label_count();
    if distinct != r {
        return Err(ConstructError::InternalValidation(format!(
            "wheel labeling uses {distinct} labels, expected {r}"
        )));
    }
    if !check_labeling(&l).irregular {
        return Err(ConstructError::InternalValidation(
            "wheel labeling is not link-irregular".into(),
        ));
    }
    Ok(l)
}

static LI6: OnceLock<Graph> = OnceLock::new();

/// The unique order-6 graph whose unlabeled links are already pairwise
/// non-isomorphic.
pub fn unique_li6() -> &'static Graph {
    LI6.get_or_init(|| {
        let found = find_link_irregular_graphs(6).expect("order 6 is enumerable");
        assert_eq!(found.len(), 1, "exactly one order-6 class expected");
        found.into_iter().next().expect("nonempty")
    })
}

const PAD7_EDGES: [(Vertex, Vertex); 14] = [
    (0, 1),
    (0, 2),
    (0, 4),
    (0, 5),
    (0, 6),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 6),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
];

static PAD7: OnceLock<Graph> = OnceLock::new();

/// A second link-irregular pad for `h_family`, order 7. Two disjoint copies
/// of the order-6 graph can never work: it has a vertex whose link is the
/// edgeless 2-vertex graph, and two such label-free links are isomorphic no
/// matter how the copies are labeled. This graph has no edgeless link at all
/// and, like the order-6 one, exactly one link that is a single edge (that
/// count carries the lower-bound argument).
pub fn second_pad() -> &'static Graph {
    PAD7.get_or_init(|| {
        let g = Graph::new(7, PAD7_EDGES.iter().copied()).expect("fixed edge list is valid");
        assert!(crate::links::is_link_irregular_graph(&g));
        let mut single_edge = 0;
        for v in 0..g.order() {
            let lv = crate::links::link(&g, v).expect("v in range");
            let (o, s) = (lv.induced.graph().order(), lv.induced.graph().size());
            assert!(s > 0, "pad must have no edgeless link");
            if o == 2 && s == 1 {
                single_edge += 1;
            }
        }
        assert_eq!(single_edge, 1, "pad must pin exactly one label");
        g
    })
}

/// A graph with labeling number exactly `n`: disjoint triangles carrying
/// three fresh labels each, padded with the order-6 link-irregular graph
/// and, when two pads are needed, the order-7 one (each pad on a single
/// fresh label) to hit every residue.
pub fn h_family(n: usize) -> Result<(Graph, LabeledGraph), ConstructError> {
    if n == 0 {
        return Err(ConstructError::InfeasibleParameter(
            "no nonempty graph has labeling number 0".into(),
        ));
    }
    let (k, pads): (usize, &[&Graph]) = match n % 3 {
        0 => (n / 3, &[]),
        1 => (n / 3, &[unique_li6()]),
        _ => (n / 3, &[unique_li6(), second_pad()]),
    };
    let mut g = Graph::empty(0);
    let mut labels: Vec<Label> = Vec::new();
    let mut next_label: Label = 1;
    for _ in 0..k {
        g = disjoint_union(&g, &complete(3));
        labels.extend([next_label, next_label + 1, next_label + 2]);
        next_label += 3;
    }
    for pad in pads {
        g = disjoint_union(&g, pad);
        labels.extend(std::iter::repeat_n(next_label, pad.size()));
        next_label += 1;
    }
    let l = LabeledGraph::new(g.clone(), labels).expect("positive labels");
    if !check_labeling(&l).irregular {
        return Err(ConstructError::InternalValidation(format!(
            "H_{n} labeling is not link-irregular"
        )));
    }
    if l.distinct_label_count() != n {
        return Err(ConstructError::InternalValidation(format!(
            "H_{n} labeling uses {} labels",
            l.distinct_label_count()
        )));
    }
    Ok((g, l))
}

/// Extends a link-irregular labeling of `g` to `g ∨ K_n`: a minimal
/// clique labeling drawn from the existing label set, with every cross edge
/// on the smallest label in use.
pub fn join_expand_labeling(
    g: &Graph,
    lg: &LabeledGraph,
    n: usize,
) -> Result<LabeledGraph, ConstructError> {
    if lg.graph() != g {
        return Err(ConstructError::PreconditionViolated(
            "labeling does not belong to the given graph".into(),
        ));
    }
    if !check_labeling(lg).irregular {
        return Err(ConstructError::PreconditionViolated(
            "base labeling is not link-irregular".into(),
        ));
    }
    let order = g.order();
    if order == 0 || (0..order).any(|v| g.degree(v) == order - 1) {
        return Err(ConstructError::PreconditionViolated(
            "base graph has a universal vertex".into(),
        ));
    }
    let palette = lg.distinct_labels();
    let Eta::Finite(clique_eta) = complete_eta(n) else {
        return Err(ConstructError::PreconditionViolated(
            "K_2 admits no link-irregular labeling".into(),
        ));
    };
    if clique_eta > palette.len() {
        return Err(ConstructError::PreconditionViolated(format!(
            "clique needs {clique_eta} labels but the base uses only {}",
            palette.len()
        )));
    }
    let clique_labeling = if n >= 3 {
        Some(
            complete_labeling(n)?
                .relabel(|l| palette[l as usize - 1])
                .expect("palette labels are positive"),
        )
    } else {
        None
    };
    let joined = join(g, &complete(n));
    let cross = palette[0];
    let labels = joined
        .edges()
        .iter()
        .map(|&(u, v)| {
            if v < order {
                lg.label_of(u, v).expect("edge of g")
            } else if u >= order {
                clique_labeling
                    .as_ref()
                    .expect("clique edges only exist for n >= 2, feasible n >= 3")
                    .label_of(u - order, v - order)
                    .expect("edge of K_n")
            } else {
                cross
            }
        })
        .collect();
    let l = LabeledGraph::new(joined, labels).expect("positive labels");
    if !check_labeling(&l).irregular {
        return Err(ConstructError::InternalValidation(
            "expanded labeling is not link-irregular".into(),
        ));
    }
    Ok(l)
}

/// Removes every universal vertex; returns the induced core and the count
/// removed. One pass suffices: a vertex universal in the core was already
/// universal in `g`.
pub fn strip_universal(g: &Graph) -> (Graph, usize) {
    let order = g.order();
    let keep: Vec<Vertex> = (0..order).filter(|&v| g.degree(v) != order - 1).collect();
    let count = order - keep.len();
    (g.induced(&keep), count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, cycle, wheel, FamilySpec};
    use crate::solver::eta;

    #[test]
    fn cut_irregularity_basics() {
        let g6 = g_family(6).unwrap();
        assert!(is_cut_irregular(&g6).cut_irregular);
        let p3 = build_family(&FamilySpec::Path(3)).unwrap();
        let chk = is_cut_irregular(&p3);
        assert!(!chk.cut_irregular);
        assert_eq!(chk.violating_pair, Some((0, 2)));
        assert!(!is_cut_irregular(&cycle(6)).cut_irregular);
    }

    #[test]
    fn g_family_shape_and_parity() {
        assert_eq!(g_family(6).unwrap().size(), 7);
        let g7 = g_family(7).unwrap();
        assert_eq!((g7.order(), g7.size()), (7, 13));
        assert_eq!((0..7).filter(|&v| g7.degree(v) == 6).count(), 1);
        let g8 = g_family(8).unwrap();
        assert_eq!((g8.order(), g8.size()), (8, 14));
        assert_eq!((0..8).filter(|&v| g8.degree(v) == 1).count(), 1);
        assert!(g_family(5).is_err());
    }

    #[test]
    fn red_blue_roundtrip() {
        let g = g_family(6).unwrap();
        let l = red_graph_to_labeling(&g);
        assert!(check_labeling(&l).irregular);
        assert_eq!(labeling_to_red_graph(&l).unwrap(), g);

        let c5 = red_graph_to_labeling(&cycle(5));
        assert!(!check_labeling(&c5).irregular);

        assert!(labeling_to_red_graph(&LabeledGraph::uniform(complete(4), 1)).is_err());
        assert!(labeling_to_red_graph(&LabeledGraph::uniform(cycle(4), 1)).is_err());
    }

    #[test]
    fn complete_labelings_are_optimal() {
        for n in 3..=8 {
            let l = complete_labeling(n).unwrap();
            assert!(check_labeling(&l).irregular, "K_{n}");
            let want = if n <= 5 { 3 } else { 2 };
            assert_eq!(l.distinct_label_count(), want, "K_{n}");
        }
        assert!(complete_labeling(2).is_err());
    }

    #[test]
    fn wheel_formula_table() {
        let want = [
            (3, Eta::Finite(3)),
            (4, Eta::Infinite),
            (5, Eta::Finite(3)),
            (6, Eta::Finite(5)),
            (7, Eta::Finite(4)),
            (8, Eta::Finite(5)),
            (15, Eta::Finite(5)),
            (16, Eta::Finite(6)),
            (18, Eta::Finite(6)),
            (19, Eta::Finite(7)),
        ];
        for (n, e) in want {
            assert_eq!(wheel_eta_formula(n).unwrap(), e, "W_{n}");
        }
        assert!(wheel_eta_formula(2).is_err());
        assert_eq!(wheel_cap(3).cap, 6);
        assert_eq!(wheel_cap(4).cap, 8);
        assert_eq!(wheel_cap(5).cap, 15);
        assert_eq!(wheel_cap(6).cap, 18);
    }

    #[test]
    fn trail_plans_validate() {
        let p = kstar_trail_plan(5, 15).unwrap();
        assert_eq!(p.arcs[0].len(), 15);
        p.validate(15).unwrap();

        let p = kstar_trail_plan(3, 5).unwrap();
        p.validate(5).unwrap();

        let p = kstar_trail_plan(5, 6).unwrap();
        assert_eq!(p.arcs.len(), 2);
        p.validate(6).unwrap();

        // no two edge-disjoint closed 3-trails fit in K_4*
        assert_eq!(
            kstar_trail_plan(4, 6),
            Err(ConstructError::NoPlan { r: 4, n: 6 })
        );
    }

    #[test]
    fn wheel_labelings_validate() {
        for n in [3usize, 5, 6, 7, 8, 9, 10] {
            let l = wheel_labeling(n).unwrap();
            assert!(check_labeling(&l).irregular, "W_{n}");
            let Eta::Finite(r) = wheel_eta_formula(n).unwrap() else {
                unreachable!()
            };
            assert_eq!(l.distinct_label_count(), r, "W_{n}");
        }
        assert!(wheel_labeling(4).is_err());
    }

    #[test]
    fn li6_is_unique_and_trivially_labelable() {
        let g = unique_li6();
        assert_eq!(g.order(), 6);
        assert!(check_labeling(&LabeledGraph::uniform(g.clone(), 1)).irregular);
        assert_eq!(eta(g).value, Eta::Finite(1));
    }

    #[test]
    fn h_family_values() {
        for n in 1..=5 {
            let (g, l) = h_family(n).unwrap();
            assert_eq!(l.graph(), &g);
            assert!(check_labeling(&l).irregular, "H_{n}");
            assert_eq!(l.distinct_label_count(), n, "H_{n}");
        }
        assert_eq!(eta(&h_family(3).unwrap().0).value, Eta::Finite(3));
        assert!(h_family(0).is_err());
    }

    #[test]
    fn join_expansion_and_stripping() {
        let (g, l) = h_family(6).unwrap(); // 2K_3 with six labels
        assert_eq!(g.order(), 6);
        let expanded = join_expand_labeling(&g, &l, 6).unwrap();
        assert_eq!(expanded.graph().order(), 12);
        assert_eq!(expanded.distinct_label_count(), 6);
        assert!(check_labeling(&expanded).irregular);

        let (core, count) = strip_universal(&wheel(5));
        assert_eq!((core.clone(), count), (cycle(5), 1));
        let joined = join(&g, &complete(2));
        let (core2, count2) = strip_universal(&joined);
        assert_eq!(count2, 2);
        assert_eq!(core2, g);

        // hub of a wheel is universal
        let w5 = wheel(5);
        let lw = LabeledGraph::uniform(w5.clone(), 1);
        assert!(matches!(
            join_expand_labeling(&w5, &lw, 3),
            Err(ConstructError::PreconditionViolated(_))
        ));
        assert!(matches!(
            join_expand_labeling(&g, &l, 2),
            Err(ConstructError::PreconditionViolated(_))
        ));
    }
}
