//! Links, labeled links, active neighborhoods, and the feasibility tests
//! that decide whether any link-irregular labeling can exist.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, LabeledGraph, Vertex};
use crate::iso::{are_isomorphic_graphs, canonical_form_graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinkError {
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(Vertex, usize),
}

/// The link of `center`: the labeled subgraph induced by its neighborhood,
/// renumbered to `0..deg` in ascending original-id order. `members[i]` is the
/// original id of induced vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkView {
    pub center: Vertex,
    pub members: Vec<Vertex>,
    pub induced: LabeledGraph,
}

impl LinkView {
    /// Edges of the link as pairs of original base-graph vertex ids.
    pub fn original_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.induced
            .graph()
            .edges()
            .iter()
            .map(|&(a, b)| (self.members[a], self.members[b]))
            .collect()
    }
}

pub fn labeled_link(l: &LabeledGraph, v: Vertex) -> Result<LinkView, LinkError> {
    let g = l.graph();
    if v >= g.order() {
        return Err(LinkError::VertexOutOfRange(v, g.order()));
    }
    let members: Vec<Vertex> = g.neighbors(v).to_vec();
    let induced_graph = g.induced(&members);
    let labels = induced_graph
        .edges()
        .iter()
        .map(|&(a, b)| {
            l.label_of(members[a], members[b])
                .expect("induced edge exists in base")
        })
        .collect();
    let induced = LabeledGraph::new(induced_graph, labels).expect("labels copied from valid base");
    Ok(LinkView {
        center: v,
        members,
        induced,
    })
}

pub fn link(g: &Graph, v: Vertex) -> Result<LinkView, LinkError> {
    labeled_link(&LabeledGraph::uniform(g.clone(), 1), v)
}

/// Neighbors of `v` that are not isolated inside the link of `v`.
pub fn active_neighborhood(g: &Graph, v: Vertex) -> Result<Vec<Vertex>, LinkError> {
    let lv = link(g, v)?;
    Ok(lv
        .members
        .iter()
        .enumerate()
        .filter(|&(i, _)| lv.induced.graph().degree(i) >= 1)
        .map(|(_, &orig)| orig)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FeasibilityReason {
    Ok,
    LinksIsomorphicSameEdges,
    MultipleEmptyLinks,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport {
    pub feasible: bool,
    /// Lexicographically least violating pair, present iff infeasible.
    pub witness_pair: Option<(Vertex, Vertex)>,
    pub reason: FeasibilityReason,
}

impl FeasibilityReport {
    fn ok() -> FeasibilityReport {
        FeasibilityReport {
            feasible: true,
            witness_pair: None,
            reason: FeasibilityReason::Ok,
        }
    }

    fn violated(x: Vertex, y: Vertex, both_empty: bool) -> FeasibilityReport {
        FeasibilityReport {
            feasible: false,
            witness_pair: Some((x, y)),
            reason: if both_empty {
                FeasibilityReason::MultipleEmptyLinks
            } else {
                FeasibilityReason::LinksIsomorphicSameEdges
            },
        }
    }
}

/// Feasibility characterization: a link-irregular labeling exists iff for
/// every pair of distinct vertices the unlabeled links are non-isomorphic or
/// their edge sets (as base-graph vertex pairs) differ.
pub fn admits_labeling(g: &Graph) -> FeasibilityReport {
    let n = g.order();
    let links: Vec<LinkView> = (0..n).map(|v| link(g, v).expect("v < order")).collect();
    let certs: Vec<_> = links
        .iter()
        .map(|lv| canonical_form_graph(lv.induced.graph()))
        .collect();
    let edge_sets: Vec<Vec<(Vertex, Vertex)>> =
        links.iter().map(|lv| lv.original_edges()).collect();
    for x in 0..n {
        for y in x + 1..n {
            if certs[x] == certs[y] && edge_sets[x] == edge_sets[y] {
                let both_empty = edge_sets[x].is_empty();
                return FeasibilityReport::violated(x, y, both_empty);
            }
        }
    }
    FeasibilityReport::ok()
}

/// Literal evaluation of the corollary form of the criterion: each pair needs
/// (a) non-isomorphic links, or (b) distinct active neighborhoods together
/// with the global condition that for each n at most one vertex has an
/// edgeless link on n vertices.
pub fn corollary_conditions(g: &Graph) -> FeasibilityReport {
    let n = g.order();
    let links: Vec<LinkView> = (0..n).map(|v| link(g, v).expect("v < order")).collect();
    let certs: Vec<_> = links
        .iter()
        .map(|lv| canonical_form_graph(lv.induced.graph()))
        .collect();
    let actives: Vec<Vec<Vertex>> = (0..n)
        .map(|v| active_neighborhood(g, v).expect("v < order"))
        .collect();

    // global condition: at most one edgeless link per link order
    let mut empty_per_order: BTreeMap<usize, usize> = BTreeMap::new();
    for lv in &links {
        if lv.induced.graph().size() == 0 {
            *empty_per_order.entry(lv.members.len()).or_insert(0) += 1;
        }
    }
    let empty_ok = empty_per_order.values().all(|&c| c <= 1);

    for x in 0..n {
        for y in x + 1..n {
            let a = certs[x] != certs[y];
            let b = actives[x] != actives[y] && empty_ok;
            if !(a || b) {
                let both_empty =
                    links[x].induced.graph().size() == 0 && links[y].induced.graph().size() == 0;
                return FeasibilityReport::violated(x, y, both_empty);
            }
        }
    }
    FeasibilityReport::ok()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecessaryReport {
    /// Whether all pairs of distinct vertices have distinct neighborhoods.
    pub distinct_neighborhoods: bool,
    /// Count of vertices with an edgeless link, grouped by degree.
    pub empty_link_counts: BTreeMap<usize, usize>,
}

impl NecessaryReport {
    /// The necessary conditions hold: distinct neighborhoods and at most one
    /// edgeless link per degree.
    pub fn satisfied(&self) -> bool {
        self.distinct_neighborhoods && self.empty_link_counts.values().all(|&c| c <= 1)
    }
}

pub fn necessary_report(g: &Graph) -> NecessaryReport {
    let n = g.order();
    let mut distinct = true;
    'outer: for x in 0..n {
        for y in x + 1..n {
            if g.neighbors(x) == g.neighbors(y) {
                distinct = false;
                break 'outer;
            }
        }
    }
    let mut empty_link_counts = BTreeMap::new();
    for v in 0..n {
        let lv = link(g, v).expect("v < order");
        if lv.induced.graph().size() == 0 {
            *empty_link_counts.entry(g.degree(v)).or_insert(0) += 1;
        }
    }
    NecessaryReport {
        distinct_neighborhoods: distinct,
        empty_link_counts,
    }
}

/// Convenience used by several constructions: true when the unlabeled links
/// are already pairwise non-isomorphic. Graphs with fewer than two vertices
/// are excluded by convention — the property is about telling vertices apart.
pub fn is_link_irregular_graph(g: &Graph) -> bool {
    let n = g.order();
    if n < 2 {
        return false;
    }
    let certs: Vec<_> = (0..n)
        .map(|v| canonical_form_graph(link(g, v).expect("v < order").induced.graph()))
        .collect();
    for x in 0..n {
        for y in x + 1..n {
            if certs[x] == certs[y] {
                return false;
            }
        }
    }
    true
}

/// Two graphs are link-isomorphic at (x, y) helper for diagnostics.
pub fn links_isomorphic(g: &Graph, x: Vertex, y: Vertex) -> Result<bool, LinkError> {
    let lx = link(g, x)?;
    let ly = link(g, y)?;
    Ok(are_isomorphic_graphs(
        lx.induced.graph(),
        ly.induced.graph(),
    ))
}

/// Builds a labeled graph from a label function; exposed for tests that
/// rename labels by a bijection.
pub fn relabel_by<F: Fn(crate::graph::Label) -> crate::graph::Label>(
    l: &LabeledGraph,
    sigma: F,
) -> Result<LabeledGraph, GraphError> {
    l.relabel(sigma)
}
