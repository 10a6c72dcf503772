//! Core value types: simple undirected graphs on `0..order`, labeled graphs,
//! and the standard family constructors.

use std::collections::BTreeSet;

use thiserror::Error;

pub type Vertex = usize;

/// Edge labels are positive integers. A label encodes the multiplicity of the
/// underlying multigraph edge, so exact equality matters: a doubled edge is
/// not a tripled one.
pub type Label = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: String,
    },
    #[error("edge ({0}, {1}) is a loop")]
    Loop(Vertex, Vertex),
    #[error("edge ({0}, {1}) has an endpoint out of range for order {2}")]
    EndpointOutOfRange(Vertex, Vertex, usize),
    #[error("label {0} is not positive")]
    NonPositiveLabel(Label),
    #[error("label vector length {0} does not match edge count {1}")]
    LabelCountMismatch(usize, usize),
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(Vertex, usize),
}

/// A simple undirected graph on the contiguous vertex set `0..order`.
///
/// Edges are kept as a sorted, deduplicated list of pairs `(u, v)` with
/// `u < v`. Values are immutable after construction and cheap to clone.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    neighbors: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn new(
        order: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Graph, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u, v));
            }
            if u >= order || v >= order {
                return Err(GraphError::EndpointOutOfRange(u, v, order));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut neighbors = vec![Vec::new(); order];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        Ok(Graph {
            order,
            edges,
            neighbors,
        })
    }

    pub fn empty(order: usize) -> Graph {
        Graph {
            order,
            edges: Vec::new(),
            neighbors: vec![Vec::new(); order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors
            .get(u)
            .is_some_and(|nb| nb.binary_search(&v).is_ok())
    }

    /// Index of `(u, v)` in the sorted edge list.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// permutation of `0..order`.
    pub fn permute(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order);
        Graph::new(
            self.order,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .expect("permuting a valid graph")
    }

    /// Induced subgraph on `verts` (ascending vertex ids), renumbered to
    /// `0..verts.len()` in that order.
    pub fn induced(&self, verts: &[Vertex]) -> Graph {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                Some((pos[u], pos[v]))
            } else {
                None
            }
        });
        Graph::new(verts.len(), edges).expect("induced subgraph of a valid graph")
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.neighbors[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.order
    }

    /// 2-coloring check; bipartite graphs never admit a link-irregular
    /// labeling.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.order];
        for start in 0..self.order {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &u in &self.neighbors[v] {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A graph together with a total assignment of positive integer labels to its
/// edges. `labels[i]` belongs to `graph.edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    graph: Graph,
    labels: Vec<Label>,
}

impl LabeledGraph {
    pub fn new(graph: Graph, labels: Vec<Label>) -> Result<LabeledGraph, GraphError> {
        if labels.len() != graph.size() {
            return Err(GraphError::LabelCountMismatch(labels.len(), graph.size()));
        }
        if let Some(&bad) = labels.iter().find(|&&l| l == 0) {
            return Err(GraphError::NonPositiveLabel(bad));
        }
        Ok(LabeledGraph { graph, labels })
    }

    /// Every edge gets the same label.
    pub fn uniform(graph: Graph, label: Label) -> LabeledGraph {
        assert!(label >= 1);
        let labels = vec![label; graph.size()];
        LabeledGraph { graph, labels }
    }

    /// Edge `i` gets label `i + 1`; this is the labeling used in the
    /// sufficiency direction of the feasibility characterization.
    pub fn distinct(graph: Graph) -> LabeledGraph {
        let labels = (1..=graph.size() as Label).collect();
        LabeledGraph { graph, labels }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label_of(&self, u: Vertex, v: Vertex) -> Option<Label> {
        self.graph.edge_index(u, v).map(|i| self.labels[i])
    }

    pub fn distinct_labels(&self) -> Vec<Label> {
        let mut ls: Vec<Label> = self.labels.clone();
        ls.sort_unstable();
        ls.dedup();
        ls
    }

    pub fn distinct_label_count(&self) -> usize {
        self.distinct_labels().len()
    }

    /// Applies a label map `sigma` to every edge label.
    pub fn relabel(&self, sigma: impl Fn(Label) -> Label) -> Result<LabeledGraph, GraphError> {
        LabeledGraph::new(
            self.graph.clone(),
            self.labels.iter().map(|&l| sigma(l)).collect(),
        )
    }

    /// Relabels vertices; edge labels follow their edges.
    pub fn permute(&self, perm: &[Vertex]) -> LabeledGraph {
        let graph = self.graph.permute(perm);
        let mut labels = vec![0; graph.size()];
        for (i, &(u, v)) in self.graph.edges().iter().enumerate() {
            let idx = graph
                .edge_index(perm[u], perm[v])
                .expect("edge survives permutation");
            labels[idx] = self.labels[i];
        }
        LabeledGraph { graph, labels }
    }
}

/// Named graph families with their integer parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// `Wheel(n)`: hub vertex 0 joined to the rim cycle `1..=n`.
    Wheel(usize),
    Hypercube(usize),
    CompleteMultipartite(Vec<usize>),
    Empty(usize),
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    match spec {
        FamilySpec::Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            Graph::new(*n, edges)
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(GraphError::InvalidParameter {
                    family: "cycle",
                    reason: format!("n = {n}, need n >= 3"),
                });
            }
            Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n)))
        }
        FamilySpec::Path(n) => {
            if *n == 0 {
                return Err(GraphError::InvalidParameter {
                    family: "path",
                    reason: "n = 0, need n >= 1".into(),
                });
            }
            Graph::new(*n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
        }
        FamilySpec::Wheel(n) => {
            if *n < 3 {
                return Err(GraphError::InvalidParameter {
                    family: "wheel",
                    reason: format!("n = {n}, need n >= 3"),
                });
            }
            let mut edges: Vec<(usize, usize)> = (1..=*n).map(|i| (0, i)).collect();
            edges.extend((1..=*n).map(|i| (i, if i == *n { 1 } else { i + 1 })));
            Graph::new(n + 1, edges)
        }
        FamilySpec::Hypercube(d) => {
            let n = 1usize << d;
            let mut edges = Vec::new();
            for v in 0..n {
                for b in 0..*d {
                    let u = v ^ (1 << b);
                    if v < u {
                        edges.push((v, u));
                    }
                }
            }
            Graph::new(n, edges)
        }
        FamilySpec::CompleteMultipartite(parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(GraphError::InvalidParameter {
                    family: "complete_multipartite",
                    reason: "part sizes must be a non-empty list of positive integers".into(),
                });
            }
            let n: usize = parts.iter().sum();
            let mut part_of = Vec::with_capacity(n);
            for (i, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(i, p));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges)
        }
        FamilySpec::Empty(n) => Ok(Graph::empty(*n)),
    }
}

/// Join `g ∨ h`: both graphs plus all cross edges; `h`'s vertices are shifted
/// by `|g|`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let order = shift + h.order();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    for u in 0..shift {
        for v in 0..h.order() {
            edges.push((u, v + shift));
        }
    }
    Graph::new(order, edges).expect("join of valid graphs")
}

/// Disjoint union `g + h` with `h`'s vertices shifted by `|g|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let order = shift + h.order();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::new(order, edges).expect("disjoint union of valid graphs")
}

pub fn complete(n: usize) -> Graph {
    build_family(&FamilySpec::Complete(n)).expect("complete graph")
}

pub fn cycle(n: usize) -> Graph {
    build_family(&FamilySpec::Cycle(n)).expect("cycle, n >= 3")
}

pub fn wheel(n: usize) -> Graph {
    build_family(&FamilySpec::Wheel(n)).expect("wheel, n >= 3")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_edge_counts_match_closed_forms() {
        assert_eq!(complete(4).size(), 6);
        assert_eq!(cycle(7).size(), 7);
        let w = wheel(15);
        assert_eq!(w.order(), 16);
        assert_eq!(w.size(), 30);
        let q3 = build_family(&FamilySpec::Hypercube(3)).unwrap();
        assert_eq!(q3.order(), 8);
        assert_eq!(q3.size(), 12);
        assert!((0..8).all(|v| q3.degree(v) == 3));
        let kmp = build_family(&FamilySpec::CompleteMultipartite(vec![2, 3, 1])).unwrap();
        assert_eq!(kmp.size(), 2 * 3 + 2 + 3);
    }

    #[test]
    fn invalid_family_parameters() {
        assert!(build_family(&FamilySpec::Wheel(2)).is_err());
        assert!(build_family(&FamilySpec::Cycle(2)).is_err());
        assert!(build_family(&FamilySpec::CompleteMultipartite(vec![])).is_err());
    }

    #[test]
    fn wheel_convention_hub_is_zero() {
        let w = wheel(5);
        assert_eq!(w.degree(0), 5);
        assert!(w.has_edge(1, 2) && w.has_edge(5, 1));
        assert!(!w.has_edge(1, 3));
    }

    #[test]
    fn join_and_union_edge_counts() {
        let k3 = complete(3);
        assert_eq!(join(&k3, &k3), complete(6));
        let two_k3 = disjoint_union(&k3, &k3);
        assert_eq!(two_k3.order(), 6);
        assert_eq!(two_k3.size(), 6);
        let g = wheel(5);
        let h = cycle(4);
        assert_eq!(
            join(&g, &h).size(),
            disjoint_union(&g, &h).size() + g.order() * h.order()
        );
        // union with the empty graph is the identity
        assert_eq!(disjoint_union(&g, &Graph::empty(0)), g);
    }

    #[test]
    fn join_of_empties_is_complete_bipartite() {
        let c4 = join(&Graph::empty(2), &Graph::empty(2));
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.size(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn graph_rejects_loops_and_bad_endpoints() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1, 1)));
        assert!(Graph::new(3, [(0, 3)]).is_err());
        // duplicates collapse
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn labeled_graph_validation() {
        let k3 = complete(3);
        assert!(LabeledGraph::new(k3.clone(), vec![1, 2]).is_err());
        assert!(LabeledGraph::new(k3.clone(), vec![1, 0, 2]).is_err());
        let l = LabeledGraph::new(k3, vec![1, 2, 3]).unwrap();
        assert_eq!(l.label_of(0, 1), Some(1));
        assert_eq!(l.label_of(2, 0), Some(2));
        assert_eq!(l.distinct_label_count(), 3);
    }

    #[test]
    fn permute_carries_labels() {
        let l = LabeledGraph::new(complete(3), vec![1, 2, 3]).unwrap();
        let p = l.permute(&[2, 0, 1]);
        assert_eq!(p.label_of(2, 0), l.label_of(0, 1));
        assert_eq!(p.label_of(0, 1), l.label_of(1, 2));
    }
}
