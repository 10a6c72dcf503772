//! Label-preserving isomorphism: canonical certificates, automorphism groups,
//! and a concurrent certificate cache.
//!
//! The certificate is the lexicographically least byte encoding of the
//! labeled adjacency matrix over all vertex orderings reachable by iterated
//! color refinement and individualization. Two labeled graphs get equal
//! certificates exactly when some vertex bijection maps edges to edges with
//! identical integer labels.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::graph::{Graph, Label, LabeledGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCert {
    pub bytes: Vec<u8>,
    pub order: usize,
    pub label_multiset: Vec<Label>,
}

/// Dense label matrix; 0 encodes a non-edge.
struct Mat {
    n: usize,
    m: Vec<Label>,
    adj: Vec<Vec<(Vertex, Label)>>,
}

impl Mat {
    fn from_parts(n: usize, edges: &[(Vertex, Vertex)], labels: &[Label]) -> Mat {
        let mut m = vec![0; n * n];
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            let l = labels[i];
            m[u * n + v] = l;
            m[v * n + u] = l;
            adj[u].push((v, l));
            adj[v].push((u, l));
        }
        Mat { n, m, adj }
    }

    fn from_labeled(lg: &LabeledGraph) -> Mat {
        Mat::from_parts(lg.graph().order(), lg.graph().edges(), lg.labels())
    }

    fn from_graph(g: &Graph) -> Mat {
        let ones = vec![1; g.size()];
        Mat::from_parts(g.order(), g.edges(), &ones)
    }

    #[inline]
    fn label(&self, u: Vertex, v: Vertex) -> Label {
        self.m[u * self.n + v]
    }

    /// Raw input encoding, used as the cache key.
    fn input_encoding(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 + 4 * self.n * (self.n.saturating_sub(1)) / 2);
        out.extend_from_slice(&(self.n as u32).to_be_bytes());
        for u in 0..self.n {
            for v in u + 1..self.n {
                out.extend_from_slice(&self.label(u, v).to_be_bytes());
            }
        }
        out
    }

    /// Encoding under the ordering where vertex `v` sits at position
    /// `pos[v]`.
    fn encoding(&self, pos: &[usize]) -> Vec<u8> {
        let mut vert = vec![0; self.n];
        for (v, &p) in pos.iter().enumerate() {
            vert[p] = v;
        }
        let mut out = Vec::with_capacity(4 + 4 * self.n * (self.n.saturating_sub(1)) / 2);
        out.extend_from_slice(&(self.n as u32).to_be_bytes());
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.extend_from_slice(&self.label(vert[i], vert[j]).to_be_bytes());
            }
        }
        out
    }
}

/// Iterated color refinement on (current color, multiset of incident
/// (edge label, neighbor color)). Colors come out as ranks `0..k`.
fn refine(mat: &Mat, colors: &mut Vec<u32>) {
    let n = mat.n;
    if n == 0 {
        return;
    }
    loop {
        let mut sigs: Vec<(u32, Vec<(Label, u32)>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<(Label, u32)> =
                mat.adj[v].iter().map(|&(u, l)| (l, colors[u])).collect();
            nb.sort_unstable();
            sigs.push((colors[v], nb));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut new_colors = vec![0u32; n];
        let mut rank = 0u32;
        new_colors[order[0]] = 0;
        for w in 1..n {
            if sigs[order[w]] != sigs[order[w - 1]] {
                rank += 1;
            }
            new_colors[order[w]] = rank;
        }
        if new_colors == *colors {
            return;
        }
        let old_classes = colors.iter().max().map_or(0, |&c| c + 1);
        let new_classes = rank + 1;
        *colors = new_colors;
        if new_classes == old_classes {
            // stable partition under refinement
            return;
        }
    }
}

fn is_discrete(colors: &[u32]) -> bool {
    let n = colors.len();
    colors.iter().max().is_none_or(|&c| c as usize == n - 1)
}

fn canonical_search(mat: &Mat, colors: &[u32], best: &mut Option<Vec<u8>>) {
    if is_discrete(colors) {
        let pos: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let enc = mat.encoding(&pos);
        match best {
            Some(b) if *b <= enc => {}
            _ => *best = Some(enc),
        }
        return;
    }
    // branch on the smallest non-singleton color class
    let n = mat.n;
    let mut count = vec![0usize; n];
    for &c in colors {
        count[c as usize] += 1;
    }
    let target = (0..n)
        .find(|&c| count[c] >= 2)
        .expect("non-discrete partition");
    for v in 0..n {
        if colors[v] as usize != target {
            continue;
        }
        // individualize v: push it just above its cellmates, then re-refine
        let mut child: Vec<u32> = colors.iter().map(|&c| c * 2).collect();
        child[v] += 1;
        refine(mat, &mut child);
        canonical_search(mat, &child, best);
    }
}

fn canonical_of_mat(mat: &Mat) -> Vec<u8> {
    let mut colors = vec![0u32; mat.n];
    refine(mat, &mut colors);
    let mut best = None;
    canonical_search(mat, &colors, &mut best);
    best.unwrap_or_else(|| mat.encoding(&[]))
}

fn cert_from_mat(mat: &Mat, label_multiset: Vec<Label>) -> CanonicalCert {
    CanonicalCert {
        bytes: canonical_of_mat(mat),
        order: mat.n,
        label_multiset,
    }
}

pub fn canonical_form(lg: &LabeledGraph) -> CanonicalCert {
    let mut ls = lg.labels().to_vec();
    ls.sort_unstable();
    cert_from_mat(&Mat::from_labeled(lg), ls)
}

/// Canonical certificate of an unlabeled graph (all edges treated as
/// label 1).
pub fn canonical_form_graph(g: &Graph) -> CanonicalCert {
    cert_from_mat(&Mat::from_graph(g), vec![1; g.size()])
}

pub fn are_isomorphic(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    if a.graph().order() != b.graph().order() || a.graph().size() != b.graph().size() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.graph().order())
        .map(|v| a.graph().degree(v))
        .collect();
    let mut db: Vec<usize> = (0..b.graph().order())
        .map(|v| b.graph().degree(v))
        .collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut la = a.labels().to_vec();
    let mut lb = b.labels().to_vec();
    la.sort_unstable();
    lb.sort_unstable();
    if la != lb {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

pub fn are_isomorphic_graphs(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    canonical_form_graph(a) == canonical_form_graph(b)
}

#[derive(Debug, Clone)]
pub struct AutomorphismSet {
    /// Vertex permutations (`perm[v]` is the image of `v`). The full group
    /// is enumerated, so `generators.len() == group_order`.
    pub generators: Vec<Vec<Vertex>>,
    pub group_order: u64,
}

/// Enumerates the full automorphism group of the unlabeled graph by
/// backtracking over the color-refined partition.
pub fn automorphisms(g: &Graph) -> AutomorphismSet {
    let n = g.order();
    let mat = Mat::from_graph(g);
    let mut colors = vec![0u32; n];
    refine(&mat, &mut colors);

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found: Vec<Vec<Vertex>> = Vec::new();

    fn rec(
        g: &Graph,
        colors: &[u32],
        v: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Vec<Vertex>>,
    ) {
        let n = g.order();
        if v == n {
            found.push(image.clone());
            return;
        }
        for w in 0..n {
            if used[w] || colors[w] != colors[v] || g.degree(w) != g.degree(v) {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(v, u) == g.has_edge(w, image[u]));
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            rec(g, colors, v + 1, image, used, found);
            used[w] = false;
            image[v] = usize::MAX;
        }
    }
    rec(g, &colors, 0, &mut image, &mut used, &mut found);
    let group_order = found.len() as u64;
    AutomorphismSet {
        generators: found,
        group_order,
    }
}

const FNV_OFFSET: u64 = 0xcbf29ce484222325;
const FNV_PRIME: u64 = 0x100000001b3;

fn fingerprint(bytes: &[u8]) -> u64 {
    let mut h = FNV_OFFSET;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// Certificate cache keyed by a 64-bit fingerprint of the input encoding,
/// with full-key verification inside each bucket. Entries are idempotent, so
/// concurrent last-writer-wins insertion is harmless.
type CertBucket = Vec<(Box<[u8]>, Arc<CanonicalCert>)>;

#[derive(Default)]
pub struct CertCache {
    buckets: Mutex<HashMap<u64, CertBucket>>,
}

impl CertCache {
    pub fn new() -> CertCache {
        CertCache::default()
    }

    pub fn len(&self) -> usize {
        self.buckets.lock().unwrap().values().map(|b| b.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Certificate of the labeled graph given as a dense matrix. Used by the
    /// solver, which rebuilds millions of link certificates.
    pub fn cert_of_parts(
        &self,
        n: usize,
        edges: &[(Vertex, Vertex)],
        labels: &[Label],
    ) -> Arc<CanonicalCert> {
        let mat = Mat::from_parts(n, edges, labels);
        let key = mat.input_encoding();
        let fp = fingerprint(&key);
        {
            let buckets = self.buckets.lock().unwrap();
            if let Some(bucket) = buckets.get(&fp) {
                for (k, cert) in bucket {
                    if **k == key[..] {
                        return Arc::clone(cert);
                    }
                }
            }
        }
        let mut ls = labels.to_vec();
        ls.sort_unstable();
        let cert = Arc::new(cert_from_mat(&mat, ls));
        let mut buckets = self.buckets.lock().unwrap();
        buckets
            .entry(fp)
            .or_default()
            .push((key.into_boxed_slice(), Arc::clone(&cert)));
        cert
    }

    pub fn cert_of(&self, lg: &LabeledGraph) -> Arc<CanonicalCert> {
        self.cert_of_parts(lg.graph().order(), lg.graph().edges(), lg.labels())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, Graph, LabeledGraph};

    fn labeled(n: usize, edges: &[(usize, usize, Label)]) -> LabeledGraph {
        let g = Graph::new(n, edges.iter().map(|&(u, v, _)| (u, v))).unwrap();
        let mut labels = vec![0; g.size()];
        for &(u, v, l) in edges {
            labels[g.edge_index(u, v).unwrap()] = l;
        }
        LabeledGraph::new(g, labels).unwrap()
    }

    #[test]
    fn cert_is_permutation_invariant() {
        let l = labeled(3, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)]);
        let p = l.permute(&[2, 0, 1]);
        assert_eq!(canonical_form(&l), canonical_form(&p));
        assert!(are_isomorphic(&l, &p));
    }

    #[test]
    fn path_label_reflection() {
        let a = labeled(3, &[(0, 1, 1), (1, 2, 2)]);
        let b = labeled(3, &[(0, 1, 2), (1, 2, 1)]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        let c = labeled(3, &[(0, 1, 1), (1, 2, 1)]);
        assert_ne!(canonical_form(&a), canonical_form(&c));
    }

    #[test]
    fn exact_label_equality_matters() {
        let a = labeled(2, &[(0, 1, 5)]);
        let b = labeled(2, &[(0, 1, 7)]);
        assert!(!are_isomorphic(&a, &b));
        assert!(are_isomorphic(&a, &a));
    }

    #[test]
    fn edgeless_graphs_distinguished_by_order() {
        let a = LabeledGraph::uniform(Graph::empty(2), 1);
        let b = LabeledGraph::uniform(Graph::empty(3), 1);
        assert_ne!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn automorphism_group_orders() {
        assert_eq!(automorphisms(&cycle(4)).group_order, 8);
        assert_eq!(automorphisms(&complete(4)).group_order, 24);
        assert_eq!(automorphisms(&crate::graph::wheel(5)).group_order, 10);
        // every enumerated map preserves edges
        let g = crate::graph::wheel(5);
        for p in &automorphisms(&g).generators {
            assert_eq!(g.permute(p), g);
        }
    }

    #[test]
    fn cert_cache_hits_are_identical() {
        let cache = CertCache::new();
        let l = labeled(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)]);
        let a = cache.cert_of(&l);
        let b = cache.cert_of(&l);
        assert_eq!(a, b);
        assert_eq!(cache.len(), 1);
        assert_eq!(*a, canonical_form(&l));
    }
}
