//! Exact decision and optimization for link-irregular labelings: labeling
//! validation, the symmetry-reduced partition search, the plain brute-force
//! oracle, and exhaustive censuses of small graphs.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::graph::{Graph, Label, LabeledGraph, Vertex};
use crate::iso::{automorphisms, canonical_form, canonical_form_graph, CertCache};
use crate::links::{admits_labeling, labeled_link};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),
    #[error("node budget of {0} exhausted")]
    BudgetExhausted(u64),
    #[error("order {0} too large for exhaustive enumeration (max {1})")]
    OrderTooLarge(usize, usize),
    #[error("no labeling with at most {r_max} labels, but the graph is feasible")]
    Inconclusive { r_max: usize },
}

/// Finite value or infinity; the labeling number is infinite exactly when no
/// link-irregular labeling exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eta {
    Finite(usize),
    Infinite,
}

impl Eta {
    pub fn finite(self) -> Option<usize> {
        match self {
            Eta::Finite(v) => Some(v),
            Eta::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Eta::Finite(_))
    }
}

impl fmt::Display for Eta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eta::Finite(v) => write!(f, "{v}"),
            Eta::Infinite => write!(f, "infinity"),
        }
    }
}

impl PartialOrd for Eta {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Eta {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Eta::Finite(a), Eta::Finite(b)) => a.cmp(b),
            (Eta::Finite(_), Eta::Infinite) => std::cmp::Ordering::Less,
            (Eta::Infinite, Eta::Finite(_)) => std::cmp::Ordering::Greater,
            (Eta::Infinite, Eta::Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaEvidence {
    /// The feasibility characterization rules out every labeling.
    InfeasibleByTheorem1,
    /// Exhaustive search found nothing with one label fewer.
    ExhaustedRMinus1,
    /// Edgeless graph of order at most one.
    TrivialEmptyGraph,
}

#[derive(Debug, Clone)]
pub struct EtaResult {
    pub value: Eta,
    /// Present iff the value is finite and positive; uses exactly `value`
    /// distinct labels and passes `check_labeling`.
    pub witness: Option<LabeledGraph>,
    pub evidence: EtaEvidence,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub node_budget: Option<u64>,
    /// Spoke-only solving for wheels with rim length >= 5.
    pub wheel_fast_path: bool,
    /// Prune partition codes that are not lexicographically least in their
    /// orbit under the automorphism group.
    pub automorphism_pruning: bool,
    pub verbose: bool,
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig {
            node_budget: None,
            wheel_fast_path: true,
            automorphism_pruning: true,
            verbose: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
}

/// Restricted-growth string over the graph's sorted edge list: entry `i` is
/// the label block of edge `i`, blocks introduced in first-use order. Two
/// labelings equal up to a label bijection share one code.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgePartitionCode(pub Vec<u32>);

impl EdgePartitionCode {
    pub fn is_valid(&self) -> bool {
        let mut max_seen: i64 = -1;
        for &b in &self.0 {
            if b as i64 > max_seen + 1 {
                return false;
            }
            max_seen = max_seen.max(b as i64);
        }
        true
    }

    /// Normalizes an arbitrary label vector to its code.
    pub fn from_labels(labels: &[Label]) -> EdgePartitionCode {
        let mut map: HashMap<Label, u32> = HashMap::new();
        let mut code = Vec::with_capacity(labels.len());
        for &l in labels {
            let next = map.len() as u32;
            code.push(*map.entry(l).or_insert(next));
        }
        EdgePartitionCode(code)
    }

    /// Decodes as labels `1..=blocks` in block order.
    pub fn to_labeling(&self, g: &Graph) -> LabeledGraph {
        assert_eq!(self.0.len(), g.size());
        LabeledGraph::new(g.clone(), self.0.iter().map(|&b| b + 1).collect())
            .expect("code entries decode to positive labels")
    }

    pub fn block_count(&self) -> usize {
        self.0.iter().max().map_or(0, |&b| b as usize + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingCheck {
    pub irregular: bool,
    /// Lexicographically least pair with isomorphic labeled links.
    pub violating_pair: Option<(Vertex, Vertex)>,
}

/// A labeling is link-irregular iff all labeled-link certificates are
/// pairwise distinct.
pub fn check_labeling(l: &LabeledGraph) -> LabelingCheck {
    let n = l.graph().order();
    let certs: Vec<_> = (0..n)
        .map(|v| canonical_form(&labeled_link(l, v).expect("v < order").induced))
        .collect();
    for x in 0..n {
        for y in x + 1..n {
            if certs[x] == certs[y] {
                return LabelingCheck {
                    irregular: false,
                    violating_pair: Some((x, y)),
                };
            }
        }
    }
    LabelingCheck {
        irregular: true,
        violating_pair: None,
    }
}

/// State for the lex-ordered search over edge partition codes.
struct PartitionSearch<'a> {
    g: &'a Graph,
    r: usize,
    m: usize,
    cache: CertCache,
    /// Per vertex: link members, link edges in local ids, matching global
    /// edge indices.
    link_edges_local: Vec<Vec<(usize, usize)>>,
    link_edges_global: Vec<Vec<usize>>,
    /// Edge index -> vertices whose link contains that edge.
    owners: Vec<Vec<Vertex>>,
    remaining: Vec<usize>,
    code: Vec<u32>,
    labels: Vec<Label>,
    /// Certificate bytes of fully determined links -> owning vertex.
    completed: HashMap<Vec<u8>, Vertex>,
    /// Inverse edge permutations induced by graph automorphisms (identity
    /// excluded); empty when pruning is disabled.
    edge_perm_inv: Vec<Vec<usize>>,
    /// Lazily computed, per prefix length: which permutations stabilize the
    /// prefix positions setwise.
    stabilizers: Vec<Option<Vec<usize>>>,
    stats: SearchStats,
    budget: Option<u64>,
}

const AUT_PRUNE_LIMIT: u64 = 50_000;

impl<'a> PartitionSearch<'a> {
    fn new(g: &'a Graph, r: usize, cfg: &SearchConfig) -> PartitionSearch<'a> {
        let n = g.order();
        let m = g.size();
        let mut link_edges_local = vec![Vec::new(); n];
        let mut link_edges_global = vec![Vec::new(); n];
        let mut owners = vec![Vec::new(); m];
        for v in 0..n {
            let members = g.neighbors(v);
            for (i, &a) in members.iter().enumerate() {
                for (j, &b) in members.iter().enumerate().skip(i + 1) {
                    if let Some(e) = g.edge_index(a, b) {
                        link_edges_local[v].push((i, j));
                        link_edges_global[v].push(e);
                        owners[e].push(v);
                    }
                }
            }
        }
        let remaining = (0..n).map(|v| link_edges_global[v].len()).collect();

        let mut edge_perm_inv = Vec::new();
        if cfg.automorphism_pruning && m > 0 {
            let aut = automorphisms(g);
            if aut.group_order <= AUT_PRUNE_LIMIT {
                for p in &aut.generators {
                    if p.iter().enumerate().all(|(v, &w)| v == w) {
                        continue;
                    }
                    let mut fwd = vec![0usize; m];
                    for (e, &(u, v)) in g.edges().iter().enumerate() {
                        fwd[e] = g
                            .edge_index(p[u], p[v])
                            .expect("automorphism preserves edges");
                    }
                    let mut inv = vec![0usize; m];
                    for (e, &img) in fwd.iter().enumerate() {
                        inv[img] = e;
                    }
                    edge_perm_inv.push(inv);
                }
            }
        }
        PartitionSearch {
            g,
            r,
            m,
            cache: CertCache::new(),
            link_edges_local,
            link_edges_global,
            owners,
            remaining,
            code: Vec::with_capacity(m),
            labels: vec![0; m],
            completed: HashMap::new(),
            edge_perm_inv,
            stabilizers: vec![None; m + 1],
            stats: SearchStats::default(),
            budget: cfg.node_budget,
        }
    }

    fn link_cert_bytes(&self, v: Vertex) -> Vec<u8> {
        let deg = self.g.degree(v);
        let labels: Vec<Label> = self.link_edges_global[v]
            .iter()
            .map(|&e| self.labels[e])
            .collect();
        self.cache
            .cert_of_parts(deg, &self.link_edges_local[v], &labels)
            .bytes
            .clone()
    }

    /// Registers links completed by assigning edge `e`. Returns inserted
    /// certificate keys, or `None` when a duplicate link appears.
    fn complete_links(&mut self, e: usize) -> Option<Vec<(Vec<u8>, Vertex)>> {
        let owners = self.owners[e].clone();
        for &v in &owners {
            self.remaining[v] -= 1;
        }
        let mut inserted = Vec::new();
        for &v in &owners {
            if self.remaining[v] == 0 {
                let key = self.link_cert_bytes(v);
                if self.completed.contains_key(&key) {
                    for (k, _) in &inserted {
                        self.completed.remove(k);
                    }
                    for &u in &owners {
                        self.remaining[u] += 1;
                    }
                    return None;
                }
                self.completed.insert(key.clone(), v);
                inserted.push((key, v));
            }
        }
        Some(inserted)
    }

    fn undo_links(&mut self, e: usize, inserted: Vec<(Vec<u8>, Vertex)>) {
        for (k, _) in inserted {
            self.completed.remove(&k);
        }
        let owners = self.owners[e].clone();
        for &v in &owners {
            self.remaining[v] += 1;
        }
    }

    fn stabilizer(&mut self, d: usize) -> &[usize] {
        if self.stabilizers[d].is_none() {
            let list: Vec<usize> = self
                .edge_perm_inv
                .iter()
                .enumerate()
                .filter(|(_, inv)| inv[..d].iter().all(|&src| src < d))
                .map(|(i, _)| i)
                .collect();
            self.stabilizers[d] = Some(list);
        }
        self.stabilizers[d].as_ref().unwrap()
    }

    /// True when some automorphism maps the current prefix to a strictly
    /// lex-smaller normalized code; such branches never contain the minimal
    /// representative of any orbit.
    fn aut_prunable(&mut self, d: usize) -> bool {
        if self.edge_perm_inv.is_empty() {
            return false;
        }
        let stab: Vec<usize> = self.stabilizer(d).to_vec();
        'perm: for pi in stab {
            let inv = &self.edge_perm_inv[pi];
            // normalize code[inv[0..d]] on the fly and compare
            let mut rename: Vec<u32> = vec![u32::MAX; self.r];
            let mut next = 0u32;
            for (j, &ij) in inv.iter().enumerate().take(d) {
                let raw = self.code[ij];
                let mapped = if rename[raw as usize] == u32::MAX {
                    rename[raw as usize] = next;
                    next += 1;
                    rename[raw as usize]
                } else {
                    rename[raw as usize]
                };
                match mapped.cmp(&self.code[j]) {
                    std::cmp::Ordering::Less => {
                        self.stats.prunes += 1;
                        return true;
                    }
                    std::cmp::Ordering::Greater => continue 'perm,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        false
    }

    fn dfs(&mut self, i: usize, max_used: i64) -> Result<Option<Vec<u32>>, SolverError> {
        if i == self.m {
            return Ok(Some(self.code.clone()));
        }
        self.stats.nodes += 1;
        if let Some(b) = self.budget {
            if self.stats.nodes > b {
                return Err(SolverError::BudgetExhausted(b));
            }
        }
        let top = ((max_used + 1).min(self.r as i64 - 1)) as u32;
        for block in 0..=top {
            self.code.push(block);
            self.labels[i] = block + 1;
            if self.aut_prunable(i + 1) {
                self.code.pop();
                continue;
            }
            if let Some(inserted) = self.complete_links(i) {
                let found = self.dfs(i + 1, max_used.max(block as i64))?;
                self.undo_links(i, inserted);
                if found.is_some() {
                    self.code.pop();
                    return Ok(found);
                }
            }
            self.code.pop();
        }
        Ok(None)
    }

    fn run(&mut self) -> Result<Option<Vec<u32>>, SolverError> {
        // vertices with edgeless links are determined before any assignment
        for v in 0..self.g.order() {
            if self.remaining[v] == 0 {
                let key = self.link_cert_bytes(v);
                if self.completed.contains_key(&key) {
                    return Ok(None);
                }
                self.completed.insert(key, v);
            }
        }
        if self.r == 0 {
            return Ok(if self.m == 0 { Some(Vec::new()) } else { None });
        }
        self.dfs(0, -1)
    }
}

/// Searches for a link-irregular labeling of `g` using at most `r` distinct
/// labels. The witness is the lexicographically least accepting partition
/// code, decoded as labels `1..=r` in block order.
pub fn exists_labeling_with_config(
    g: &Graph,
    r: usize,
    cfg: &SearchConfig,
) -> Result<Option<LabeledGraph>, SolverError> {
    let mut search = PartitionSearch::new(g, r, cfg);
    let found = search.run()?;
    if cfg.verbose {
        eprintln!(
            "search r={r}: nodes={} prunes={} cached_certs={}",
            search.stats.nodes,
            search.stats.prunes,
            search.cache.len()
        );
    }
    Ok(found.map(|code| EdgePartitionCode(code).to_labeling(g)))
}

pub fn exists_labeling_with(g: &Graph, r: usize) -> Option<LabeledGraph> {
    exists_labeling_with_config(g, r, &SearchConfig::default())
        .expect("default config has no budget")
}

/// Rim cycle order of a wheel with rim length >= 5 (any vertex numbering),
/// or `None`.
fn detect_wheel(g: &Graph) -> Option<(Vertex, Vec<Vertex>)> {
    let order = g.order();
    if order < 6 {
        return None;
    }
    let rim_n = order - 1;
    let hubs: Vec<Vertex> = (0..order).filter(|&v| g.degree(v) == order - 1).collect();
    let [hub] = hubs[..] else { return None };
    if (0..order).any(|v| v != hub && g.degree(v) != 3) {
        return None;
    }
    // walk the rim
    let start = (0..order).find(|&v| v != hub).expect("order >= 6");
    let mut rim = vec![start];
    let mut prev = hub;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&u| u != hub && u != prev)?;
        if next == start {
            break;
        }
        rim.push(next);
        prev = cur;
        cur = next;
        if rim.len() > rim_n {
            return None;
        }
    }
    if rim.len() != rim_n {
        return None;
    }
    Some((hub, rim))
}

/// Spoke-only search: rim links are the label multisets of the two spokes at
/// rim distance two, so a labeling with `r` labels exists iff the `n` pair
/// multisets can be made pairwise distinct.
fn wheel_spoke_search(n: usize, r: usize) -> Option<Vec<u32>> {
    fn pair(a: u32, b: u32) -> (u32, u32) {
        (a.min(b), a.max(b))
    }
    fn dfs(
        n: usize,
        r: usize,
        code: &mut Vec<u32>,
        used: &mut std::collections::HashSet<(u32, u32)>,
        max_used: i64,
    ) -> bool {
        let j = code.len();
        if j == n {
            // wrap-around links of rim positions n-1 and 0
            let p1 = pair(code[n - 2], code[0]);
            if used.contains(&p1) {
                return false;
            }
            let p2 = pair(code[n - 1], code[1]);
            if p2 == p1 || used.contains(&p2) {
                return false;
            }
            return true;
        }
        let top = ((max_used + 1).min(r as i64 - 1)) as u32;
        for block in 0..=top {
            code.push(block);
            let mut pushed = None;
            let mut ok = true;
            if j >= 2 {
                let p = pair(code[j - 2], code[j]);
                if used.insert(p) {
                    pushed = Some(p);
                } else {
                    ok = false;
                }
            }
            if ok && dfs(n, r, code, used, max_used.max(block as i64)) {
                return true;
            }
            if let Some(p) = pushed {
                used.remove(&p);
            }
            code.pop();
        }
        false
    }
    if r == 0 {
        return None;
    }
    let mut code = Vec::with_capacity(n);
    let mut used = std::collections::HashSet::new();
    if dfs(n, r, &mut code, &mut used, -1) {
        Some(code)
    } else {
        None
    }
}

/// Builds the full wheel labeling from a spoke code: rim edges get label 1.
fn wheel_labeling_from_spokes(
    g: &Graph,
    hub: Vertex,
    rim: &[Vertex],
    code: &[u32],
) -> LabeledGraph {
    let mut labels = vec![1; g.size()];
    for (i, &v) in rim.iter().enumerate() {
        let e = g.edge_index(hub, v).expect("spoke edge");
        labels[e] = code[i] + 1;
    }
    LabeledGraph::new(g.clone(), labels).expect("positive labels")
}

fn eta_wheel_fast_path(g: &Graph, hub: Vertex, rim: &[Vertex]) -> EtaResult {
    let n = rim.len();
    for r in 1..=n {
        if let Some(code) = wheel_spoke_search(n, r) {
            let witness = wheel_labeling_from_spokes(g, hub, rim, &code);
            debug_assert!(check_labeling(&witness).irregular);
            return EtaResult {
                value: Eta::Finite(r),
                witness: Some(witness),
                evidence: EtaEvidence::ExhaustedRMinus1,
            };
        }
    }
    unreachable!("distinct spoke labels always succeed for a feasible wheel")
}

pub fn eta_with_config(g: &Graph, cfg: &SearchConfig) -> Result<EtaResult, SolverError> {
    if g.size() == 0 && g.order() <= 1 {
        return Ok(EtaResult {
            value: Eta::Finite(0),
            witness: None,
            evidence: EtaEvidence::TrivialEmptyGraph,
        });
    }
    if !admits_labeling(g).feasible {
        return Ok(EtaResult {
            value: Eta::Infinite,
            witness: None,
            evidence: EtaEvidence::InfeasibleByTheorem1,
        });
    }
    if cfg.wheel_fast_path {
        if let Some((hub, rim)) = detect_wheel(g) {
            return Ok(eta_wheel_fast_path(g, hub, &rim));
        }
    }
    for r in 1..=g.size() {
        if let Some(witness) = exists_labeling_with_config(g, r, cfg)? {
            return Ok(EtaResult {
                value: Eta::Finite(r),
                witness: Some(witness),
                evidence: EtaEvidence::ExhaustedRMinus1,
            });
        }
    }
    unreachable!("a feasible graph accepts the all-distinct labeling at r = |E|")
}

pub fn eta(g: &Graph) -> EtaResult {
    eta_with_config(g, &SearchConfig::default()).expect("default config has no budget")
}

const BRUTE_GUARD: f64 = 1e8;

/// Independent oracle: plain enumeration of every label map `E -> {1..r}`
/// with no symmetry reduction, for `r` ascending.
pub fn brute_eta(g: &Graph, r_max: usize) -> Result<EtaResult, SolverError> {
    if r_max < 1 {
        return Err(SolverError::SearchSpaceTooLarge(
            "r_max must be >= 1".into(),
        ));
    }
    let m = g.size();
    if (r_max as f64).powi(m as i32) > BRUTE_GUARD {
        return Err(SolverError::SearchSpaceTooLarge(format!(
            "{r_max}^{m} exceeds the enumeration guard"
        )));
    }
    if m == 0 && g.order() <= 1 {
        return Ok(EtaResult {
            value: Eta::Finite(0),
            witness: None,
            evidence: EtaEvidence::TrivialEmptyGraph,
        });
    }
    for r in 1..=r_max {
        let mut labels: Vec<Label> = vec![1; m];
        loop {
            let candidate =
                LabeledGraph::new(g.clone(), labels.clone()).expect("labels in 1..=r are positive");
            if check_labeling(&candidate).irregular {
                return Ok(EtaResult {
                    value: Eta::Finite(r),
                    witness: Some(candidate),
                    evidence: EtaEvidence::ExhaustedRMinus1,
                });
            }
            if !next_label_map(&mut labels, r as Label) {
                break;
            }
        }
    }
    if !admits_labeling(g).feasible {
        Ok(EtaResult {
            value: Eta::Infinite,
            witness: None,
            evidence: EtaEvidence::InfeasibleByTheorem1,
        })
    } else {
        Err(SolverError::Inconclusive { r_max })
    }
}

/// Advances to the next map `E -> {1..r}` in lex order; false at the end.
fn next_label_map(labels: &mut [Label], r: Label) -> bool {
    for i in (0..labels.len()).rev() {
        if labels[i] < r {
            labels[i] += 1;
            for l in &mut labels[i + 1..] {
                *l = 1;
            }
            return true;
        }
    }
    false
}

const MAX_CENSUS_ORDER: usize = 8;

static CLASS_CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();

/// All isomorphism classes of the given order, deterministically ordered by
/// canonical certificate. Orders up to 7 come from enumerating every edge
/// subset; order 8 from augmenting the order-7 representatives.
pub fn enumerate_graph_classes(order: usize) -> Result<Arc<Vec<Graph>>, SolverError> {
    if order > MAX_CENSUS_ORDER {
        return Err(SolverError::OrderTooLarge(order, MAX_CENSUS_ORDER));
    }
    let cache = CLASS_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(&order) {
        return Ok(Arc::clone(found));
    }
    let classes = Arc::new(if order <= 7 {
        enumerate_by_masks(order)
    } else {
        enumerate_by_augmentation(order)?
    });
    cache.lock().unwrap().insert(order, Arc::clone(&classes));
    Ok(classes)
}

fn pair_list(order: usize) -> Vec<(Vertex, Vertex)> {
    let mut pairs = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            pairs.push((u, v));
        }
    }
    pairs
}

fn enumerate_by_masks(order: usize) -> Vec<Graph> {
    let pairs = pair_list(order);
    let m = pairs.len();
    let mut seen: HashMap<Vec<u8>, Graph> = HashMap::new();
    for mask in 0u32..(1u32 << m) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e);
        let g = Graph::new(order, edges).expect("pairs are valid edges");
        let cert = canonical_form_graph(&g);
        seen.entry(cert.bytes).or_insert(g);
    }
    sorted_classes(seen)
}

fn enumerate_by_augmentation(order: usize) -> Result<Vec<Graph>, SolverError> {
    let smaller = enumerate_graph_classes(order - 1)?;
    let new_v = order - 1;
    let mut seen: HashMap<Vec<u8>, Graph> = HashMap::new();
    for rep in smaller.iter() {
        for mask in 0u32..(1u32 << new_v) {
            let mut edges: Vec<(Vertex, Vertex)> = rep.edges().to_vec();
            edges.extend(
                (0..new_v)
                    .filter(|&u| mask & (1 << u) != 0)
                    .map(|u| (u, new_v)),
            );
            let g = Graph::new(order, edges).expect("augmented edges valid");
            let cert = canonical_form_graph(&g);
            seen.entry(cert.bytes).or_insert(g);
        }
    }
    Ok(sorted_classes(seen))
}

fn sorted_classes(seen: HashMap<Vec<u8>, Graph>) -> Vec<Graph> {
    let mut pairs: Vec<(Vec<u8>, Graph)> = seen.into_iter().collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    pairs.into_iter().map(|(_, g)| g).collect()
}

/// All isomorphism classes of the given order whose unlabeled links are
/// pairwise non-isomorphic (equivalently, the all-ones labeling is
/// link-irregular).
pub fn find_link_irregular_graphs(order: usize) -> Result<Vec<Graph>, SolverError> {
    let classes = enumerate_graph_classes(order)?;
    Ok(classes
        .iter()
        .filter(|g| crate::links::is_link_irregular_graph(g))
        .cloned()
        .collect())
}

/// All isomorphism classes of the given order with pairwise non-isomorphic
/// vertex-deleted subgraphs.
pub fn find_cut_irregular_graphs(order: usize) -> Result<Vec<Graph>, SolverError> {
    let classes = enumerate_graph_classes(order)?;
    Ok(classes
        .iter()
        .filter(|g| crate::construct::is_cut_irregular(g).cut_irregular)
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, wheel, Graph};

    #[test]
    fn partition_code_validity_and_normalization() {
        assert!(EdgePartitionCode(vec![0, 0, 1, 0, 2]).is_valid());
        assert!(!EdgePartitionCode(vec![0, 2]).is_valid());
        assert!(!EdgePartitionCode(vec![1]).is_valid());
        assert_eq!(
            EdgePartitionCode::from_labels(&[7, 7, 3, 7, 1]),
            EdgePartitionCode(vec![0, 0, 1, 0, 2])
        );
    }

    #[test]
    fn check_labeling_catches_uniform_triangle() {
        let l = LabeledGraph::uniform(complete(3), 1);
        let res = check_labeling(&l);
        assert!(!res.irregular);
        assert_eq!(res.violating_pair, Some((0, 1)));
    }

    #[test]
    fn eta_of_tiny_completes() {
        assert_eq!(eta(&complete(1)).value, Eta::Finite(0));
        assert_eq!(eta(&complete(2)).value, Eta::Infinite);
        let k3 = eta(&complete(3));
        assert_eq!(k3.value, Eta::Finite(3));
        let w = k3.witness.unwrap();
        assert_eq!(w.distinct_label_count(), 3);
        assert!(check_labeling(&w).irregular);
    }

    #[test]
    fn eta_of_cycles_is_infinite() {
        for n in 4..=7 {
            assert_eq!(eta(&cycle(n)).value, Eta::Infinite);
            assert_eq!(eta(&cycle(n)).evidence, EtaEvidence::InfeasibleByTheorem1);
        }
    }

    #[test]
    fn witness_is_lex_least_code() {
        // without automorphism pruning the search is plainly lex-ordered;
        // with pruning the witness must not change
        let g = complete(4);
        let plain_cfg = SearchConfig {
            automorphism_pruning: false,
            ..Default::default()
        };
        let a = exists_labeling_with_config(&g, 3, &plain_cfg)
            .unwrap()
            .unwrap();
        let b = exists_labeling_with(&g, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn monotonicity_in_r() {
        let g = complete(4);
        assert!(exists_labeling_with(&g, 2).is_none());
        assert!(exists_labeling_with(&g, 3).is_some());
        assert!(exists_labeling_with(&g, 4).is_some());
    }

    #[test]
    fn brute_eta_matches_eta_on_small_graphs() {
        let k3 = complete(3);
        assert_eq!(brute_eta(&k3, 3).unwrap().value, Eta::Finite(3));
        let two_k3 = disjoint_union(&k3, &k3);
        assert_eq!(brute_eta(&two_k3, 6).unwrap().value, Eta::Finite(6));
        assert_eq!(eta(&two_k3).value, Eta::Finite(6));
        assert_eq!(brute_eta(&cycle(5), 4).unwrap().value, Eta::Infinite);
        assert!(matches!(
            brute_eta(&complete(6), 9),
            Err(SolverError::SearchSpaceTooLarge(_))
        ));
    }

    #[test]
    fn wheel_fast_path_agrees_with_generic() {
        for n in [5usize, 6] {
            let w = wheel(n);
            let generic = SearchConfig {
                wheel_fast_path: false,
                ..Default::default()
            };
            let a = eta_with_config(&w, &generic).unwrap();
            let b = eta(&w);
            assert_eq!(a.value, b.value, "wheel {n}");
            assert!(check_labeling(&b.witness.unwrap()).irregular);
        }
    }

    #[test]
    fn apex_can_lower_the_labeling_number() {
        // K_4 plus a pendant at one K_4 vertex: removing the universal vertex
        // leaves K_3 + K_1 with value 3, yet the full graph needs only 2.
        // Regression guard against "reduce through universal vertices"
        // shortcuts: the join can strictly lower the optimum because it gives
        // formerly isolated vertices nonempty links.
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (core, count) = crate::construct::strip_universal(&g);
        assert_eq!(count, 1);
        assert_eq!(eta(&core).value, Eta::Finite(3));
        assert_eq!(eta(&g).value, Eta::Finite(2));
        assert_eq!(brute_eta(&g, 2).unwrap().value, Eta::Finite(2));
    }

    #[test]
    fn detect_wheel_handles_permutations() {
        let w = wheel(7);
        assert!(detect_wheel(&w).is_some());
        let perm: Vec<usize> = (0..8).map(|v| (v + 3) % 8).collect();
        assert!(detect_wheel(&w.permute(&perm)).is_some());
        assert!(detect_wheel(&complete(8)).is_none());
        assert!(detect_wheel(&cycle(8)).is_none());
    }

    #[test]
    fn node_budget_is_enforced() {
        let cfg = SearchConfig {
            node_budget: Some(3),
            ..Default::default()
        };
        let err = exists_labeling_with_config(&complete(5), 3, &cfg);
        assert_eq!(err, Err(SolverError::BudgetExhausted(3)));
    }

    #[test]
    fn census_counts_match_known_sequences() {
        // number of graphs on n unlabeled vertices
        let expected = [1usize, 1, 2, 4, 11, 34];
        for (order, &want) in expected.iter().enumerate() {
            assert_eq!(
                enumerate_graph_classes(order).unwrap().len(),
                want,
                "order {order}"
            );
        }
        assert!(enumerate_graph_classes(9).is_err());
    }

    #[test]
    fn link_irregular_census_small_orders() {
        for order in 0..=5 {
            assert!(
                find_link_irregular_graphs(order).unwrap().is_empty(),
                "order {order}"
            );
        }
        let six = find_link_irregular_graphs(6).unwrap();
        assert_eq!(six.len(), 1);
        assert_eq!(eta(&six[0]).value, Eta::Finite(1));
    }
}
