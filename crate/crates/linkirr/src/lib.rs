//! Link-irregular edge labelings: a labeling of a graph is link-irregular
//! when the labeled subgraphs induced by the vertex neighborhoods are
//! pairwise non-isomorphic. This crate decides whether such a labeling
//! exists, computes the minimum number of distinct labels exactly, and
//! builds the known optimal labelings for complete graphs, wheels, and
//! related families.
//!
//! Start with [`solver::eta`] for the headline quantity, [`links`] for the
//! feasibility characterization, [`construct`] for the closed-form families,
//! and [`verify`] to re-run every claim the crate is built on.

pub mod construct;
pub mod graph;
pub mod io;
pub mod iso;
pub mod links;
pub mod solver;
pub mod verify;

pub use construct::{
    complete_eta, complete_labeling, g_family, h_family, is_cut_irregular, join_expand_labeling,
    kstar_trail_plan, strip_universal, unique_li6, wheel_eta_formula, wheel_labeling,
    ConstructError, TrailPlan,
};
pub use graph::{
    build_family, complete, cycle, disjoint_union, join, wheel, FamilySpec, Graph, GraphError,
    Label, LabeledGraph, Vertex,
};
pub use io::{export_dot, parse_graph6, parse_labeled, write_graph6, write_labeled, FormatError};
pub use iso::{
    are_isomorphic, are_isomorphic_graphs, automorphisms, canonical_form, canonical_form_graph,
    AutomorphismSet, CanonicalCert, CertCache,
};
pub use links::{
    admits_labeling, corollary_conditions, labeled_link, link, necessary_report, FeasibilityReport,
};
pub use solver::{
    brute_eta, check_labeling, enumerate_graph_classes, eta, eta_with_config, exists_labeling_with,
    exists_labeling_with_config, find_cut_irregular_graphs, find_link_irregular_graphs,
    EdgePartitionCode, Eta, EtaResult, SearchConfig, SolverError,
};
pub use verify::{run_verification, VerificationReport};
