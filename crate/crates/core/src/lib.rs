//! Sequential edge colorings of near-regular Class 1 graphs.
//!
//! Given a graph with `Δ - δ <= 1` and chromatic index `Δ = r >= 3`, the
//! [`sequential`] module turns any proper `r`-coloring into one in which a set
//! `R` of at least `⌈((r-1) n_r + n) / r⌉` vertices see exactly the colors
//! `1..=d(v)`, where `n_r` counts the vertices of degree `r`. The resulting
//! coloring also witnesses an upper bound on the edge-chromatic sum, evaluated
//! by [`chromatic_sum`]. The [`oracle`] module provides exhaustive ground truth
//! for small graphs.
//!
//! Deciding whether a bipartite graph with `Δ = 3` admits a coloring that is
//! sequential on a whole side is NP-complete; nothing here attempts it.

pub mod chromatic_sum;
pub mod coloring;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod sequential;

pub use chromatic_sum::{coloring_sum, edge_sum_bound, sum_report, SumReport};
pub use coloring::{verify_proper, Color, EdgeColoring};
pub use graph::{Bipartition, DegreeProfile, Graph, GraphError, Vertex};
pub use sequential::{
    biregular_set_bound, is_biregular_profile, sequential_set_bound, sequentialize,
    sequentialize_with, SequentialCertificate, SequentialError,
};
