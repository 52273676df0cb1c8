//! Edge-color sums and the upper bound on the edge-chromatic sum of
//! near-regular Class 1 graphs.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{ensure_proper, palette_unchecked, ColoringError, EdgeColoring};
use crate::graph::{Graph, Vertex};
use crate::oracle::{exact_edge_chromatic_sum, OracleError, OracleOptions, ORACLE_EDGE_LIMIT};
use crate::sequential::{sequentialize, SequentialCertificate, SequentialError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SumError {
    #[error(transparent)]
    Sequential(#[from] SequentialError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("edge-sum chain violated: exact {exact:?} <= actual {actual} <= bound {bound} fails")]
    ChainViolation {
        exact: Option<u64>,
        actual: u64,
        bound: u64,
    },
}

/// Sum of all edge colors.
pub fn coloring_sum(g: &Graph, c: &EdgeColoring) -> Result<u64, ColoringError> {
    if c.len() != g.edge_count() {
        return Err(ColoringError::Coverage {
            expected: g.edge_count(),
            found: c.len(),
        });
    }
    Ok(c.colors().iter().map(|&x| x as u64).sum())
}

/// `⌊(2 n_r (2r - 1) + n (r - 1)(r² + 2r - 2)) / 4r⌋`.
pub fn edge_sum_bound(n: u64, n_r: u64, r: u64) -> u64 {
    edge_sum_bound_numerator(n, n_r, r) / (4 * r)
}

/// The unfloored numerator of [`edge_sum_bound`]; the bound is this over `4r`.
pub fn edge_sum_bound_numerator(n: u64, n_r: u64, r: u64) -> u64 {
    assert!(r >= 1 && n_r <= n, "bound needs r >= 1 and n_r <= n");
    2 * n_r * (2 * r - 1) + n * (r - 1) * (r * r + 2 * r - 2)
}

/// Twice the per-vertex estimate of the sum before the ceiling is dropped:
/// `n_r r(r+1)/2 + m r(r-1)/2 + (n - n_r - m)(r+2)(r-1)/2` with `m = ⌈(n - n_r)/r⌉`.
/// Requires `r >= 2`.
pub fn vertex_estimate(n: u64, n_r: u64, r: u64) -> u64 {
    let m = (n - n_r).div_ceil(r);
    n_r * r * (r + 1) / 2 + m * r * (r - 1) / 2 + (n - n_r - m) * (r + 2) * (r - 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexSums {
    /// Sum of the palette of each vertex.
    pub per_vertex: Vec<u64>,
    /// Sum over all vertices; counts every edge twice.
    pub total: u64,
    pub edge_sum: u64,
}

/// Per-vertex palette sums. `total == 2 * edge_sum` for every proper coloring.
pub fn vertex_sum_decomposition(g: &Graph, c: &EdgeColoring) -> Result<VertexSums, ColoringError> {
    ensure_proper(g, c)?;
    let per_vertex: Vec<u64> = (0..g.vertex_count())
        .map(|v| palette_unchecked(g, c, v).sum())
        .collect();
    let total = per_vertex.iter().sum();
    let edge_sum = coloring_sum(g, c)?;
    debug_assert_eq!(total, 2 * edge_sum);
    Ok(VertexSums {
        per_vertex,
        total,
        edge_sum,
    })
}

/// Vertices of one kind in the three-way split and their palette sums.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TermGroup {
    pub vertices: Vec<Vertex>,
    pub sums: Vec<u64>,
    pub total: u64,
}

impl TermGroup {
    fn push(&mut self, v: Vertex, s: u64) {
        self.vertices.push(v);
        self.sums.push(s);
        self.total += s;
    }
}

/// Split of the palette sums of an `r`-coloring into degree-`r` vertices,
/// degree-`(r-1)` vertices whose palette is `{1..r-1}`, and the remaining
/// degree-`(r-1)` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumTerms {
    pub r: u64,
    pub full: TermGroup,
    pub missing_top: TermGroup,
    pub other: TermGroup,
}

impl SumTerms {
    /// `r(r+1)/2`, the sum of every full palette.
    pub fn full_value(&self) -> u64 {
        self.r * (self.r + 1) / 2
    }

    /// `r(r-1)/2`, the sum of `{1..r-1}`.
    pub fn missing_top_value(&self) -> u64 {
        self.r * (self.r - 1) / 2
    }

    /// `(r+2)(r-1)/2`, the largest sum of an `(r-1)`-subset of `{1..r}` other than `{1..r-1}`.
    pub fn other_ceiling(&self) -> u64 {
        (self.r + 2) * (self.r - 1) / 2
    }

    pub fn total(&self) -> u64 {
        self.full.total + self.missing_top.total + self.other.total
    }

    /// Checks each per-vertex term against its value or ceiling.
    pub fn term_bounds_hold(&self) -> bool {
        self.full.sums.iter().all(|&s| s == self.full_value())
            && self
                .missing_top
                .sums
                .iter()
                .all(|&s| s == self.missing_top_value())
            && self.other.sums.iter().all(|&s| s <= self.other_ceiling())
    }
}

/// Three-way split of the palette sums of a proper `r`-coloring of a
/// near-regular graph with maximum degree `r`.
pub fn sum_terms(g: &Graph, c: &EdgeColoring) -> Result<SumTerms, SumError> {
    let sums = vertex_sum_decomposition(g, c)?;
    let r = g.max_degree();
    let mut terms = SumTerms {
        r: r as u64,
        full: TermGroup::default(),
        missing_top: TermGroup::default(),
        other: TermGroup::default(),
    };
    for (v, &s) in sums.per_vertex.iter().enumerate() {
        let group = if g.degree(v) == r {
            &mut terms.full
        } else if palette_unchecked(g, c, v).is_initial_segment(r - 1) {
            &mut terms.missing_top
        } else {
            &mut terms.other
        };
        group.push(v, s);
    }
    Ok(terms)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumReport {
    pub r: usize,
    pub n: usize,
    pub n_r: usize,
    /// Color sum of the sequentialized coloring.
    pub actual_sum: u64,
    pub bound: u64,
    pub exact_sum: Option<u64>,
    pub cap_stable: Option<bool>,
}

impl SumReport {
    pub fn chain_holds(&self) -> bool {
        self.actual_sum <= self.bound && self.exact_sum.is_none_or(|e| e <= self.actual_sum)
    }
}

/// Sequentializes `g` and reports its color sum against the bound, with the
/// exact minimum when `run_oracle` is set and `|E| <= 20`.
pub fn sum_report(g: &Graph, run_oracle: bool) -> Result<SumReport, SumError> {
    let cert = sequentialize(g)?;
    sum_report_for(g, &cert, run_oracle)
}

/// [`sum_report`] on an existing certificate.
pub fn sum_report_for(
    g: &Graph,
    cert: &SequentialCertificate,
    run_oracle: bool,
) -> Result<SumReport, SumError> {
    let actual_sum = coloring_sum(g, &cert.coloring)?;
    let bound = edge_sum_bound(cert.n as u64, cert.n_r as u64, cert.r as u64);
    let oracle = if run_oracle && g.edge_count() <= ORACLE_EDGE_LIMIT {
        Some(exact_edge_chromatic_sum(g, OracleOptions::default())?)
    } else {
        None
    };
    let report = SumReport {
        r: cert.r,
        n: cert.n,
        n_r: cert.n_r,
        actual_sum,
        bound,
        exact_sum: oracle.as_ref().map(|o| o.value),
        cap_stable: oracle.as_ref().map(|o| o.cap_stable),
    };
    if !report.chain_holds() {
        return Err(SumError::ChainViolation {
            exact: report.exact_sum,
            actual: actual_sum,
            bound,
        });
    }
    Ok(report)
}
