//! Line-delimited JSON records. Field order is declaration order and stable.

use serde::Serialize;

use crate::chromatic_sum::SumReport;
use crate::coloring::{coloring_lines, Color, Method};
use crate::graph::{Graph, Vertex};
use crate::oracle::OracleResult;
use crate::sequential::SequentialCertificate;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateRecord {
    pub kind: &'static str,
    pub r: usize,
    pub n: usize,
    pub n_r: usize,
    /// `null` when no swap was needed.
    pub swap_color: Option<Color>,
    #[serde(rename = "R")]
    pub set: Vec<Vertex>,
    pub bound: u64,
    #[serde(rename = "R_size")]
    pub set_size: usize,
    pub verified: bool,
    pub method: Method,
    pub coloring: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_max_sequential: Option<OracleRecord>,
}

impl CertificateRecord {
    pub fn new(g: &Graph, cert: &SequentialCertificate) -> Self {
        CertificateRecord {
            kind: "certificate",
            r: cert.r,
            n: cert.n,
            n_r: cert.n_r,
            swap_color: cert.swap_color,
            set: cert.set.clone(),
            bound: cert.bound,
            set_size: cert.set_size(),
            verified: cert.verified,
            method: cert.method,
            coloring: coloring_lines(g, &cert.coloring),
            oracle_max_sequential: None,
        }
    }

    pub fn with_oracle(mut self, g: &Graph, result: &OracleResult) -> Self {
        self.oracle_max_sequential =
            Some(OracleRecord::new(g, Objective::MaxSequentialSet, result));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumRecord {
    pub kind: &'static str,
    #[serde(flatten)]
    pub report: SumReport,
}

impl From<SumReport> for SumRecord {
    fn from(report: SumReport) -> Self {
        SumRecord {
            kind: "sum",
            report,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    EdgeChromaticSum,
    MaxSequentialSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleRecord {
    pub kind: &'static str,
    pub objective: Objective,
    pub value: u64,
    pub explored: u64,
    pub cap: Color,
    pub cap_stable: bool,
    pub witness: Vec<String>,
}

impl OracleRecord {
    pub fn new(g: &Graph, objective: Objective, result: &OracleResult) -> Self {
        OracleRecord {
            kind: "oracle",
            objective,
            value: result.value,
            explored: result.explored,
            cap: result.cap,
            cap_stable: result.cap_stable,
            witness: coloring_lines(g, &result.witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub kind: &'static str,
    pub n: u64,
    pub n_r: u64,
    pub r: u64,
    pub sequential_set: u64,
    /// Present only when `(n, n_r, r)` matches an `(r-1, r)`-biregular profile.
    pub biregular_set: Option<u64>,
    pub edge_sum: u64,
}

/// One JSON object on one line.
pub fn to_line<T: Serialize>(record: &T) -> String {
    serde_json::to_string(record).expect("records serialize")
}
