//! Browser bindings. Every export returns a JSON string so the page needs no
//! glue beyond `JSON.parse`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use seqcolor::chromatic_sum::sum_report_for;
use seqcolor::coloring::AcquireError;
use seqcolor::formats::parse_graph_auto;
use seqcolor::generate::random_biregular;
use seqcolor::report::{BoundRecord, CertificateRecord, SumRecord};
use seqcolor::{
    biregular_set_bound, edge_sum_bound, is_biregular_profile, sequential_set_bound, sequentialize,
    Color, Graph, SequentialError, Vertex,
};

#[derive(Serialize)]
struct View {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    colors: Vec<Color>,
    /// Two sides for drawing; `None` for non-bipartite input.
    sides: Option<(Vec<Vertex>, Vec<Vertex>)>,
    certificate: CertificateRecord,
    sum: SumRecord,
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
enum Outcome {
    Ok(Box<View>),
    Error { code: &'static str, message: String },
}

fn error(code: &'static str, message: impl ToString) -> Outcome {
    Outcome::Error {
        code,
        message: message.to_string(),
    }
}

fn run(g: &Graph) -> Outcome {
    let cert = match sequentialize(g) {
        Ok(cert) => cert,
        Err(e @ SequentialError::Acquire(AcquireError::ClassTwo { .. })) => {
            return error("class-two", e)
        }
        Err(e @ SequentialError::Acquire(AcquireError::Unknown { .. })) => {
            return error("unknown", e)
        }
        Err(e) => return error("precondition", e),
    };
    let sum = match sum_report_for(g, &cert, g.edge_count() <= 14) {
        Ok(sum) => sum,
        Err(e) => return error("sum", e),
    };
    let sides = g.bipartition_or_compute().map(|b| (b.left, b.right));
    Outcome::Ok(Box::new(View {
        n: g.vertex_count(),
        edges: g.edges().to_vec(),
        colors: cert.coloring.colors().to_vec(),
        sides,
        certificate: CertificateRecord::new(g, &cert),
        sum: SumRecord::from(sum),
    }))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

/// Generates an `(r-1, r)`-biregular graph and sequentializes it.
pub fn biregular_demo(r: usize, k: usize, seed: u64) -> String {
    if !(3..=8).contains(&r) || !(1..=6).contains(&k) {
        return json(&error(
            "range",
            "the demo accepts 3 <= r <= 8 and 1 <= k <= 6",
        ));
    }
    match random_biregular(r, k, seed) {
        Ok(g) => json(&run(&g)),
        Err(e) => json(&error("generate", e)),
    }
}

/// Sequentializes a graph given as graph6 or as an edge list.
pub fn sequentialize_text(text: &str) -> String {
    match parse_graph_auto(text) {
        Ok(g) if g.vertex_count() > 60 => {
            json(&error("range", "the demo draws at most 60 vertices"))
        }
        Ok(g) => json(&run(&g)),
        Err(e) => json(&error("parse", e)),
    }
}

/// The three bounds for `(n, n_r, r)`.
pub fn bounds(n: u64, n_r: u64, r: u64) -> String {
    if r == 0 || n_r > n {
        return json(&error("range", "need r >= 1 and n_r <= n"));
    }
    json(&BoundRecord {
        kind: "bound",
        n,
        n_r,
        r,
        sequential_set: sequential_set_bound(n, n_r, r),
        biregular_set: is_biregular_profile(n, n_r, r).then(|| biregular_set_bound(n, r)),
        edge_sum: edge_sum_bound(n, n_r, r),
    })
}

#[wasm_bindgen(js_name = biregularDemo)]
pub fn biregular_demo_js(r: u32, k: u32, seed: u32) -> String {
    biregular_demo(r as usize, k as usize, u64::from(seed))
}

#[wasm_bindgen(js_name = sequentializeText)]
pub fn sequentialize_text_js(text: &str) -> String {
    sequentialize_text(text)
}

#[wasm_bindgen(js_name = bounds)]
pub fn bounds_js(n: u32, n_r: u32, r: u32) -> String {
    bounds(n.into(), n_r.into(), r.into())
}
