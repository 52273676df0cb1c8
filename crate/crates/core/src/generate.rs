//! Generators for the graph families the sequential-coloring bounds apply to.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Bipartition, Graph, GraphError, Vertex};

/// Attempts made by [`random_biregular`] before giving up.
pub const MAX_GENERATION_ATTEMPTS: usize = 10_000;

/// `K_{a,b}` with `X = 0..a` and `Y = a..a+b`; the bipartition is recorded.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(GraphError::EmptyPart(a, b));
    }
    let edges = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y)));
    let parts = Bipartition::new((0..a).collect(), (a..a + b).collect());
    Graph::new(a + b, edges, Some(parts))
}

/// A random `(r-1, r)`-biregular bipartite graph.
///
/// `X = 0..(r-1)k` holds the degree-`r` vertices and `Y` the `rk` vertices of
/// degree `r-1`. Each attempt walks the `X` vertices in order and matches their
/// stubs against uniformly chosen remaining `Y` stubs, skipping stubs whose
/// vertex is already adjacent; an attempt that runs out of admissible stubs is
/// discarded and the pairing is resampled from scratch. For `k = 1` the only
/// simple realization is `K_{r-1,r}`, which is returned directly.
pub fn random_biregular(r: usize, k: usize, seed: u64) -> Result<Graph, GraphError> {
    if r < 3 || k == 0 {
        return Err(GraphError::Unsupported(format!(
            "biregular generator needs r >= 3 and k >= 1 (got r={r}, k={k})"
        )));
    }
    if k == 1 {
        return complete_bipartite(r - 1, r);
    }
    let nx = (r - 1) * k;
    let ny = r * k;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..MAX_GENERATION_ATTEMPTS {
        // remaining stub count per Y vertex
        let mut stubs: Vec<Vertex> = (0..ny)
            .flat_map(|y| std::iter::repeat_n(y, r - 1))
            .collect();
        stubs.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(nx * r);
        for x in 0..nx {
            let mut taken: Vec<Vertex> = Vec::with_capacity(r);
            for _ in 0..r {
                let admissible: Vec<usize> = (0..stubs.len())
                    .filter(|&i| !taken.contains(&stubs[i]))
                    .collect();
                if admissible.is_empty() {
                    continue 'attempt;
                }
                let i = admissible[rng.random_range(0..admissible.len())];
                let y = stubs.swap_remove(i);
                taken.push(y);
                edges.push((x, nx + y));
            }
        }
        let parts = Bipartition::new((0..nx).collect(), (nx..nx + ny).collect());
        return Graph::new(nx + ny, edges, Some(parts));
    }
    Err(GraphError::GenerationFailed {
        seed,
        attempts: MAX_GENERATION_ATTEMPTS,
    })
}

/// Which r-regular Class 1 family [`regular_class1`] produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RegularFamily {
    /// `K_{r,r}`.
    #[default]
    CompleteBipartite,
    /// `K_{r+1}`, Class 1 exactly when `r + 1` is even.
    Complete,
}

/// An r-regular graph with chromatic index `r`.
pub fn regular_class1(r: usize, family: RegularFamily) -> Result<Graph, GraphError> {
    if r < 3 {
        return Err(GraphError::Unsupported(format!(
            "r must be at least 3 (got {r})"
        )));
    }
    match family {
        RegularFamily::CompleteBipartite => complete_bipartite(r, r),
        RegularFamily::Complete if (r + 1).is_multiple_of(2) => {
            Ok(crate::graph::named::complete(r + 1))
        }
        RegularFamily::Complete => Err(GraphError::Unsupported(format!(
            "K_{} has odd order and is Class 2",
            r + 1
        ))),
    }
}

/// Erdős–Rényi `G(n, p)` with a seeded generator.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::new(n, edges, None).unwrap()
}

/// Random bipartite graph with parts of sizes `a` and `b`, each cross pair
/// present with probability `p`. The bipartition is recorded.
pub fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (0..a)
        .flat_map(|x| (a..a + b).map(move |y| (x, y)))
        .filter(|_| rng.random_bool(p))
        .collect();
    let parts = Bipartition::new((0..a).collect(), (a..a + b).collect());
    Graph::new(a + b, edges, Some(parts)).unwrap()
}
