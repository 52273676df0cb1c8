//! Simple undirected graphs with dense 0-based vertex ids.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

/// Vertex id, dense in `0..n`.
pub type Vertex = usize;

/// Index into [`Graph::edges`].
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex id {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("part sizes must be positive (got {0} and {1})")]
    EmptyPart(usize, usize),
    #[error("unsupported generator parameters: {0}")]
    Unsupported(String),
    #[error("no simple realization found after {attempts} attempts (seed {seed})")]
    GenerationFailed { seed: u64, attempts: usize },
}

/// The two sides `X` and `Y` of a bipartite graph, each sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

impl Bipartition {
    pub fn new(mut left: Vec<Vertex>, mut right: Vec<Vertex>) -> Self {
        left.sort_unstable();
        right.sort_unstable();
        Bipartition { left, right }
    }

    /// Side membership per vertex: `false` for `left`, `true` for `right`.
    fn sides(&self, n: usize) -> Result<Vec<bool>, GraphError> {
        let mut side = vec![None; n];
        for (&v, s) in self
            .left
            .iter()
            .map(|v| (v, false))
            .chain(self.right.iter().map(|v| (v, true)))
        {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if side[v].is_some() {
                return Err(GraphError::InvalidBipartition(format!(
                    "vertex {v} listed twice"
                )));
            }
            side[v] = Some(s);
        }
        side.into_iter()
            .enumerate()
            .map(|(v, s)| {
                s.ok_or_else(|| {
                    GraphError::InvalidBipartition(format!("vertex {v} is in neither part"))
                })
            })
            .collect()
    }
}

/// A simple undirected graph.
///
/// Edges are stored normalized as `(min, max)` in the order they were supplied;
/// that order is the canonical edge order used by every algorithm in the crate.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
    bipartition: Option<Bipartition>,
}

impl PartialEq for Graph {
    /// Equality up to edge order. The stored bipartition is metadata and ignored.
    fn eq(&self, other: &Self) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ids.
    /// A supplied bipartition must cover every vertex exactly once and every
    /// edge must cross it.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
        bipartition: Option<Bipartition>,
    ) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut stored = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            let id = stored.len();
            stored.push(key);
            adjacency[key.0].push((key.1, id));
            adjacency[key.1].push((key.0, id));
        }
        if let Some(parts) = &bipartition {
            let side = parts.sides(n)?;
            if let Some(&(u, v)) = stored.iter().find(|&&(u, v)| side[u] == side[v]) {
                return Err(GraphError::InvalidBipartition(format!(
                    "edge {u}-{v} lies inside one part"
                )));
            }
        }
        Ok(Graph {
            n,
            edges: stored,
            adjacency,
            bipartition,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// `(neighbour, edge id)` pairs at `v`, in edge insertion order.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adjacency[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    /// The bipartition recorded at construction, if any.
    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bipartition.as_ref()
    }

    /// A proper 2-coloring of the vertices computed by BFS, or `None` when the
    /// graph has an odd cycle. Isolated vertices and the first vertex of each
    /// component go to the left part.
    pub fn two_coloring(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &(w, _) in &self.adjacency[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (v, s) in side.into_iter().enumerate() {
            if s == Some(true) {
                right.push(v);
            } else {
                left.push(v);
            }
        }
        Some(Bipartition { left, right })
    }

    /// The stored bipartition, or a computed one.
    pub fn bipartition_or_compute(&self) -> Option<Bipartition> {
        self.bipartition.clone().or_else(|| self.two_coloring())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some() || self.two_coloring().is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(w, _) in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges, None).expect("union of simple graphs is simple")
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }
}

/// Degree statistics of a graph, with `r` fixed to the maximum degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub n: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub r: usize,
    pub n_r: usize,
    /// Vertices of degree exactly `r`, ascending.
    pub v_r: Vec<Vertex>,
    pub near_regular: bool,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let max_degree = g.max_degree();
        let min_degree = g.min_degree();
        let v_r: Vec<Vertex> = (0..g.vertex_count())
            .filter(|&v| g.degree(v) == max_degree)
            .collect();
        DegreeProfile {
            n: g.vertex_count(),
            max_degree,
            min_degree,
            r: max_degree,
            n_r: v_r.len(),
            v_r,
            near_regular: max_degree - min_degree <= 1,
        }
    }
}

/// Named small graphs used in tests, examples and the CLI.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges, None).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)), None).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i)), None).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)), None).unwrap()
    }

    /// Outer 5-cycle `0..5`, spokes `i - (i+5)`, inner pentagram on `5..10`.
    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner), None).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn k4_has_all_degrees_three() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], None).unwrap();
        assert!((0..4).all(|v| g.degree(v) == 3));
        assert_eq!(g, complete(4));
    }

    #[test]
    fn single_edge() {
        let g = Graph::new(2, [(0, 1)], None).unwrap();
        assert_eq!((g.degree(0), g.degree(1)), (1, 1));
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(
            Graph::new(5, [(0, 1), (0, 1)], None),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(5, [(0, 1), (1, 0)], None),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(3, [(2, 2)], None), Err(GraphError::LoopEdge(2)));
        assert_eq!(
            Graph::new(3, [(0, 3)], None),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn rejects_bad_bipartitions() {
        let inside = Bipartition::new(vec![0, 1], vec![2]);
        assert!(matches!(
            Graph::new(3, [(0, 1)], Some(inside)),
            Err(GraphError::InvalidBipartition(_))
        ));
        let uncovered = Bipartition::new(vec![0], vec![1]);
        assert!(matches!(
            Graph::new(3, [(0, 1)], Some(uncovered)),
            Err(GraphError::InvalidBipartition(_))
        ));
        let overlap = Bipartition::new(vec![0, 1], vec![1]);
        assert!(matches!(
            Graph::new(2, [(0, 1)], Some(overlap)),
            Err(GraphError::InvalidBipartition(_))
        ));
    }

    #[test]
    fn profiles() {
        let k4 = complete(4).degree_profile();
        assert_eq!((k4.n, k4.max_degree, k4.min_degree, k4.n_r), (4, 3, 3, 4));
        assert!(k4.near_regular);

        let k23 = crate::generate::complete_bipartite(2, 3)
            .unwrap()
            .degree_profile();
        assert_eq!(
            (k23.n, k23.max_degree, k23.min_degree, k23.n_r),
            (5, 3, 2, 2)
        );
        assert_eq!(k23.v_r, vec![0, 1]);
        assert!(k23.near_regular);

        let s = star(3).degree_profile();
        assert_eq!((s.max_degree, s.min_degree), (3, 1));
        assert!(!s.near_regular);
    }

    #[test]
    fn empty_graph_profile() {
        let p = Graph::new(0, [], None).unwrap().degree_profile();
        assert_eq!((p.n, p.max_degree, p.min_degree, p.n_r), (0, 0, 0, 0));
    }

    #[test]
    fn bipartiteness() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(!petersen().is_bipartite());
        let parts = cycle(4).two_coloring().unwrap();
        assert_eq!(parts.left, vec![0, 2]);
        assert_eq!(parts.right, vec![1, 3]);
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn handshake() {
        for g in [complete(5), petersen(), star(4), path(6)] {
            let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }
}
