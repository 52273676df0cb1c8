use super::{Color, ColoringError, EdgeColoring};
use crate::graph::Graph;

/// Outcome of [`exact_chromatic_index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticIndex {
    pub chi_prime: Color,
    pub witness: EdgeColoring,
    /// Search nodes visited over all tried color counts.
    pub explored: u64,
}

/// Largest color count the bitmask search supports.
pub(crate) const MAX_SEARCH_COLORS: Color = 64;

/// Smallest `t` admitting a proper `t`-coloring, found by backtracking.
///
/// Counts `Δ, Δ+1, ..., max_colors` are tried in turn. Edges are visited by
/// descending endpoint-degree sum (ties in input order), colors ascending, and
/// a fresh color `m+1` is only offered once colors `1..=m` are in use, which
/// also pins the first edge to color 1.
pub fn exact_chromatic_index(
    g: &Graph,
    max_colors: Color,
) -> Result<ChromaticIndex, ColoringError> {
    let delta = g.max_degree() as Color;
    if g.edge_count() == 0 {
        return Ok(ChromaticIndex {
            chi_prime: 0,
            witness: EdgeColoring::new(Vec::new(), 0)?,
            explored: 0,
        });
    }
    if max_colors < delta {
        return Err(ColoringError::CapExceeded {
            cap: max_colors,
            lower_bound: delta,
        });
    }
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edge(e);
        std::cmp::Reverse(g.degree(u) + g.degree(v))
    });
    let mut explored = 0;
    for t in delta..=max_colors.min(MAX_SEARCH_COLORS) {
        let mut search = Search {
            g,
            order: &order,
            t,
            used: vec![0u64; g.vertex_count()],
            colors: vec![0; g.edge_count()],
            explored: 0,
        };
        let found = search.run(0, 0);
        explored += search.explored;
        if found {
            return Ok(ChromaticIndex {
                chi_prime: t,
                witness: EdgeColoring::new(search.colors, t)?,
                explored,
            });
        }
    }
    Err(ColoringError::CapExceeded {
        cap: max_colors,
        lower_bound: max_colors.min(MAX_SEARCH_COLORS) + 1,
    })
}

struct Search<'a> {
    g: &'a Graph,
    order: &'a [usize],
    t: Color,
    used: Vec<u64>,
    colors: Vec<Color>,
    explored: u64,
}

impl Search<'_> {
    fn run(&mut self, idx: usize, max_used: Color) -> bool {
        self.explored += 1;
        let Some(&e) = self.order.get(idx) else {
            return true;
        };
        let (u, v) = self.g.edge(e);
        let blocked = self.used[u] | self.used[v];
        for c in 1..=(max_used + 1).min(self.t) {
            let bit = 1u64 << (c - 1);
            if blocked & bit != 0 {
                continue;
            }
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.colors[e] = c;
            if self.run(idx + 1, max_used.max(c)) {
                return true;
            }
            self.used[u] &= !bit;
            self.used[v] &= !bit;
        }
        self.colors[e] = 0;
        false
    }
}
