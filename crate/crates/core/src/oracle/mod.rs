//! Exhaustive ground truth for small instances.
//!
//! Everything here is exponential. Entry points refuse graphs with more than
//! [`ORACLE_EDGE_LIMIT`] edges unless [`OracleOptions::override_size`] is set.

mod enumerate;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{exact_chromatic_index, Color, ColoringError, EdgeColoring};
use crate::graph::Graph;

pub use enumerate::{canonical_key, connected_near_regular_graphs};

pub const ORACLE_EDGE_LIMIT: usize = 20;

/// Colors are tracked in `u64` masks.
const MAX_COLORS: Color = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(
        "{edges} edges exceed the oracle limit of {limit}; pass the size override to run anyway"
    )]
    TooLarge { edges: usize, limit: usize },
    #[error("no proper {r}-coloring exists")]
    NoProperColoring { r: Color },
    #[error("color cap {0} exceeds the supported maximum of 64")]
    TooManyColors(Color),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OracleOptions {
    pub override_size: bool,
}

impl OracleOptions {
    fn admit(&self, g: &Graph) -> Result<(), OracleError> {
        if g.edge_count() > ORACLE_EDGE_LIMIT && !self.override_size {
            return Err(OracleError::TooLarge {
                edges: g.edge_count(),
                limit: ORACLE_EDGE_LIMIT,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub value: u64,
    #[serde(skip)]
    pub witness: EdgeColoring,
    /// Search nodes visited.
    pub explored: u64,
    /// Colors allowed in the final search.
    pub cap: Color,
    /// The optimum did not change when the cap was raised by one.
    pub cap_stable: bool,
}

/// Calls `visitor` once for every proper coloring of `g` with colors from
/// `1..=t` and returns how many there were. Edges are assigned in input order.
pub fn enumerate_proper_colorings<F: FnMut(&[Color])>(g: &Graph, t: Color, mut visitor: F) -> u64 {
    assert!(t <= MAX_COLORS, "at most 64 colors");
    let mut used = vec![0u64; g.vertex_count()];
    let mut colors = vec![0; g.edge_count()];
    fn rec<F: FnMut(&[Color])>(
        g: &Graph,
        t: Color,
        e: usize,
        used: &mut [u64],
        colors: &mut [Color],
        visitor: &mut F,
    ) -> u64 {
        if e == g.edge_count() {
            visitor(colors);
            return 1;
        }
        let (u, v) = g.edge(e);
        let mut count = 0;
        for c in 1..=t {
            let bit = 1u64 << (c - 1);
            if (used[u] | used[v]) & bit != 0 {
                continue;
            }
            used[u] |= bit;
            used[v] |= bit;
            colors[e] = c;
            count += rec(g, t, e + 1, used, colors, visitor);
            used[u] &= !bit;
            used[v] &= !bit;
        }
        count
    }
    rec(g, t, 0, &mut used, &mut colors, &mut visitor)
}

/// Minimum color sum over all proper colorings.
///
/// The search starts with the chromatic index as color cap and raises the cap
/// by one until the optimum stops changing.
pub fn exact_edge_chromatic_sum(
    g: &Graph,
    opts: OracleOptions,
) -> Result<OracleResult, OracleError> {
    opts.admit(g)?;
    if g.edge_count() == 0 {
        return Ok(OracleResult {
            value: 0,
            witness: EdgeColoring::new(Vec::new(), 0).unwrap(),
            explored: 0,
            cap: 0,
            cap_stable: true,
        });
    }
    let delta = g.max_degree() as Color;
    if delta + 1 > MAX_COLORS {
        return Err(OracleError::TooManyColors(delta + 1));
    }
    let chi =
        exact_chromatic_index(g, delta + 1).map_err(|_| OracleError::TooManyColors(delta + 1))?;
    let mut cap = chi.chi_prime;
    let mut best = MinSum::new(g, cap).run(None);
    let mut explored = best.explored;
    loop {
        if cap + 1 > MAX_COLORS {
            return Ok(OracleResult {
                explored,
                cap,
                cap_stable: false,
                ..best
            });
        }
        let wider = MinSum::new(g, cap + 1).run(Some(best.value));
        explored += wider.explored;
        if wider.value >= best.value {
            return Ok(OracleResult {
                explored,
                cap,
                cap_stable: true,
                ..best
            });
        }
        cap += 1;
        best = wider;
    }
}

struct MinSum<'g> {
    g: &'g Graph,
    t: Color,
    used: Vec<u64>,
    uncolored_at: Vec<u32>,
    colors: Vec<Color>,
    best: u64,
    best_colors: Option<Vec<Color>>,
    explored: u64,
}

impl<'g> MinSum<'g> {
    fn new(g: &'g Graph, t: Color) -> Self {
        MinSum {
            g,
            t,
            used: vec![0; g.vertex_count()],
            uncolored_at: (0..g.vertex_count()).map(|v| g.degree(v) as u32).collect(),
            colors: vec![0; g.edge_count()],
            best: u64::MAX,
            best_colors: None,
            explored: 0,
        }
    }

    /// Searches for a coloring cheaper than `incumbent`; returns the incumbent
    /// value (with an empty witness) when none exists.
    fn run(mut self, incumbent: Option<u64>) -> OracleResult {
        if let Some(v) = incumbent {
            self.best = v;
        }
        self.rec(0, 0);
        OracleResult {
            value: self.best,
            witness: EdgeColoring::new(self.best_colors.unwrap_or_default(), self.t).unwrap(),
            explored: self.explored,
            cap: self.t,
            cap_stable: false,
        }
    }

    /// Admissible completion cost for edges `from..`.
    fn lower_bound(&self, from: usize) -> u64 {
        let per_edge: u64 = self.g.edges()[from..]
            .iter()
            .map(|&(u, v)| ((self.used[u] | self.used[v]).trailing_ones() + 1) as u64)
            .sum();
        let per_vertex: u64 = (0..self.g.vertex_count())
            .map(|v| smallest_free_sum(self.used[v], self.uncolored_at[v]))
            .sum();
        per_edge.max(per_vertex.div_ceil(2))
    }

    fn rec(&mut self, e: usize, partial: u64) {
        self.explored += 1;
        if e == self.g.edge_count() {
            if partial < self.best {
                self.best = partial;
                self.best_colors = Some(self.colors.clone());
            }
            return;
        }
        if partial + self.lower_bound(e) >= self.best {
            return;
        }
        let (u, v) = self.g.edge(e);
        for c in 1..=self.t {
            let bit = 1u64 << (c - 1);
            if (self.used[u] | self.used[v]) & bit != 0 {
                continue;
            }
            if partial + c as u64 >= self.best {
                break;
            }
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.uncolored_at[u] -= 1;
            self.uncolored_at[v] -= 1;
            self.colors[e] = c;
            self.rec(e + 1, partial + c as u64);
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            self.uncolored_at[u] += 1;
            self.uncolored_at[v] += 1;
        }
    }
}

/// Sum of the `k` smallest colors absent from `mask`.
fn smallest_free_sum(mask: u64, k: u32) -> u64 {
    let mut free = !mask;
    let mut sum = 0;
    for _ in 0..k {
        if free == 0 {
            break;
        }
        sum += free.trailing_zeros() as u64 + 1;
        free &= free - 1;
    }
    sum
}

/// Largest number of sequential vertices over all proper `r`-colorings.
pub fn exact_max_sequential_set(
    g: &Graph,
    r: Color,
    opts: OracleOptions,
) -> Result<OracleResult, OracleError> {
    opts.admit(g)?;
    if r > MAX_COLORS {
        return Err(OracleError::TooManyColors(r));
    }
    match exact_chromatic_index(g, r) {
        Ok(_) => {}
        Err(ColoringError::CapExceeded { .. }) => return Err(OracleError::NoProperColoring { r }),
        Err(e) => unreachable!("unexpected solver error: {e}"),
    }
    let mut search = MaxSequential {
        g,
        r,
        used: vec![0; g.vertex_count()],
        spoiled_edges: vec![0; g.vertex_count()],
        spoiled: 0,
        colors: vec![0; g.edge_count()],
        best: None,
        best_colors: Vec::new(),
        explored: 0,
    };
    search.rec(0);
    let value = search.best.expect("a proper r-coloring exists") as u64;
    Ok(OracleResult {
        value,
        witness: EdgeColoring::new(search.best_colors, r).unwrap(),
        explored: search.explored,
        cap: r,
        cap_stable: true,
    })
}

struct MaxSequential<'g> {
    g: &'g Graph,
    r: Color,
    used: Vec<u64>,
    /// Incident edges whose color exceeds the vertex degree.
    spoiled_edges: Vec<u32>,
    spoiled: usize,
    colors: Vec<Color>,
    best: Option<usize>,
    best_colors: Vec<Color>,
    explored: u64,
}

impl MaxSequential<'_> {
    fn mark(&mut self, v: usize, c: Color, add: bool) {
        if c as usize > self.g.degree(v) {
            if add {
                self.spoiled_edges[v] += 1;
                if self.spoiled_edges[v] == 1 {
                    self.spoiled += 1;
                }
            } else {
                self.spoiled_edges[v] -= 1;
                if self.spoiled_edges[v] == 0 {
                    self.spoiled -= 1;
                }
            }
        }
    }

    fn rec(&mut self, e: usize) {
        self.explored += 1;
        let n = self.g.vertex_count();
        // a proper coloring gives v exactly d(v) colors, so v is sequential
        // iff none of them exceeds d(v)
        if self.best.is_some_and(|b| n - self.spoiled <= b) {
            return;
        }
        if e == self.g.edge_count() {
            self.best = Some(n - self.spoiled);
            self.best_colors = self.colors.clone();
            return;
        }
        let (u, v) = self.g.edge(e);
        for c in 1..=self.r {
            let bit = 1u64 << (c - 1);
            if (self.used[u] | self.used[v]) & bit != 0 {
                continue;
            }
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.mark(u, c, true);
            self.mark(v, c, true);
            self.colors[e] = c;
            self.rec(e + 1);
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            self.mark(u, c, false);
            self.mark(v, c, false);
            if self.best == Some(n) {
                return;
            }
        }
    }
}
