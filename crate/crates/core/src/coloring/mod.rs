//! Proper edge colorings: representation, verification, and constructors.
//!
//! Colors are positive integers `1..=t`. A coloring is a plain vector indexed
//! by [`EdgeId`] of its host graph, so it is only meaningful next to that graph.

mod acquire;
mod exact;
mod konig;
mod misra_gries;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

pub use acquire::{obtain_r_coloring, AcquireError, Acquired, Method, EXACT_EDGE_LIMIT};
pub use exact::{exact_chromatic_index, ChromaticIndex};
pub use konig::konig_color_bipartite;
pub use misra_gries::misra_gries;

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("edge {edge} has color {color}, outside 1..={color_count}")]
    ColorOutOfRange {
        edge: EdgeId,
        color: Color,
        color_count: Color,
    },
    #[error("coloring covers {found} edges but the graph has {expected}")]
    Coverage { expected: usize, found: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("coloring is not proper ({0} clashes)")]
    Improper(usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("no proper coloring with at most {cap} colors; chromatic index >= {lower_bound}")]
    CapExceeded { cap: Color, lower_bound: Color },
    #[error("coloring file: {0}")]
    Parse(String),
}

/// An assignment of a color in `1..=color_count` to every edge of a host graph.
///
/// Range is enforced on construction; totality against a particular graph and
/// properness are checked by [`verify_proper`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<Color>,
    color_count: Color,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>, color_count: Color) -> Result<Self, ColoringError> {
        if let Some((edge, &color)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > color_count)
        {
            return Err(ColoringError::ColorOutOfRange {
                edge,
                color,
                color_count,
            });
        }
        Ok(EdgeColoring {
            colors,
            color_count,
        })
    }

    /// Relabels the distinct colors of `colors` to `1..=k` preserving their
    /// order, so that `color_count` is the number of colors actually used.
    pub fn compacted(mut colors: Vec<Color>) -> Self {
        let used: BTreeSet<Color> = colors.iter().copied().collect();
        let rank: std::collections::HashMap<Color, Color> =
            used.iter().zip(1..).map(|(&c, i)| (c, i)).collect();
        for c in &mut colors {
            *c = rank[c];
        }
        EdgeColoring {
            colors,
            color_count: used.len() as Color,
        }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn color_count(&self) -> Color {
        self.color_count
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Same assignment with a wider (or equal) palette.
    pub fn with_color_count(self, color_count: Color) -> Result<Self, ColoringError> {
        EdgeColoring::new(self.colors, color_count)
    }

    /// Applies `perm[c - 1]` to every color `c`. `perm` must be a permutation of `1..=t`.
    pub fn permuted(&self, perm: &[Color]) -> Self {
        debug_assert_eq!(perm.len(), self.color_count as usize);
        EdgeColoring {
            colors: self.colors.iter().map(|&c| perm[c as usize - 1]).collect(),
            color_count: self.color_count,
        }
    }

    fn check_cover(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.edge_count() {
            return Err(ColoringError::Coverage {
                expected: g.edge_count(),
                found: self.colors.len(),
            });
        }
        Ok(())
    }
}

/// A set of colors, e.g. the palette `S(v, c)` of a vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ColorSet(BTreeSet<Color>);

impl ColorSet {
    pub fn contains(&self, c: Color) -> bool {
        self.0.contains(&c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.0.iter().copied()
    }

    /// True iff the set is exactly `{1, ..., d}`.
    pub fn is_initial_segment(&self, d: usize) -> bool {
        self.0.len() == d && self.0.last().is_none_or(|&m| m as usize == d)
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        ColorSet(iter.into_iter().collect())
    }
}

/// Two or more edges at `vertex` sharing `color`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clash {
    pub vertex: Vertex,
    pub color: Color,
    pub edges: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProperVerdict {
    pub violations: Vec<Clash>,
}

impl ProperVerdict {
    pub fn is_proper(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Lists every `(vertex, color)` pair carried by more than one incident edge.
pub fn verify_proper(g: &Graph, c: &EdgeColoring) -> Result<ProperVerdict, ColoringError> {
    c.check_cover(g)?;
    let mut violations = Vec::new();
    for v in 0..g.vertex_count() {
        let mut by_color: Vec<(Color, EdgeId)> = g
            .incident(v)
            .iter()
            .map(|&(_, e)| (c.color(e), e))
            .collect();
        by_color.sort_unstable();
        for group in by_color.chunk_by(|a, b| a.0 == b.0) {
            if group.len() > 1 {
                violations.push(Clash {
                    vertex: v,
                    color: group[0].0,
                    edges: group.iter().map(|&(_, e)| e).collect(),
                });
            }
        }
    }
    Ok(ProperVerdict { violations })
}

pub(crate) fn ensure_proper(g: &Graph, c: &EdgeColoring) -> Result<(), ColoringError> {
    let verdict = verify_proper(g, c)?;
    if verdict.is_proper() {
        Ok(())
    } else {
        Err(ColoringError::Improper(verdict.violations.len()))
    }
}

/// `S(v, c)`: the colors on edges incident to `v`.
pub fn palette(g: &Graph, c: &EdgeColoring, v: Vertex) -> Result<ColorSet, ColoringError> {
    c.check_cover(g)?;
    if v >= g.vertex_count() {
        return Err(ColoringError::UnknownVertex(v));
    }
    Ok(palette_unchecked(g, c, v))
}

pub(crate) fn palette_unchecked(g: &Graph, c: &EdgeColoring, v: Vertex) -> ColorSet {
    g.incident(v).iter().map(|&(_, e)| c.color(e)).collect()
}

/// Swaps colors `a` and `b` along the maximal `a/b` alternating chain through
/// `start`. Properness is preserved.
pub fn kempe_swap(g: &Graph, c: &EdgeColoring, start: Vertex, a: Color, b: Color) -> EdgeColoring {
    let mut colors = c.colors.clone();
    let mut on_chain = vec![false; g.edge_count()];
    let mut stack = vec![start];
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &(w, e) in g.incident(v) {
            if (c.color(e) == a || c.color(e) == b) && !on_chain[e] {
                on_chain[e] = true;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    for (e, col) in colors.iter_mut().enumerate() {
        if on_chain[e] {
            *col = if *col == a { b } else { a };
        }
    }
    EdgeColoring {
        colors,
        color_count: c.color_count,
    }
}

/// Serializes as a `t=<count>` header followed by one `u v c` line per edge.
pub fn emit_coloring(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = format!("t={}\n", c.color_count);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "{u} {v} {}", c.color(e));
    }
    out
}

/// One `"u v c"` string per edge, in edge order.
pub fn coloring_lines(g: &Graph, c: &EdgeColoring) -> Vec<String> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| format!("{u} {v} {}", c.color(e)))
        .collect()
}

/// Parses the `t=<count>` / `u v c` format against `g`. Every edge of `g`
/// must appear exactly once; line order is free.
pub fn parse_coloring(g: &Graph, text: &str) -> Result<EdgeColoring, ColoringError> {
    let perr = |m: String| ColoringError::Parse(m);
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| perr("empty input".into()))?;
    let t: Color = header
        .strip_prefix("t=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| perr(format!("expected header \"t=<count>\", found {header:?}")))?;
    let mut colors: Vec<Option<Color>> = vec![None; g.edge_count()];
    for line in lines {
        let nums: Vec<u64> = line
            .split_whitespace()
            .map(|tok| tok.parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|_| perr(format!("malformed line {line:?}")))?;
        let [u, v, col] = nums[..] else {
            return Err(perr(format!("expected \"u v c\", found {line:?}")));
        };
        let e = g
            .edge_between(u as usize, v as usize)
            .ok_or_else(|| perr(format!("{u}-{v} is not an edge of the graph")))?;
        if colors[e].is_some() {
            return Err(perr(format!("edge {u}-{v} colored twice")));
        }
        colors[e] = Some(col as Color);
    }
    let found = colors.iter().filter(|c| c.is_some()).count();
    if found != g.edge_count() {
        return Err(ColoringError::Coverage {
            expected: g.edge_count(),
            found,
        });
    }
    EdgeColoring::new(colors.into_iter().map(Option::unwrap).collect(), t)
}
