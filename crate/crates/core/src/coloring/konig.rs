use super::{Color, ColoringError, EdgeColoring};
use crate::graph::{EdgeId, Graph, Vertex};

/// Proper `Δ`-coloring of a bipartite graph by alternating-path recoloring.
///
/// For each edge `uv` in input order pick `a` free at `u` and `b` free at `v`;
/// if `a` is taken at `v`, swap `a`/`b` along the alternating path leaving `v`
/// with color `a`. Bipartiteness keeps that path away from `u`.
pub fn konig_color_bipartite(g: &Graph) -> Result<EdgeColoring, ColoringError> {
    if !g.is_bipartite() {
        return Err(ColoringError::NotBipartite);
    }
    let delta = g.max_degree();
    let mut colors: Vec<Color> = vec![0; g.edge_count()];
    let mut at: Vec<Vec<Option<EdgeId>>> = vec![vec![None; delta + 1]; g.vertex_count()];
    let free = |at: &Vec<Vec<Option<EdgeId>>>, v: Vertex| -> Color {
        (1..=delta)
            .find(|&c| at[v][c].is_none())
            .expect("vertex with an uncolored edge has a free color") as Color
    };

    for e in 0..g.edge_count() {
        let (u, v) = g.edge(e);
        let a = free(&at, u);
        if at[v][a as usize].is_some() {
            let b = free(&at, v);
            let mut path = Vec::new();
            let (mut cur, mut want) = (v, a);
            while let Some(f) = at[cur][want as usize] {
                path.push(f);
                let (x, y) = g.edge(f);
                cur = if x == cur { y } else { x };
                want = if want == a { b } else { a };
            }
            debug_assert!(cur != u, "alternating path closed an odd cycle");
            for &f in &path {
                let (x, y) = g.edge(f);
                at[x][colors[f] as usize] = None;
                at[y][colors[f] as usize] = None;
            }
            for &f in &path {
                colors[f] = if colors[f] == a { b } else { a };
                let (x, y) = g.edge(f);
                at[x][colors[f] as usize] = Some(f);
                at[y][colors[f] as usize] = Some(f);
            }
        }
        colors[e] = a;
        at[u][a as usize] = Some(e);
        at[v][a as usize] = Some(e);
    }
    EdgeColoring::new(colors, delta as Color)
}
