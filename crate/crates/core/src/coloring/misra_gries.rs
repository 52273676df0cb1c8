use super::{Color, EdgeColoring};
use crate::graph::{EdgeId, Graph, Vertex};

/// Misra–Gries edge coloring with at most `Δ + 1` colors.
///
/// Edges are processed in input order. The result is compacted so that
/// `color_count` equals the number of distinct colors used.
pub fn misra_gries(g: &Graph) -> EdgeColoring {
    let mut state = State::new(g);
    for e in 0..g.edge_count() {
        state.color_edge(e);
    }
    EdgeColoring::compacted(
        state
            .colors
            .into_iter()
            .map(|c| c.expect("all edges colored"))
            .collect(),
    )
}

struct State<'g> {
    g: &'g Graph,
    colors: Vec<Option<Color>>,
    /// `at[v][c]` is the edge at `v` with color `c`.
    at: Vec<Vec<Option<EdgeId>>>,
    palette_size: Color,
}

impl<'g> State<'g> {
    fn new(g: &'g Graph) -> Self {
        let palette_size = g.max_degree() as Color + 1;
        State {
            g,
            colors: vec![None; g.edge_count()],
            at: vec![vec![None; palette_size as usize + 1]; g.vertex_count()],
            palette_size,
        }
    }

    fn is_free(&self, v: Vertex, c: Color) -> bool {
        self.at[v][c as usize].is_none()
    }

    fn free_color(&self, v: Vertex) -> Color {
        (1..=self.palette_size)
            .find(|&c| self.is_free(v, c))
            .expect("a vertex of degree <= Δ always misses one of Δ+1 colors")
    }

    fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.g.edge(e);
        if a == v {
            b
        } else {
            a
        }
    }

    fn uncolor(&mut self, e: EdgeId) {
        if let Some(c) = self.colors[e].take() {
            let (a, b) = self.g.edge(e);
            self.at[a][c as usize] = None;
            self.at[b][c as usize] = None;
        }
    }

    fn set_color(&mut self, e: EdgeId, c: Color) {
        let (a, b) = self.g.edge(e);
        debug_assert!(self.is_free(a, c) && self.is_free(b, c));
        self.colors[e] = Some(c);
        self.at[a][c as usize] = Some(e);
        self.at[b][c as usize] = Some(e);
    }

    /// Maximal fan at `u` starting with the uncolored edge `e = uv`.
    fn maximal_fan(&self, u: Vertex, v: Vertex, e: EdgeId) -> Vec<(Vertex, EdgeId)> {
        let mut fan = vec![(v, e)];
        let mut in_fan = vec![false; self.g.vertex_count()];
        in_fan[v] = true;
        loop {
            let last = fan.last().unwrap().0;
            let next = self.g.incident(u).iter().find(|&&(w, f)| {
                !in_fan[w] && self.colors[f].is_some_and(|c| self.is_free(last, c))
            });
            match next {
                Some(&(w, f)) => {
                    in_fan[w] = true;
                    fan.push((w, f));
                }
                None => return fan,
            }
        }
    }

    /// Swaps `c` and `d` on the alternating path leaving `u` with color `d`.
    fn invert_path(&mut self, u: Vertex, d: Color, c: Color) {
        let mut path = Vec::new();
        let (mut cur, mut want) = (u, d);
        while let Some(e) = self.at[cur][want as usize] {
            path.push(e);
            cur = self.other_end(e, cur);
            want = if want == d { c } else { d };
        }
        let old: Vec<Color> = path.iter().map(|&e| self.colors[e].unwrap()).collect();
        for &e in &path {
            self.uncolor(e);
        }
        for (&e, old) in path.iter().zip(old) {
            self.set_color(e, if old == c { d } else { c });
        }
    }

    fn color_edge(&mut self, e: EdgeId) {
        let (u, v) = self.g.edge(e);
        let fan = self.maximal_fan(u, v, e);
        let c = self.free_color(u);
        let d = self.free_color(fan.last().unwrap().0);
        if c != d {
            self.invert_path(u, d, c);
        }
        let w = fan
            .iter()
            .position(|&(x, _)| self.is_free(x, d))
            .expect("some fan vertex misses d after the path inversion");
        // rotate the prefix fan[..=w]
        let shifted: Vec<Color> = fan[1..=w]
            .iter()
            .map(|&(_, f)| self.colors[f].unwrap())
            .collect();
        for &(_, f) in &fan[1..=w] {
            self.uncolor(f);
        }
        for (&(_, f), col) in fan[..w].iter().zip(shifted) {
            self.set_color(f, col);
        }
        self.set_color(fan[w].1, d);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_proper;
    use crate::generate::random_gnp;
    use crate::graph::named;
    use proptest::prelude::*;

    #[test]
    fn cycle5_within_three() {
        let g = named::cycle(5);
        let c = misra_gries(&g);
        assert!(verify_proper(&g, &c).unwrap().is_proper());
        assert!(c.color_count() <= 3);
    }

    #[test]
    fn k4_within_four() {
        let g = named::complete(4);
        let c = misra_gries(&g);
        assert!(verify_proper(&g, &c).unwrap().is_proper());
        assert!(c.color_count() <= 4);
    }

    #[test]
    fn petersen_needs_four() {
        let g = named::petersen();
        let c = misra_gries(&g);
        assert!(verify_proper(&g, &c).unwrap().is_proper());
        assert_eq!(c.color_count(), 4);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::new(3, [], None).unwrap();
        assert_eq!(misra_gries(&g).color_count(), 0);
    }

    #[test]
    fn dense_graphs() {
        for n in 2..12 {
            let g = named::complete(n);
            let c = misra_gries(&g);
            assert!(verify_proper(&g, &c).unwrap().is_proper(), "K{n}");
            assert!(c.color_count() as usize <= n);
        }
    }

    proptest! {
        #[test]
        fn within_vizing_bound(n in 1usize..25, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = random_gnp(n, p, seed);
            let c = misra_gries(&g);
            prop_assert!(verify_proper(&g, &c).unwrap().is_proper());
            prop_assert!(c.color_count() as usize <= g.max_degree() + 1);
        }
    }
}
