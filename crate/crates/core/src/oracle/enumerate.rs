use std::collections::BTreeMap;

use crate::graph::Graph;

/// Bitmask over vertex pairs `(i, j)`, `i < j`, indexed `j(j-1)/2 + i`.
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Isomorphism-invariant key of a graph on at most 16 vertices: the smallest
/// pair bitmask over all relabellings that list vertices by descending degree.
pub fn canonical_key(g: &Graph) -> u128 {
    let n = g.vertex_count();
    assert!(n <= 16, "canonical_key supports at most 16 vertices");
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let classes: Vec<Vec<usize>> = by_degree
        .chunk_by(|&a, &b| g.degree(a) == g.degree(b))
        .map(<[usize]>::to_vec)
        .collect();

    let mut best = u128::MAX;
    let mut label = vec![0usize; n];
    permute_classes(&classes, 0, 0, &mut label, &mut |label| {
        let key = g.edges().iter().fold(0u128, |acc, &(u, v)| {
            let (a, b) = (label[u].min(label[v]), label[u].max(label[v]));
            acc | 1 << pair_index(a, b)
        });
        best = best.min(key);
    });
    best
}

/// Assigns labels `offset..offset+|class|` to each class in every order.
fn permute_classes(
    classes: &[Vec<usize>],
    idx: usize,
    offset: usize,
    label: &mut [usize],
    visit: &mut dyn FnMut(&[usize]),
) {
    let Some(class) = classes.get(idx) else {
        visit(label);
        return;
    };
    let mut order = class.clone();
    let k = order.len();
    heap_permutations(&mut order, k, &mut |perm| {
        for (k, &v) in perm.iter().enumerate() {
            label[v] = offset + k;
        }
        permute_classes(classes, idx + 1, offset + class.len(), label, visit);
    });
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, visit);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permutations(items, k - 1, visit);
}

/// Every connected simple graph with at most `max_edges` edges, maximum degree
/// `r >= 3` and minimum degree at least `r - 1`, one per isomorphism class,
/// ordered by vertex count, edge count, then canonical key.
///
/// Minimum degree `>= 2` forces `n <= m`, so vertex counts run `4..=max_edges`.
pub fn connected_near_regular_graphs(max_edges: usize) -> Vec<Graph> {
    let mut found: BTreeMap<(usize, usize, u128), Graph> = BTreeMap::new();
    for n in 4..=max_edges.min(16) {
        for r in 3..n {
            // degree sum is at least (r-1)n + 1
            if (r - 1) * n + 1 > 2 * max_edges {
                break;
            }
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            // pairs at index >= p that touch v
            let mut remaining = vec![vec![0usize; n]; pairs.len() + 1];
            for p in (0..pairs.len()).rev() {
                remaining[p] = remaining[p + 1].clone();
                remaining[p][pairs[p].0] += 1;
                remaining[p][pairs[p].1] += 1;
            }
            let mut ctx = Search {
                n,
                r,
                max_edges,
                pairs: &pairs,
                remaining: &remaining,
                degree: vec![0; n],
                chosen: Vec::new(),
                found: &mut found,
            };
            ctx.rec(0);
        }
    }
    found.into_values().collect()
}

struct Search<'a> {
    n: usize,
    r: usize,
    max_edges: usize,
    pairs: &'a [(usize, usize)],
    remaining: &'a [Vec<usize>],
    degree: Vec<usize>,
    chosen: Vec<(usize, usize)>,
    found: &'a mut BTreeMap<(usize, usize, u128), Graph>,
}

impl Search<'_> {
    fn feasible(&self, p: usize) -> bool {
        (0..self.n).all(|v| self.degree[v] + self.remaining[p][v] >= self.r - 1)
    }

    fn rec(&mut self, p: usize) {
        if p == self.pairs.len() {
            if !self.degree.contains(&self.r) {
                return;
            }
            let g = Graph::new(self.n, self.chosen.iter().copied(), None).unwrap();
            if g.is_connected() {
                let key = canonical_key(&g);
                self.found.entry((self.n, g.edge_count(), key)).or_insert(g);
            }
            return;
        }
        let (i, j) = self.pairs[p];
        if self.chosen.len() < self.max_edges && self.degree[i] < self.r && self.degree[j] < self.r
        {
            self.degree[i] += 1;
            self.degree[j] += 1;
            self.chosen.push((i, j));
            if self.feasible(p + 1) {
                self.rec(p + 1);
            }
            self.chosen.pop();
            self.degree[i] -= 1;
            self.degree[j] -= 1;
        }
        if self.feasible(p + 1) {
            self.rec(p + 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::complete_bipartite;
    use crate::graph::named;

    #[test]
    fn isomorphic_graphs_share_keys() {
        let a = named::cycle(5);
        let b = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)], None).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
        assert_ne!(
            canonical_key(&named::cycle(6)),
            canonical_key(&complete_bipartite(2, 3).unwrap())
        );
        let p = named::path(4);
        let star = named::star(3);
        assert_ne!(canonical_key(&p), canonical_key(&star));
    }

    fn census(graphs: &[Graph]) -> Vec<((usize, usize), usize)> {
        let mut counts = BTreeMap::new();
        for g in graphs {
            *counts
                .entry((g.vertex_count(), g.edge_count()))
                .or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    // Expected counts taken from the graph atlas of all graphs on <= 7 vertices.
    #[test]
    fn census_up_to_six_edges() {
        let graphs = connected_near_regular_graphs(6);
        assert_eq!(census(&graphs), vec![((4, 5), 1), ((4, 6), 1), ((5, 6), 2)]);
        assert!(graphs.iter().any(|g| *g == named::complete(4)));
        let k23 = canonical_key(&complete_bipartite(2, 3).unwrap());
        assert!(graphs.iter().any(|g| canonical_key(g) == k23));
    }

    #[test]
    fn census_up_to_eight_edges() {
        let graphs = connected_near_regular_graphs(8);
        assert_eq!(
            census(&graphs),
            vec![
                ((4, 5), 1),
                ((4, 6), 1),
                ((5, 6), 2),
                ((5, 7), 1),
                ((5, 8), 1),
                ((6, 7), 4),
                ((6, 8), 4),
                ((7, 8), 6)
            ]
        );
        for g in &graphs {
            let p = g.degree_profile();
            assert!(p.near_regular && p.max_degree >= 3 && g.is_connected());
        }
    }
}
