//! Turning a proper `r`-coloring of a near-regular graph into an
//! `R`-sequential `r`-coloring with a certified lower bound on `|R|`.
//!
//! A vertex `v` is *sequential* under a coloring when its palette is exactly
//! `{1, ..., d(v)}`. With `Δ - δ <= 1` and `r = Δ` colors, every vertex of
//! degree `r - 1` misses exactly one color, so the classes
//! `V(i) = {v : i not in S(v)}` partition the deficient vertices. Some class
//! has at least `⌈(n - n_r) / r⌉` members; exchanging that class's color with
//! `r` makes all of them sequential, and degree-`r` vertices always are.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{
    ensure_proper, obtain_r_coloring, palette_unchecked, verify_proper, AcquireError, Acquired,
    Color, ColoringError, EdgeColoring, Method,
};
use crate::graph::{Graph, Vertex};

/// A violated hypothesis of the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Error)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Precondition {
    #[error("degree gap {max_degree} - {min_degree} exceeds 1")]
    NotNearRegular {
        max_degree: usize,
        min_degree: usize,
    },
    #[error("maximum degree {r} is below 3")]
    DegreeBelowThree { r: usize },
    #[error("coloring uses a palette of {found} colors, expected r = {expected}")]
    WrongColorCount { expected: usize, found: usize },
    #[error("coloring is not proper ({clashes} clashes)")]
    Improper { clashes: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequentialError {
    #[error("preconditions violated: {}", join(.0))]
    Preconditions(Vec<Precondition>),
    #[error(transparent)]
    Acquire(#[from] AcquireError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("swap color {color} outside 1..={r}")]
    ColorOutOfRange { color: Color, r: Color },
}

fn join(items: &[Precondition]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// The classes `V(i)` for `i = 1..=r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MissingColorPartition {
    r: Color,
    classes: Vec<Vec<Vertex>>,
}

impl MissingColorPartition {
    pub fn r(&self) -> Color {
        self.r
    }

    /// Vertices missing color `i`, ascending. `i` is 1-based.
    pub fn class(&self, i: Color) -> &[Vertex] {
        &self.classes[i as usize - 1]
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    /// For tests and tools that need a partition with prescribed classes.
    pub fn from_classes(classes: Vec<Vec<Vertex>>) -> Self {
        MissingColorPartition {
            r: classes.len() as Color,
            classes,
        }
    }
}

fn check_profile(g: &Graph) -> Vec<Precondition> {
    let (max_degree, min_degree) = (g.max_degree(), g.min_degree());
    let mut failed = Vec::new();
    if max_degree - min_degree > 1 {
        failed.push(Precondition::NotNearRegular {
            max_degree,
            min_degree,
        });
    }
    if max_degree < 3 {
        failed.push(Precondition::DegreeBelowThree { r: max_degree });
    }
    failed
}

/// Computes `V(i) = {v : i not in S(v, a)}` for every color of an `r`-coloring.
///
/// Every violated precondition is reported, not just the first.
pub fn missing_color_partition(
    g: &Graph,
    a: &EdgeColoring,
) -> Result<MissingColorPartition, SequentialError> {
    let mut failed = check_profile(g);
    let r = g.max_degree();
    if a.color_count() as usize != r {
        failed.push(Precondition::WrongColorCount {
            expected: r,
            found: a.color_count() as usize,
        });
    }
    let verdict = verify_proper(g, a)?;
    if !verdict.is_proper() {
        failed.push(Precondition::Improper {
            clashes: verdict.violations.len(),
        });
    }
    if !failed.is_empty() {
        return Err(SequentialError::Preconditions(failed));
    }
    let mut classes = vec![Vec::new(); r];
    for v in 0..g.vertex_count() {
        let p = palette_unchecked(g, a, v);
        for i in 1..=r as Color {
            if !p.contains(i) {
                classes[i as usize - 1].push(v);
            }
        }
    }
    Ok(MissingColorPartition {
        r: r as Color,
        classes,
    })
}

/// The color `i₀` whose class is largest. Ties prefer `r` (no recoloring
/// needed), then the smallest index.
pub fn select_swap_color(p: &MissingColorPartition) -> Color {
    let r = p.r;
    let best = p.classes.iter().map(Vec::len).max().unwrap_or(0);
    if p.class(r).len() == best {
        return r;
    }
    (1..=r).find(|&i| p.class(i).len() == best).unwrap()
}

/// Exchanges colors `i₀` and `r`; every other color is unchanged.
pub fn swap_colors(a: &EdgeColoring, i0: Color, r: Color) -> Result<EdgeColoring, SequentialError> {
    if r != a.color_count() {
        return Err(SequentialError::ColorOutOfRange {
            color: r,
            r: a.color_count(),
        });
    }
    if i0 == 0 || i0 > r {
        return Err(SequentialError::ColorOutOfRange { color: i0, r });
    }
    let colors = a
        .colors()
        .iter()
        .map(|&c| match c {
            c if c == r => i0,
            c if c == i0 => r,
            c => c,
        })
        .collect();
    Ok(EdgeColoring::new(colors, r)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequentialVerdict {
    /// Members of `R` whose palette is not `{1, ..., d(v)}`.
    pub failing: Vec<Vertex>,
}

impl SequentialVerdict {
    pub fn holds(&self) -> bool {
        self.failing.is_empty()
    }
}

/// Checks that every `v` in `set` sees exactly the colors `1..=d(v)`.
pub fn verify_sequential(
    g: &Graph,
    c: &EdgeColoring,
    set: &[Vertex],
) -> Result<SequentialVerdict, ColoringError> {
    if c.len() != g.edge_count() {
        return Err(ColoringError::Coverage {
            expected: g.edge_count(),
            found: c.len(),
        });
    }
    if let Some(&v) = set.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(ColoringError::UnknownVertex(v));
    }
    let failing = set
        .iter()
        .copied()
        .filter(|&v| !palette_unchecked(g, c, v).is_initial_segment(g.degree(v)))
        .collect();
    Ok(SequentialVerdict { failing })
}

/// All vertices that are sequential under `c`.
pub fn sequential_vertices(g: &Graph, c: &EdgeColoring) -> Vec<Vertex> {
    (0..g.vertex_count())
        .filter(|&v| palette_unchecked(g, c, v).is_initial_segment(g.degree(v)))
        .collect()
}

/// `⌈((r - 1) n_r + n) / r⌉`, equivalently `n_r + ⌈(n - n_r) / r⌉`.
pub fn sequential_set_bound(n: u64, n_r: u64, r: u64) -> u64 {
    assert!(r > 0 && n_r <= n, "bound needs r > 0 and n_r <= n");
    ((r - 1) * n_r + n).div_ceil(r)
}

/// `⌈r n / (2r - 1)⌉`, the guarantee for `(r-1, r)`-biregular bipartite graphs.
pub fn biregular_set_bound(n: u64, r: u64) -> u64 {
    assert!(r > 0, "bound needs r > 0");
    (r * n).div_ceil(2 * r - 1)
}

/// Whether `(n, n_r)` is the profile of an `(r-1, r)`-biregular bipartite
/// graph: `n = (2r - 1) k` and `n_r = (r - 1) k` for some `k >= 1`.
pub fn is_biregular_profile(n: u64, n_r: u64, r: u64) -> bool {
    r > 0 && n > 0 && n.is_multiple_of(2 * r - 1) && n_r == (r - 1) * (n / (2 * r - 1))
}

/// Result of [`sequentialize`]: the final coloring and its certified set `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequentialCertificate {
    pub r: usize,
    pub n: usize,
    pub n_r: usize,
    /// `i₀`, the color whose missing class joins `R`.
    pub selected_color: Color,
    /// `Some(i₀)` when colors `i₀` and `r` were exchanged, `None` when `i₀ = r`.
    pub swap_color: Option<Color>,
    /// `V_r ∪ V(i₀)`, computed from the coloring before the swap; ascending.
    pub set: Vec<Vertex>,
    pub bound: u64,
    pub verified: bool,
    pub coloring: EdgeColoring,
    pub initial: EdgeColoring,
    pub partition: MissingColorPartition,
    pub method: Method,
}

impl SequentialCertificate {
    pub fn set_size(&self) -> usize {
        self.set.len()
    }

    pub fn meets_bound(&self) -> bool {
        self.set.len() as u64 >= self.bound
    }
}

/// Full pipeline: acquire a proper `Δ`-coloring, then [`sequentialize_with`].
pub fn sequentialize(g: &Graph) -> Result<SequentialCertificate, SequentialError> {
    let failed = check_profile(g);
    if !failed.is_empty() {
        return Err(SequentialError::Preconditions(failed));
    }
    let acquired = obtain_r_coloring(g)?;
    sequentialize_with(g, acquired)
}

/// Runs partition, color selection and swap on a supplied proper `r`-coloring.
pub fn sequentialize_with(
    g: &Graph,
    alpha: Acquired,
) -> Result<SequentialCertificate, SequentialError> {
    let partition = missing_color_partition(g, &alpha.coloring)?;
    let profile = g.degree_profile();
    let r = partition.r();
    let i0 = select_swap_color(&partition);
    let coloring = swap_colors(&alpha.coloring, i0, r)?;

    let mut set: Vec<Vertex> = profile
        .v_r
        .iter()
        .chain(partition.class(i0))
        .copied()
        .collect();
    set.sort_unstable();
    set.dedup();

    ensure_proper(g, &coloring)?;
    let verified = verify_sequential(g, &coloring, &set)?.holds();
    Ok(SequentialCertificate {
        r: profile.r,
        n: profile.n,
        n_r: profile.n_r,
        selected_color: i0,
        swap_color: (i0 != r).then_some(i0),
        bound: sequential_set_bound(profile.n as u64, profile.n_r as u64, r as u64),
        set,
        verified,
        coloring,
        initial: alpha.coloring,
        partition,
        method: alpha.method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::tests::{k23_reference, k4_matchings};
    use crate::coloring::verify_proper;
    use crate::generate::random_biregular;
    use crate::graph::named;
    use proptest::prelude::*;

    fn given(c: EdgeColoring) -> Acquired {
        Acquired {
            coloring: c,
            method: Method::Given,
        }
    }

    #[test]
    fn k4_partition_is_empty() {
        let (g, c) = k4_matchings();
        let p = missing_color_partition(&g, &c).unwrap();
        assert!(p.classes().iter().all(Vec::is_empty));
        assert_eq!(select_swap_color(&p), 3);
    }

    #[test]
    fn k23_partition() {
        let (g, c) = k23_reference();
        let p = missing_color_partition(&g, &c).unwrap();
        // y1 = 2, y2 = 3, y3 = 4
        assert_eq!(p.class(1), &[3]);
        assert_eq!(p.class(2), &[4]);
        assert_eq!(p.class(3), &[2]);
        assert_eq!(select_swap_color(&p), 3);
    }

    #[test]
    fn unique_maximum_wins() {
        let p = MissingColorPartition::from_classes(vec![vec![0], vec![1, 2], vec![]]);
        assert_eq!(select_swap_color(&p), 2);
        let tie = MissingColorPartition::from_classes(vec![vec![], vec![1, 2], vec![0, 3]]);
        assert_eq!(select_swap_color(&tie), 3);
        let low = MissingColorPartition::from_classes(vec![vec![5, 6], vec![1, 2], vec![0]]);
        assert_eq!(select_swap_color(&low), 1);
    }

    #[test]
    fn partition_preconditions_reported_together() {
        let g = named::star(3);
        let c = EdgeColoring::new(vec![1, 1, 2], 2).unwrap();
        let Err(SequentialError::Preconditions(failed)) = missing_color_partition(&g, &c) else {
            panic!("expected precondition failures");
        };
        assert_eq!(
            failed,
            vec![
                Precondition::NotNearRegular {
                    max_degree: 3,
                    min_degree: 1
                },
                Precondition::WrongColorCount {
                    expected: 3,
                    found: 2
                },
                Precondition::Improper { clashes: 1 },
            ]
        );
        let c4 = named::cycle(4);
        let Err(SequentialError::Preconditions(failed)) =
            missing_color_partition(&c4, &EdgeColoring::new(vec![1, 2, 1, 2], 2).unwrap())
        else {
            panic!("expected precondition failures");
        };
        assert_eq!(failed, vec![Precondition::DegreeBelowThree { r: 2 }]);
    }

    #[test]
    fn swap_identity_and_involution() {
        let (_, c) = k23_reference();
        assert_eq!(swap_colors(&c, 3, 3).unwrap(), c);
        let once = swap_colors(&c, 1, 3).unwrap();
        assert_eq!(swap_colors(&once, 1, 3).unwrap(), c);
    }

    #[test]
    fn swap_on_k23() {
        let (g, c) = k23_reference();
        let b = swap_colors(&c, 1, 3).unwrap();
        // x1y1 (edge 0) and x2y3 (edge 5) were 1; x1y3 (edge 2) and x2y2 (edge 4) were 3
        assert_eq!(b.colors(), &[3, 2, 1, 2, 1, 3]);
        assert!(verify_proper(&g, &b).unwrap().is_proper());
    }

    #[test]
    fn swap_rejects_bad_colors() {
        let (_, c) = k23_reference();
        assert!(matches!(
            swap_colors(&c, 0, 3),
            Err(SequentialError::ColorOutOfRange { .. })
        ));
        assert!(matches!(
            swap_colors(&c, 4, 3),
            Err(SequentialError::ColorOutOfRange { .. })
        ));
        assert!(matches!(
            swap_colors(&c, 1, 4),
            Err(SequentialError::ColorOutOfRange { .. })
        ));
    }

    #[test]
    fn verify_sequential_cases() {
        let (g, c) = k4_matchings();
        assert!(verify_sequential(&g, &c, &[0, 1, 2, 3]).unwrap().holds());
        assert!(verify_sequential(&g, &c, &[]).unwrap().holds());
        assert_eq!(
            verify_sequential(&g, &c, &[9]),
            Err(ColoringError::UnknownVertex(9))
        );
        let (g, c) = k23_reference();
        // y3 has palette {1, 3}
        assert_eq!(verify_sequential(&g, &c, &[0, 4]).unwrap().failing, vec![4]);
    }

    #[test]
    fn bound_values() {
        assert_eq!(sequential_set_bound(4, 4, 3), 4);
        assert_eq!(sequential_set_bound(5, 2, 3), 3);
        assert_eq!(sequential_set_bound(14, 6, 4), 8);
        assert_eq!(biregular_set_bound(5, 3), 3);
        assert_eq!(biregular_set_bound(14, 4), 8);
        for r in 3..=6u64 {
            for k in 1..=5u64 {
                assert_eq!(biregular_set_bound((2 * r - 1) * k, r), r * k);
            }
        }
    }

    #[test]
    fn bound_identity_exhaustive() {
        for r in 3..=10u64 {
            for n in 0..=60u64 {
                for n_r in 0..=n {
                    let alt = n_r + (n - n_r).div_ceil(r);
                    assert_eq!(
                        sequential_set_bound(n, n_r, r),
                        alt,
                        "n={n} n_r={n_r} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn biregular_profiles() {
        assert!(is_biregular_profile(5, 2, 3));
        assert!(is_biregular_profile(14, 6, 4));
        assert!(!is_biregular_profile(4, 4, 3));
        assert!(!is_biregular_profile(5, 3, 3));
        assert!(!is_biregular_profile(0, 0, 3));
    }

    #[test]
    fn k4_pipeline() {
        let cert = sequentialize(&named::complete(4)).unwrap();
        assert_eq!(cert.set, vec![0, 1, 2, 3]);
        assert_eq!(cert.bound, 4);
        assert!(cert.verified);
        assert_eq!(cert.swap_color, None);
    }

    #[test]
    fn k23_pipeline_with_reference_coloring() {
        let (g, c) = k23_reference();
        let cert = sequentialize_with(&g, given(c)).unwrap();
        assert_eq!(cert.set, vec![0, 1, 2]);
        assert_eq!(cert.bound, 3);
        assert!(cert.verified && cert.meets_bound());
    }

    /// Triangular prism minus the edge 0-1, 3-colored so that both degree-2
    /// vertices miss color 1.
    pub(crate) fn prism_minus_edge() -> (Graph, EdgeColoring) {
        let edges = [
            (1, 2),
            (0, 2),
            (0, 3),
            (1, 4),
            (2, 5),
            (3, 4),
            (4, 5),
            (3, 5),
        ];
        let g = Graph::new(6, edges, None).unwrap();
        let c = EdgeColoring::new(vec![2, 3, 2, 3, 1, 1, 2, 3], 3).unwrap();
        (g, c)
    }

    #[test]
    fn forced_swap() {
        let (g, c) = prism_minus_edge();
        let p = missing_color_partition(&g, &c).unwrap();
        assert_eq!(p.sizes(), vec![2, 0, 0]);
        let cert = sequentialize_with(&g, given(c)).unwrap();
        assert_eq!(cert.selected_color, 1);
        assert_eq!(cert.swap_color, Some(1));
        assert_eq!(cert.set, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(cert.bound, sequential_set_bound(6, 4, 3));
        assert!(cert.verified);
    }

    #[test]
    fn petersen_is_rejected() {
        assert!(matches!(
            sequentialize(&named::petersen()),
            Err(SequentialError::Acquire(AcquireError::ClassTwo { .. }))
        ));
    }

    #[test]
    fn star_is_rejected_before_coloring() {
        assert!(matches!(
            sequentialize(&named::star(3)),
            Err(SequentialError::Preconditions(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn pipeline_invariants(r in 3usize..6, k in 1usize..5, seed in any::<u64>()) {
            let g = random_biregular(r, k, seed).unwrap();
            let cert = sequentialize(&g).unwrap();
            let p = &cert.partition;
            let mut all: Vec<Vertex> = p.classes().concat();
            all.sort_unstable();
            let deficient: Vec<Vertex> = (0..g.vertex_count()).filter(|&v| g.degree(v) < r).collect();
            prop_assert_eq!(all, deficient);
            prop_assert_eq!(p.total(), cert.n - cert.n_r);
            prop_assert!(p.class(cert.selected_color).len() >= (cert.n - cert.n_r).div_ceil(r));
            prop_assert!(cert.verified);
            prop_assert_eq!(cert.set.len(), cert.n_r + p.class(cert.selected_color).len());
            prop_assert!(cert.meets_bound());
            prop_assert_eq!(cert.bound, biregular_set_bound(cert.n as u64, r as u64));
            prop_assert_eq!(cert.bound, (r * k) as u64);
        }
    }
}
