//! Acceptance criteria, run without the libtest harness. Prints one
//! `[PASS]`/`[FAIL]` line per criterion and exits nonzero if any fails.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seqcolor::chromatic_sum::{
    coloring_sum, edge_sum_bound, edge_sum_bound_numerator, sum_report_for, sum_terms,
    vertex_estimate, vertex_sum_decomposition,
};
use seqcolor::coloring::{
    exact_chromatic_index, kempe_swap, konig_color_bipartite, misra_gries, obtain_r_coloring,
    verify_proper, AcquireError, Color, EdgeColoring,
};
use seqcolor::generate::{
    complete_bipartite, random_bipartite, random_biregular, random_gnp, regular_class1,
    RegularFamily,
};
use seqcolor::graph::{named, Graph};
use seqcolor::oracle::{
    connected_near_regular_graphs, exact_edge_chromatic_sum, exact_max_sequential_set,
    OracleOptions,
};
use seqcolor::sequential::{
    biregular_set_bound, missing_color_partition, select_swap_color, sequential_set_bound,
    sequentialize, swap_colors, SequentialError,
};

type Criterion = fn() -> (bool, String);

const CRITERIA: [Criterion; 8] = [
    criterion_1_k4,
    criterion_2_k23,
    criterion_3_k33,
    criterion_4_exhaustive_small_graphs,
    criterion_5_property_suite,
    criterion_6_biregular_bound_agreement,
    criterion_7_edge_sum_chain,
    criterion_8_class_two_and_heuristics,
];

fn main() {
    let mut failed = 0;
    for (i, criterion) in CRITERIA.iter().enumerate() {
        let (passed, detail) =
            std::panic::catch_unwind(criterion).unwrap_or_else(|_| (false, "panicked".to_string()));
        let tag = if passed { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {}: {detail}", i + 1);
        failed += usize::from(!passed);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        CRITERIA.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

/// Outcome of running the whole pipeline plus both oracles on one instance.
struct Checked {
    set_size: usize,
    bound: u64,
    verified: bool,
    oracle_max_set: u64,
    actual_sum: u64,
    sum_bound: u64,
    exact_sum: u64,
    cap_stable: bool,
    terms_ok: bool,
    estimate_ok: bool,
}

fn check_instance(g: &Graph) -> Checked {
    let cert = sequentialize(g).expect("pipeline succeeds");
    let r = cert.r as Color;
    let max_set = exact_max_sequential_set(g, r, OracleOptions::default()).unwrap();
    let exact = exact_edge_chromatic_sum(g, OracleOptions::default()).unwrap();
    let report = sum_report_for(g, &cert, false).unwrap();
    let terms = sum_terms(g, &cert.coloring).unwrap();
    let (n, n_r, r64) = (cert.n as u64, cert.n_r as u64, cert.r as u64);
    Checked {
        set_size: cert.set_size(),
        bound: cert.bound,
        verified: cert.verified,
        oracle_max_set: max_set.value,
        actual_sum: report.actual_sum,
        sum_bound: report.bound,
        exact_sum: exact.value,
        cap_stable: exact.cap_stable,
        terms_ok: terms.term_bounds_hold()
            && terms.missing_top.vertices == cert.partition.class(cert.selected_color),
        estimate_ok: terms.total() == 2 * report.actual_sum
            && terms.total() <= vertex_estimate(n, n_r, r64)
            && 2 * r64 * vertex_estimate(n, n_r, r64) <= edge_sum_bound_numerator(n, n_r, r64),
    }
}

fn chain_ok(c: &Checked) -> bool {
    c.exact_sum <= c.actual_sum && c.actual_sum <= c.sum_bound && c.terms_ok && c.estimate_ok
}

const ONE_SECOND: Duration = Duration::from_secs(1);

fn criterion_1_k4() -> (bool, String) {
    let start = Instant::now();
    let g = named::complete(4);
    let c = check_instance(&g);
    let elapsed = start.elapsed();
    let passed = c.verified
        && c.set_size == 4
        && c.bound == 4
        && sequential_set_bound(4, 4, 3) == 4
        && c.actual_sum == 12
        && c.sum_bound == 12
        && c.exact_sum == 12
        && c.cap_stable
        && elapsed < ONE_SECOND;
    (
        passed,
        format!(
            "K4 |R|={} bound={} sum={} bound={} exact={} in {elapsed:?}",
            c.set_size, c.bound, c.actual_sum, c.sum_bound, c.exact_sum
        ),
    )
}

fn criterion_2_k23() -> (bool, String) {
    let start = Instant::now();
    let g = complete_bipartite(2, 3).unwrap();
    let c = check_instance(&g);
    let elapsed = start.elapsed();
    let biregular = biregular_set_bound(5, 3);
    let passed = c.verified
        && biregular == 3
        && c.set_size as u64 >= biregular
        && c.oracle_max_set == 3
        && c.sum_bound == 12
        && edge_sum_bound(5, 2, 3) == 12
        && c.exact_sum == 12
        && elapsed < ONE_SECOND;
    (
        passed,
        format!(
            "K2,3 |R|={} >= {biregular}, oracle max |R|={}, sum bound={} exact={} in {elapsed:?}",
            c.set_size, c.oracle_max_set, c.sum_bound, c.exact_sum
        ),
    )
}

fn criterion_3_k33() -> (bool, String) {
    let start = Instant::now();
    let g = complete_bipartite(3, 3).unwrap();
    let c = check_instance(&g);
    let elapsed = start.elapsed();
    let passed = c.verified
        && c.set_size == 6
        && c.exact_sum == 18
        && c.sum_bound == 18
        && elapsed < ONE_SECOND;
    (
        passed,
        format!(
            "K3,3 |R|={} exact sum={} bound={} in {elapsed:?}",
            c.set_size, c.exact_sum, c.sum_bound
        ),
    )
}

/// Connected near-regular Class 1 graphs with `Δ >= 3` and at most 8 edges.
fn small_class_one_graphs() -> (Vec<Graph>, usize) {
    let all = connected_near_regular_graphs(8);
    let total = all.len();
    let class_one = all
        .into_iter()
        .filter(|g| {
            let delta = g.max_degree() as Color;
            exact_chromatic_index(g, delta + 1).unwrap().chi_prime == delta
        })
        .collect();
    (class_one, total)
}

fn criterion_4_exhaustive_small_graphs() -> (bool, String) {
    let start = Instant::now();
    let (graphs, total) = small_class_one_graphs();
    let mut violations = Vec::new();
    for g in &graphs {
        let c = check_instance(g);
        if !(c.verified && c.set_size as u64 >= c.bound && c.oracle_max_set >= c.bound) {
            violations.push(format!("{:?}", g.edges()));
        }
    }
    let elapsed = start.elapsed();
    let passed = !graphs.is_empty() && violations.is_empty() && elapsed < Duration::from_secs(60);
    (
        passed,
        format!(
            "{} Class 1 graphs of {total} near-regular candidates, {} violations in {elapsed:?}",
            graphs.len(),
            violations.len()
        ),
    )
}

/// A proper r-coloring of `g` scrambled by a color permutation and Kempe swaps.
fn scrambled_coloring(g: &Graph, rng: &mut ChaCha8Rng) -> EdgeColoring {
    let base = obtain_r_coloring(g).unwrap().coloring;
    let t = base.color_count();
    let mut perm: Vec<Color> = (1..=t).collect();
    perm.shuffle(rng);
    let mut c = base.permuted(&perm);
    for _ in 0..rng.random_range(0..8) {
        let v = rng.random_range(0..g.vertex_count());
        let a = rng.random_range(1..=t);
        let b = rng.random_range(1..=t);
        if a != b {
            c = kempe_swap(g, &c, v, a, b);
        }
    }
    c
}

/// Biregular, regular, or regular with a random matching removed (which keeps
/// the graph near-regular and Class 1 while making missing-color classes uneven).
fn fuzz_instance(case: usize, rng: &mut ChaCha8Rng) -> Graph {
    let r = [3, 4, 5][case % 3];
    match case % 4 {
        0 => random_biregular(r, rng.random_range(1..=3), rng.random()).unwrap(),
        1 => regular_class1(r, RegularFamily::CompleteBipartite).unwrap(),
        2 if r % 2 == 1 => regular_class1(r, RegularFamily::Complete).unwrap(),
        _ => {
            let base = if rng.random_bool(0.5) {
                random_biregular(r, rng.random_range(2..=3), rng.random()).unwrap()
            } else {
                regular_class1(r, RegularFamily::CompleteBipartite).unwrap()
            };
            // drop a random matching among degree-r vertices
            let mut order: Vec<usize> = (0..base.edge_count()).collect();
            order.shuffle(rng);
            let mut touched = vec![false; base.vertex_count()];
            let mut dropped = vec![false; base.edge_count()];
            for e in order {
                let (u, v) = base.edge(e);
                if base.degree(u) == r
                    && base.degree(v) == r
                    && !touched[u]
                    && !touched[v]
                    && rng.random_bool(0.5)
                {
                    touched[u] = true;
                    touched[v] = true;
                    dropped[e] = true;
                }
            }
            let kept = (0..base.edge_count())
                .filter(|&e| !dropped[e])
                .map(|e| base.edge(e));
            let g = Graph::new(base.vertex_count(), kept, None).unwrap();
            if g.max_degree() == r {
                g
            } else {
                base
            }
        }
    }
}

fn criterion_5_property_suite() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e9c01);
    let mut violations: Vec<String> = Vec::new();
    let mut swaps = 0;
    for case in 0..1000 {
        let g = fuzz_instance(case, &mut rng);
        let profile = g.degree_profile();
        let r = profile.r as Color;
        let alpha = scrambled_coloring(&g, &mut rng);
        let mut fail = |what: &str| violations.push(format!("case {case}: {what}"));
        if !verify_proper(&g, &alpha).unwrap().is_proper() {
            fail("scrambled coloring improper");
            continue;
        }

        let i = rng.random_range(1..=r);
        let beta = swap_colors(&alpha, i, r).unwrap();
        if !verify_proper(&g, &beta).unwrap().is_proper() {
            fail("swap broke properness");
        }
        if swap_colors(&beta, i, r).unwrap() != alpha {
            fail("swap is not an involution");
        }

        let p = missing_color_partition(&g, &alpha).unwrap();
        let mut owner = vec![0usize; g.vertex_count()];
        for class in p.classes() {
            for &v in class {
                owner[v] += 1;
            }
        }
        let disjoint_cover =
            (0..g.vertex_count()).all(|v| owner[v] == usize::from(g.degree(v) != profile.r));
        if !disjoint_cover {
            fail("classes not a partition of V minus V_r");
        }
        if p.total() != profile.n - profile.n_r {
            fail("class sizes do not sum to n - n_r");
        }
        let i0 = select_swap_color(&p);
        if p.class(i0).len() < (profile.n - profile.n_r).div_ceil(profile.r) {
            fail("selected class below the pigeonhole size");
        }
        if i0 != r {
            swaps += 1;
        }

        for c in [&alpha, &beta] {
            let sums = vertex_sum_decomposition(&g, c).unwrap();
            if sums.total != 2 * coloring_sum(&g, c).unwrap() {
                fail("double counting identity");
            }
        }
    }
    (
        violations.is_empty(),
        format!(
            "1000 fuzz cases (r in 3..=5), {swaps} needed a swap, {} violations{}",
            violations.len(),
            violations
                .first()
                .map(|v| format!(", first: {v}"))
                .unwrap_or_default()
        ),
    )
}

fn criterion_6_biregular_bound_agreement() -> (bool, String) {
    let mut mismatches = 0;
    for r in 3..=6u64 {
        for k in 1..=5u64 {
            let n = (2 * r - 1) * k;
            let n_r = (r - 1) * k;
            let a = sequential_set_bound(n, n_r, r);
            let b = biregular_set_bound(n, r);
            if !(a == b && b == r * k) {
                mismatches += 1;
            }
        }
    }
    (
        mismatches == 0,
        format!("20 (r, k) pairs, {mismatches} mismatches"),
    )
}

fn criterion_7_edge_sum_chain() -> (bool, String) {
    let mut instances = vec![
        named::complete(4),
        complete_bipartite(2, 3).unwrap(),
        complete_bipartite(3, 3).unwrap(),
    ];
    instances.extend(small_class_one_graphs().0);
    let failing: Vec<usize> = instances
        .iter()
        .enumerate()
        .filter(|(_, g)| !chain_ok(&check_instance(g)))
        .map(|(i, _)| i)
        .collect();
    (
        failing.is_empty(),
        format!(
            "{} instances checked for exact <= actual <= bound with per-term bounds, {} failures",
            instances.len(),
            failing.len()
        ),
    )
}

/// Near-regular Class 2 graphs built around a 5-cycle.
fn c5_based_class_two() -> Vec<(&'static str, Graph)> {
    let c5_two_chords = Graph::new(
        5,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)],
        None,
    )
    .unwrap();
    let k5_minus_edge = {
        let edges = named::complete(5)
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != (0, 1))
            .collect::<Vec<_>>();
        Graph::new(5, edges, None).unwrap()
    };
    vec![
        ("C5 + 2 chords", c5_two_chords),
        ("K5 (C5 + its complement)", named::complete(5)),
        ("K5 - e", k5_minus_edge),
    ]
}

fn criterion_8_class_two_and_heuristics() -> (bool, String) {
    let mut problems = Vec::new();
    let mut rejected = 0;
    let mut cases = vec![("Petersen", named::petersen())];
    cases.extend(c5_based_class_two());
    for (name, g) in &cases {
        assert!(
            g.degree_profile().near_regular && g.max_degree() >= 3,
            "{name}"
        );
        match sequentialize(g) {
            Err(SequentialError::Acquire(AcquireError::ClassTwo { .. })) => rejected += 1,
            other => problems.push(format!("{name}: {:?}", other.map(|c| c.set))),
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut konig_bad = 0;
    for _ in 0..200 {
        let g = random_bipartite(
            rng.random_range(1..15),
            rng.random_range(1..15),
            rng.random(),
            rng.random(),
        );
        let c = konig_color_bipartite(&g).unwrap();
        if !verify_proper(&g, &c).unwrap().is_proper() || c.color_count() as usize != g.max_degree()
        {
            konig_bad += 1;
        }
    }
    let mut mg_bad = 0;
    for _ in 0..200 {
        let g = random_gnp(rng.random_range(1..30), rng.random(), rng.random());
        let c = misra_gries(&g);
        if !verify_proper(&g, &c).unwrap().is_proper()
            || c.color_count() as usize > g.max_degree() + 1
        {
            mg_bad += 1;
        }
    }
    let passed = problems.is_empty() && konig_bad == 0 && mg_bad == 0;
    (
        passed,
        format!(
            "{rejected}/{} Class 2 inputs rejected; König off-Δ on {konig_bad}/200; Misra-Gries over Δ+1 on {mg_bad}/200{}",
            cases.len(),
            problems.first().map(|p| format!("; {p}")).unwrap_or_default()
        ),
    )
}
