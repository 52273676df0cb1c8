use serde::Serialize;
use thiserror::Error;

use super::{exact_chromatic_index, konig_color_bipartite, misra_gries, Color, EdgeColoring};
use crate::graph::Graph;

/// Edge-count ceiling for the exact fallback in [`obtain_r_coloring`].
pub const EXACT_EDGE_LIMIT: usize = 20;

/// How a `Δ`-coloring was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Konig,
    MisraGries,
    Exact,
    /// Supplied by the caller.
    Given,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AcquireError {
    /// The exact solver proved `χ' = Δ + 1`.
    #[error("graph is Class 2: chromatic index is {chi_prime} > Δ = {max_degree}")]
    ClassTwo { max_degree: usize, chi_prime: Color },
    /// Heuristics needed `Δ + 1` colors and the graph is too large for the exact solver.
    #[error(
        "no Δ-coloring found: heuristics used {heuristic_colors} colors and {edges} edges exceed the exact-solver limit"
    )]
    Unknown {
        heuristic_colors: Color,
        edges: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Acquired {
    pub coloring: EdgeColoring,
    pub method: Method,
}

/// A proper `Δ(g)`-coloring, trying König (bipartite inputs), then
/// Misra–Gries, then the exact solver when `|E| <= 20`.
pub fn obtain_r_coloring(g: &Graph) -> Result<Acquired, AcquireError> {
    let delta = g.max_degree() as Color;
    if g.is_bipartite() {
        let coloring = konig_color_bipartite(g).expect("bipartite input");
        return Ok(Acquired {
            coloring,
            method: Method::Konig,
        });
    }
    let heuristic = misra_gries(g);
    if heuristic.color_count() <= delta {
        return Ok(Acquired {
            coloring: heuristic
                .with_color_count(delta)
                .expect("widening a palette keeps colors in range"),
            method: Method::MisraGries,
        });
    }
    if g.edge_count() > EXACT_EDGE_LIMIT {
        return Err(AcquireError::Unknown {
            heuristic_colors: heuristic.color_count(),
            edges: g.edge_count(),
        });
    }
    let exact = exact_chromatic_index(g, delta + 1).expect("Vizing: Δ+1 colors always suffice");
    if exact.chi_prime == delta {
        Ok(Acquired {
            coloring: exact.witness,
            method: Method::Exact,
        })
    } else {
        Err(AcquireError::ClassTwo {
            max_degree: delta as usize,
            chi_prime: exact.chi_prime,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_proper;
    use crate::generate::complete_bipartite;
    use crate::graph::named;

    #[test]
    fn bipartite_goes_through_konig() {
        let g = complete_bipartite(2, 3).unwrap();
        let a = obtain_r_coloring(&g).unwrap();
        assert_eq!(a.method, Method::Konig);
        assert_eq!(a.coloring.color_count(), 3);
        assert!(verify_proper(&g, &a.coloring).unwrap().is_proper());
    }

    #[test]
    fn k4_is_three_colored() {
        let g = named::complete(4);
        let a = obtain_r_coloring(&g).unwrap();
        assert!(matches!(a.method, Method::MisraGries | Method::Exact));
        assert_eq!(a.coloring.color_count(), 3);
        assert!(verify_proper(&g, &a.coloring).unwrap().is_proper());
    }

    #[test]
    fn petersen_is_class_two() {
        assert_eq!(
            obtain_r_coloring(&named::petersen()),
            Err(AcquireError::ClassTwo {
                max_degree: 3,
                chi_prime: 4
            })
        );
    }

    #[test]
    fn large_odd_complete_graph_is_unknown() {
        // K7 is Class 2 with 21 edges: heuristics cannot reach 6 colors and
        // the exact solver is out of range.
        assert!(matches!(
            obtain_r_coloring(&named::complete(7)),
            Err(AcquireError::Unknown { edges: 21, .. })
        ));
    }
}
