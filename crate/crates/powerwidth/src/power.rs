//! Graph powers.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PowerError {
    #[error("power exponent must be at least 1")]
    ZeroExponent,
}

/// The k-th power of `g`: same vertex set, an edge wherever the original
/// distance is between 1 and `k`. Computed by one depth-truncated
/// breadth-first search per source.
pub fn graph_power(g: &Graph, k: usize) -> Result<Graph, PowerError> {
    if k == 0 {
        return Err(PowerError::ZeroExponent);
    }
    let mut pairs = Vec::new();
    for s in g.vertices() {
        let dist = g.distances_from(s).expect("source in range");
        for t in s + 1..g.n() {
            if let Some(d) = dist[t].finite() {
                if d >= 1 && d <= k {
                    pairs.push((s, t));
                }
            }
        }
    }
    Ok(Graph::from_edges(g.n(), &pairs).expect("power pairs are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::Distance;

    #[test]
    fn first_power_is_identity() {
        for g in [generators::path(5), generators::cycle(6), generators::grid(3)] {
            assert_eq!(graph_power(&g, 1).unwrap(), g);
        }
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(
            graph_power(&generators::path(2), 0),
            Err(PowerError::ZeroExponent)
        );
    }

    #[test]
    fn path_square() {
        // Brute-force oracle: all-pairs distances of P_4.
        let p4 = generators::path(4);
        let sq = graph_power(&p4, 2).unwrap();
        let mut expect = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                if let Some(d) = p4.dist(u, v).finite() {
                    if d <= 2 {
                        expect.push((u, v));
                    }
                }
            }
        }
        assert_eq!(sq.edges(), expect);
        assert_eq!(sq.edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn diameter_power_is_complete_union() {
        let p4 = generators::path(4);
        assert_eq!(graph_power(&p4, 3).unwrap(), generators::complete(4));

        let g = generators::path(3).disjoint_union(&generators::path(4));
        let d = g.diameter().unwrap().finite().unwrap();
        let p = graph_power(&g, d).unwrap();
        for comp in p.connected_components() {
            assert!(p.is_clique(&comp));
        }
    }

    #[test]
    fn power_composition() {
        // (G^p)^k = G^{pk} on small graphs.
        let samples = [
            generators::path(8),
            generators::cycle(7),
            generators::star(5),
            generators::grid(2).disjoint_union(&generators::path(3)),
        ];
        for g in &samples {
            for p in 1..=4 {
                for k in 1..=4 {
                    let lhs = graph_power(&graph_power(g, p).unwrap(), k).unwrap();
                    let rhs = graph_power(g, p * k).unwrap();
                    assert_eq!(lhs, rhs, "p={p} k={k}");
                }
            }
        }
    }

    #[test]
    fn edges_monotone_and_isolated_stay() {
        let g = generators::star(3).disjoint_union(&Graph::empty(2));
        let p = graph_power(&g, 3).unwrap();
        for (u, v) in g.edges() {
            assert!(p.has_edge(u, v));
        }
        assert_eq!(p.degree(4), 0);
        assert_eq!(p.degree(5), 0);
        assert_eq!(g.girth(), Distance::Infinite);
    }
}
