//! Immutable simple undirected graphs with the metric and Boolean
//! primitives the rest of the crate builds on.
//!
//! A [`Graph`] is a dense-indexed vertex set `0..n` plus a canonical edge
//! set. Values are immutable after construction, so everything here is
//! safe to share across threads.

use std::collections::VecDeque;

use thiserror::Error;

use crate::bitset::BitSet;

pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(Vertex, usize),
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(Vertex),
    #[error("the empty graph has no diameter")]
    EmptyGraph,
}

/// Graph distance: a hop count or unreachable.
///
/// `Infinite` compares greater than every finite value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// Finite value, or `None` for `Infinite`.
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// An immutable simple undirected graph.
///
/// Stored as sorted adjacency lists plus one bitset row per vertex for
/// constant-time adjacency tests. Equality and hashing are
/// label-sensitive; isomorphism lives in [`crate::iso`].
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    rows: Vec<BitSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs
    /// collapse to a single edge; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn from_edges(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut rows = vec![BitSet::new(n); n];
        for &(u, v) in pairs {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u].set(v);
            rows[v].set(u);
        }
        let adj = rows.iter().map(|r| r.iter_ones().collect()).collect();
        Ok(Graph { n, adj, rows })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, &[]).expect("edgeless graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Canonical edge list: pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u].get(v)
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn neighbor_row(&self, v: Vertex) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Breadth-first distances from `s`; unreachable vertices map to
    /// `Infinite`.
    pub fn distances_from(&self, s: Vertex) -> Result<Vec<Distance>, GraphError> {
        if s >= self.n {
            return Err(GraphError::VertexOutOfRange(s, self.n));
        }
        let mut dist = vec![Distance::Infinite; self.n];
        dist[s] = Distance::Finite(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].finite().expect("queued vertices are reached");
            for &v in &self.adj[u] {
                if dist[v] == Distance::Infinite {
                    dist[v] = Distance::Finite(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> Distance {
        self.distances_from(u).expect("endpoint in range")[v]
    }

    /// Maximum pairwise distance inside a connected component, maximized
    /// over components (the convention for disconnected graphs).
    pub fn diameter(&self) -> Result<Distance, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut best = 0usize;
        for s in 0..self.n {
            for d in self.distances_from(s)?.into_iter().flat_map(Distance::finite) {
                best = best.max(d);
            }
        }
        Ok(Distance::Finite(best))
    }

    /// Length of a shortest cycle, `Infinite` for forests.
    pub fn girth(&self) -> Distance {
        let mut best = Distance::Infinite;
        // BFS from each root; a non-tree edge scanned from u closes a
        // cycle of length d[u] + d[w] + 1 through the root. The minimum
        // over all roots is exact.
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if w != parent[u] {
                        let cycle = Distance::Finite(dist[u] + dist[w] + 1);
                        if cycle < best {
                            best = cycle;
                        }
                    }
                }
            }
        }
        best
    }

    pub fn complement(&self) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    pairs.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &pairs).expect("complement pairs are valid")
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut pairs = self.edges();
        pairs.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(self.n + other.n, &pairs).expect("shifted pairs are valid")
    }

    /// Induced subgraph on `xs`, reindexed to `0..|X|` preserving the
    /// sorted order of `xs`. Returns the graph together with the index
    /// map (new index to old vertex).
    pub fn induced_subgraph(&self, xs: &[Vertex]) -> Result<(Graph, Vec<Vertex>), GraphError> {
        let mut sorted: Vec<Vertex> = xs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange(bad, self.n));
        }
        let mut pairs = Vec::new();
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    pairs.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(sorted.len(), &pairs).expect("reindexed pairs are valid");
        Ok((g, sorted))
    }

    /// Connected components as sorted vertex lists, ordered by least
    /// vertex.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_co_connected(&self) -> bool {
        self.complement().is_connected()
    }

    /// True if `set` induces a clique.
    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            set.iter().skip(i + 1).all(|&v| self.has_edge(u, v))
        })
    }

    /// True if `set` induces an independent set.
    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            set.iter().skip(i + 1).all(|&v| !self.has_edge(u, v))
        })
    }

    /// Line graph: one vertex per edge (in canonical edge order), two
    /// adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut pairs = Vec::new();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    pairs.push((i, j));
                }
            }
        }
        Graph::from_edges(edges.len(), &pairs).expect("line graph pairs are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use proptest::prelude::*;

    #[test]
    fn from_edges_canonicalizes() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let dup = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(p3, dup);
        assert_eq!(p3.edge_count(), 2);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange(2, 2))
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn bfs_distances() {
        let p4 = generators::path(4);
        let d: Vec<_> = p4.distances_from(0).unwrap();
        assert_eq!(
            d,
            vec![
                Distance::Finite(0),
                Distance::Finite(1),
                Distance::Finite(2),
                Distance::Finite(3)
            ]
        );

        let k3_k1 = generators::complete(3).disjoint_union(&Graph::empty(1));
        let d = k3_k1.distances_from(0).unwrap();
        assert_eq!(d[3], Distance::Infinite);
        assert_eq!(d[1], Distance::Finite(1));

        let c5 = generators::cycle(5);
        let mut d: Vec<_> = c5
            .distances_from(2)
            .unwrap()
            .into_iter()
            .map(|x| x.finite().unwrap())
            .collect();
        d.sort_unstable();
        assert_eq!(d, vec![0, 1, 1, 2, 2]);
    }

    #[test]
    fn diameter_conventions() {
        assert_eq!(generators::path(5).diameter().unwrap(), Distance::Finite(4));
        let g = generators::complete(3).disjoint_union(&generators::path(3));
        assert_eq!(g.diameter().unwrap(), Distance::Finite(2));
        assert_eq!(generators::complete(6).diameter().unwrap(), Distance::Finite(1));
        assert_eq!(Graph::empty(0).diameter(), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn girth_values() {
        assert_eq!(generators::cycle(5).girth(), Distance::Finite(5));
        assert_eq!(generators::path(7).girth(), Distance::Infinite);
        assert_eq!(generators::star(4).girth(), Distance::Infinite);
        assert_eq!(generators::grid(3).girth(), Distance::Finite(4));
    }

    #[test]
    fn complement_and_induced() {
        let k3 = generators::complete(3);
        assert_eq!(k3.complement().edge_count(), 0);

        let p4 = generators::path(4);
        let (h, map) = p4.induced_subgraph(&[0, 1, 3]).unwrap();
        assert_eq!(map, vec![0, 1, 3]);
        assert_eq!(h.edges(), vec![(0, 1)]);

        assert!(p4.is_co_connected());
        assert!(!k3.is_co_connected());
    }

    #[test]
    fn components() {
        let g = generators::complete(3).disjoint_union(&Graph::empty(1));
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3]]);
    }

    fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let m = n * (n - 1) / 2;
            proptest::collection::vec(proptest::bool::ANY, m).prop_map(move |bits| {
                let mut pairs = Vec::new();
                let mut idx = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[idx] {
                            pairs.push((u, v));
                        }
                        idx += 1;
                    }
                }
                Graph::from_edges(n, &pairs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn complement_involution(g in arbitrary_graph(9)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn nested_induced_subgraphs(g in arbitrary_graph(9)) {
            let n = g.n();
            let ys: Vec<_> = (0..n).step_by(2).collect();
            let (gy, ymap) = g.induced_subgraph(&ys).unwrap();
            let xs_in_y: Vec<_> = (0..ys.len()).filter(|i| i % 2 == 0).collect();
            let (g1, _) = gy.induced_subgraph(&xs_in_y).unwrap();
            let xs: Vec<_> = xs_in_y.iter().map(|&i| ymap[i]).collect();
            let (g2, _) = g.induced_subgraph(&xs).unwrap();
            prop_assert_eq!(g1, g2);
        }

        #[test]
        fn diameter_one_iff_complete_components(g in arbitrary_graph(8)) {
            // Under the max-over-components convention, diameter 1 means
            // every component is complete and at least one has an edge.
            let comps = g.connected_components();
            let all_complete = comps.iter().all(|c| g.is_clique(c));
            let some_edge = g.edge_count() > 0;
            prop_assert_eq!(
                g.diameter().unwrap() == Distance::Finite(1),
                all_complete && some_edge
            );
            if g.is_connected() {
                let complete = g.n() >= 2 && g.edge_count() == g.n() * (g.n() - 1) / 2;
                prop_assert_eq!(g.diameter().unwrap() == Distance::Finite(1), complete);
            }
        }

        #[test]
        fn girth_infinite_iff_forest(g in arbitrary_graph(8)) {
            let comps = g.connected_components().len();
            let forest = g.edge_count() <= g.n() - comps;
            prop_assert_eq!(g.girth() == Distance::Infinite, forest);
        }

        #[test]
        fn triangle_inequality(g in arbitrary_graph(8)) {
            let n = g.n();
            let all: Vec<Vec<Distance>> =
                (0..n).map(|s| g.distances_from(s).unwrap()).collect();
            for u in 0..n {
                for v in 0..n {
                    for w in 0..n {
                        if let (Distance::Finite(a), Distance::Finite(b)) =
                            (all[u][w], all[w][v])
                        {
                            if let Distance::Finite(c) = all[u][v] {
                                prop_assert!(c <= a + b);
                            } else {
                                prop_assert!(false, "finite through w but infinite direct");
                            }
                        }
                    }
                }
            }
        }
    }
}
