//! Isomorphism and induced-subgraph containment.
//!
//! Backtracking over a static pattern-vertex order with degree and
//! neighbor-degree pruning. The order is the pattern's vertices sorted
//! by ascending initial candidate count (ties by index), and candidates
//! are tried in ascending host-vertex order, so the first witness found
//! is deterministic.

use crate::graph::{Graph, Vertex};

/// An injective map from pattern vertices to host vertices preserving
/// both edges and non-edges (induced semantics).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Embedding {
    map: Vec<Vertex>,
}

impl Embedding {
    /// Wraps an explicit map; validate with [`Embedding::is_valid`].
    pub fn from_map(map: Vec<Vertex>) -> Embedding {
        Embedding { map }
    }

    pub fn map(&self) -> &[Vertex] {
        &self.map
    }

    pub fn image(&self, pattern_vertex: Vertex) -> Vertex {
        self.map[pattern_vertex]
    }

    /// Composes `outer ∘ self`: an embedding of this pattern into the
    /// host of `outer`.
    pub fn compose(&self, outer: &Embedding) -> Embedding {
        Embedding {
            map: self.map.iter().map(|&v| outer.map[v]).collect(),
        }
    }

    /// Checks induced-subgraph validity of the map against concrete
    /// graphs.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut seen = vec![false; host.n()];
        for &v in &self.map {
            if v >= host.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        for u in 0..pattern.n() {
            for v in u + 1..pattern.n() {
                if pattern.has_edge(u, v) != host.has_edge(self.map[u], self.map[v]) {
                    return false;
                }
            }
        }
        true
    }
}

fn sorted_neighbor_degrees(g: &Graph, v: Vertex) -> Vec<usize> {
    let mut ds: Vec<_> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
    ds.sort_unstable_by(|a, b| b.cmp(a));
    ds
}

/// Degree/neighbor-degree feasibility of mapping pattern vertex with
/// profile `pd` onto host vertex with profile `hd` (both sorted
/// descending): every pattern neighbor must find a distinct host
/// neighbor of at least its degree.
fn profile_dominates(hd: &[usize], pd: &[usize]) -> bool {
    pd.len() <= hd.len() && pd.iter().zip(hd.iter()).all(|(p, h)| p <= h)
}

fn search(
    host: &Graph,
    pattern: &Graph,
    order: &[Vertex],
    candidates: &[Vec<Vertex>],
) -> Option<Embedding> {
    let hn = host.n();
    let pn = pattern.n();
    let mut assigned: Vec<Option<Vertex>> = vec![None; pn];
    let mut used = vec![false; hn];
    let mut stack: Vec<usize> = vec![0];

    // Iterative backtracking: stack[d] is the next candidate index to try
    // for pattern vertex order[d].
    loop {
        let depth = stack.len() - 1;
        if depth == pn {
            let map = assigned.iter().map(|a| a.expect("complete")).collect();
            return Some(Embedding { map });
        }
        let u = order[depth];
        let mut idx = stack[depth];
        let mut advanced = false;
        while idx < candidates[u].len() {
            let v = candidates[u][idx];
            idx += 1;
            if used[v] {
                continue;
            }
            let ok = order[..depth].iter().all(|&w| {
                let hv = assigned[w].expect("already placed");
                pattern.has_edge(u, w) == host.has_edge(v, hv)
            });
            if ok {
                stack[depth] = idx;
                assigned[u] = Some(v);
                used[v] = true;
                stack.push(0);
                advanced = true;
                break;
            }
        }
        if !advanced {
            stack.pop();
            if stack.is_empty() {
                return None;
            }
            let d = stack.len() - 1;
            let placed = order[d];
            if let Some(v) = assigned[placed].take() {
                used[v] = false;
            }
        }
    }
}

/// Finds an induced embedding of `pattern` into `host`, if one exists.
/// The first witness under the documented search order is returned.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    if pattern.n() == 0 {
        return Some(Embedding { map: vec![] });
    }
    let host_profiles: Vec<_> = host
        .vertices()
        .map(|v| sorted_neighbor_degrees(host, v))
        .collect();
    let mut candidates: Vec<Vec<Vertex>> = Vec::with_capacity(pattern.n());
    for u in pattern.vertices() {
        let pd = sorted_neighbor_degrees(pattern, u);
        let cs: Vec<_> = host
            .vertices()
            .filter(|&v| {
                host.degree(v) >= pattern.degree(u) && profile_dominates(&host_profiles[v], &pd)
            })
            .collect();
        if cs.is_empty() {
            return None;
        }
        candidates.push(cs);
    }
    let mut order: Vec<Vertex> = pattern.vertices().collect();
    order.sort_by_key(|&u| (candidates[u].len(), u));
    search(host, pattern, &order, &candidates)
}

/// Isomorphism witness between equal-order graphs, or `None`.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Embedding> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut gd: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
    let mut hd: Vec<_> = h.vertices().map(|v| h.degree(v)).collect();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return None;
    }
    if triangle_count(g) != triangle_count(h) {
        return None;
    }
    // An induced embedding between graphs of equal order and size is an
    // isomorphism.
    contains_induced(g, h)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism(g, h).is_some()
}

fn triangle_count(g: &Graph) -> usize {
    let mut count = 0;
    for u in g.vertices() {
        for &v in g.neighbors(u) {
            if v <= u {
                continue;
            }
            for &w in g.neighbors(v) {
                if w > v && g.has_edge(u, w) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// First member of `forbidden` that occurs induced in `g`, with its
/// witness.
pub fn first_violation<'a>(
    g: &Graph,
    forbidden: impl IntoIterator<Item = &'a Graph>,
) -> Option<(usize, Embedding)> {
    for (i, h) in forbidden.into_iter().enumerate() {
        if let Some(e) = contains_induced(g, h) {
            return Some((i, e));
        }
    }
    None
}

/// True when no member of `forbidden` occurs in `g` as an induced
/// subgraph.
pub fn is_f_free(g: &Graph, forbidden: &[Graph]) -> bool {
    first_violation(g, forbidden).is_none()
}
