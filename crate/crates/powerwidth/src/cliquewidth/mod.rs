//! Exact clique-width and NLC-width for small graphs, construction
//! expressions, cograph recognition, and prime-reduction preprocessing.
//!
//! The exact solvers run a dynamic program over vertex subsets and are
//! intended for desk-scale inputs; [`DEFAULT_CAP`] bounds the vertex
//! count they accept. [`clique_width`] first contracts modular structure
//! (components, co-components, maximal modules) and only sends prime
//! quotients to the solver, so highly structured graphs of any size
//! still resolve.

mod expr;
mod nlc;
mod solver;

pub use expr::{CwExpression, CwNode, ExprError, Label};

use thiserror::Error;

use crate::graph::Graph;
use crate::structure::{maximal_modules_partition, quotient};

/// Default vertex cap for the exact solvers.
pub const DEFAULT_CAP: usize = 11;

/// Hard implementation limit (subsets are 32-bit masks, and the state
/// space is hopeless long before this).
pub const HARD_CAP: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CwError {
    #[error("graph too large for exact search ({n} vertices, cap {cap})")]
    CapExceeded { n: usize, cap: usize },
    #[error("width must be at least 1")]
    ZeroWidth,
    #[error("the empty graph has no construction expression")]
    EmptyGraph,
}

fn effective_cap(cap: usize) -> usize {
    cap.min(HARD_CAP)
}

/// Decides cw(g) <= k exactly, returning a witness expression on
/// success.
pub fn cw_at_most(g: &Graph, k: usize) -> Result<Option<CwExpression>, CwError> {
    cw_at_most_with_cap(g, k, DEFAULT_CAP)
}

pub fn cw_at_most_with_cap(
    g: &Graph,
    k: usize,
    cap: usize,
) -> Result<Option<CwExpression>, CwError> {
    if g.n() == 0 {
        return Err(CwError::EmptyGraph);
    }
    if k == 0 {
        return Err(CwError::ZeroWidth);
    }
    let cap = effective_cap(cap);
    if g.n() > cap {
        return Err(CwError::CapExceeded { n: g.n(), cap });
    }
    Ok(solver::decide_cw(g, k))
}

/// Exact clique-width with a witness expression. Modular structure is
/// contracted first; the vertex cap applies to the prime quotients that
/// reach the solver.
pub fn clique_width(g: &Graph) -> Result<(usize, CwExpression), CwError> {
    clique_width_with_cap(g, DEFAULT_CAP)
}

pub fn clique_width_with_cap(g: &Graph, cap: usize) -> Result<(usize, CwExpression), CwError> {
    if g.n() == 0 {
        return Err(CwError::EmptyGraph);
    }
    let cap = effective_cap(cap);
    let (k, node) = cw_rec(g, cap)?;
    Ok((k, CwExpression::new(k, node)))
}

/// Relabels everything built by `node` (labels `1..=width`) to `target`.
fn relabel_all(mut node: CwNode, width: usize, target: Label) -> CwNode {
    for j in 1..=width {
        if j != target {
            node = CwNode::Relabel(j, target, Box::new(node));
        }
    }
    node
}

fn solve_prime(g: &Graph, cap: usize) -> Result<(usize, CwNode, Vec<usize>), CwError> {
    if g.n() > cap {
        return Err(CwError::CapExceeded { n: g.n(), cap });
    }
    // A prime graph on >= 4 vertices is not a cograph, so start at 3.
    let lower = if g.n() >= 4 { 3 } else { 2 };
    for k in lower..=g.n().max(lower) {
        let s = solver::Solver::new(g, k);
        if let Some((node, leaves)) = s.solve() {
            return Ok((k, node, leaves));
        }
    }
    unreachable!("every graph has clique-width at most its vertex count")
}

fn substitute_leaves(
    node: &CwNode,
    blocks: &[(usize, CwNode)],
    leaves: &[usize],
    next_leaf: &mut usize,
) -> CwNode {
    match node {
        CwNode::Create(l) => {
            let q_vertex = leaves[*next_leaf];
            *next_leaf += 1;
            let (w, n) = &blocks[q_vertex];
            relabel_all(n.clone(), *w, *l)
        }
        CwNode::Union(a, b) => {
            let a = substitute_leaves(a, blocks, leaves, next_leaf);
            let b = substitute_leaves(b, blocks, leaves, next_leaf);
            CwNode::Union(Box::new(a), Box::new(b))
        }
        CwNode::Join(i, j, inner) => CwNode::Join(
            *i,
            *j,
            Box::new(substitute_leaves(inner, blocks, leaves, next_leaf)),
        ),
        CwNode::Relabel(f, t, inner) => CwNode::Relabel(
            *f,
            *t,
            Box::new(substitute_leaves(inner, blocks, leaves, next_leaf)),
        ),
    }
}

fn cw_rec(g: &Graph, cap: usize) -> Result<(usize, CwNode), CwError> {
    let n = g.n();
    if n == 1 {
        return Ok((1, CwNode::Create(1)));
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        let mut width = 1;
        let mut acc: Option<CwNode> = None;
        for comp in comps {
            let (sub, _) = g.induced_subgraph(&comp).expect("component vertices valid");
            let (k, node) = cw_rec(&sub, cap)?;
            width = width.max(k);
            acc = Some(match acc {
                None => node,
                Some(a) => CwNode::Union(Box::new(a), Box::new(node)),
            });
        }
        return Ok((width, acc.expect("at least one component")));
    }
    let co_comps = g.complement().connected_components();
    if co_comps.len() > 1 {
        // G is the join of its co-components.
        let mut width = 2;
        let mut acc: Option<CwNode> = None;
        for part in co_comps {
            let (sub, _) = g.induced_subgraph(&part).expect("co-component vertices valid");
            let (k, node) = cw_rec(&sub, cap)?;
            width = width.max(k);
            let piece = relabel_all(node, k, if acc.is_none() { 1 } else { 2 });
            acc = Some(match acc {
                None => piece,
                Some(a) => CwNode::Relabel(
                    2,
                    1,
                    Box::new(CwNode::Join(1, 2, Box::new(CwNode::Union(
                        Box::new(a),
                        Box::new(piece),
                    )))),
                ),
            });
        }
        return Ok((width, acc.expect("at least one part")));
    }

    let partition = maximal_modules_partition(g).expect("connected and co-connected here");
    if partition.blocks.iter().all(|b| b.len() == 1) {
        let (k, node, _) = solve_prime(g, cap)?;
        return Ok((k, node));
    }
    let q = quotient(g, &partition).expect("maximal modules form a partition");
    let (kq, q_node, q_leaves) = solve_prime(&q, cap)?;
    let mut width = kq;
    let mut blocks = Vec::with_capacity(partition.blocks.len());
    for block in &partition.blocks {
        let (sub, _) = g.induced_subgraph(block).expect("block vertices valid");
        let (k, node) = cw_rec(&sub, cap)?;
        width = width.max(k);
        blocks.push((k, node));
    }
    let mut next_leaf = 0;
    let node = substitute_leaves(&q_node, &blocks, &q_leaves, &mut next_leaf);
    Ok((width, node))
}

/// Exact NLC-width.
pub fn nlc_width(g: &Graph) -> Result<usize, CwError> {
    nlc_width_with_cap(g, DEFAULT_CAP)
}

pub fn nlc_width_with_cap(g: &Graph, cap: usize) -> Result<usize, CwError> {
    if g.n() == 0 {
        return Err(CwError::EmptyGraph);
    }
    let cap = effective_cap(cap);
    if g.n() > cap {
        return Err(CwError::CapExceeded { n: g.n(), cap });
    }
    for k in 1..=g.n() {
        if nlc::decide_nlc(g, k) {
            return Ok(k);
        }
    }
    unreachable!("every graph has NLC-width at most its vertex count")
}

/// Decides nlcw(g) <= k.
pub fn nlc_at_most_with_cap(g: &Graph, k: usize, cap: usize) -> Result<bool, CwError> {
    if g.n() == 0 {
        return Err(CwError::EmptyGraph);
    }
    if k == 0 {
        return Err(CwError::ZeroWidth);
    }
    let cap = effective_cap(cap);
    if g.n() > cap {
        return Err(CwError::CapExceeded { n: g.n(), cap });
    }
    Ok(nlc::decide_nlc(g, k))
}

/// Cograph test by the standard decomposition: a graph is a cograph
/// exactly when every induced subgraph on at least two vertices is
/// disconnected or co-disconnected.
pub fn is_cograph(g: &Graph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        return comps.iter().all(|c| {
            let (sub, _) = g.induced_subgraph(c).expect("component valid");
            is_cograph(&sub)
        });
    }
    let co = g.complement().connected_components();
    if co.len() > 1 {
        return co.iter().all(|c| {
            let (sub, _) = g.induced_subgraph(c).expect("co-component valid");
            is_cograph(&sub)
        });
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::Graph;
    use crate::iso;

    fn cw_exact(g: &Graph) -> usize {
        clique_width(g).unwrap().0
    }

    #[test]
    fn decision_basics() {
        assert!(cw_at_most(&generators::complete(5), 2).unwrap().is_some());
        assert!(cw_at_most(&generators::path(4), 2).unwrap().is_none());
        let e = cw_at_most(&generators::path(4), 3).unwrap().unwrap();
        assert!(iso::is_isomorphic(&e.eval().unwrap(), &generators::path(4)));
    }

    #[test]
    fn union_of_two_edges_needs_only_two_labels() {
        // Regression for tree-shaped expressions: a linear build of 2K_2
        // would need three labels.
        let g = generators::complete(2).disjoint_union(&generators::complete(2));
        assert!(cw_at_most(&g, 2).unwrap().is_some());
        assert_eq!(cw_exact(&g), 2);
    }

    #[test]
    fn exact_values() {
        assert_eq!(cw_exact(&generators::complete(1)), 1);
        assert_eq!(cw_exact(&Graph::empty(6)), 1);
        assert_eq!(cw_exact(&generators::complete_split(3, 3)), 2);
        assert_eq!(cw_exact(&generators::cycle(4)), 2);
        assert_eq!(cw_exact(&generators::cycle(5)), 3);
        assert_eq!(cw_exact(&generators::path(4)), 3);
    }

    #[test]
    fn c5_value_pinned_independently() {
        // Lower bound: C_5 is not a cograph. Upper bound: a frozen
        // 3-label construction (two edges built separately, bridged,
        // then closed by the fifth vertex), checked by evaluation only.
        let c5 = generators::cycle(5);
        assert!(!is_cograph(&c5));
        let e = CwExpression::parse_sexpr(
            "(kexpr 3 (join 1 3 (union \
               (relabel 3 2 (join 2 3 (union \
                 (join 1 2 (union (create 1) (create 2))) \
                 (join 3 1 (union (create 3) (create 1)))))) \
               (create 3))))",
        )
        .unwrap();
        let g = e.eval().unwrap();
        assert!(iso::is_isomorphic(&g, &c5), "got {g:?}");
        assert_eq!(cw_exact(&c5), 3);
    }

    #[test]
    fn cycle_and_path_bounds() {
        for n in 3..=10 {
            assert!(cw_exact(&generators::cycle(n)) <= 4, "C_{n}");
        }
        for n in 1..=10 {
            assert!(cw_exact(&generators::path(n)) <= 3, "P_{n}");
        }
    }

    #[test]
    fn witnesses_evaluate_to_input() {
        let samples = [
            generators::path(6),
            generators::cycle(6),
            generators::grid(2),
            generators::star(4),
            generators::complete_split(2, 3),
            generators::spider(1, 2, 2),
            generators::t_spider(1, 2, 2),
        ];
        for g in &samples {
            let (k, e) = clique_width(g).unwrap();
            assert_eq!(e.width(), k);
            let built = e.eval().unwrap();
            assert!(iso::is_isomorphic(&built, g), "width {k} for {g:?}");
        }
    }

    #[test]
    fn cograph_recognition() {
        assert!(!is_cograph(&generators::path(4)));
        assert!(is_cograph(&generators::complete_split(4, 2)));
        let cliques = generators::complete(3)
            .disjoint_union(&generators::complete(2))
            .disjoint_union(&generators::complete(4));
        assert!(is_cograph(&cliques));
    }

    #[test]
    fn nlc_values() {
        assert_eq!(nlc_width(&generators::complete(1)).unwrap(), 1);
        assert_eq!(nlc_width(&generators::path(4)).unwrap(), 2);
        // NLC-width 1 is exactly the cographs.
        let two_edges = generators::complete(2).disjoint_union(&generators::complete(2));
        assert_eq!(nlc_width(&two_edges).unwrap(), 1);
        let c5 = generators::cycle(5);
        let nw = nlc_width(&c5).unwrap();
        let cw = cw_exact(&c5);
        assert!(nw <= cw && cw <= 2 * nw);
    }

    #[test]
    fn errors() {
        assert_eq!(clique_width(&Graph::empty(0)), Err(CwError::EmptyGraph));
        assert_eq!(
            cw_at_most(&generators::path(3), 0),
            Err(CwError::ZeroWidth)
        );
        assert_eq!(
            cw_at_most_with_cap(&generators::path(12), 3, 11),
            Err(CwError::CapExceeded { n: 12, cap: 11 })
        );
    }

    // ------------------------------------------------------------------
    // Independent oracle: forward closure over concrete labeled graphs.
    //
    // Reachable labeled graphs on at most `nmax` vertices under the
    // construction operations, canonicalized under vertex permutation
    // and label renaming. Entirely separate from the subset dynamic
    // program; used to pin the solvers exactly on every graph with up
    // to 4 vertices.
    // ------------------------------------------------------------------

    #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
    struct LG {
        n: usize,
        adj: u16,           // upper-triangle bits, pair (u,v): index uv_index
        labels: Vec<u8>,    // 1-based
    }

    fn uv_index(n: usize, u: usize, v: usize) -> usize {
        // Upper triangle, row by row.
        let (a, b) = (u.min(v), u.max(v));
        let before: usize = (0..a).map(|r| n - r - 1).sum();
        before + (b - a - 1)
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn canonical(lg: &LG) -> LG {
        let n = lg.n;
        let mut best: Option<LG> = None;
        for perm in permutations(n) {
            let mut adj = 0u16;
            for u in 0..n {
                for v in u + 1..n {
                    if lg.adj >> uv_index(n, u, v) & 1 == 1 {
                        adj |= 1 << uv_index(n, perm[u], perm[v]);
                    }
                }
            }
            // Rename labels by first occurrence along the new order.
            let mut relabeled = vec![0u8; n];
            let mut seen: Vec<u8> = Vec::new();
            for new_v in 0..n {
                let old_v = perm.iter().position(|&p| p == new_v).unwrap();
                let l = lg.labels[old_v];
                let idx = match seen.iter().position(|&s| s == l) {
                    Some(i) => i,
                    None => {
                        seen.push(l);
                        seen.len() - 1
                    }
                };
                relabeled[new_v] = idx as u8 + 1;
            }
            let cand = LG { n, adj, labels: relabeled };
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        best.unwrap()
    }

    fn unlabeled_canonical(g: &Graph) -> LG {
        let n = g.n();
        let mut adj = 0u16;
        for (u, v) in g.edges() {
            adj |= 1 << uv_index(n, u, v);
        }
        canonical(&LG { n, adj, labels: vec![1; n] })
    }

    fn lg_strip_labels(lg: &LG) -> LG {
        canonical(&LG { n: lg.n, adj: lg.adj, labels: vec![1; lg.n] })
    }

    fn closure(k: usize, nmax: usize, nlc_rules: bool) -> std::collections::HashSet<LG> {
        use std::collections::HashSet;
        let mut reach: HashSet<LG> = HashSet::new();
        let mut queue: Vec<LG> = vec![canonical(&LG { n: 1, adj: 0, labels: vec![1] })];
        reach.insert(queue[0].clone());
        while let Some(cur) = queue.pop() {
            let mut push = |cand: LG, reach: &mut HashSet<LG>, queue: &mut Vec<LG>| {
                let c = canonical(&cand);
                if reach.insert(c.clone()) {
                    queue.push(c);
                }
            };
            let labels_used: Vec<u8> = {
                let mut ls: Vec<u8> = cur.labels.clone();
                ls.sort_unstable();
                ls.dedup();
                ls
            };
            // Relabel i -> j (merge).
            for &i in &labels_used {
                for j in 1..=k as u8 {
                    if i != j {
                        let mut nl = cur.labels.clone();
                        for l in nl.iter_mut() {
                            if *l == i {
                                *l = j;
                            }
                        }
                        push(LG { n: cur.n, adj: cur.adj, labels: nl }, &mut reach, &mut queue);
                    }
                }
            }
            // Join i, j (clique-width only).
            if !nlc_rules {
                for &i in &labels_used {
                    for &j in &labels_used {
                        if i < j {
                            let mut adj = cur.adj;
                            for u in 0..cur.n {
                                for v in u + 1..cur.n {
                                    let pair = (cur.labels[u], cur.labels[v]);
                                    if pair == (i, j) || pair == (j, i) {
                                        adj |= 1 << uv_index(cur.n, u, v);
                                    }
                                }
                            }
                            push(LG { n: cur.n, adj, labels: cur.labels.clone() }, &mut reach, &mut queue);
                        }
                    }
                }
            }
            // Union with every reachable partner, under every label
            // renaming of the partner: canonical states fix one naming,
            // but expressions may align labels across the union freely.
            // (Both orders are covered because the NLC relation
            // enumeration below is directional.)
            let partners: Vec<LG> = reach.iter().cloned().collect();
            let label_perms: Vec<Vec<u8>> = permutations(k)
                .into_iter()
                .map(|p| p.into_iter().map(|x| x as u8 + 1).collect())
                .collect();
            for other_base in partners {
                if cur.n + other_base.n > nmax {
                    continue;
                }
                for sigma in &label_perms {
                    let mut other = other_base.clone();
                    for l in other.labels.iter_mut() {
                        *l = sigma[*l as usize - 1];
                    }
                let n = cur.n + other.n;
                let mut base = 0u16;
                for u in 0..cur.n {
                    for v in u + 1..cur.n {
                        if cur.adj >> uv_index(cur.n, u, v) & 1 == 1 {
                            base |= 1 << uv_index(n, u, v);
                        }
                    }
                }
                for u in 0..other.n {
                    for v in u + 1..other.n {
                        if other.adj >> uv_index(other.n, u, v) & 1 == 1 {
                            base |= 1 << uv_index(n, cur.n + u, cur.n + v);
                        }
                    }
                }
                let mut labels = cur.labels.clone();
                labels.extend(other.labels.iter().copied());
                if !nlc_rules {
                    push(LG { n, adj: base, labels }, &mut reach, &mut queue);
                } else {
                    // All relations over the label pairs actually in use.
                    let l1: Vec<u8> = {
                        let mut v = cur.labels.clone();
                        v.sort_unstable();
                        v.dedup();
                        v
                    };
                    let l2: Vec<u8> = {
                        let mut v = other.labels.clone();
                        v.sort_unstable();
                        v.dedup();
                        v
                    };
                    let pairs: Vec<(u8, u8)> = l1
                        .iter()
                        .flat_map(|&a| l2.iter().map(move |&b| (a, b)))
                        .collect();
                    for rel_mask in 0..(1u32 << pairs.len()) {
                        let mut adj = base;
                        for (pi, &(a, b)) in pairs.iter().enumerate() {
                            if rel_mask >> pi & 1 == 1 {
                                for u in 0..cur.n {
                                    for v in 0..other.n {
                                        if cur.labels[u] == a && other.labels[v] == b {
                                            adj |= 1 << uv_index(n, u, cur.n + v);
                                        }
                                    }
                                }
                            }
                        }
                        push(
                            LG { n, adj, labels: labels.clone() },
                            &mut reach,
                            &mut queue,
                        );
                    }
                }
                }
            }
        }
        reach
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let m = n * (n - 1) / 2;
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for mask in 0u32..(1 << m) {
            let mut pairs = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask >> idx & 1 == 1 {
                        pairs.push((u, v));
                    }
                    idx += 1;
                }
            }
            let g = Graph::from_edges(n, &pairs).unwrap();
            if seen.insert(unlabeled_canonical(&g)) {
                out.push(g);
            }
        }
        out
    }

    #[test]
    fn solvers_match_expression_enumeration_oracle() {
        let nmax = 4;
        for kind_nlc in [false, true] {
            // Reachable unlabeled graphs per width.
            let mut reachable: Vec<std::collections::HashSet<LG>> = Vec::new();
            for k in 1..=nmax {
                let set = closure(k, nmax, kind_nlc);
                reachable.push(set.iter().map(lg_strip_labels).collect());
            }
            for n in 1..=nmax {
                for g in all_graphs(n) {
                    let canon = unlabeled_canonical(&g);
                    let oracle_width = (1..=nmax)
                        .find(|&k| reachable[k - 1].contains(&canon))
                        .unwrap_or_else(|| {
                            panic!("unreachable in closure (nlc={kind_nlc}): {g:?}")
                        });
                    let got = if kind_nlc {
                        nlc_width(&g).unwrap()
                    } else {
                        clique_width(&g).unwrap().0
                    };
                    assert_eq!(
                        got, oracle_width,
                        "nlc={kind_nlc} mismatch on {g:?}"
                    );
                }
            }
        }
    }
}
