//! Exact clique-width decision by dynamic programming over vertex
//! subsets.
//!
//! For a subset S, a feasible state is a partition of S into at most k
//! groups such that some k-expression builds G[S] with exactly these
//! final label classes and all of G[S]'s edges created. Two facts make
//! the state space exact and small:
//!
//! * every expression normalizes so that each edge is created at the
//!   lowest union node covering both endpoints, hence sub-expressions
//!   are always "complete" on their support;
//! * once two vertices share a label they keep sharing it, so every
//!   group must look identical from every vertex outside S. States
//!   violating this are dead and are pruned, which also caps the number
//!   of groups by the number of outside-neighborhood classes of S.
//!
//! A union transition combines states of two disjoint subsets: groups of
//! both sides are distributed into at most k label cells, joins between
//! cells create exactly the missing cross edges, and the cells become
//! the groups of the new state. Validity is checked incrementally while
//! cells are filled.

use std::collections::{HashMap, HashSet};

use crate::graph::{Graph, Vertex};

use super::expr::{CwExpression, CwNode, Label};

pub(super) type Mask = u32;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(super) enum PairStatus {
    NoEdges,
    AllEdges,
    Mixed,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Bundle {
    Unset,
    NoJoin,
    Join,
}

#[derive(Clone)]
struct CellProv {
    side1: Vec<usize>,
    side2: Vec<usize>,
}

enum Prov {
    Leaf(Vertex),
    Union {
        s1: Mask,
        i1: usize,
        s2: Mask,
        i2: usize,
        cells: Vec<CellProv>,
        joins: Vec<(usize, usize)>,
    },
}

struct StateRec {
    groups: Vec<Mask>,
    prov: Prov,
}

pub(super) struct PairTables {
    pub stat: Vec<Vec<PairStatus>>,
    pub any_mixed: bool,
}

/// Cross status of every group pair between two states.
pub(super) fn pair_status_tables(adj: &[Mask], groups1: &[Mask], groups2: &[Mask]) -> PairTables {
    let mut any_mixed = false;
    let stat = groups1
        .iter()
        .map(|&g1| {
            groups2
                .iter()
                .map(|&g2| {
                    let mut all = true;
                    let mut none = true;
                    let mut m = g2;
                    while m != 0 {
                        let v = m.trailing_zeros() as usize;
                        m &= m - 1;
                        let hit = adj[v] & g1;
                        if hit != g1 {
                            all = false;
                        }
                        if hit != 0 {
                            none = false;
                        }
                    }
                    if all {
                        PairStatus::AllEdges
                    } else if none {
                        PairStatus::NoEdges
                    } else {
                        any_mixed = true;
                        PairStatus::Mixed
                    }
                })
                .collect()
        })
        .collect();
    PairTables { stat, any_mixed }
}

/// Complete adjacency between two disjoint vertex sets.
pub(super) fn fully_adjacent(adj: &[Mask], a: Mask, b: Mask) -> bool {
    let mut m = b;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if adj[v] & a != a {
            return false;
        }
    }
    true
}

pub(super) fn group_signature(adj: &[Mask], group: Mask, outside: Mask) -> Mask {
    let v = group.trailing_zeros() as usize;
    adj[v] & outside
}

/// Number of distinct outside-neighborhood classes among members of `s`.
pub(super) fn signature_class_count(adj: &[Mask], s: Mask, outside: Mask) -> usize {
    let mut sigs = Vec::new();
    let mut m = s;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let sig = adj[v] & outside;
        if !sigs.contains(&sig) {
            sigs.push(sig);
        }
    }
    sigs.len()
}

struct UnionCtx<'a> {
    k: usize,
    items: &'a [(u8, usize, Mask, Mask)], // (side, parent index, mask, signature)
    stat: &'a [Vec<PairStatus>],
    fulladj1: &'a [Vec<bool>],
    fulladj2: &'a [Vec<bool>],
}

#[derive(Clone)]
struct Cell {
    sig: Mask,
    mask: Mask,
    m1: Vec<usize>,
    m2: Vec<usize>,
}

fn status_of(ctx: &UnionCtx, i1: usize, i2: usize) -> PairStatus {
    ctx.stat[i1][i2]
}

/// Attempts to add item `t` to (possibly empty) cell `c`: checks the
/// same-cell and cross-cell constraints and applies the bundle updates.
/// Returns the undo list on success.
fn try_place(
    ctx: &UnionCtx,
    t: usize,
    c: usize,
    cells: &mut [Cell],
    bundle: &mut [Vec<Bundle>],
) -> Option<Vec<(usize, Bundle)>> {
    let (side, pidx, mask, sig) = ctx.items[t];
    let occupied = cells[c].mask != 0;
    if occupied && cells[c].sig != sig {
        return None;
    }
    // Same-cell cross pairs can never be joined, so they must be
    // non-edges.
    let opposite = if side == 0 { &cells[c].m2 } else { &cells[c].m1 };
    let ok_same = opposite.iter().all(|&o| {
        let st = if side == 0 {
            status_of(ctx, pidx, o)
        } else {
            status_of(ctx, o, pidx)
        };
        st == PairStatus::NoEdges
    });
    if !ok_same {
        return None;
    }
    // Cross-cell bundles must stay uniform.
    let mut updates: Vec<(usize, Bundle)> = Vec::new();
    for (c2, cell2) in cells.iter().enumerate() {
        if c2 == c {
            continue;
        }
        let others = if side == 0 { &cell2.m2 } else { &cell2.m1 };
        let mut want = bundle[c.min(c2)][c.max(c2)];
        for &o in others {
            let st = if side == 0 {
                status_of(ctx, pidx, o)
            } else {
                status_of(ctx, o, pidx)
            };
            let as_bundle = match st {
                PairStatus::NoEdges => Bundle::NoJoin,
                PairStatus::AllEdges => Bundle::Join,
                PairStatus::Mixed => return None,
            };
            if want == Bundle::Unset {
                want = as_bundle;
            } else if want != as_bundle {
                return None;
            }
        }
        if want != bundle[c.min(c2)][c.max(c2)] {
            updates.push((c2, want));
        }
    }
    let saved: Vec<_> = updates
        .iter()
        .map(|&(c2, _)| (c2, bundle[c.min(c2)][c.max(c2)]))
        .collect();
    for &(c2, w) in &updates {
        bundle[c.min(c2)][c.max(c2)] = w;
    }
    cells[c].sig = sig;
    cells[c].mask |= mask;
    if side == 0 {
        cells[c].m1.push(pidx);
    } else {
        cells[c].m2.push(pidx);
    }
    Some(saved)
}

fn undo_place(
    ctx: &UnionCtx,
    t: usize,
    c: usize,
    cells: &mut [Cell],
    bundle: &mut [Vec<Bundle>],
    saved: Vec<(usize, Bundle)>,
) {
    let (side, _pidx, mask, _sig) = ctx.items[t];
    if side == 0 {
        cells[c].m1.pop();
    } else {
        cells[c].m2.pop();
    }
    cells[c].mask &= !mask;
    for (c2, w) in saved {
        bundle[c.min(c2)][c.max(c2)] = w;
    }
}

/// Places items (groups of both sides) into at most k cells, emitting
/// every valid configuration.
fn place(
    ctx: &UnionCtx,
    t: usize,
    cells: &mut Vec<Cell>,
    bundle: &mut Vec<Vec<Bundle>>,
    emit: &mut impl FnMut(&[Cell], &[Vec<Bundle>]),
) {
    if t == ctx.items.len() {
        // Join bundles need complete adjacency inside each side.
        for a in 0..cells.len() {
            for b in a + 1..cells.len() {
                if bundle[a][b] == Bundle::Join {
                    for &i in &cells[a].m1 {
                        for &j in &cells[b].m1 {
                            if !ctx.fulladj1[i][j] {
                                return;
                            }
                        }
                    }
                    for &i in &cells[a].m2 {
                        for &j in &cells[b].m2 {
                            if !ctx.fulladj2[i][j] {
                                return;
                            }
                        }
                    }
                }
            }
        }
        emit(cells, bundle);
        return;
    }
    for c in 0..cells.len() {
        if let Some(saved) = try_place(ctx, t, c, cells, bundle) {
            place(ctx, t + 1, cells, bundle, emit);
            undo_place(ctx, t, c, cells, bundle, saved);
        }
    }
    if cells.len() < ctx.k {
        cells.push(Cell { sig: 0, mask: 0, m1: vec![], m2: vec![] });
        let c = cells.len() - 1;
        if let Some(saved) = try_place(ctx, t, c, cells, bundle) {
            place(ctx, t + 1, cells, bundle, emit);
            undo_place(ctx, t, c, cells, bundle, saved);
        }
        cells.pop();
    }
}

pub(super) struct Solver {
    n: usize,
    k: usize,
    adj: Vec<Mask>,
    full: Mask,
}

impl Solver {
    pub(super) fn new(g: &Graph, k: usize) -> Self {
        let n = g.n();
        assert!(n >= 1 && n <= 24, "solver support caps at 24 vertices");
        let adj: Vec<Mask> = g
            .vertices()
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .fold(0, |acc, &u| acc | (1 << u))
            })
            .collect();
        let full = if n == 32 { !0 } else { (1u32 << n) - 1 };
        Solver { n, k, adj, full }
    }

    /// Decides cw(G) <= k; on success returns a witness expression and
    /// the graph vertex corresponding to each leaf in order.
    pub(super) fn solve(&self) -> Option<(CwNode, Vec<Vertex>)> {
        let mut feas: HashMap<Mask, Vec<StateRec>> = HashMap::new();
        for v in 0..self.n {
            feas.insert(
                1 << v,
                vec![StateRec { groups: vec![1 << v], prov: Prov::Leaf(v) }],
            );
        }

        let mut masks_by_size: Vec<Vec<Mask>> = vec![Vec::new(); self.n + 1];
        for s in 1..=self.full {
            masks_by_size[s.count_ones() as usize].push(s);
        }

        for size in 2..=self.n {
            for &s in &masks_by_size[size] {
                let outside = self.full & !s;
                if signature_class_count(&self.adj, s, outside) > self.k {
                    continue;
                }
                let mut states: Vec<StateRec> = Vec::new();
                let mut seen: HashSet<Vec<Mask>> = HashSet::new();
                // Proper submask enumeration; (sub, s ^ sub) unordered.
                let mut sub = (s - 1) & s;
                while sub > 0 {
                    let rest = s ^ sub;
                    if sub < rest {
                        if let (Some(l1), Some(l2)) = (feas.get(&sub), feas.get(&rest)) {
                            self.combine(
                                sub, l1, rest, l2, outside, &mut states, &mut seen,
                            );
                        }
                    }
                    sub = (sub - 1) & s;
                }
                if !states.is_empty() {
                    prune_coarsenings(&mut states);
                    feas.insert(s, states);
                }
            }
        }

        let final_states = feas.get(&self.full)?;
        if final_states.is_empty() {
            return None;
        }
        let mut leaves = Vec::new();
        let node = self.rebuild(&feas, self.full, 0, &mut leaves).0;
        Some((node, leaves))
    }

    fn combine(
        &self,
        s1: Mask,
        list1: &[StateRec],
        s2: Mask,
        list2: &[StateRec],
        outside: Mask,
        states: &mut Vec<StateRec>,
        seen: &mut HashSet<Vec<Mask>>,
    ) {
        for (i1, st1) in list1.iter().enumerate() {
            for (i2, st2) in list2.iter().enumerate() {
                let tables = pair_status_tables(&self.adj, &st1.groups, &st2.groups);
                if tables.any_mixed {
                    continue;
                }
                let fulladj1 = full_adjacency_table(&self.adj, &st1.groups);
                let fulladj2 = full_adjacency_table(&self.adj, &st2.groups);
                let mut items: Vec<(u8, usize, Mask, Mask)> = Vec::new();
                for (i, &g) in st1.groups.iter().enumerate() {
                    items.push((0, i, g, group_signature(&self.adj, g, outside)));
                }
                for (i, &g) in st2.groups.iter().enumerate() {
                    items.push((1, i, g, group_signature(&self.adj, g, outside)));
                }
                let ctx = UnionCtx {
                    k: self.k,
                    items: &items,
                    stat: &tables.stat,
                    fulladj1: &fulladj1,
                    fulladj2: &fulladj2,
                };
                let mut cells = Vec::new();
                let mut bundle = vec![vec![Bundle::Unset; self.k]; self.k];
                place(&ctx, 0, &mut cells, &mut bundle, &mut |cells, bundle| {
                    let mut groups: Vec<Mask> = cells.iter().map(|c| c.mask).collect();
                    groups.sort_unstable();
                    if seen.insert(groups.clone()) {
                        let cell_prov: Vec<CellProv> = cells
                            .iter()
                            .map(|c| CellProv { side1: c.m1.clone(), side2: c.m2.clone() })
                            .collect();
                        let mut joins = Vec::new();
                        for a in 0..cells.len() {
                            for b in a + 1..cells.len() {
                                if bundle[a][b] == Bundle::Join {
                                    joins.push((a, b));
                                }
                            }
                        }
                        // The sorted group list permutes the cells; keep
                        // provenance aligned with the sorted order.
                        let mut order: Vec<usize> = (0..cells.len()).collect();
                        order.sort_by_key(|&i| cells[i].mask);
                        let rank: Vec<usize> = {
                            let mut r = vec![0; cells.len()];
                            for (new_i, &old_i) in order.iter().enumerate() {
                                r[old_i] = new_i;
                            }
                            r
                        };
                        let cells_sorted: Vec<CellProv> =
                            order.iter().map(|&i| cell_prov[i].clone()).collect();
                        let joins_sorted: Vec<(usize, usize)> = joins
                            .iter()
                            .map(|&(a, b)| {
                                let (x, y) = (rank[a], rank[b]);
                                (x.min(y), x.max(y))
                            })
                            .collect();
                        states.push(StateRec {
                            groups,
                            prov: Prov::Union {
                                s1,
                                i1,
                                s2,
                                i2,
                                cells: cells_sorted,
                                joins: joins_sorted,
                            },
                        });
                    }
                });
            }
        }
    }

    /// Rebuilds an expression from provenance; returns the node and the
    /// final label of each group mask.
    fn rebuild(
        &self,
        feas: &HashMap<Mask, Vec<StateRec>>,
        s: Mask,
        idx: usize,
        leaves: &mut Vec<Vertex>,
    ) -> (CwNode, HashMap<Mask, Label>) {
        let rec = &feas[&s][idx];
        match &rec.prov {
            Prov::Leaf(v) => {
                leaves.push(*v);
                (CwNode::Create(1), HashMap::from([(1u32 << *v, 1)]))
            }
            Prov::Union { s1, i1, s2, i2, cells, joins } => {
                let (mut e1, lab1) = self.rebuild(feas, *s1, *i1, leaves);
                let (e2, lab2) = self.rebuild(feas, *s2, *i2, leaves);
                let groups1 = &feas[s1][*i1].groups;
                let groups2 = &feas[s2][*i2].groups;

                // Assign a label to every cell: cells holding side-1
                // groups keep their first side-1 group's label; the rest
                // take unused labels.
                let mut cell_label: Vec<Option<Label>> = vec![None; cells.len()];
                let mut used = vec![false; self.k + 1];
                for (c, cell) in cells.iter().enumerate() {
                    if let Some(&first) = cell.side1.first() {
                        let l = lab1[&groups1[first]];
                        cell_label[c] = Some(l);
                        used[l] = true;
                    }
                }
                for lab in cell_label.iter_mut() {
                    if lab.is_none() {
                        let l = (1..=self.k).find(|&l| !used[l]).expect("within budget");
                        used[l] = true;
                        *lab = Some(l);
                    }
                }
                let cell_label: Vec<Label> =
                    cell_label.into_iter().map(|l| l.expect("assigned")).collect();

                // Side 1: relabel non-anchor groups onto their cell label.
                for (c, cell) in cells.iter().enumerate() {
                    for &gi in cell.side1.iter().skip(1) {
                        let from = lab1[&groups1[gi]];
                        e1 = CwNode::Relabel(from, cell_label[c], Box::new(e1));
                    }
                }

                // Side 2: permute its labels so one representative group
                // per cell already wears the cell label, then relabel the
                // rest.
                let mut perm: Vec<Option<Label>> = vec![None; self.k + 1];
                let mut taken = vec![false; self.k + 1];
                for (c, cell) in cells.iter().enumerate() {
                    if let Some(&first) = cell.side2.first() {
                        let from = lab2[&groups2[first]];
                        perm[from] = Some(cell_label[c]);
                        taken[cell_label[c]] = true;
                    }
                }
                for from in 1..=self.k {
                    if perm[from].is_none() {
                        let to = (1..=self.k).find(|&l| !taken[l]).expect("bijective");
                        taken[to] = true;
                        perm[from] = Some(to);
                    }
                }
                let perm: Vec<Label> = perm
                    .into_iter()
                    .enumerate()
                    .map(|(i, p)| p.unwrap_or(i))
                    .collect();
                let mut e2 = map_labels(&e2, &perm);
                for (c, cell) in cells.iter().enumerate() {
                    for &gi in cell.side2.iter().skip(1) {
                        let from = perm[lab2[&groups2[gi]]];
                        e2 = CwNode::Relabel(from, cell_label[c], Box::new(e2));
                    }
                }

                let mut node = CwNode::Union(Box::new(e1), Box::new(e2));
                for &(a, b) in joins {
                    node = CwNode::Join(cell_label[a], cell_label[b], Box::new(node));
                }

                let mut labels = HashMap::new();
                for (c, cell) in cells.iter().enumerate() {
                    let mut mask = 0;
                    for &gi in &cell.side1 {
                        mask |= groups1[gi];
                    }
                    for &gi in &cell.side2 {
                        mask |= groups2[gi];
                    }
                    labels.insert(mask, cell_label[c]);
                }
                (node, labels)
            }
        }
    }
}

fn full_adjacency_table(adj: &[Mask], groups: &[Mask]) -> Vec<Vec<bool>> {
    groups
        .iter()
        .map(|&a| groups.iter().map(|&b| fully_adjacent(adj, a, b)).collect())
        .collect()
}

/// Drops states that are coarsenings of another kept state: the finer
/// partition can always simulate the coarser one later.
fn prune_coarsenings(states: &mut Vec<StateRec>) {
    let snapshot: Vec<Vec<Mask>> = states.iter().map(|s| s.groups.clone()).collect();
    let coarsens = |coarse: &[Mask], fine: &[Mask]| {
        coarse != fine
            && fine
                .iter()
                .all(|&g| coarse.iter().any(|&c| c & g == g))
    };
    let keep: Vec<bool> = snapshot
        .iter()
        .map(|cand| !snapshot.iter().any(|other| coarsens(cand, other)))
        .collect();
    let mut it = keep.iter();
    states.retain(|_| *it.next().expect("aligned"));
}

fn map_labels(node: &CwNode, perm: &[Label]) -> CwNode {
    match node {
        CwNode::Create(l) => CwNode::Create(perm[*l]),
        CwNode::Union(a, b) => {
            CwNode::Union(Box::new(map_labels(a, perm)), Box::new(map_labels(b, perm)))
        }
        CwNode::Join(i, j, inner) => {
            CwNode::Join(perm[*i], perm[*j], Box::new(map_labels(inner, perm)))
        }
        CwNode::Relabel(f, t, inner) => {
            CwNode::Relabel(perm[*f], perm[*t], Box::new(map_labels(inner, perm)))
        }
    }
}

/// Decision with witness: is cw(g) <= k? `g` must be nonempty and fit
/// the solver's hard vertex limit (the public API enforces the cap).
pub(super) fn decide_cw(g: &Graph, k: usize) -> Option<CwExpression> {
    if k == 0 {
        return None;
    }
    if g.n() == 1 {
        return Some(CwExpression::new(k, CwNode::Create(1)));
    }
    let solver = Solver::new(g, k);
    solver
        .solve()
        .map(|(node, _leaves)| CwExpression::new(k, node))
}
