//! Exact NLC-width decision.
//!
//! Same subset dynamic program as the clique-width solver, with the NLC
//! union rule: edges are added only between the two sides, directed by a
//! relation on label pairs, so a cell may join against itself and no
//! within-side adjacency constraints arise.

use std::collections::{HashMap, HashSet};

use crate::graph::Graph;

use super::solver::{
    group_signature, pair_status_tables, signature_class_count, Mask, PairStatus,
};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Unset,
    NoEdge,
    Edge,
}

struct Ctx<'a> {
    k: usize,
    items: &'a [(u8, usize, Mask, Mask)],
    stat: &'a [Vec<PairStatus>],
}

#[derive(Clone)]
struct Cell {
    sig: Mask,
    mask: Mask,
    m1: Vec<usize>,
    m2: Vec<usize>,
}

/// Attempts to add item `t` to (possibly empty) cell `c`, keeping every
/// directional bundle (side1 of one cell versus side2 of another,
/// diagonal included) uniform. Returns the undo list on success.
fn try_place(
    ctx: &Ctx,
    t: usize,
    c: usize,
    cells: &mut [Cell],
    dir: &mut [Vec<Dir>],
) -> Option<Vec<(usize, usize, Dir)>> {
    let (side, pidx, mask, sig) = ctx.items[t];
    if cells[c].mask != 0 && cells[c].sig != sig {
        return None;
    }
    let mut updates: Vec<(usize, usize, Dir)> = Vec::new();
    for c2 in 0..cells.len() {
        // A side-1 item in cell c pairs with side-2 members of every cell
        // c2 through bundle (c, c2); a side-2 item symmetrically through
        // (c2, c).
        let (row, col) = if side == 0 { (c, c2) } else { (c2, c) };
        let others: &[usize] = if side == 0 { &cells[c2].m2 } else { &cells[c2].m1 };
        let mut want = dir[row][col];
        for &o in others {
            let st = if side == 0 { ctx.stat[pidx][o] } else { ctx.stat[o][pidx] };
            let as_dir = match st {
                PairStatus::NoEdges => Dir::NoEdge,
                PairStatus::AllEdges => Dir::Edge,
                PairStatus::Mixed => return None,
            };
            if want == Dir::Unset {
                want = as_dir;
            } else if want != as_dir {
                return None;
            }
        }
        if want != dir[row][col] {
            updates.push((row, col, want));
        }
    }
    let saved: Vec<_> = updates.iter().map(|&(r, cl, _)| (r, cl, dir[r][cl])).collect();
    for &(r, cl, w) in &updates {
        dir[r][cl] = w;
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
    ctx: &Ctx,
    t: usize,
    c: usize,
    cells: &mut [Cell],
    dir: &mut [Vec<Dir>],
    saved: Vec<(usize, usize, Dir)>,
) {
    let (side, _pidx, mask, _sig) = ctx.items[t];
    if side == 0 {
        cells[c].m1.pop();
    } else {
        cells[c].m2.pop();
    }
    cells[c].mask &= !mask;
    for (r, cl, w) in saved {
        dir[r][cl] = w;
    }
}

fn place(
    ctx: &Ctx,
    t: usize,
    cells: &mut Vec<Cell>,
    dir: &mut Vec<Vec<Dir>>,
    emit: &mut impl FnMut(&[Cell]),
) {
    if t == ctx.items.len() {
        emit(cells);
        return;
    }
    for c in 0..cells.len() {
        if let Some(saved) = try_place(ctx, t, c, cells, dir) {
            place(ctx, t + 1, cells, dir, emit);
            undo_place(ctx, t, c, cells, dir, saved);
        }
    }
    if cells.len() < ctx.k {
        cells.push(Cell { sig: 0, mask: 0, m1: vec![], m2: vec![] });
        let c = cells.len() - 1;
        if let Some(saved) = try_place(ctx, t, c, cells, dir) {
            place(ctx, t + 1, cells, dir, emit);
            undo_place(ctx, t, c, cells, dir, saved);
        }
        cells.pop();
    }
}

/// Decides nlcw(g) <= k for nonempty g within the solver vertex limit.
pub(super) fn decide_nlc(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return false;
    }
    let n = g.n();
    assert!(n >= 1 && n <= 24);
    if n == 1 {
        return true;
    }
    let adj: Vec<Mask> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0, |acc, &u| acc | (1 << u)))
        .collect();
    let full: Mask = (1u32 << n) - 1;

    let mut feas: HashMap<Mask, Vec<Vec<Mask>>> = HashMap::new();
    for v in 0..n {
        feas.insert(1 << v, vec![vec![1 << v]]);
    }
    let mut masks_by_size: Vec<Vec<Mask>> = vec![Vec::new(); n + 1];
    for s in 1..=full {
        masks_by_size[s.count_ones() as usize].push(s);
    }

    for size in 2..=n {
        for &s in &masks_by_size[size] {
            let outside = full & !s;
            if signature_class_count(&adj, s, outside) > k {
                continue;
            }
            let mut states: Vec<Vec<Mask>> = Vec::new();
            let mut seen: HashSet<Vec<Mask>> = HashSet::new();
            let mut sub = (s - 1) & s;
            while sub > 0 {
                let rest = s ^ sub;
                if sub < rest {
                    if let (Some(l1), Some(l2)) = (feas.get(&sub), feas.get(&rest)) {
                        for st1 in l1 {
                            for st2 in l2 {
                                let tables = pair_status_tables(&adj, st1, st2);
                                if tables.any_mixed {
                                    continue;
                                }
                                let mut items: Vec<(u8, usize, Mask, Mask)> = Vec::new();
                                for (i, &gm) in st1.iter().enumerate() {
                                    items.push((0, i, gm, group_signature(&adj, gm, outside)));
                                }
                                for (i, &gm) in st2.iter().enumerate() {
                                    items.push((1, i, gm, group_signature(&adj, gm, outside)));
                                }
                                let ctx = Ctx { k, items: &items, stat: &tables.stat };
                                let mut cells = Vec::new();
                                let mut dir = vec![vec![Dir::Unset; k]; k];
                                place(&ctx, 0, &mut cells, &mut dir, &mut |cells| {
                                    let mut groups: Vec<Mask> =
                                        cells.iter().map(|c| c.mask).collect();
                                    groups.sort_unstable();
                                    if seen.insert(groups.clone()) {
                                        states.push(groups);
                                    }
                                });
                            }
                        }
                    }
                }
                sub = (sub - 1) & s;
            }
            if !states.is_empty() {
                feas.insert(s, states);
            }
        }
    }

    feas.contains_key(&full)
}
