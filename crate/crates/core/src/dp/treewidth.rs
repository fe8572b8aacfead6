//! Exact treewidth decision for small graphs.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph the exact search accepts once safe reductions are done.
pub const EXACT_LIMIT: usize = 24;

/// True iff `g` has treewidth at most `bound`.
pub fn exact_treewidth_le(g: &Graph, bound: usize) -> Result<bool> {
    let n = g.n();
    if n <= bound + 1 {
        return Ok(true);
    }
    match bound {
        0 => return Ok(g.edge_count() == 0),
        1 => return Ok(g.edge_count() + g.components(VertexSet::EMPTY).len() == n),
        _ => {}
    }
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
    let alive = reduce(&mut adj, g.vertices(), bound);
    let m = alive.len();
    if m <= bound + 1 {
        return Ok(true);
    }
    // treewidth t allows at most t*m - t(t+1)/2 edges
    let edges: usize = alive.iter().map(|v| (adj[v] & alive).len()).sum::<usize>() / 2;
    if edges > bound * m - bound * (bound + 1) / 2 || degeneracy(&adj, alive) > bound {
        return Ok(false);
    }
    if m > EXACT_LIMIT {
        return Err(Error::TooLarge { n: m, max: EXACT_LIMIT });
    }
    let ids = alive.to_vec();
    let local: Vec<u32> = ids
        .iter()
        .map(|&v| {
            ids.iter()
                .enumerate()
                .filter(|&(_, &u)| adj[v].contains(u))
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let mut search = EliminationSearch {
        adj: local,
        full: if m == 32 { u32::MAX } else { (1u32 << m) - 1 },
        bound,
        failed: HashSet::new(),
    };
    Ok(search.run(0))
}

/// Eliminates simplicial and almost simplicial vertices of degree at most
/// `bound`; neither changes whether treewidth is at most `bound`.
fn reduce(adj: &mut [VertexSet], mut alive: VertexSet, bound: usize) -> VertexSet {
    loop {
        let mut changed = false;
        for v in alive {
            let nb = adj[v] & alive;
            if nb.len() > bound {
                continue;
            }
            let is_clique = |x: VertexSet| x.iter().all(|u| (x - adj[u]).without(u).is_empty());
            let removable = is_clique(nb) || nb.iter().any(|u| is_clique(nb.without(u)));
            if removable {
                for u in nb {
                    adj[u] = (adj[u] | nb).without(u).without(v);
                }
                alive.remove(v);
                changed = true;
            }
        }
        if !changed {
            return alive;
        }
    }
}

fn degeneracy(adj: &[VertexSet], mut alive: VertexSet) -> usize {
    let mut best = 0;
    while let Some(v) = alive.iter().min_by_key(|&v| (adj[v] & alive).len()) {
        best = best.max((adj[v] & alive).len());
        alive.remove(v);
    }
    best
}

struct EliminationSearch {
    adj: Vec<u32>,
    full: u32,
    bound: usize,
    failed: HashSet<u32>,
}

impl EliminationSearch {
    /// Vertices outside `gone ∪ {v}` reachable from `v` through `gone`.
    fn elimination_degree(&self, gone: u32, v: usize) -> u32 {
        let mut seen = 1u32 << v;
        let mut stack = vec![v];
        let mut out = 0u32;
        while let Some(u) = stack.pop() {
            let nb = self.adj[u] & !seen;
            out |= nb & !gone;
            let mut inner = nb & gone;
            seen |= nb;
            while inner != 0 {
                let w = inner.trailing_zeros() as usize;
                inner &= inner - 1;
                stack.push(w);
            }
        }
        out
    }

    fn run(&mut self, gone: u32) -> bool {
        let left = self.full & !gone;
        if left.count_ones() as usize <= self.bound + 1 {
            return true;
        }
        if self.failed.contains(&gone) {
            return false;
        }
        let mut rest = left;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let deg = self.elimination_degree(gone, v).count_ones() as usize;
            if deg <= self.bound && self.run(gone | 1 << v) {
                return true;
            }
        }
        self.failed.insert(gone);
        false
    }
}

/// True iff `G[p ∪ q]` with `q` made a clique has treewidth below `k`.
pub fn is_feasible(g: &Graph, k: usize, q: VertexSet, p: VertexSet) -> Result<bool> {
    if k == 0 {
        return Ok((p | q).is_empty());
    }
    if q.len() > k {
        return Ok(false);
    }
    let (h, _) = g.complete_on(q).induced(p | q);
    exact_treewidth_le(&h, k - 1)
}
