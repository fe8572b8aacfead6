//! Exhaustive oracles that share no search logic with the solvers.

use crate::dp::{exact_treewidth_le, precedes};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Weight, Weights};

pub const BRUTE_SUBSET_LIMIT: usize = 16;
pub const BRUTE_PMC_LIMIT: usize = 7;

/// The ≺-least maximum-weight `S` with `G[S]` of treewidth below `k`, by
/// scanning every subset.
pub fn brute_tw_subgraph<W: Weight>(g: &Graph, w: &Weights<W>, k: usize) -> Result<VertexSet> {
    let n = g.n();
    if n > BRUTE_SUBSET_LIMIT {
        return Err(Error::TooLarge {
            n,
            max: BRUTE_SUBSET_LIMIT,
        });
    }
    let mut best = VertexSet::EMPTY;
    if k == 0 {
        return Ok(best);
    }
    for bits in 1u32..1 << n {
        let s = VertexSet::from_bits(bits as u128);
        if precedes(w, s, best) && exact_treewidth_le(&g.induced(s).0, k - 1)? {
            best = s;
        }
    }
    Ok(best)
}

/// Index of the pair `u < v` among the `n(n-1)/2` pairs.
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Edge mask of the graph obtained by eliminating vertices in `order`.
fn elimination_fill(g: &Graph, order: &[usize]) -> u32 {
    let n = g.n();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut alive = g.vertices();
    let mut mask = 0u32;
    for &v in order {
        let nb = adj[v] & alive;
        for u in nb {
            adj[u] = (adj[u] | nb).without(u);
        }
        alive.remove(v);
    }
    for (u, &nb) in adj.iter().enumerate() {
        for v in nb {
            if u < v {
                mask |= 1 << pair_index(n, u, v);
            }
        }
    }
    mask
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: VertexSet, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for v in left {
            prefix.push(v);
            go(prefix, left.without(v), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), VertexSet::full(n), &mut out);
    out
}

/// Every PMC as a maximal clique of some minimal triangulation.
///
/// Every minimal triangulation is the fill graph of some elimination order
/// and every fill graph is chordal, so the inclusion-minimal fills over all
/// orders are exactly the minimal triangulations.
pub fn brute_pmcs_by_definition(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > BRUTE_PMC_LIMIT {
        return Err(Error::TooLarge {
            n,
            max: BRUTE_PMC_LIMIT,
        });
    }
    let mut fills: Vec<u32> = permutations(n).iter().map(|o| elimination_fill(g, o)).collect();
    fills.sort_unstable();
    fills.dedup();
    let minimal: Vec<u32> = fills
        .iter()
        .copied()
        .filter(|&f| !fills.iter().any(|&h| h != f && h & f == h))
        .collect();
    let mut out = Vec::new();
    for fill in minimal {
        let adjacent = |u: usize, v: usize| fill >> pair_index(n, u, v) & 1 == 1;
        let is_clique = |s: VertexSet| s.iter().all(|u| s.iter().all(|v| u == v || adjacent(u, v)));
        // starts at 0: the empty set is the maximal clique of the empty graph
        for bits in 0u32..1 << n {
            let s = VertexSet::from_bits(bits as u128);
            let maximal = (0..n).all(|v| s.contains(v) || !is_clique(s.with(v)));
            if is_clique(s) && maximal {
                out.push(s);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
