//! Dynamic programming over a container family.
//!
//! For every container `A`, every `Q ⊆ A` with `|Q| ≤ k` and every component
//! `D` of `G - A`, the table holds the ≺-least known `J ⊆ D` such that
//! `G[Q ∪ J]` with `Q` completed has treewidth below `k`. Each round glues
//! partial solutions of a neighboring state `(A', Q')` and cuts them to `D`.

pub mod treewidth;

use std::cmp::Ordering;
use std::collections::HashMap;

use log::{debug, warn};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Weight, Weights};
use crate::minsep::{enumerate_pmc_sets, PMC_SCAN_LIMIT};
use crate::pmc_containers::container_family;
use crate::recognition::{is_long_hole_free, is_p5_free};

pub use treewidth::{exact_treewidth_le, is_feasible};

/// Budget used by [`Strategy::Auto`] when it falls back to the class-C family.
pub const DEFAULT_BUDGET: usize = 50_000_000;

/// `Less` iff `b1 ≺ b2`: heavier first, then the characteristic vector that
/// is 0 at the first vertex where the two differ.
pub fn canonical_cmp<W: Weight>(w: &Weights<W>, b1: VertexSet, b2: VertexSet) -> Ordering {
    w.total(b2)
        .cmp(&w.total(b1))
        .then_with(|| iota_cmp(b1, b2))
}

/// Lexicographic order of characteristic vectors.
pub fn iota_cmp(b1: VertexSet, b2: VertexSet) -> Ordering {
    match (b1 ^ b2).min() {
        None => Ordering::Equal,
        Some(v) if b2.contains(v) => Ordering::Less,
        Some(_) => Ordering::Greater,
    }
}

pub fn precedes<W: Weight>(w: &Weights<W>, b1: VertexSet, b2: VertexSet) -> bool {
    canonical_cmp(w, b1, b2) == Ordering::Less
}

/// `q ∪ ⋃ parts`.
pub fn glue(q: VertexSet, parts: &[VertexSet]) -> VertexSet {
    parts.iter().fold(q, |acc, &p| acc | p)
}

#[derive(Clone, Debug, Default)]
pub struct DpOptions {
    /// Shuffle the order in which states are visited within a round.
    pub visit_seed: Option<u64>,
}

struct Container {
    a: VertexSet,
    qs: Vec<VertexSet>,
    comps: Vec<VertexSet>,
}

#[derive(Clone, Copy)]
struct Entry<W> {
    set: VertexSet,
    weight: W,
}

impl<W: Weight> Entry<W> {
    fn beats(&self, other: &Entry<W>) -> bool {
        self.weight > other.weight || self.weight == other.weight && iota_cmp(self.set, other.set) == Ordering::Less
    }
}

/// The ≺-least maximum-weight vertex set inducing treewidth below `k`,
/// provided `family` holds a container for every PMC of some minimal
/// triangulation of an optimum (always true when it holds every PMC).
pub fn solve_with_containers<W: Weight>(
    g: &Graph,
    w: &Weights<W>,
    family: &[VertexSet],
    k: usize,
) -> Result<VertexSet> {
    solve_with_containers_opts(g, w, family, k, &DpOptions::default())
}

pub fn solve_with_containers_opts<W: Weight>(
    g: &Graph,
    w: &Weights<W>,
    family: &[VertexSet],
    k: usize,
    opts: &DpOptions,
) -> Result<VertexSet> {
    if w.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "{} weights for {} vertices",
            w.len(),
            g.n()
        )));
    }
    if family.is_empty() {
        warn!("empty container family; answer is the empty set");
    }
    let mut family = family.to_vec();
    family.sort();
    family.dedup();
    let containers: Vec<Container> = family
        .iter()
        .map(|&a| Container {
            a,
            qs: a.subsets_up_to(k),
            comps: g.components(a),
        })
        .collect();

    let empty = Entry {
        set: VertexSet::EMPTY,
        weight: W::zero(),
    };
    // table[c][qi][di]
    let mut table: Vec<Vec<Vec<Entry<W>>>> = containers
        .iter()
        .map(|c| vec![vec![empty; c.comps.len()]; c.qs.len()])
        .collect();
    let mut feasible: HashMap<(VertexSet, VertexSet), bool> = HashMap::new();

    let mut groups: Vec<(usize, usize)> = containers
        .iter()
        .enumerate()
        .flat_map(|(ci, c)| (0..c.comps.len()).map(move |di| (ci, di)))
        .collect();
    if let Some(seed) = opts.visit_seed {
        groups.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    debug!("{} containers, {} (A, D) groups", containers.len(), groups.len());

    for round in 0..g.n() {
        let mut changed = false;
        for &(ci, di) in &groups {
            let c = &containers[ci];
            let d = c.comps[di];
            for (cj, c2) in containers.iter().enumerate() {
                let inter = c.a & c2.a;
                let touching: Vec<usize> = (0..c2.comps.len()).filter(|&dj| c2.comps[dj].intersects(d)).collect();
                for (qj, &q2) in c2.qs.iter().enumerate() {
                    let glued = touching.iter().fold(q2, |acc, &dj| acc | table[cj][qj][dj].set);
                    let j = glued & d;
                    let cand = Entry {
                        set: j,
                        weight: w.total(j),
                    };
                    let key = q2 & inter;
                    for (qi, &q) in c.qs.iter().enumerate() {
                        if q & inter != key || !cand.beats(&table[ci][qi][di]) {
                            continue;
                        }
                        let ok = match feasible.get(&(q, j)) {
                            Some(&ok) => ok,
                            None => {
                                let ok = is_feasible(g, k, q, j)?;
                                feasible.insert((q, j), ok);
                                ok
                            }
                        };
                        if ok {
                            table[ci][qi][di] = cand;
                            changed = true;
                        }
                    }
                }
            }
        }
        debug!("round {round}: changed = {changed}");
        if !changed {
            break;
        }
    }

    let mut best = empty;
    for (c, rows) in containers.iter().zip(&table) {
        for (&q, row) in c.qs.iter().zip(rows) {
            let parts: Vec<VertexSet> = row.iter().map(|e| e.set).collect();
            let set = glue(q, &parts);
            let cand = Entry {
                set,
                weight: w.total(set),
            };
            if cand.beats(&best) {
                debug_assert!(
                    is_feasible(g, k, VertexSet::EMPTY, set).unwrap_or(true),
                    "glued set {set:?} is infeasible"
                );
                best = cand;
            }
        }
    }
    Ok(best.set)
}

/// Where the container family comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Every PMC, by subset scan; small graphs only.
    AllPmcs,
    /// The class-C container family; the graph must be in class C.
    ClassCFamily { budget: usize },
    ExplicitFamily(Vec<VertexSet>),
    /// `AllPmcs` when the graph is small enough, otherwise `ClassCFamily`.
    Auto,
}

pub fn family_for(g: &Graph, k: usize, strategy: &Strategy) -> Result<Vec<VertexSet>> {
    match strategy {
        Strategy::AllPmcs => enumerate_pmc_sets(g, usize::MAX),
        Strategy::ClassCFamily { budget } => container_family(g, k, *budget),
        Strategy::ExplicitFamily(f) => Ok(f.clone()),
        Strategy::Auto if g.n() <= PMC_SCAN_LIMIT => enumerate_pmc_sets(g, usize::MAX),
        Strategy::Auto => container_family(g, k, DEFAULT_BUDGET),
    }
}

/// Maximum-weight induced subgraph of treewidth below `k`.
pub fn solve_tw_subgraph<W: Weight>(
    g: &Graph,
    w: &Weights<W>,
    k: usize,
    strategy: &Strategy,
) -> Result<VertexSet> {
    let family = family_for(g, k, strategy)?;
    solve_with_containers(g, w, &family, k)
}

/// Maximum-weight independent set of a long-hole-free graph.
pub fn solve_mwis<W: Weight>(g: &Graph, w: &Weights<W>) -> Result<VertexSet> {
    if !is_long_hole_free(g) {
        return Err(Error::NotLongHoleFree);
    }
    solve_tw_subgraph(g, w, 1, &Strategy::Auto)
}

/// Minimum feedback vertex set of a P5-free graph.
pub fn solve_fvs(g: &Graph) -> Result<VertexSet> {
    if !is_p5_free(g) {
        return Err(Error::NotP5Free);
    }
    let forest = solve_tw_subgraph(g, &Weights::<u64>::unit(g.n()), 2, &Strategy::Auto)?;
    Ok(g.vertices() - forest)
}
