//! Minimal separators, full components and potential maximal cliques.
//!
//! All tests accept an `alive` mask so the same code serves `G - X`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph [`enumerate_pmcs`] will subset-scan.
pub const PMC_SCAN_LIMIT: usize = 22;

/// Components of `G - s`, split by whether their neighborhood is all of `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub s: VertexSet,
    pub full_components: Vec<VertexSet>,
    pub other_components: Vec<VertexSet>,
}

impl Separation {
    pub fn is_minimal(&self) -> bool {
        self.full_components.len() >= 2
    }
}

/// A PMC together with `N(D)` for each component `D` of `G - omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmcRecord {
    pub omega: VertexSet,
    pub adhesions: Vec<VertexSet>,
}

pub fn full_components(g: &Graph, s: VertexSet) -> Separation {
    full_components_in(g, g.vertices(), s)
}

/// [`full_components`] inside `G[alive]`.
pub fn full_components_in(g: &Graph, alive: VertexSet, s: VertexSet) -> Separation {
    let (mut full, mut other) = (Vec::new(), Vec::new());
    for c in g.components_within(alive - s) {
        if g.open_neighborhood(c) & alive == s {
            full.push(c);
        } else {
            other.push(c);
        }
    }
    Separation {
        s,
        full_components: full,
        other_components: other,
    }
}

pub fn is_minimal_separator(g: &Graph, s: VertexSet) -> bool {
    is_minimal_separator_in(g, g.vertices(), s)
}

pub fn is_minimal_separator_in(g: &Graph, alive: VertexSet, s: VertexSet) -> bool {
    let mut full = 0;
    for c in g.components_within(alive - s) {
        if g.open_neighborhood(c) & alive == s {
            full += 1;
            if full == 2 {
                return true;
            }
        }
    }
    false
}

/// All minimal separators in canonical order.
///
/// Seeds with `N(C)` for `C` in `cc(G - N[v])` and closes under
/// `S, x in S -> N(C)` for `C` in `cc(G - (S ∪ N(x)))`.
pub fn enumerate_minimal_separators(g: &Graph, budget: usize) -> Result<Vec<VertexSet>> {
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut queue = VecDeque::new();
    let push = |s: VertexSet, seen: &mut HashSet<VertexSet>, queue: &mut VecDeque<VertexSet>| {
        if seen.insert(s) {
            if seen.len() > budget {
                return Err(Error::BudgetExceeded {
                    what: "enumerating minimal separators",
                    budget,
                });
            }
            queue.push_back(s);
        }
        Ok(())
    };
    for v in g.vertices() {
        let closed = g.closed_neighborhood(VertexSet::singleton(v));
        for c in g.components(closed) {
            push(g.open_neighborhood(c), &mut seen, &mut queue)?;
        }
    }
    while let Some(s) = queue.pop_front() {
        for x in s {
            let removed = s | g.neighbors(x);
            for c in g.components(removed) {
                push(g.open_neighborhood(c), &mut seen, &mut queue)?;
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Potential maximal clique test: every nonedge of `omega` is covered by a
/// component of `G - omega`, and no component sees all of `omega`.
pub fn is_pmc(g: &Graph, omega: VertexSet) -> bool {
    is_pmc_in(g, g.vertices(), omega)
}

/// [`is_pmc`] in `G[alive]`. The empty set is a PMC only of the empty graph.
pub fn is_pmc_in(g: &Graph, alive: VertexSet, omega: VertexSet) -> bool {
    if !omega.is_subset(alive) {
        return false;
    }
    // vertices of omega still owed a cover, per vertex
    let mut uncovered: Vec<(usize, VertexSet)> = omega
        .iter()
        .map(|v| (v, omega - g.neighbors(v) - VertexSet::singleton(v)))
        .filter(|(_, miss)| !miss.is_empty())
        .collect();
    for d in g.components_within(alive - omega) {
        let nd = g.open_neighborhood(d) & alive;
        if nd == omega {
            return false;
        }
        for (v, miss) in uncovered.iter_mut() {
            if nd.contains(*v) {
                *miss -= nd;
            }
        }
    }
    uncovered.iter().all(|(_, miss)| miss.is_empty())
}

/// `N(D)` for every `D` in `cc(G - omega)`, in component order.
pub fn adhesions(g: &Graph, omega: VertexSet) -> Result<Vec<VertexSet>> {
    if !is_pmc(g, omega) {
        return Err(Error::NotAPmc { omega });
    }
    Ok(g.components(omega)
        .into_iter()
        .map(|d| g.open_neighborhood(d))
        .collect())
}

/// Every PMC by subset scan, in canonical order.
pub fn enumerate_pmcs(g: &Graph, budget: usize) -> Result<Vec<PmcRecord>> {
    Ok(enumerate_pmc_sets(g, budget)?
        .into_iter()
        .map(|omega| PmcRecord {
            omega,
            adhesions: g.components(omega).into_iter().map(|d| g.open_neighborhood(d)).collect(),
        })
        .collect())
}

/// Like [`enumerate_pmcs`] but returns only the sets.
pub fn enumerate_pmc_sets(g: &Graph, budget: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > PMC_SCAN_LIMIT {
        return Err(Error::TooLarge {
            n,
            max: PMC_SCAN_LIMIT,
        });
    }
    let mut out = Vec::new();
    for bits in 1u64..1 << n {
        let omega = VertexSet::from_bits(bits as u128);
        if is_pmc(g, omega) {
            out.push(omega);
            if out.len() > budget {
                return Err(Error::BudgetExceeded {
                    what: "enumerating PMCs",
                    budget,
                });
            }
        }
    }
    out.sort();
    Ok(out)
}
