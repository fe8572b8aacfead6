//! Containers for potential maximal cliques.
//!
//! A PMC is pure with respect to a separator family when every adhesion
//! lies in the family. Impure PMCs get an explicit container built from two
//! covering-component lemmas; pure PMCs are recovered exactly by lifting
//! small candidates back along the vertex order.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::minsep::{full_components, is_pmc_in};
use crate::recognition::is_in_class_c;
use crate::sep_containers::{
    enumerate_family_f1, extend_family_f2, find_anticomplete_vertex, witness_container_for_separator,
};

/// Vertices `x1..xt` removed in order, ending in a PMC of `G - {x1..xt}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurvivalSequence {
    pub order: Vec<usize>,
    pub end_pmc: VertexSet,
}

impl SurvivalSequence {
    /// The unique PMC of `G` this sequence survives from.
    pub fn lift(&self, g: &Graph) -> Result<VertexSet> {
        pmc_lift(g, &self.order, self.end_pmc)
    }
}

/// First component `D` of `G - omega` with `j ⊆ N(D)`.
pub fn covering_component(g: &Graph, omega: VertexSet, j: VertexSet) -> Result<VertexSet> {
    if !g.is_independent(j) {
        return Err(Error::JNotIndependent { j });
    }
    g.components(omega)
        .into_iter()
        .find(|&d| j.is_subset(g.open_neighborhood(d)))
        .ok_or(Error::NoCoveringComponent { j })
}

/// First pair `(D1, D2)`, possibly equal, of components of `G - omega` both
/// seeing `v` whose neighborhoods together cover `omega \ N(v)`.
pub fn two_covering_components(g: &Graph, omega: VertexSet, v: usize) -> Result<(VertexSet, VertexSet)> {
    let touching: Vec<(VertexSet, VertexSet)> = g
        .components(omega)
        .into_iter()
        .map(|d| (d, g.open_neighborhood(d)))
        .filter(|(_, nd)| nd.contains(v))
        .collect();
    if touching.is_empty() {
        return Err(Error::VNotCovered { v });
    }
    let need = omega - g.neighbors(v);
    for (i, &(d1, n1)) in touching.iter().enumerate() {
        for &(d2, n2) in &touching[i..] {
            if need.is_subset(n1 | n2) {
                return Ok((d1, d2));
            }
        }
    }
    Err(Error::NoSuchPair { v })
}

/// Smallest full component of `s` other than `l`.
fn other_full_component(g: &Graph, s: VertexSet, l: VertexSet) -> Option<VertexSet> {
    full_components(g, s).full_components.into_iter().find(|&r| r != l)
}

/// An `F`-container for the impure PMC `omega`.
///
/// Picks the first adhesion `S = N(L)` missing from `f2`, a second full
/// component `R`, and `z_l, z_r ∈ S` anticomplete to `V(F) \ (S ∪ L)` and
/// `V(F) \ (S ∪ R)`. Each of the four separators covering `omega \ N(z)`
/// is replaced by itself when it is in `f2` and by its witness container
/// otherwise. `f2` must be sorted.
pub fn impure_pmc_container(
    g: &Graph,
    omega: VertexSet,
    f2: &[VertexSet],
    f_vertices: VertexSet,
    coloring: &[VertexSet],
) -> Result<VertexSet> {
    let in_f2 = |s: &VertexSet| f2.binary_search(s).is_ok();
    let (l, s) = g
        .components(omega)
        .into_iter()
        .map(|d| (d, g.open_neighborhood(d)))
        .find(|(_, s)| !in_f2(s))
        .ok_or(Error::PurePmc)?;
    let r = other_full_component(g, s, l).ok_or_else(|| Error::ClassViolation(format!("{s:?} is not a minimal separator")))?;
    let z_l = find_anticomplete_vertex(g, s, l, f_vertices).ok_or(Error::NoZVertices { s })?;
    let z_r = find_anticomplete_vertex(g, s, r, f_vertices).ok_or(Error::NoZVertices { s })?;

    let container_of = |d: VertexSet| -> Result<VertexSet> {
        let si = g.open_neighborhood(d);
        if in_f2(&si) {
            return Ok(si);
        }
        let ri = other_full_component(g, si, d)
            .ok_or_else(|| Error::ClassViolation(format!("{si:?} is not a minimal separator")))?;
        match witness_container_for_separator(g, si, d, ri, coloring, f_vertices) {
            Err(Error::PrimitiveSeparator { .. }) => Ok(si),
            other => other,
        }
    };
    let mut out = g.neighbors(z_l) & g.neighbors(z_r);
    for z in [z_l, z_r] {
        let (d1, d2) = two_covering_components(g, omega, z)?;
        out |= container_of(d1)? | container_of(d2)?;
    }
    if !omega.is_subset(out) {
        return Err(Error::ClassViolation(format!("container {out:?} misses part of {omega:?}")));
    }
    Ok(out)
}

/// The unique PMC `Ω` of `G` for which `order` is a survival sequence
/// ending in `end_pmc`.
pub fn pmc_lift(g: &Graph, order: &[usize], end_pmc: VertexSet) -> Result<VertexSet> {
    let removed: VertexSet = order.iter().collect();
    let mut alive = g.vertices() - removed;
    if !is_pmc_in(g, alive, end_pmc) {
        return Err(Error::NotAPmc { omega: end_pmc });
    }
    let mut cur = end_pmc;
    for &x in order.iter().rev() {
        alive.insert(x);
        if !is_pmc_in(g, alive, cur) {
            cur.insert(x);
            if !is_pmc_in(g, alive, cur) {
                return Err(Error::LiftFailed { vertex: x });
            }
        }
    }
    Ok(cur)
}

/// True iff `omega \ {x1..xi}` is a PMC of `G - {x1..xi}` for every prefix,
/// the empty one included.
pub fn is_survival_sequence(g: &Graph, order: &[usize], omega: VertexSet) -> bool {
    let mut removed = VertexSet::EMPTY;
    if !is_pmc_in(g, g.vertices(), omega) {
        return false;
    }
    order.iter().all(|&x| {
        removed.insert(x);
        is_pmc_in(g, g.vertices() - removed, omega - removed)
    })
}

/// All unions of between one and `max_parts` sets from `parts`.
fn nonempty_unions(parts: &[VertexSet], max_parts: usize) -> Vec<VertexSet> {
    let mut seen: HashSet<VertexSet> = parts.iter().copied().collect();
    let mut frontier: Vec<VertexSet> = seen.iter().copied().collect();
    for _ in 1..max_parts {
        let mut next = Vec::new();
        for &base in &frontier {
            for &p in parts {
                let u = base | p;
                if seen.insert(u) {
                    next.push(u);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

/// Candidate PMCs recovered by lifting, complete for every PMC `Ω` with
/// `cc(G - Ω) ⊆ y_family`. Uses the ascending vertex order. `budget` caps
/// the number of candidate PMC tests.
pub fn x_rec(g: &Graph, y_family: &[VertexSet], budget: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let order: Vec<usize> = (0..n).collect();
    let mut out: HashSet<VertexSet> = HashSet::new();
    out.insert(pmc_lift(g, &order, VertexSet::EMPTY)?);
    let mut tests = 0usize;
    let mut charge = |count: usize| -> Result<()> {
        tests += count;
        if tests > budget {
            Err(Error::BudgetExceeded {
                what: "recovering pure PMCs",
                budget,
            })
        } else {
            Ok(())
        }
    };
    for s in 0..n {
        let alive = VertexSet::full(n) - VertexSet::full(s);
        let v = s;
        let mut y_s: Vec<VertexSet> = y_family
            .iter()
            .flat_map(|&d| g.components_within(d & alive))
            .collect();
        y_s.sort();
        y_s.dedup();
        if y_s.is_empty() {
            continue;
        }
        let nbhd = |x: VertexSet| g.open_neighborhood(x) & alive;
        let mut candidates: HashSet<VertexSet> = y_s.iter().map(|&d| nbhd(d).with(v)).collect();

        let mut parts: Vec<VertexSet> = y_s.iter().map(|&d| nbhd(d)).collect();
        parts.sort();
        parts.dedup();
        let unions = nonempty_unions(&parts, 4);
        let alive_list = alive.to_vec();
        let mut commons: HashSet<VertexSet> = HashSet::new();
        for (i, &x) in alive_list.iter().enumerate() {
            for &y in &alive_list[i + 1..] {
                commons.insert(g.neighbors(x) & g.neighbors(y) & alive);
            }
        }
        charge(unions.len() * commons.len())?;
        for &u in &unions {
            for &c in &commons {
                candidates.insert((u | c).without(v));
            }
        }
        charge(candidates.len())?;
        for z in candidates {
            if is_pmc_in(g, alive, z) {
                out.insert(pmc_lift(g, &order[..s], z)?);
            }
        }
    }
    let mut out: Vec<_> = out.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `X1 ∪ X2` for a class-C graph.
///
/// `X2 = x_rec(⋃ cc(G - S) over S ∈ F2)` holds every pure PMC. `X1` holds
/// `(⋃Z) ∪ (N(u) ∩ N(v))` for `Z ⊆ F2`, `|Z| ≤ 4`, which covers every
/// impure PMC. Both halves share one budget.
pub fn container_family(g: &Graph, k: usize, budget: usize) -> Result<Vec<VertexSet>> {
    if !is_in_class_c(g) {
        return Err(Error::NotInClassC);
    }
    let f2 = extend_family_f2(g, &enumerate_family_f1(g, k, budget)?);
    let mut y: Vec<VertexSet> = f2.iter().flat_map(|&s| g.components(s)).collect();
    y.sort();
    y.dedup();
    let mut out: HashSet<VertexSet> = x_rec(g, &y, budget)?.into_iter().collect();

    let mut unions = nonempty_unions(&f2, 4);
    unions.push(VertexSet::EMPTY);
    let verts = g.vertices().to_vec();
    let mut commons: HashSet<VertexSet> = HashSet::new();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i..] {
            commons.insert(g.neighbors(u) & g.neighbors(v));
        }
    }
    if unions.len().saturating_mul(commons.len()) > budget {
        return Err(Error::BudgetExceeded {
            what: "combining separator containers",
            budget,
        });
    }
    for &u in &unions {
        for &c in &commons {
            out.insert(u | c);
        }
    }
    let mut out: Vec<_> = out.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `{A \ B : A ∈ family, B ⊆ A, |B| ≤ p}`, deduplicated.
pub fn strip_containers(family: &[VertexSet], p: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = family
        .iter()
        .flat_map(|&a| a.subsets_up_to(p).into_iter().map(move |b| a - b))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{brute_tw_subgraph, random_bounded_treewidth_subset, random_class_c_graph};
    use crate::minsep::{enumerate_minimal_separators, enumerate_pmc_sets, is_pmc};
    use crate::recognition::coloring_within;
    use crate::sep_containers::witness_family_f1;
    use crate::Weights;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn covering_component_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(covering_component(&c4, set(&[0, 1, 2]), set(&[0, 2])).unwrap(), set(&[3]));
        assert_eq!(covering_component(&c4, set(&[0, 1, 3]), set(&[1, 3])).unwrap(), set(&[2]));
        assert_eq!(
            covering_component(&c4, set(&[0, 1, 2]), set(&[0, 1])),
            Err(Error::JNotIndependent { j: set(&[0, 1]) })
        );
    }

    #[test]
    fn two_covering_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(two_covering_components(&c4, set(&[0, 1, 2]), 0).unwrap(), (set(&[3]), set(&[3])));
        let k4 = Graph::complete(4);
        assert_eq!(two_covering_components(&k4, k4.vertices(), 2), Err(Error::VNotCovered { v: 2 }));
    }

    #[test]
    fn covering_lemmas_hold_in_class_c() {
        for seed in 0..120 {
            let n = 3 + seed as usize % 8;
            let g = random_class_c_graph(n, 0.4, seed).unwrap();
            for omega in enumerate_pmc_sets(&g, usize::MAX).unwrap() {
                for j in omega.subsets_up_to(omega.len()) {
                    if j.len() > 1 && g.is_independent(j) {
                        let d = covering_component(&g, omega, j).unwrap();
                        assert!(j.is_subset(g.open_neighborhood(d)));
                    }
                }
                for v in omega {
                    match two_covering_components(&g, omega, v) {
                        Ok((d1, d2)) => {
                            let (n1, n2) = (g.open_neighborhood(d1), g.open_neighborhood(d2));
                            assert!(n1.contains(v) && n2.contains(v));
                            assert!((omega - g.neighbors(v)).is_subset(n1 | n2));
                        }
                        Err(Error::VNotCovered { .. }) => {
                            assert!(g.components(omega).iter().all(|&d| !g.open_neighborhood(d).contains(v)));
                        }
                        Err(e) => panic!("{e} on {g:?}"),
                    }
                }
            }
        }
    }

    #[test]
    fn lift_examples() {
        let p3 = Graph::path(3);
        assert_eq!(pmc_lift(&p3, &[0], set(&[1, 2])).unwrap(), set(&[1, 2]));
        assert_eq!(pmc_lift(&p3, &[1], set(&[0])).unwrap(), set(&[0, 1]));
        assert_eq!(pmc_lift(&p3, &[], set(&[0, 1])).unwrap(), set(&[0, 1]));
        assert_eq!(pmc_lift(&Graph::path(1), &[0], VertexSet::EMPTY).unwrap(), set(&[0]));
    }

    #[test]
    fn survival_examples() {
        let p3 = Graph::path(3);
        assert!(!is_survival_sequence(&p3, &[0], set(&[0, 1])));
        assert!(is_survival_sequence(&p3, &[], set(&[0, 1])));
        let lifted = pmc_lift(&p3, &[1], set(&[0])).unwrap();
        assert!(is_survival_sequence(&p3, &[1], lifted));
        let seq = SurvivalSequence {
            order: vec![1],
            end_pmc: set(&[0]),
        };
        assert_eq!(seq.lift(&p3).unwrap(), lifted);
    }

    #[test]
    fn lift_inverts_prefix_removal() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..200 {
            let n = rng.gen_range(1..=7);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(0.45)).unwrap();
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            order.truncate(rng.gen_range(0..=n));
            for omega in enumerate_pmc_sets(&g, usize::MAX).unwrap() {
                if is_survival_sequence(&g, &order, omega) {
                    let removed: VertexSet = order.iter().collect();
                    assert_eq!(pmc_lift(&g, &order, omega - removed).unwrap(), omega);
                }
            }
        }
    }

    #[test]
    fn x_rec_examples() {
        let p3 = Graph::path(3);
        let out = x_rec(&p3, &[set(&[0]), set(&[2])], usize::MAX).unwrap();
        assert!(out.contains(&set(&[0, 1])) && out.contains(&set(&[1, 2])));
        let g0 = pmc_lift(&p3, &[0, 1, 2], VertexSet::EMPTY).unwrap();
        assert_eq!(x_rec(&p3, &[], usize::MAX).unwrap(), vec![g0]);
        assert!(matches!(
            x_rec(&Graph::prism(3), &[set(&[0]), set(&[3, 4, 5])], 1),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn x_rec_recovers_every_pmc_with_listed_components() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..80 {
            let n = rng.gen_range(1..=7);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(0.45)).unwrap();
            let pmcs = enumerate_pmc_sets(&g, usize::MAX).unwrap();
            // Y = components of a random half of the PMCs
            let chosen: Vec<_> = pmcs.iter().filter(|_| rng.gen_bool(0.5)).copied().collect();
            let mut y: Vec<_> = chosen.iter().flat_map(|&o| g.components(o)).collect();
            y.sort();
            y.dedup();
            let out = x_rec(&g, &y, usize::MAX).unwrap();
            for &omega in &pmcs {
                if g.components(omega).iter().all(|c| y.contains(c)) {
                    assert!(out.contains(&omega), "{g:?} {omega:?}");
                }
            }
            assert!(out.iter().all(|&o| is_pmc(&g, o)));
        }
    }

    /// Prisms and random class-C graphs with random forests and
    /// independent sets as `F`.
    fn container_cases() -> Vec<(Graph, usize, VertexSet)> {
        let mut graphs: Vec<Graph> = (3..=5).map(Graph::prism).collect();
        graphs.extend((0..40).map(|seed| random_class_c_graph(7 + seed as usize % 4, 0.45, 900 + seed).unwrap()));
        let mut out = Vec::new();
        for (i, g) in graphs.into_iter().enumerate() {
            for t in 0..12u64 {
                let k = 1 + t as usize % 2;
                let f = random_bounded_treewidth_subset(&g, k, 31 * i as u64 + t).unwrap();
                out.push((g.clone(), k, f));
            }
        }
        out
    }

    #[test]
    fn impure_container_contract() {
        let mut checked = 0;
        for (g, _, f) in container_cases() {
            let seps = enumerate_minimal_separators(&g, usize::MAX).unwrap();
            let coloring = coloring_within(&g, f);
            let f2 = extend_family_f2(&g, &witness_family_f1(&g, &seps, &coloring, f).unwrap());
            for omega in enumerate_pmc_sets(&g, usize::MAX).unwrap() {
                match impure_pmc_container(&g, omega, &f2, f, &coloring) {
                    Ok(a) => {
                        assert!(omega.is_subset(a));
                        assert_eq!(a & f, omega & f, "{g:?} {omega:?} {f:?}");
                        checked += 1;
                    }
                    Err(Error::PurePmc) => {}
                    Err(e) => panic!("{e} on {g:?}"),
                }
            }
        }
        assert!(checked > 100, "only {checked} impure PMCs seen");
    }

    #[test]
    fn pure_pmc_guard() {
        let g = Graph::cycle(4);
        let all = enumerate_minimal_separators(&g, usize::MAX).unwrap();
        assert_eq!(
            impure_pmc_container(&g, set(&[0, 1, 2]), &all, VertexSet::EMPTY, &[]),
            Err(Error::PurePmc)
        );
    }

    #[test]
    fn container_family_examples() {
        let p4 = container_family(&Graph::path(4), 1, usize::MAX).unwrap();
        for pmc in [set(&[0, 1]), set(&[1, 2]), set(&[2, 3])] {
            assert!(p4.contains(&pmc));
        }
        assert!(container_family(&Graph::path(1), 1, usize::MAX).unwrap().contains(&set(&[0])));
        assert_eq!(container_family(&Graph::cycle(6), 1, usize::MAX), Err(Error::NotInClassC));
    }

    #[test]
    fn container_family_holds_containers_for_optimum() {
        for seed in 0..25 {
            let n = 3 + seed as usize % 4;
            let g = random_class_c_graph(n, 0.5, 70 + seed).unwrap();
            let family = container_family(&g, 1, usize::MAX).unwrap();
            let f = brute_tw_subgraph(&g, &Weights::<u64>::unit(n), 1).unwrap();
            for omega in enumerate_pmc_sets(&g, usize::MAX).unwrap() {
                assert!(family.iter().any(|&a| omega.is_subset(a) && a & f == omega & f));
            }
        }
    }

    #[test]
    fn strip_examples() {
        let fam = vec![set(&[0, 1]), set(&[2])];
        assert_eq!(strip_containers(&fam, 0), {
            let mut f = fam.clone();
            f.sort();
            f
        });
        let mut expect = vec![set(&[0, 1]), set(&[0]), set(&[1])];
        expect.sort();
        assert_eq!(strip_containers(&[set(&[0, 1])], 1), expect);
        let big = vec![set(&[0, 1, 2, 3]), set(&[1, 4])];
        // 1 + 4 + 6 per 4-set and 1 + 2 + 1 per pair
        assert!(strip_containers(&big, 2).len() <= 11 + 4);
    }
}
