//! Recognizers for the hereditary classes the solvers are promised:
//! class C (no hole of length >= 6, no extended C5), long-hole-free graphs
//! and P5-free graphs, plus smallest-last coloring.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Outcome of [`classify`]. Every witness induces exactly its pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub in_class_c: bool,
    /// Induced cycle of length >= 6.
    pub long_hole: Option<Vec<usize>>,
    /// `h1..h5, x`: an induced C5 plus a vertex seeing one or two consecutive hole vertices.
    pub extended_c5: Option<Vec<usize>>,
    pub p5: Option<Vec<usize>>,
    /// Induced cycle of length >= 5.
    pub hole_5: Option<Vec<usize>>,
    pub is_long_hole_free: bool,
    pub is_p5_free: bool,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    in_class_c: bool,
    long_hole_free: bool,
    p5_free: bool,
    witnesses: WitnessJson<'a>,
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    long_hole: &'a Option<Vec<usize>>,
    hole_5: &'a Option<Vec<usize>>,
    extended_c5: &'a Option<Vec<usize>>,
    p5: &'a Option<Vec<usize>>,
}

impl ClassReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            in_class_c: self.in_class_c,
            long_hole_free: self.is_long_hole_free,
            p5_free: self.is_p5_free,
            witnesses: WitnessJson {
                long_hole: &self.long_hole,
                hole_5: &self.hole_5,
                extended_c5: &self.extended_c5,
                p5: &self.p5,
            },
        })
        .expect("report serializes")
    }
}

/// Calls `visit` on every induced path with exactly `len` vertices, in both
/// orientations. Stops early when `visit` returns `true`.
fn for_each_induced_path(
    g: &Graph,
    len: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn extend(
        g: &Graph,
        len: usize,
        path: &mut Vec<usize>,
        blocked: VertexSet,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if path.len() == len {
            return visit(path);
        }
        let last = *path.last().unwrap();
        // next vertex: adjacent to `last`, not on or next to the earlier path
        let candidates = g.neighbors(last) - blocked;
        let blocked_next = blocked | g.closed_neighborhood(VertexSet::singleton(last));
        for v in candidates {
            path.push(v);
            if extend(g, len, path, blocked_next, visit) {
                return true;
            }
            path.pop();
        }
        false
    }
    if len == 0 {
        return false;
    }
    let mut path = Vec::with_capacity(len);
    for v in 0..g.n() {
        path.clear();
        path.push(v);
        if extend(g, len, &mut path, VertexSet::singleton(v), visit) {
            return true;
        }
    }
    false
}

/// Shortest path from `from` to `to` whose interior lies in `through`.
/// Both endpoints are included.
fn shortest_path_through(g: &Graph, from: usize, to: usize, through: VertexSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if g.has_edge(u, to) {
            let mut path = vec![to, u];
            let mut cur = u;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in (g.neighbors(u) & through) - seen {
            seen.insert(w);
            parent[w] = u;
            queue.push_back(w);
        }
    }
    None
}

/// An induced cycle with at least `min_len` vertices, if one exists.
///
/// Every such hole contains `min_len - 1` consecutive vertices forming an
/// induced path `p1 .. p_end`. The middle part of that path is enumerated;
/// the hole closes through a component of `G - N[middle]` that sees both a
/// candidate `p1` and a nonadjacent candidate `p_end`.
pub fn find_long_hole(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    assert!(min_len >= 4, "holes have at least 4 vertices");
    let mid_len = min_len - 3;
    let mut found = None;
    for_each_induced_path(g, mid_len, &mut |mid| {
        let first = mid[0];
        let last = mid[mid_len - 1];
        if mid_len >= 2 && first > last {
            return false;
        }
        let mid_set: VertexSet = mid.iter().collect();
        let closed = g.closed_neighborhood(mid_set);
        let head_ends = g.neighbors(first) - mid_set - g.neighbors_of_set(mid_set.without(first));
        let tail_ends = g.neighbors(last) - mid_set - g.neighbors_of_set(mid_set.without(last));
        for comp in g.components(closed) {
            let seen_by = g.open_neighborhood(comp);
            for a in head_ends & seen_by {
                let choices = (tail_ends & seen_by) - g.closed_neighborhood(VertexSet::singleton(a));
                if let Some(b) = choices.min() {
                    let back = shortest_path_through(g, b, a, comp).expect("component links b to a");
                    let mut cycle = vec![a];
                    cycle.extend_from_slice(mid);
                    cycle.extend_from_slice(&back[..back.len() - 1]);
                    found = Some(cycle);
                    return true;
                }
            }
        }
        false
    });
    found
}

/// An induced P5, as its vertex sequence.
pub fn find_p5(g: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_induced_path(g, 5, &mut |p| {
        if p[0] < p[4] {
            found = Some(p.to_vec());
            true
        } else {
            false
        }
    });
    found
}

/// `h1..h5, x` where `h1..h5` is an induced C5 and `x` is adjacent to exactly
/// one hole vertex or to exactly two consecutive ones.
pub fn find_extended_c5(g: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_induced_path(g, 4, &mut |p| {
        if p[0] > p[3] {
            return false;
        }
        let closers = (g.neighbors(p[0]) & g.neighbors(p[3]))
            - g.closed_neighborhood(VertexSet::from_iter([p[1], p[2]]));
        for h5 in closers {
            let hole = [p[0], p[1], p[2], p[3], h5];
            let hset: VertexSet = hole.iter().collect();
            for i in 0..5 {
                let others = hset.without(hole[i]);
                let single = g.neighbors(hole[i]) - g.neighbors_of_set(others) - hset;
                let j = (i + 1) % 5;
                let rest = others.without(hole[j]);
                let pair = (g.neighbors(hole[i]) & g.neighbors(hole[j]))
                    - g.neighbors_of_set(rest)
                    - hset;
                if let Some(x) = (single | pair).min() {
                    let mut w = hole.to_vec();
                    w.push(x);
                    found = Some(w);
                    return true;
                }
            }
        }
        false
    });
    found
}

pub fn classify(g: &Graph) -> ClassReport {
    let long_hole = find_long_hole(g, 6);
    let extended_c5 = find_extended_c5(g);
    let hole_5 = long_hole.clone().or_else(|| find_long_hole(g, 5));
    let p5 = find_p5(g);
    ClassReport {
        in_class_c: long_hole.is_none() && extended_c5.is_none(),
        is_long_hole_free: hole_5.is_none(),
        is_p5_free: p5.is_none(),
        long_hole,
        extended_c5,
        p5,
        hole_5,
    }
}

pub fn is_in_class_c(g: &Graph) -> bool {
    find_long_hole(g, 6).is_none() && find_extended_c5(g).is_none()
}

pub fn is_long_hole_free(g: &Graph) -> bool {
    find_long_hole(g, 5).is_none()
}

pub fn is_p5_free(g: &Graph) -> bool {
    find_p5(g).is_none()
}

/// Greedy coloring along a smallest-last order. Uses at most
/// `degeneracy + 1` colors, hence at most `k` colors when treewidth < k.
pub fn degeneracy_coloring(g: &Graph) -> Vec<VertexSet> {
    coloring_within(g, g.vertices())
}

/// [`degeneracy_coloring`] of `G[x]`, in original ids.
pub fn coloring_within(g: &Graph, x: VertexSet) -> Vec<VertexSet> {
    let mut rest = x;
    let mut order = Vec::with_capacity(x.len());
    while !rest.is_empty() {
        let v = rest
            .iter()
            .min_by_key(|&v| ((g.neighbors(v) & rest).len(), v))
            .unwrap();
        order.push(v);
        rest.remove(v);
    }
    let mut classes: Vec<VertexSet> = Vec::new();
    for &v in order.iter().rev() {
        match classes.iter_mut().find(|c| !c.intersects(g.neighbors(v))) {
            Some(c) => c.insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    classes.sort_by_key(|&c| c.min());
    classes
}
