//! Containers for minimal separators.
//!
//! An `F`-container for a set `X` is a superset `A ⊇ X` with
//! `A ∩ V(F) = X ∩ V(F)`. For a minimal separator `S` with full components
//! `L` and `R` the container is built from a twelve-vertex frame
//! `W = {a1, a2, b1, b2, r1, r2, c1, c2, d1, d2, l1, l2}`, the way each vertex
//! sees `W` (its profile), the two measuring sets, and one pivot per color
//! class of `F`. Primitive separators (those inside a single neighborhood)
//! are covered by the `F0` family instead.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::minsep::full_components;

/// The twelve role slots of the frame. Values may coincide, e.g. `r1 == r2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Roles {
    pub a1: usize,
    pub a2: usize,
    pub b1: usize,
    pub b2: usize,
    pub r1: usize,
    pub r2: usize,
    pub c1: usize,
    pub c2: usize,
    pub d1: usize,
    pub d2: usize,
    pub l1: usize,
    pub l2: usize,
}

impl Roles {
    pub fn all(&self) -> VertexSet {
        VertexSet::from_iter([
            self.a1, self.a2, self.b1, self.b2, self.r1, self.r2, self.c1, self.c2, self.d1,
            self.d2, self.l1, self.l2,
        ])
    }

    fn triples(&self) -> [VertexSet; 4] {
        [
            VertexSet::from_iter([self.a1, self.b1, self.r1]),
            VertexSet::from_iter([self.a2, self.b2, self.r2]),
            VertexSet::from_iter([self.c1, self.d1, self.l1]),
            VertexSet::from_iter([self.c2, self.d2, self.l2]),
        ]
    }

    /// Roles allowed in an L-ambiguous profile.
    fn l_list(&self) -> VertexSet {
        VertexSet::from_iter([
            self.a1, self.a2, self.b1, self.b2, self.c1, self.c2, self.l1, self.l2,
        ])
    }

    /// Roles allowed in an R-ambiguous profile.
    fn r_list(&self) -> VertexSet {
        VertexSet::from_iter([
            self.b1, self.b2, self.c1, self.c2, self.d1, self.d2, self.r1, self.r2,
        ])
    }

    fn anchors(&self) -> VertexSet {
        VertexSet::from_iter([self.b1, self.b2, self.c1, self.c2])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProfileClass {
    NotAProfile,
    Unambiguous,
    StrictlyL,
    StrictlyR,
    BothLR,
}

impl ProfileClass {
    pub fn is_l_ambiguous(self) -> bool {
        matches!(self, ProfileClass::StrictlyL | ProfileClass::BothLR)
    }

    pub fn is_r_ambiguous(self) -> bool {
        matches!(self, ProfileClass::StrictlyR | ProfileClass::BothLR)
    }
}

/// Classifies `T = N(v) ∩ W`.
pub fn classify_profile(g: &Graph, roles: &Roles, v: usize) -> ProfileClass {
    let t = g.neighbors(v) & roles.all();
    if roles.triples().iter().any(|tr| !tr.intersects(t)) {
        return ProfileClass::NotAProfile;
    }
    match (t.is_subset(roles.l_list()), t.is_subset(roles.r_list())) {
        (true, true) => ProfileClass::BothLR,
        (true, false) => ProfileClass::StrictlyL,
        (false, true) => ProfileClass::StrictlyR,
        (false, false) => ProfileClass::Unambiguous,
    }
}

/// `(Z_L, Z_R)`. `Z_R` is complete to `{d1, d2}` and anticomplete to
/// `{c1, c2, l1, l2}`; `Z_L` is complete to `{a1, a2}` and anticomplete to
/// `{b1, b2, r1, r2}`.
pub fn measuring_sets(g: &Graph, roles: &Roles) -> (VertexSet, VertexSet) {
    let n = |v: usize| g.neighbors(v);
    let z_l = (n(roles.a1) & n(roles.a2)) - n(roles.b1) - n(roles.b2) - n(roles.r1) - n(roles.r2);
    let z_r = (n(roles.d1) & n(roles.d2)) - n(roles.c1) - n(roles.c2) - n(roles.l1) - n(roles.l2);
    (z_l, z_r)
}

/// Every vertex bucketed by profile class for one frame.
#[derive(Clone, Copy, Debug)]
struct ProfileBuckets {
    unambiguous: VertexSet,
    strictly_l: VertexSet,
    strictly_r: VertexSet,
    both: VertexSet,
}

impl ProfileBuckets {
    fn compute(g: &Graph, roles: &Roles) -> Self {
        let mut b = ProfileBuckets {
            unambiguous: VertexSet::EMPTY,
            strictly_l: VertexSet::EMPTY,
            strictly_r: VertexSet::EMPTY,
            both: VertexSet::EMPTY,
        };
        for v in g.vertices() {
            match classify_profile(g, roles, v) {
                ProfileClass::NotAProfile => {}
                ProfileClass::Unambiguous => b.unambiguous.insert(v),
                ProfileClass::StrictlyL => b.strictly_l.insert(v),
                ProfileClass::StrictlyR => b.strictly_r.insert(v),
                ProfileClass::BothLR => b.both.insert(v),
            }
        }
        b
    }

    fn l_ambiguous(&self) -> VertexSet {
        self.strictly_l | self.both
    }

    fn r_ambiguous(&self) -> VertexSet {
        self.strictly_r | self.both
    }
}

/// The container for a frame once the pivot neighborhoods are fixed.
/// `open_r = Z_R \ ⋃ N(i_L)` and `open_l = Z_L \ ⋃ N(i_R)`.
fn container_from_parts(
    g: &Graph,
    roles: &Roles,
    buckets: &ProfileBuckets,
    open_l: VertexSet,
    open_r: VertexSet,
) -> VertexSet {
    let sees_r = g.neighbors_of_set(open_r);
    let sees_l = g.neighbors_of_set(open_l);
    roles.anchors()
        | buckets.unambiguous
        | (buckets.strictly_l & sees_r)
        | (buckets.strictly_r & sees_l)
        | (buckets.both & sees_r & sees_l)
}

/// Everything needed to build `Ŝ` for one separator and one pair of full sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorWitness {
    pub s: VertexSet,
    pub l_side: VertexSet,
    pub r_side: VertexSet,
    pub z: VertexSet,
    pub z_prime: VertexSet,
    /// `f(z)` for `z` in `Z ∪ Z'`.
    pub f: BTreeMap<usize, usize>,
    /// `g(z)`: chosen neighbor of `f(z)` on the opposite side.
    pub g_map: BTreeMap<usize, usize>,
    pub roles: Roles,
    /// `i^j_L` per color class, `None` for ⊥.
    pub pivots_l: Vec<Option<usize>>,
    pub pivots_r: Vec<Option<usize>>,
}

/// Inclusion-minimal connected `Z ⊆ d` whose neighborhood covers `s`,
/// found by peeling vertices in descending order until nothing more can go.
/// Fails with `NotAClique` when the result is not a clique.
pub fn minimal_dominating_clique_z(g: &Graph, s: VertexSet, d: VertexSet) -> Result<VertexSet> {
    if !s.is_subset(g.open_neighborhood(d)) {
        return Err(Error::InvalidArgument(format!("{d:?} does not dominate {s:?}")));
    }
    let mut z = d;
    loop {
        let mut changed = false;
        for v in z.iter().rev() {
            let rest = z.without(v);
            if !rest.is_empty() && s.is_subset(g.open_neighborhood(rest)) && g.is_connected_set(rest) {
                z = rest;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if g.is_clique(z) {
        Ok(z)
    } else {
        Err(Error::NotAClique { z })
    }
}

/// Smallest vertex of `s` adjacent to `v` and to no other vertex of `z`.
pub fn private_vertex_f(g: &Graph, s: VertexSet, z: VertexSet, v: usize) -> Result<usize> {
    ((g.neighbors(v) & s) - g.neighbors_of_set(z.without(v)))
        .min()
        .ok_or(Error::NoPrivateVertex { v })
}

fn two_smallest(x: VertexSet) -> (usize, usize) {
    let mut it = x.iter();
    (it.next().unwrap(), it.next().unwrap())
}

impl SeparatorWitness {
    /// Builds `Z`, `Z'`, `f`, `g` and the frame, with every arbitrary choice
    /// resolved to the smallest vertex. Pivots start empty.
    pub fn build(g: &Graph, s: VertexSet, l: VertexSet, r: VertexSet) -> Result<Self> {
        let sep = full_components(g, s);
        if l == r || !sep.full_components.contains(&l) || !sep.full_components.contains(&r) {
            return Err(Error::InvalidArgument(format!(
                "{l:?} and {r:?} must be distinct full components of {s:?}"
            )));
        }
        let z = minimal_dominating_clique_z(g, s, l)?;
        let z_prime = minimal_dominating_clique_z(g, s, r)?;
        if z.len() <= 1 || z_prime.len() <= 1 {
            return Err(Error::PrimitiveSeparator { s });
        }
        let mut f = BTreeMap::new();
        let mut g_map = BTreeMap::new();
        for (side, other) in [(z, r), (z_prime, l)] {
            for v in side {
                let fv = private_vertex_f(g, s, side, v)?;
                let gv = (g.neighbors(fv) & other)
                    .min()
                    .expect("separator vertices see every full component");
                f.insert(v, fv);
                g_map.insert(v, gv);
            }
        }
        let (a1, a2) = two_smallest(z);
        let (d1, d2) = two_smallest(z_prime);
        let roles = Roles {
            a1,
            a2,
            b1: f[&a1],
            b2: f[&a2],
            r1: g_map[&a1],
            r2: g_map[&a2],
            c1: f[&d1],
            c2: f[&d2],
            d1,
            d2,
            l1: g_map[&d1],
            l2: g_map[&d2],
        };
        Ok(SeparatorWitness {
            s,
            l_side: l,
            r_side: r,
            z,
            z_prime,
            f,
            g_map,
            roles,
            pivots_l: Vec::new(),
            pivots_r: Vec::new(),
        })
    }

    pub fn profile(&self, g: &Graph, v: usize) -> ProfileClass {
        classify_profile(g, &self.roles, v)
    }

    pub fn measuring_sets(&self, g: &Graph) -> (VertexSet, VertexSet) {
        measuring_sets(g, &self.roles)
    }

    /// Picks `i^j_L` and `i^j_R` for each color class. `i^j_L` ranges over the
    /// L-ambiguous vertices of `I_j \ (S ∪ R)` and maximizes `N(·) ∩ Z_R`;
    /// ties go to the smallest vertex. Symmetric for `i^j_R`.
    pub fn choose_pivots(&mut self, g: &Graph, coloring: &[VertexSet]) {
        let (z_l, z_r) = self.measuring_sets(g);
        let pick = |pool: VertexSet, want_l: bool, measure: VertexSet| {
            pool.iter()
                .filter(|&v| {
                    let p = classify_profile(g, &self.roles, v);
                    if want_l {
                        p.is_l_ambiguous()
                    } else {
                        p.is_r_ambiguous()
                    }
                })
                .max_by_key(|&v| ((g.neighbors(v) & measure).len(), std::cmp::Reverse(v)))
        };
        self.pivots_l = coloring
            .iter()
            .map(|&class| pick(class - (self.s | self.r_side), true, z_r))
            .collect();
        self.pivots_r = coloring
            .iter()
            .map(|&class| pick(class - (self.s | self.l_side), false, z_l))
            .collect();
    }

    /// `Ŝ` from the frame and the current pivots (`N(⊥) = ∅`).
    pub fn assemble(&self, g: &Graph) -> VertexSet {
        assemble_container(g, &self.roles, &self.pivots_l, &self.pivots_r)
    }
}

/// `Ŝ`: the anchors `b1, b2, c1, c2`, every vertex with an unambiguous
/// profile, and the ambiguous vertices that still see the part of the
/// matching measuring set not covered by the pivots.
pub fn assemble_container(
    g: &Graph,
    roles: &Roles,
    pivots_l: &[Option<usize>],
    pivots_r: &[Option<usize>],
) -> VertexSet {
    let (z_l, z_r) = measuring_sets(g, roles);
    let covered = |p: &[Option<usize>]| {
        p.iter()
            .flatten()
            .fold(VertexSet::EMPTY, |acc, &v| acc | g.neighbors(v))
    };
    let open_r = z_r - covered(pivots_l);
    let open_l = z_l - covered(pivots_r);
    let buckets = ProfileBuckets::compute(g, roles);
    container_from_parts(g, roles, &buckets, open_l, open_r)
}

/// Container for a non-primitive minimal separator `s` with full components
/// `l` and `r`, given `F` as `f_vertices` and a coloring of `G[F]`.
pub fn witness_container_for_separator(
    g: &Graph,
    s: VertexSet,
    l: VertexSet,
    r: VertexSet,
    coloring: &[VertexSet],
    f_vertices: VertexSet,
) -> Result<VertexSet> {
    debug_assert!(coloring.iter().all(|c| c.is_subset(f_vertices)));
    let mut w = SeparatorWitness::build(g, s, l, r)?;
    w.choose_pivots(g, coloring);
    Ok(w.assemble(g))
}

/// `F0 = { N(C) : C ∈ cc(G - N[v]), v ∈ V }`, containing every primitive separator.
pub fn primitive_family_f0(g: &Graph) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = g
        .vertices()
        .iter()
        .flat_map(|v| {
            let closed = g.closed_neighborhood(VertexSet::singleton(v));
            g.components(closed).into_iter().map(|c| g.open_neighborhood(c))
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// True if `s ⊆ N(v)` for some vertex `v`.
pub fn is_primitive(g: &Graph, s: VertexSet) -> bool {
    g.vertices().iter().any(|v| s.is_subset(g.neighbors(v)))
}

/// One half of a frame: `(x1, x2, f(x1), f(x2), g(x1), g(x2))`.
type HalfFrame = (usize, usize, usize, usize, usize, usize);

/// Half frames satisfying the adjacency conditions every genuine frame
/// meets: `x1 < x2` adjacent, `y_i ∈ N(x_i) \ N[x_{3-i}]`, `w_i ∈ N(y_i)`
/// outside `N[{x1, x2}]`.
fn half_frames(g: &Graph) -> Vec<HalfFrame> {
    let mut out = Vec::new();
    for (x1, x2) in g.edges() {
        let pair = VertexSet::from_iter([x1, x2]);
        let near = g.closed_neighborhood(pair);
        let y1s = g.neighbors(x1) - g.neighbors(x2) - pair;
        let y2s = g.neighbors(x2) - g.neighbors(x1) - pair;
        for y1 in y1s {
            for y2 in y2s {
                let ys = VertexSet::from_iter([y1, y2]);
                for w1 in g.neighbors(y1) - near - ys {
                    for w2 in g.neighbors(y2) - near - ys {
                        out.push((x1, x2, y1, y2, w1, w2));
                    }
                }
            }
        }
    }
    out
}

/// All unions of at most `k` sets drawn from `options`, always including `∅`.
fn unions_up_to(options: &HashSet<VertexSet>, k: usize) -> Vec<VertexSet> {
    let mut all: HashSet<VertexSet> = HashSet::from([VertexSet::EMPTY]);
    let mut frontier = vec![VertexSet::EMPTY];
    for _ in 0..k {
        let mut next = Vec::new();
        for &base in &frontier {
            for &o in options {
                let u = base | o;
                if all.insert(u) {
                    next.push(u);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    all.into_iter().collect()
}

/// `F1`: `F0` plus `Ŝ` for every frame and pivot choice, deduplicated.
///
/// Frames are pruned by adjacency conditions every genuine frame satisfies
/// (the `a`/`l` roles lie in one component, `r`/`d` in the other, `b`/`c`
/// in the separator). Pivots only matter through `N(i) ∩ Z`, so pivot
/// tuples are enumerated as unions of at most `k` distinct such traces.
/// `budget` caps the number of (frame, pivot union pair) evaluations.
pub fn enumerate_family_f1(g: &Graph, k: usize, budget: usize) -> Result<Vec<VertexSet>> {
    let mut family: HashSet<VertexSet> = primitive_family_f0(g).into_iter().collect();
    let halves = half_frames(g);
    let mut work = 0usize;
    for &(a1, a2, b1, b2, r1, r2) in &halves {
        let l_only = VertexSet::from_iter([a1, a2]);
        let r_only = VertexSet::from_iter([r1, r2]);
        let bs = VertexSet::from_iter([b1, b2]);
        for &(d1, d2, c1, c2, l1, l2) in &halves {
            let l_all = l_only | VertexSet::from_iter([l1, l2]);
            let r_all = r_only | VertexSet::from_iter([d1, d2]);
            let sep = bs | VertexSet::from_iter([c1, c2]);
            if l_all.intersects(r_all)
                || g.neighbors_of_set(l_all).intersects(r_all)
                || sep.intersects(l_all | r_all)
            {
                continue;
            }
            let roles = Roles {
                a1,
                a2,
                b1,
                b2,
                r1,
                r2,
                c1,
                c2,
                d1,
                d2,
                l1,
                l2,
            };
            let (z_l, z_r) = measuring_sets(g, &roles);
            let buckets = ProfileBuckets::compute(g, &roles);
            let traces_r: HashSet<_> = buckets.l_ambiguous().iter().map(|v| g.neighbors(v) & z_r).collect();
            let traces_l: HashSet<_> = buckets.r_ambiguous().iter().map(|v| g.neighbors(v) & z_l).collect();
            let covers_r = unions_up_to(&traces_r, k);
            let covers_l = unions_up_to(&traces_l, k);
            work += covers_r.len() * covers_l.len();
            if work > budget {
                return Err(Error::BudgetExceeded {
                    what: "enumerating separator containers",
                    budget,
                });
            }
            for &cr in &covers_r {
                for &cl in &covers_l {
                    family.insert(container_from_parts(g, &roles, &buckets, z_l - cl, z_r - cr));
                }
            }
        }
    }
    let mut out: Vec<_> = family.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `F2 = F1 ∪ { N(D) : D ∈ cc(G - Ŝ), Ŝ ∈ F1 }`.
pub fn extend_family_f2(g: &Graph, f1: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = f1.to_vec();
    for &a in f1 {
        out.extend(g.components(a).into_iter().map(|d| g.open_neighborhood(d)));
    }
    out.sort();
    out.dedup();
    out
}

/// The sub-family of `F1` relevant to one fixed `F`: `F0` plus the witness
/// container of every non-primitive separator in `seps` for every ordered
/// pair of its full components.
pub fn witness_family_f1(
    g: &Graph,
    seps: &[VertexSet],
    coloring: &[VertexSet],
    f_vertices: VertexSet,
) -> Result<Vec<VertexSet>> {
    let mut out = primitive_family_f0(g);
    for &s in seps {
        let full = full_components(g, s).full_components;
        for &l in &full {
            for &r in &full {
                if l == r {
                    continue;
                }
                match witness_container_for_separator(g, s, l, r, coloring, f_vertices) {
                    Ok(a) => out.push(a),
                    Err(Error::PrimitiveSeparator { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Smallest `z ∈ s` with no neighbor in `f_vertices \ (s ∪ side)`.
pub fn find_anticomplete_vertex(
    g: &Graph,
    s: VertexSet,
    side: VertexSet,
    f_vertices: VertexSet,
) -> Option<usize> {
    let outside = f_vertices - (s | side);
    s.iter().find(|&z| !g.neighbors(z).intersects(outside))
}
