//! Dense bitset graphs and vertex sets.
//!
//! Every algorithm in the crate works on [`Graph`] with vertices `0..n`,
//! `n <= MAX_VERTICES`. Vertex subsets are [`VertexSet`] values, a single
//! 128-bit word, so they are `Copy`, hashable and cheap to combine.
//! Deletion views `G - X` are expressed by passing an `alive` mask instead
//! of rebuilding the graph.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Not, Sub, SubAssign};

use num_traits::Zero;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 128;

/// A subset of `0..MAX_VERTICES`, iterated in ascending order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self.is_subset(other) && self != other
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest element.
    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest element.
    #[inline]
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` with at most `max_len` elements, ascending by
    /// size and then by bit pattern.
    pub fn subsets_up_to(self, max_len: usize) -> Vec<VertexSet> {
        let elems = self.to_vec();
        let mut out = vec![VertexSet::EMPTY];
        let mut frontier = vec![(VertexSet::EMPTY, 0usize)];
        for _ in 0..max_len.min(elems.len()) {
            let mut next = Vec::new();
            for &(set, start) in &frontier {
                for (i, &v) in elems.iter().enumerate().skip(start) {
                    let s = set.with(v);
                    out.push(s);
                    next.push((s, i + 1));
                }
            }
            frontier = next;
        }
        out
    }

    /// Compares by the ascending element sequences, so `{0,1} < {0,1,2} < {0,2} < {1}`.
    /// This is the canonical order used for every listing the crate emits.
    pub fn canonical_cmp(self, other: VertexSet) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(*other)
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Space separated ascending ids, the format used by the CLI listings.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl DoubleEndedIterator for Iter {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = 127 - self.0.leading_zeros() as usize;
        self.0 &= !(1u128 << v);
        Some(v)
    }
}

macro_rules! set_op {
    ($tr:ident, $f:ident, $atr:ident, $af:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $af(&mut self, rhs: VertexSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

set_op!(BitOr, bitor, BitOrAssign, bitor_assign, |);
set_op!(BitAnd, bitand, BitAndAssign, bitand_assign, &);

impl BitXor for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

/// Complement within the full 128-bit universe; intersect with a graph's
/// vertex set before use.
impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

/// Immutable simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate over unordered pairs.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true).expect("complete")
    }

    /// Star with center `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star")
    }

    /// Two `p`-cliques `a_1..a_p = 0..p` and `b_1..b_p = p..2p` joined by
    /// the matching `a_i b_i`.
    pub fn prism(p: usize) -> Graph {
        Graph::from_fn(2 * p, |u, v| {
            let same_side = (u < p) == (v < p);
            same_side || v == u + p
        })
        .expect("prism")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Union of the neighborhoods of `x`, including vertices of `x` itself.
    #[inline]
    pub fn neighbors_of_set(&self, x: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in x {
            out |= self.adj[v];
        }
        out
    }

    /// `N(X)`: vertices outside `X` with a neighbor in `X`.
    #[inline]
    pub fn open_neighborhood(&self, x: VertexSet) -> VertexSet {
        self.neighbors_of_set(x) - x
    }

    /// `N[X] = N(X) ∪ X`.
    #[inline]
    pub fn closed_neighborhood(&self, x: VertexSet) -> VertexSet {
        self.neighbors_of_set(x) | x
    }

    /// Vertices of `within` reachable from `start` inside `G[within]`.
    pub fn reach(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = start & within;
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = (self.neighbors_of_set(frontier) & within) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Components of `G[alive]`, ordered by their minimum vertex.
    pub fn components_within(&self, alive: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = alive & self.vertices();
        while let Some(v) = rest.min() {
            let c = self.reach(VertexSet::singleton(v), rest);
            rest -= c;
            out.push(c);
        }
        out
    }

    /// `cc(G - removed)`, ordered by minimum vertex.
    pub fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        self.components_within(self.vertices() - removed)
    }

    pub fn is_connected_set(&self, x: VertexSet) -> bool {
        match x.min() {
            None => true,
            Some(v) => self.reach(VertexSet::singleton(v), x) == x,
        }
    }

    pub fn is_clique(&self, x: VertexSet) -> bool {
        x.iter().all(|v| (x - self.adj[v]).without(v).is_empty())
    }

    pub fn is_independent(&self, x: VertexSet) -> bool {
        x.iter().all(|v| !self.adj[v].intersects(x))
    }

    /// `G` plus every missing edge inside `q`.
    pub fn complete_on(&self, q: VertexSet) -> Graph {
        let mut g = self.clone();
        for v in q {
            g.adj[v] |= q.without(v);
        }
        g
    }

    /// `G[x]` relabelled to `0..|x|` in ascending order of the original ids;
    /// the second value maps new ids back to old ones.
    pub fn induced(&self, x: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = x.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let mut h = Graph::empty(map.len()).expect("induced subgraph fits");
        for (i, &v) in map.iter().enumerate() {
            for u in self.adj[v] & x {
                h.adj[i].insert(pos[u]);
            }
        }
        (h, map)
    }

    /// Number of edges of `G[x]`.
    pub fn edge_count_within(&self, x: VertexSet) -> usize {
        x.iter().map(|v| (self.adj[v] & x).len()).sum::<usize>() / 2
    }
}

/// Scalar type for vertex weights. Any ordered additive monoid works;
/// the crate default is `u64`.
pub trait Weight: Copy + Ord + Zero + fmt::Debug + fmt::Display {}

impl<T> Weight for T where T: Copy + Ord + Zero + fmt::Debug + fmt::Display {}

/// Per-vertex weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights<W> {
    values: Vec<W>,
}

impl<W: Weight> Weights<W> {
    /// Fails if a weight is negative.
    pub fn new(values: Vec<W>) -> Result<Self> {
        if let Some(v) = values.iter().position(|w| *w < W::zero()) {
            return Err(Error::InvalidGraph(format!("negative weight on vertex {v}")));
        }
        Ok(Weights { values })
    }

    pub fn uniform(n: usize, w: W) -> Self {
        Weights { values: vec![w; n] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> W {
        self.values[v]
    }

    pub fn set(&mut self, v: usize, w: W) {
        self.values[v] = w;
    }

    pub fn as_slice(&self) -> &[W] {
        &self.values
    }

    /// Total weight of `x`.
    #[inline]
    pub fn total(&self, x: VertexSet) -> W {
        x.iter().fold(W::zero(), |acc, v| acc + self.values[v])
    }
}

impl<W: Weight + num_traits::One> Weights<W> {
    pub fn unit(n: usize) -> Self {
        Weights::uniform(n, W::one())
    }
}
