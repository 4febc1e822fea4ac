//! Orientations of a graph's edges, and the transitivity and
//! semi-transitivity checkers.
//!
//! A directed path `v1 -> .. -> vk` is a *shortcut* (it violates
//! semi-transitivity) when the arc `v1 -> vk` exists but some pair
//! `vi, vj` with `i < j` is not joined by the arc `vi -> vj`. In an acyclic
//! orientation an edge between two vertices of a directed path can only
//! point forward, so "arc missing" is the same as "vertices non-adjacent".
//! The checkers rely on that and test adjacency in the base graph.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Largest graph accepted by the naive (all paths) checker.
pub const NAIVE_CHECK_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("arc {0} -> {1} is not an edge of the base graph")]
    ArcNotEdge(usize, usize),
    #[error("edge {0}-{1} is oriented twice")]
    ConflictingArc(usize, usize),
    #[error("edge {0}-{1} has no direction")]
    UnorientedEdge(usize, usize),
    #[error("orientation has a directed cycle")]
    CyclicOrientation,
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("colouring is not proper: edge {0}-{1} is monochromatic")]
    ImproperColoring(usize, usize),
    #[error("colouring has {got} entries but the graph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },
    #[error("rank key is not injective: vertices {0} and {1} share a rank")]
    NonInjectiveKey(usize, usize),
    #[error("rank key has {got} entries but the graph has {expected} vertices")]
    KeyLength { expected: usize, got: usize },
    #[error("naive path enumeration is limited to {NAIVE_CHECK_MAX_VERTICES} vertices, got {0}")]
    TooLargeForNaive(usize),
}

/// A proper vertex colouring with colours `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        let num_colors = colors.iter().max().map_or(0, |&c| c + 1);
        Coloring { colors, num_colors }
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// First monochromatic edge, if any.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().find(|&(u, v)| self.colors[u] == self.colors[v])
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count() && self.conflict(g).is_none()
    }
}

/// A directed path `v1 -> v2 -> .. -> vk` with distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedPath {
    pub vertices: Vec<usize>,
}

impl DirectedPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Distinct vertices joined by forward arcs of `o`.
    pub fn is_directed_path_in(&self, o: &Orientation) -> bool {
        let distinct: VertexSet = self.vertices.iter().copied().collect();
        distinct.len() == self.vertices.len() && self.vertices.windows(2).all(|p| o.has_arc(p[0], p[1]))
    }
}

/// A shortcut together with one forward pair that is not an arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: DirectedPath,
    pub missing: (usize, usize),
}

impl Violation {
    /// Re-checks the witness against `o` from scratch.
    pub fn verify(&self, o: &Orientation) -> bool {
        let vs = &self.path.vertices;
        let (Some(&first), Some(&last)) = (vs.first(), vs.last()) else {
            return false;
        };
        let (a, b) = self.missing;
        let pos = |x: usize| vs.iter().position(|&v| v == x);
        let forward_pair = matches!((pos(a), pos(b)), (Some(i), Some(j)) if i < j);
        self.path.is_directed_path_in(o) && o.has_arc(first, last) && forward_pair && !o.has_arc(a, b)
    }
}

/// A direction for every edge of a base graph.
///
/// `out[u]` holds the heads of arcs leaving `u`. Acyclicity is not an
/// invariant; the checkers test it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: Graph,
    out: [u64; MAX_VERTICES],
}

impl Orientation {
    /// Orients every edge `u-v` (`u < v`) as `u -> v` when `forward(u, v)`,
    /// else `v -> u`.
    pub fn from_fn(base: &Graph, mut forward: impl FnMut(usize, usize) -> bool) -> Self {
        let mut out = [0u64; MAX_VERTICES];
        for (u, v) in base.edges() {
            if forward(u, v) {
                out[u] |= 1u64 << v;
            } else {
                out[v] |= 1u64 << u;
            }
        }
        Orientation { base: base.clone(), out }
    }

    /// Builds an orientation from an explicit arc list covering every edge once.
    pub fn from_arcs(base: &Graph, arcs: &[(usize, usize)]) -> Result<Self, OrientationError> {
        let mut out = [0u64; MAX_VERTICES];
        for &(u, v) in arcs {
            if !base.has_edge(u, v) {
                return Err(OrientationError::ArcNotEdge(u, v));
            }
            if out[v] >> u & 1 == 1 {
                return Err(OrientationError::ConflictingArc(u.min(v), u.max(v)));
            }
            out[u] |= 1u64 << v;
        }
        if let Some((u, v)) = base.edges().find(|&(u, v)| (out[u] | out[v]) & (1u64 << v | 1u64 << u) == 0) {
            return Err(OrientationError::UnorientedEdge(u, v));
        }
        Ok(Orientation { base: base.clone(), out })
    }

    /// Orientation from raw out-rows; rows must orient `base` exactly.
    pub(crate) fn from_out_rows(base: &Graph, rows: &[u64]) -> Self {
        let mut out = [0u64; MAX_VERTICES];
        out[..rows.len()].copy_from_slice(rows);
        debug_assert!(base.edges().all(|(u, v)| (out[u] >> v & 1) ^ (out[v] >> u & 1) == 1));
        Orientation { base: base.clone(), out }
    }

    /// Every edge points from the lower rank to the higher one.
    pub fn from_order(base: &Graph, key: &[i64]) -> Result<Self, OrientationError> {
        let n = base.vertex_count();
        if key.len() != n {
            return Err(OrientationError::KeyLength { expected: n, got: key.len() });
        }
        let mut by_rank: Vec<usize> = (0..n).collect();
        by_rank.sort_by_key(|&v| (key[v], v));
        if let Some(p) = by_rank.windows(2).find(|p| key[p[0]] == key[p[1]]) {
            return Err(OrientationError::NonInjectiveKey(p[0], p[1]));
        }
        Ok(Orientation::from_fn(base, |u, v| key[u] < key[v]))
    }

    /// Every edge points from the smaller colour to the larger one.
    pub fn from_coloring(base: &Graph, coloring: &Coloring) -> Result<Self, OrientationError> {
        let n = base.vertex_count();
        if coloring.colors.len() != n {
            return Err(OrientationError::ColoringLength { expected: n, got: coloring.colors.len() });
        }
        if let Some((u, v)) = coloring.conflict(base) {
            return Err(OrientationError::ImproperColoring(u, v));
        }
        Ok(Orientation::from_fn(base, |u, v| coloring.colors[u] < coloring.colors[v]))
    }

    /// The orientation selected by bit `i` of `mask` for the `i`-th edge in
    /// lexicographic order (bit set means lower endpoint first).
    pub fn from_edge_mask(base: &Graph, mask: u64) -> Self {
        let mut bits = mask;
        Orientation::from_fn(base, |_, _| {
            let forward = bits & 1 == 1;
            bits >>= 1;
            forward
        })
    }

    /// Every orientation of `g`, in edge-mask order. Intended for small
    /// oracles; panics when `g` has 64 or more edges.
    pub fn all(g: &Graph) -> impl Iterator<Item = Orientation> + '_ {
        let m = g.edge_count();
        assert!(m < 64, "cannot enumerate 2^{m} orientations");
        (0..1u64 << m).map(move |mask| Orientation::from_edge_mask(g, mask))
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < MAX_VERTICES && v < MAX_VERTICES && self.out[u] >> v & 1 == 1
    }

    #[inline]
    pub fn out_neighbors(&self, u: usize) -> VertexSet {
        VertexSet(self.out[u])
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.base.neighbors(v).difference(VertexSet(self.out[v]))
    }

    /// Arcs `(tail, head)` ordered by tail, then head.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| VertexSet(self.out[u]).iter().map(move |v| (u, v)))
    }

    pub fn reversed(&self) -> Orientation {
        Orientation::from_fn(&self.base, |u, v| !self.has_arc(u, v))
    }

    /// Kahn's algorithm, always taking the smallest available vertex.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.in_neighbors(v).len()).collect();
        let mut ready: VertexSet = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = ready.first() {
            ready.remove(u);
            order.push(u);
            for v in self.out_neighbors(u) {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.insert(v);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Whether every edge at `v` points away from it.
    pub fn source_of(&self, v: usize) -> Result<bool, OrientationError> {
        let n = self.vertex_count();
        if v >= n {
            return Err(OrientationError::VertexOutOfRange { vertex: v, n });
        }
        Ok(self.in_neighbors(v).is_empty())
    }

    pub fn is_sink(&self, v: usize) -> Result<bool, OrientationError> {
        let n = self.vertex_count();
        if v >= n {
            return Err(OrientationError::VertexOutOfRange { vertex: v, n });
        }
        Ok(self.out[v] == 0)
    }

    /// `u -> v -> w` always implies `u -> w`.
    pub fn is_transitive(&self) -> bool {
        (0..self.vertex_count()).all(|u| VertexSet(self.out[u]).iter().all(|v| self.out[v] & !self.out[u] == 0))
    }

    /// A shortcut, if the orientation has one.
    ///
    /// Arcs `u -> v` are scanned with `u` in [`topological_order`] and `v`
    /// ascending; each arc yields at most one witness from a depth-first
    /// search over ascending vertex ids. The shortest witness over all arcs
    /// is returned, ties going to the earliest arc in scan order.
    ///
    /// [`topological_order`]: Orientation::topological_order
    pub fn violating_path(&self) -> Result<Option<Violation>, OrientationError> {
        let order = self.topological_order().ok_or(OrientationError::CyclicOrientation)?;
        let n = self.vertex_count();
        let rows = self.base.rows();
        let inn = in_rows(&self.out[..n]);
        let mut best: Option<Vec<usize>> = None;
        for &u in &order {
            for v in VertexSet(self.out[u]) {
                if let Some(p) = shortcut_for_arc(rows, &self.out[..n], &inn, u, v) {
                    if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                        best = Some(p);
                    }
                }
            }
        }
        Ok(best.map(|vertices| {
            let missing = first_missing_pair(rows, &vertices).expect("shortcut has a missing pair");
            Violation { path: DirectedPath { vertices }, missing }
        }))
    }

    /// Acyclic with no shortcut (pruned search).
    pub fn is_semi_transitive(&self) -> bool {
        let n = self.vertex_count();
        if !self.is_acyclic() {
            return false;
        }
        let inn = in_rows(&self.out[..n]);
        !(0..n).any(|u| {
            VertexSet(self.out[u])
                .iter()
                .any(|v| shortcut_for_arc(self.base.rows(), &self.out[..n], &inn, u, v).is_some())
        })
    }

    /// Acyclic with no shortcut, by enumerating every directed path.
    pub fn is_semi_transitive_naive(&self) -> Result<bool, OrientationError> {
        let n = self.vertex_count();
        if n > NAIVE_CHECK_MAX_VERTICES {
            return Err(OrientationError::TooLargeForNaive(n));
        }
        if !self.is_acyclic() {
            return Ok(false);
        }
        let mut path = Vec::with_capacity(n);
        for start in 0..n {
            path.push(start);
            let ok = self.all_paths_ok(&mut path);
            path.pop();
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn all_paths_ok(&self, path: &mut Vec<usize>) -> bool {
        let first = path[0];
        let last = *path.last().unwrap();
        if path.len() >= 2 && self.has_arc(first, last) {
            for (i, &a) in path.iter().enumerate() {
                for &b in &path[i + 1..] {
                    if !self.has_arc(a, b) {
                        return false;
                    }
                }
            }
        }
        for next in VertexSet(self.out[last]) {
            // Acyclic, so a directed walk never revisits a vertex.
            path.push(next);
            let ok = self.all_paths_ok(path);
            path.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation(n={}, arcs=[", self.vertex_count())?;
        for (i, (u, v)) in self.arcs().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}->{v}")?;
        }
        f.write_str("])")
    }
}

pub(crate) fn in_rows(out: &[u64]) -> Vec<u64> {
    let mut inn = vec![0u64; out.len()];
    for (u, &row) in out.iter().enumerate() {
        for v in VertexSet(row) {
            inn[v] |= 1u64 << u;
        }
    }
    inn
}

/// Vertices reachable from `start` by one or more steps along `rows`.
pub(crate) fn reach(rows: &[u64], start: usize) -> u64 {
    let mut seen = 0u64;
    let mut frontier = rows[start];
    while frontier & !seen != 0 {
        let fresh = frontier & !seen;
        seen |= fresh;
        frontier = VertexSet(fresh).iter().fold(0, |acc, w| acc | rows[w]);
    }
    seen
}

fn first_missing_pair(adj: &[u64], path: &[usize]) -> Option<(usize, usize)> {
    path.iter().enumerate().find_map(|(i, &a)| path[i + 1..].iter().find(|&&b| adj[a] >> b & 1 == 0).map(|&b| (a, b)))
}

/// Finds a shortcut whose first and last vertices are `u` and `v`, using the
/// arcs in `out` (which may orient only some edges of `adj`).
///
/// Only vertices on some `u ~> v` path matter. The search grows directed
/// paths from `u` whose vertices are pairwise adjacent; the first time a
/// step reaches a vertex not adjacent to the whole prefix, that prefix plus
/// any route on to `v` is a shortcut. Prefixes that stay cliques and reach
/// `v` are not shortcuts, so nothing else needs exploring.
pub(crate) fn shortcut_for_arc(adj: &[u64], out: &[u64], inn: &[u64], u: usize, v: usize) -> Option<Vec<usize>> {
    let between = reach(out, u) & reach(inn, v);
    if between == 0 {
        return None;
    }
    let allowed = between | 1u64 << v;
    let mut path = vec![u];
    grow_clique_path(adj, out, allowed, v, adj[u], &mut path)
}

fn grow_clique_path(
    adj: &[u64],
    out: &[u64],
    allowed: u64,
    target: usize,
    common: u64,
    path: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let last = *path.last().unwrap();
    for w in VertexSet(out[last] & allowed) {
        if common >> w & 1 == 0 {
            let mut witness = path.clone();
            if w != target {
                witness.extend(route(out, allowed, w, target));
            } else {
                witness.push(w);
            }
            return Some(witness);
        }
        if w != target {
            path.push(w);
            let found = grow_clique_path(adj, out, allowed, target, common & adj[w], path);
            path.pop();
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

/// Shortest directed route `from ~> to` inside `allowed`, both ends included.
fn route(out: &[u64], allowed: u64, from: usize, to: usize) -> Vec<usize> {
    let mut parent = [usize::MAX; MAX_VERTICES];
    let mut seen = 1u64 << from;
    let mut frontier = vec![from];
    while !frontier.is_empty() && seen >> to & 1 == 0 {
        let mut next = Vec::new();
        for &x in &frontier {
            for y in VertexSet(out[x] & allowed & !seen) {
                seen |= 1u64 << y;
                parent[y] = x;
                next.push(y);
            }
        }
        frontier = next;
    }
    assert!(seen >> to & 1 == 1, "target unreachable inside allowed set");
    let mut r = vec![to];
    while *r.last().unwrap() != from {
        r.push(parent[*r.last().unwrap()]);
    }
    r.reverse();
    r
}
