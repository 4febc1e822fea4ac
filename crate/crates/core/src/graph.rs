//! Simple undirected graphs on at most 64 vertices, stored as bit rows.

use std::fmt;

use thiserror::Error;

/// Hard cap on the number of vertices of a [`Graph`].
pub const MAX_VERTICES: usize = 64;

/// Largest graph accepted by [`Graph::is_isomorphic`].
pub const MAX_ISOMORPHISM_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{0} vertices exceeds the limit of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge endpoint {vertex} is out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    KTooSmall(usize),
    #[error("vertex set {bits:#x} is not contained in 0..{n}")]
    SetOutOfRange { bits: u64, n: usize },
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("brute-force isomorphism is limited to {MAX_ISOMORPHISM_VERTICES} vertices, got {0}")]
    TooLargeForBruteForce(usize),
}

/// A subset of `0..64` packed into a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
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
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
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

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Debug, Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
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
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Immutable simple graph on vertices `0..n`.
///
/// Row `v` of the adjacency matrix is a bit mask of the neighbours of `v`.
/// Rows at index `n` and above are always zero, so derived equality is
/// exact equality of graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: [0; MAX_VERTICES] })
    }

    /// Builds a graph from unordered pairs. Duplicate pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::EndpointOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: &[u64]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let full = VertexSet::full(n).0;
        for (u, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::EndpointOutOfRange { vertex, n });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            for v in VertexSet(row) {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The cycle `0-1-..-(k-1)-0`.
    pub fn cycle(k: usize) -> Result<Self, GraphError> {
        if k < 3 {
            return Err(GraphError::KTooSmall(k));
        }
        let mut g = Graph::empty(k)?;
        for i in 0..k {
            g.set_edge(i, (i + 1) % k);
        }
        Ok(g)
    }

    /// The path `0-1-..-(k-1)`.
    pub fn path(k: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(k)?;
        for i in 1..k {
            g.set_edge(i - 1, i);
        }
        Ok(g)
    }

    pub fn complete(k: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(k)?;
        for u in 0..k {
            g.adj[u] = VertexSet::full(k).0 & !(1u64 << u);
        }
        Ok(g)
    }

    /// Wheel: rim cycle `0..k-1` plus hub `k` adjacent to every rim vertex.
    pub fn wheel(k: usize) -> Result<Self, GraphError> {
        Graph::cycle(k)?.cone()
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Adjacency rows `0..n`.
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1))).iter().map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let mut g = self.clone();
        for u in 0..self.n {
            g.adj[u] = !self.adj[u] & full & !(1u64 << u);
        }
        g
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in ascending original order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if !s.is_subset(self.vertices()) {
            return Err(GraphError::SetOutOfRange { bits: s.0, n: self.n });
        }
        let members: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            let row = self.adj[u] & s.0;
            g.adj[i] = members
                .iter()
                .enumerate()
                .filter(|&(_, &v)| row >> v & 1 == 1)
                .fold(0u64, |acc, (j, _)| acc | 1u64 << j);
        }
        Ok(g)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut s = self.vertices();
        s.remove(v);
        self.induced_subgraph(s)
    }

    /// Appends an apex vertex `n` adjacent to every existing vertex.
    pub fn cone(&self) -> Result<Graph, GraphError> {
        if self.n >= MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        let mut g = self.clone();
        let apex = self.n;
        g.n += 1;
        for u in 0..apex {
            g.adj[u] |= 1u64 << apex;
        }
        g.adj[apex] = VertexSet::full(apex).0;
        Ok(g)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal vertex count");
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Brute-force isomorphism test with degree and neighbour-degree pruning.
    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool, GraphError> {
        for g in [self, other] {
            if g.n > MAX_ISOMORPHISM_VERTICES {
                return Err(GraphError::TooLargeForBruteForce(g.n));
            }
        }
        Ok(self.find_isomorphism(other).is_some())
    }

    /// An isomorphism `self -> other` as a vertex map, if one exists.
    /// Not size-capped; callers own the cost.
    pub fn find_isomorphism(&self, other: &Graph) -> Option<Vec<usize>> {
        if self.n != other.n
            || self.edge_count() != other.edge_count()
            || self.degree_sequence() != other.degree_sequence()
        {
            return None;
        }
        let sig_a: Vec<_> = (0..self.n).map(|v| self.signature(v)).collect();
        let sig_b: Vec<_> = (0..other.n).map(|v| other.signature(v)).collect();
        let mut map = vec![usize::MAX; self.n];
        let mut used = VertexSet::EMPTY;
        // Map the most constrained (highest degree) vertices first.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        if self.extend_isomorphism(other, &order, 0, &sig_a, &sig_b, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn signature(&self, v: usize) -> (usize, Vec<usize>) {
        let mut nd: Vec<usize> = self.neighbors(v).iter().map(|u| self.degree(u)).collect();
        nd.sort_unstable();
        (self.degree(v), nd)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_isomorphism(
        &self,
        other: &Graph,
        order: &[usize],
        depth: usize,
        sig_a: &[(usize, Vec<usize>)],
        sig_b: &[(usize, Vec<usize>)],
        map: &mut [usize],
        used: &mut VertexSet,
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        for w in other.vertices().difference(*used) {
            if sig_a[v] != sig_b[w] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| self.has_edge(u, v) == other.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            used.insert(w);
            if self.extend_isomorphism(other, order, depth + 1, sig_a, sig_b, map, used) {
                return true;
            }
            used.remove(w);
            map[v] = usize::MAX;
        }
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, e).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(c5, Graph::cycle(5).unwrap());
        assert_eq!(c5.edge_count(), 5);

        let e3 = g(3, &[]);
        assert_eq!(e3.vertex_count(), 3);
        assert_eq!(e3.edge_count(), 0);

        let k2 = g(2, &[(0, 1), (0, 1)]);
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(k2, Graph::complete(2).unwrap());
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edge_list(3, &[(0, 3)]), Err(GraphError::EndpointOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::from_edge_list(65, &[]), Err(GraphError::TooManyVertices(65)));
        assert!(Graph::from_edge_list(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn cycles() {
        let c5 = Graph::cycle(5).unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3).unwrap());
        assert_eq!(Graph::cycle(2), Err(GraphError::KTooSmall(2)));

        // C6 is bipartite: BFS 2-colouring succeeds.
        let c6 = Graph::cycle(6).unwrap();
        let mut color = [usize::MAX; 6];
        color[0] = 0;
        let mut queue = vec![0];
        while let Some(u) = queue.pop() {
            for v in c6.neighbors(u) {
                if color[v] == usize::MAX {
                    color[v] = 1 - color[u];
                    queue.push(v);
                }
            }
        }
        assert!(c6.edges().all(|(u, v)| color[u] != color[v]));
    }

    #[test]
    fn complements() {
        let c6c = Graph::cycle(6).unwrap().complement();
        assert_eq!(c6c.edge_count(), 15 - 6);
        assert_eq!(Graph::complete(3).unwrap().complement(), Graph::empty(3).unwrap());
        assert_eq!(Graph::cycle(7).unwrap().complement().edge_count(), 21 - 7);
        let prism = g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]);
        assert!(c6c.is_isomorphic(&prism).unwrap());
    }

    #[test]
    fn induced_and_delete() {
        let w5 = Graph::wheel(5).unwrap();
        let rim = w5.induced_subgraph(VertexSet::full(5)).unwrap();
        assert_eq!(rim, Graph::cycle(5).unwrap());
        assert_eq!(w5.induced_subgraph(w5.vertices()).unwrap(), w5);
        assert_eq!(w5.delete_vertex(5).unwrap(), Graph::cycle(5).unwrap());

        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.delete_vertex(0).unwrap().vertex_count(), 0);

        let c5 = Graph::cycle(5).unwrap();
        for v in 0..5 {
            assert!(c5.delete_vertex(v).unwrap().is_isomorphic(&Graph::path(4).unwrap()).unwrap());
        }
        assert!(matches!(c5.delete_vertex(5), Err(GraphError::VertexOutOfRange { .. })));
        assert!(matches!(c5.induced_subgraph(VertexSet::singleton(7)), Err(GraphError::SetOutOfRange { .. })));
    }

    #[test]
    fn induced_relabels_in_ascending_order() {
        // Path 0-1-2-3-4; pick {1, 3, 4}: only 3-4 survives, as 1-2 in new labels.
        let p = Graph::path(5).unwrap();
        let s: VertexSet = [4, 1, 3].into_iter().collect();
        assert_eq!(p.induced_subgraph(s).unwrap(), g(3, &[(1, 2)]));
    }

    #[test]
    fn cones() {
        let c5 = Graph::cycle(5).unwrap();
        // W5 as drawn with hub 1 and rim 2..6 (0-based: hub 0, rim 1..5).
        let w5 = g(6, &[(0, 1), (0, 2), (0, 3), (0, 5), (0, 4), (1, 2), (1, 5), (5, 4), (4, 3), (3, 2)]);
        assert!(c5.cone().unwrap().is_isomorphic(&w5).unwrap());
        assert_eq!(Graph::empty(0).unwrap().cone().unwrap(), Graph::complete(1).unwrap());
        assert_eq!(Graph::complete(4).unwrap().cone().unwrap(), Graph::complete(5).unwrap());
        assert_eq!(Graph::empty(64).unwrap().cone(), Err(GraphError::TooManyVertices(65)));
    }

    #[test]
    fn isomorphism_basics() {
        let c5 = Graph::cycle(5).unwrap();
        let p5 = Graph::path(5).unwrap();
        assert!(!c5.is_isomorphic(&p5).unwrap());
        assert!(c5.is_isomorphic(&c5.permute(&[3, 0, 4, 1, 2])).unwrap());
        let big = Graph::empty(13).unwrap();
        assert_eq!(big.is_isomorphic(&big), Err(GraphError::TooLargeForBruteForce(13)));
    }

    #[test]
    fn edge_iteration_is_lexicographic() {
        let k4 = Graph::complete(4).unwrap();
        let e: Vec<_> = k4.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let g64 = Graph::from_edge_list(64, &[(62, 63), (0, 63)]).unwrap();
        assert_eq!(g64.edges().collect::<Vec<_>>(), vec![(0, 63), (62, 63)]);
    }
}
