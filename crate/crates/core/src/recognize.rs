//! Decision procedures: comparability (transitive orientation exists),
//! word-representability (semi-transitive orientation exists), and the
//! minimality predicates built on them.
//!
//! Every search is single-threaded and deterministic. Running out of
//! budget is reported as [`SearchError::BudgetExceeded`], never as a
//! negative answer.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
use crate::orientation::{reach, shortcut_for_arc, Orientation};

/// Default cap on search-tree nodes per search.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

/// Largest `H` accepted by [`Recognizer::cone_characterization_check`].
pub const CONE_CHECK_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("node budget must be positive")]
    ZeroBudget,
    #[error("fixed source {vertex} is out of range for a graph on {n} vertices")]
    SourceOutOfRange { vertex: usize, n: usize },
    #[error("cone characterization check is limited to {CONE_CHECK_MAX_VERTICES} vertices, got {0}")]
    TooLargeForConeCheck(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Order in which the backtracking search fixes edge directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeOrder {
    /// Increasing larger-endpoint degree, ties lexicographic.
    #[default]
    DegreeAscending,
    /// Lexicographic by endpoints.
    Lexicographic,
    /// Greedy: prefer edges touching vertices already covered by earlier
    /// edges, ties lexicographic.
    Connected,
}

impl EdgeOrder {
    pub fn arrange(self, g: &Graph) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        match self {
            EdgeOrder::Lexicographic => {}
            EdgeOrder::DegreeAscending => {
                edges.sort_by_key(|&(u, v)| (g.degree(u).max(g.degree(v)), u, v));
            }
            EdgeOrder::Connected => {
                let mut ordered = Vec::with_capacity(edges.len());
                let mut touched = VertexSet::EMPTY;
                while !edges.is_empty() {
                    let score =
                        |&(u, v): &(usize, usize)| usize::from(touched.contains(u)) + usize::from(touched.contains(v));
                    let best = (0..edges.len()).max_by_key(|&i| (score(&edges[i]), std::cmp::Reverse(i))).unwrap();
                    let (u, v) = edges.remove(best);
                    touched.insert(u);
                    touched.insert(v);
                    ordered.push((u, v));
                }
                edges = ordered;
            }
        }
        edges
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Require every edge at this vertex to point away from it.
    pub fixed_source: Option<usize>,
    pub edge_order: EdgeOrder,
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { fixed_source: None, edge_order: EdgeOrder::default(), node_budget: DEFAULT_NODE_BUDGET }
    }
}

impl SearchConfig {
    pub fn with_source(mut self, v: usize) -> Self {
        self.fixed_source = Some(v);
        self
    }

    pub fn with_budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes;
        self
    }

    pub fn with_edge_order(mut self, order: EdgeOrder) -> Self {
        self.edge_order = order;
        self
    }

    fn validate(&self, g: &Graph) -> Result<(), SearchError> {
        if self.node_budget == 0 {
            return Err(SearchError::ZeroBudget);
        }
        if let Some(s) = self.fixed_source {
            if s >= g.vertex_count() {
                return Err(SearchError::SourceOutOfRange { vertex: s, n: g.vertex_count() });
            }
        }
        Ok(())
    }
}

/// Verdicts and certificates for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub graph: Graph,
    pub transitive_orientation: Option<Orientation>,
    pub semi_transitive_orientation: Option<Orientation>,
    pub is_minimal_non_comparability: bool,
    pub is_minimal_non_word_representable: bool,
    pub timings: Timings,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Timings {
    pub comparability: Duration,
    pub word_representability: Duration,
    pub minimality: Duration,
}

impl ClassificationReport {
    pub fn is_comparability(&self) -> bool {
        self.transitive_orientation.is_some()
    }

    pub fn is_word_representable(&self) -> bool {
        self.semi_transitive_orientation.is_some()
    }

    /// Re-verifies certificates and the implications between verdicts.
    pub fn is_consistent(&self) -> bool {
        let cert_ok = |o: &Option<Orientation>, check: fn(&Orientation) -> bool| {
            o.as_ref().is_none_or(|o| o.base() == &self.graph && check(o))
        };
        cert_ok(&self.transitive_orientation, Orientation::is_transitive)
            && cert_ok(&self.semi_transitive_orientation, Orientation::is_semi_transitive)
            && (!self.is_comparability() || self.is_word_representable())
            && (!self.is_minimal_non_comparability || !self.is_comparability())
            && (!self.is_minimal_non_word_representable || !self.is_word_representable())
    }
}

/// Deciders sharing one [`SearchConfig`].
#[derive(Debug, Clone, Default)]
pub struct Recognizer {
    pub config: SearchConfig,
}

impl Recognizer {
    pub fn new(config: SearchConfig) -> Self {
        Recognizer { config }
    }

    /// A transitive orientation, found by edge forcing with backtracking.
    pub fn exists_transitive_orientation(&self, g: &Graph) -> Result<Option<Orientation>, SearchError> {
        if self.config.node_budget == 0 {
            return Err(SearchError::ZeroBudget);
        }
        let mut search = ForcingSearch { g, nodes: 0, budget: self.config.node_budget };
        let found = search.run(PartialOrientation::new(g.vertex_count()))?;
        Ok(found.map(|p| {
            let o = Orientation::from_out_rows(g, &p.out[..g.vertex_count()]);
            assert!(o.is_transitive(), "forcing search returned a non-transitive orientation: {o:?}");
            o
        }))
    }

    /// A semi-transitive orientation honouring `config.fixed_source`.
    pub fn exists_semi_transitive_orientation(&self, g: &Graph) -> Result<Option<Orientation>, SearchError> {
        self.config.validate(g)?;
        let mut search = SemiTransitiveSearch::new(g, &self.config, Mode::FindFirst);
        search.run(0)?;
        Ok(search.found.map(|o| {
            assert!(o.is_semi_transitive(), "search returned a non-semi-transitive orientation: {o:?}");
            if let Some(s) = self.config.fixed_source {
                assert!(o.source_of(s).unwrap_or(false), "certificate does not have {s} as a source");
            }
            o
        }))
    }

    /// Number of semi-transitive orientations honouring `config.fixed_source`.
    pub fn count_semi_transitive_orientations(&self, g: &Graph) -> Result<u64, SearchError> {
        self.config.validate(g)?;
        let mut search = SemiTransitiveSearch::new(g, &self.config, Mode::Count);
        search.run(0)?;
        Ok(search.count)
    }

    pub fn is_word_representable(&self, g: &Graph) -> Result<bool, SearchError> {
        Ok(self.exists_semi_transitive_orientation(g)?.is_some())
    }

    pub fn is_comparability(&self, g: &Graph) -> Result<bool, SearchError> {
        Ok(self.exists_transitive_orientation(g)?.is_some())
    }

    /// Not a comparability graph, but every one-vertex deletion is.
    ///
    /// Single deletions suffice: comparability is hereditary, so every
    /// proper induced subgraph lies inside some `G - v`.
    pub fn is_minimal_non_comparability(&self, g: &Graph) -> Result<bool, SearchError> {
        if self.is_comparability(g)? {
            return Ok(false);
        }
        self.all_deletions(g, |r, h| r.is_comparability(h))
    }

    /// Not word-representable, but every one-vertex deletion is (same
    /// hereditary argument as above).
    pub fn is_minimal_non_word_representable(&self, g: &Graph) -> Result<bool, SearchError> {
        if self.is_word_representable(g)? {
            return Ok(false);
        }
        self.all_deletions(g, |r, h| r.is_word_representable(h))
    }

    fn all_deletions(
        &self,
        g: &Graph,
        pred: impl Fn(&Recognizer, &Graph) -> Result<bool, SearchError>,
    ) -> Result<bool, SearchError> {
        // The fixed source only makes sense on the original vertex set.
        let plain = Recognizer::new(SearchConfig { fixed_source: None, ..self.config.clone() });
        for v in 0..g.vertex_count() {
            if !pred(&plain, &g.delete_vertex(v)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A vertex set inducing a minimal non-word-representable subgraph, or
    /// `None` when `g` is word-representable.
    pub fn minimal_non_word_representable_subgraph(&self, g: &Graph) -> Result<Option<VertexSet>, SearchError> {
        self.shrink(g, |r, h| r.is_word_representable(h))
    }

    /// A vertex set inducing a minimal non-comparability subgraph, or `None`
    /// when `g` is a comparability graph.
    pub fn minimal_non_comparability_subgraph(&self, g: &Graph) -> Result<Option<VertexSet>, SearchError> {
        self.shrink(g, |r, h| r.is_comparability(h))
    }

    // One greedy pass is enough: a vertex kept earlier stays necessary
    // because its removal gave a graph in the (hereditary) class, and later
    // removals only take induced subgraphs of that graph.
    fn shrink(
        &self,
        g: &Graph,
        in_class: impl Fn(&Recognizer, &Graph) -> Result<bool, SearchError>,
    ) -> Result<Option<VertexSet>, SearchError> {
        let plain = Recognizer::new(SearchConfig { fixed_source: None, ..self.config.clone() });
        if in_class(&plain, g)? {
            return Ok(None);
        }
        let mut keep = g.vertices();
        for v in g.vertices() {
            let mut trial = keep;
            trial.remove(v);
            if !in_class(&plain, &g.induced_subgraph(trial)?)? {
                keep = trial;
            }
        }
        Ok(Some(keep))
    }

    /// Checks, on `h`, that adding an all-adjacent vertex yields a minimal
    /// non-word-representable graph exactly when `h` is minimal
    /// non-comparability and word-representable. `false` is a counterexample.
    pub fn cone_characterization_check(&self, h: &Graph) -> Result<bool, SearchError> {
        if h.vertex_count() > CONE_CHECK_MAX_VERTICES {
            return Err(SearchError::TooLargeForConeCheck(h.vertex_count()));
        }
        let plain = Recognizer::new(SearchConfig { fixed_source: None, ..self.config.clone() });
        let left = plain.is_minimal_non_word_representable(&h.cone()?)?;
        let right = plain.is_minimal_non_comparability(h)? && plain.is_word_representable(h)?;
        Ok(left == right)
    }

    pub fn classify(&self, g: &Graph) -> Result<ClassificationReport, SearchError> {
        let plain = Recognizer::new(SearchConfig { fixed_source: None, ..self.config.clone() });
        let t0 = Instant::now();
        let transitive = plain.exists_transitive_orientation(g)?;
        let t1 = Instant::now();
        let semi = plain.exists_semi_transitive_orientation(g)?;
        let t2 = Instant::now();
        let min_nc = transitive.is_none() && plain.all_deletions(g, |r, h| r.is_comparability(h))?;
        let min_nwr = semi.is_none() && plain.all_deletions(g, |r, h| r.is_word_representable(h))?;
        let t3 = Instant::now();
        let report = ClassificationReport {
            graph: g.clone(),
            transitive_orientation: transitive,
            semi_transitive_orientation: semi,
            is_minimal_non_comparability: min_nc,
            is_minimal_non_word_representable: min_nwr,
            timings: Timings { comparability: t1 - t0, word_representability: t2 - t1, minimality: t3 - t2 },
        };
        debug_assert!(report.is_consistent());
        Ok(report)
    }
}

pub fn exists_transitive_orientation(g: &Graph) -> Result<Option<Orientation>, SearchError> {
    Recognizer::default().exists_transitive_orientation(g)
}

pub fn exists_semi_transitive_orientation(g: &Graph, cfg: &SearchConfig) -> Result<Option<Orientation>, SearchError> {
    Recognizer::new(cfg.clone()).exists_semi_transitive_orientation(g)
}

pub fn is_word_representable(g: &Graph) -> Result<bool, SearchError> {
    Recognizer::default().is_word_representable(g)
}

pub fn is_comparability(g: &Graph) -> Result<bool, SearchError> {
    Recognizer::default().is_comparability(g)
}

pub fn is_minimal_non_comparability(g: &Graph) -> Result<bool, SearchError> {
    Recognizer::default().is_minimal_non_comparability(g)
}

pub fn is_minimal_non_word_representable(g: &Graph) -> Result<bool, SearchError> {
    Recognizer::default().is_minimal_non_word_representable(g)
}

pub fn cone_characterization_check(h: &Graph) -> Result<bool, SearchError> {
    Recognizer::default().cone_characterization_check(h)
}

pub fn classify(g: &Graph) -> Result<ClassificationReport, SearchError> {
    Recognizer::default().classify(g)
}

// ---------------------------------------------------------------------------
// Transitive orientations: forcing + backtracking
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct PartialOrientation {
    out: [u64; MAX_VERTICES],
}

impl PartialOrientation {
    fn new(_n: usize) -> Self {
        PartialOrientation { out: [0; MAX_VERTICES] }
    }

    #[inline]
    fn has(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    #[inline]
    fn assigned(&self, u: usize, v: usize) -> bool {
        self.has(u, v) || self.has(v, u)
    }
}

struct ForcingSearch<'a> {
    g: &'a Graph,
    nodes: u64,
    budget: u64,
}

impl ForcingSearch<'_> {
    fn run(&mut self, state: PartialOrientation) -> Result<Option<PartialOrientation>, SearchError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SearchError::BudgetExceeded { budget: self.budget });
        }
        let Some((u, v)) = self.g.edges().find(|&(u, v)| !state.assigned(u, v)) else {
            return Ok(Some(state));
        };
        for (a, b) in [(u, v), (v, u)] {
            let mut next = state.clone();
            if self.force(&mut next, a, b) {
                if let Some(done) = self.run(next)? {
                    return Ok(Some(done));
                }
            }
        }
        Ok(None)
    }

    /// Sets `a -> b` and everything it forces. `false` on contradiction.
    fn force(&self, state: &mut PartialOrientation, a: usize, b: usize) -> bool {
        let g = self.g;
        let mut queue = vec![(a, b)];
        while let Some((x, y)) = queue.pop() {
            if state.has(x, y) {
                continue;
            }
            if state.has(y, x) {
                return false;
            }
            state.out[x] |= 1u64 << y;
            // x -> y with y - z, x !- z forces z -> y; with x - z, y !- z forces x -> z.
            let nx = g.neighbors(x).0;
            let ny = g.neighbors(y).0;
            for z in VertexSet(ny & !nx & !(1u64 << x)) {
                queue.push((z, y));
            }
            for z in VertexSet(nx & !ny & !(1u64 << y)) {
                queue.push((x, z));
            }
            // Closure with arcs already present: w -> x -> y and x -> y -> z.
            for w in VertexSet(in_row(state, x, g)) {
                if !g.has_edge(w, y) {
                    return false;
                }
                queue.push((w, y));
            }
            for z in VertexSet(state.out[y]) {
                if !g.has_edge(x, z) {
                    return false;
                }
                queue.push((x, z));
            }
        }
        true
    }
}

fn in_row(state: &PartialOrientation, x: usize, g: &Graph) -> u64 {
    g.neighbors(x).iter().filter(|&w| state.has(w, x)).fold(0, |acc, w| acc | 1u64 << w)
}

// ---------------------------------------------------------------------------
// Semi-transitive orientations: backtracking with incremental pruning
// ---------------------------------------------------------------------------

#[derive(PartialEq, Eq)]
enum Mode {
    FindFirst,
    Count,
}

struct SemiTransitiveSearch<'a> {
    g: &'a Graph,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
    source: Option<usize>,
    // Reversing a semi-transitive orientation keeps it semi-transitive, so
    // when nothing pins a direction the first edge may be fixed.
    fix_first: bool,
    out: Vec<u64>,
    inn: Vec<u64>,
    nodes: u64,
    budget: u64,
    mode: Mode,
    found: Option<Orientation>,
    count: u64,
}

impl<'a> SemiTransitiveSearch<'a> {
    fn new(g: &'a Graph, cfg: &SearchConfig, mode: Mode) -> Self {
        let n = g.vertex_count();
        let mut edges = cfg.edge_order.arrange(g);
        if let Some(s) = cfg.fixed_source {
            // Forced edges go first; stable sort keeps the policy order otherwise.
            edges.sort_by_key(|&(u, v)| u != s && v != s);
        }
        SemiTransitiveSearch {
            g,
            adj: g.rows().to_vec(),
            edges,
            source: cfg.fixed_source,
            fix_first: cfg.fixed_source.is_none() && mode == Mode::FindFirst,
            out: vec![0; n],
            inn: vec![0; n],
            nodes: 0,
            budget: cfg.node_budget,
            mode,
            found: None,
            count: 0,
        }
    }

    /// Returns `Ok(true)` when the search should stop (first hit found).
    fn run(&mut self, depth: usize) -> Result<bool, SearchError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SearchError::BudgetExceeded { budget: self.budget });
        }
        let Some(&(u, v)) = self.edges.get(depth) else {
            return Ok(match self.mode {
                Mode::FindFirst => {
                    self.found = Some(Orientation::from_out_rows(self.g, &self.out));
                    true
                }
                Mode::Count => {
                    self.count += 1;
                    false
                }
            });
        };
        let choices: &[(usize, usize)] = match self.source {
            Some(s) if s == u => &[(u, v)],
            Some(s) if s == v => &[(v, u)],
            _ if depth == 0 && self.fix_first => &[(u, v)],
            _ => &[(u, v), (v, u)],
        };
        for &(a, b) in choices {
            if self.try_arc(a, b) {
                let stop = self.run(depth + 1);
                self.remove_arc(a, b);
                if stop? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Adds `a -> b` if it keeps the partial orientation acyclic and free of
    /// shortcuts. Any new shortcut must pass through the new arc, so only
    /// arcs from an ancestor of `a` to a descendant of `b` need re-checking.
    fn try_arc(&mut self, a: usize, b: usize) -> bool {
        if reach(&self.out, b) >> a & 1 == 1 {
            return false;
        }
        self.out[a] |= 1u64 << b;
        self.inn[b] |= 1u64 << a;
        let before = reach(&self.inn, a) | 1u64 << a;
        let after = reach(&self.out, b) | 1u64 << b;
        for x in VertexSet(before) {
            for y in VertexSet(self.out[x] & after) {
                if shortcut_for_arc(&self.adj, &self.out, &self.inn, x, y).is_some() {
                    self.remove_arc(a, b);
                    return false;
                }
            }
        }
        true
    }

    fn remove_arc(&mut self, a: usize, b: usize) {
        self.out[a] &= !(1u64 << b);
        self.inn[b] &= !(1u64 << a);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, e).unwrap()
    }

    // 5-vertex comparability graph drawn with V1..V5 (0-based here).
    fn five_vertex_comparability() -> Graph {
        graph(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (4, 3), (0, 2)])
    }

    #[test]
    fn comparability_examples() {
        let g1 = five_vertex_comparability();
        let o = exists_transitive_orientation(&g1).unwrap().unwrap();
        assert!(o.is_transitive());
        // Orienting every edge low -> high by drawing order is not transitive:
        // 0 -> 2 -> 4 has no 0 - 4 edge.
        let drawn = Orientation::from_arcs(&g1, &[(0, 1), (1, 2), (2, 4), (0, 3), (4, 3), (0, 2)]).unwrap();
        assert!(!drawn.is_transitive());

        assert_eq!(exists_transitive_orientation(&Graph::cycle(5).unwrap()).unwrap(), None);
        let k5 = Graph::complete(5).unwrap();
        let o = exists_transitive_orientation(&k5).unwrap().unwrap();
        assert_eq!(o, Orientation::from_order(&k5, &[0, 1, 2, 3, 4]).unwrap());
        assert!(is_comparability(&Graph::cycle(6).unwrap()).unwrap());
        assert!(!is_comparability(&Graph::cycle(6).unwrap().complement()).unwrap());
    }

    #[test]
    fn minimal_non_comparability_examples() {
        assert!(is_minimal_non_comparability(&Graph::cycle(5).unwrap()).unwrap());
        // C5 plus a vertex adjacent to two consecutive rim vertices.
        let g2 = graph(6, &[(0, 1), (1, 2), (2, 4), (0, 3), (4, 3), (2, 5), (5, 4)]);
        assert!(!is_comparability(&g2).unwrap());
        assert!(!is_minimal_non_comparability(&g2).unwrap());
        let c5 = Recognizer::default().minimal_non_comparability_subgraph(&g2).unwrap().unwrap();
        assert_eq!(c5, VertexSet::full(5));
        assert!(!is_minimal_non_comparability(&Graph::complete(3).unwrap()).unwrap());
    }

    #[test]
    fn word_representability_examples() {
        let w5 = Graph::wheel(5).unwrap();
        assert_eq!(exists_semi_transitive_orientation(&w5, &SearchConfig::default()).unwrap(), None);
        assert!(!is_word_representable(&w5).unwrap());
        assert!(is_word_representable(&Graph::empty(0).unwrap()).unwrap());
        assert!(is_word_representable(&Graph::empty(3).unwrap()).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        for s in 0..5 {
            let cfg = SearchConfig::default().with_source(s);
            let o = exists_semi_transitive_orientation(&c5, &cfg).unwrap().unwrap();
            assert!(o.source_of(s).unwrap());
        }
    }

    #[test]
    fn minimal_non_word_representable_examples() {
        let w5 = Graph::wheel(5).unwrap();
        assert!(is_minimal_non_word_representable(&w5).unwrap());
        assert!(!is_minimal_non_word_representable(&Graph::cycle(5).unwrap()).unwrap());
    }

    #[test]
    fn config_errors() {
        let c5 = Graph::cycle(5).unwrap();
        let r = Recognizer::new(SearchConfig::default().with_source(5));
        assert_eq!(r.is_word_representable(&c5), Err(SearchError::SourceOutOfRange { vertex: 5, n: 5 }));
        let r = Recognizer::new(SearchConfig::default().with_budget(0));
        assert_eq!(r.is_word_representable(&c5), Err(SearchError::ZeroBudget));
        let r = Recognizer::new(SearchConfig::default().with_budget(3));
        assert_eq!(r.is_word_representable(&Graph::wheel(5).unwrap()), Err(SearchError::BudgetExceeded { budget: 3 }));
        assert!(matches!(
            cone_characterization_check(&Graph::empty(11).unwrap()),
            Err(SearchError::TooLargeForConeCheck(11))
        ));
    }

    #[test]
    fn counting_matches_enumeration() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]);
        let brute = Orientation::all(&g).filter(|o| o.is_semi_transitive()).count() as u64;
        let r = Recognizer::default();
        assert_eq!(r.count_semi_transitive_orientations(&g).unwrap(), brute);
        let with_source =
            Orientation::all(&g).filter(|o| o.is_semi_transitive() && o.source_of(0).unwrap()).count() as u64;
        let r = Recognizer::new(SearchConfig::default().with_source(0));
        assert_eq!(r.count_semi_transitive_orientations(&g).unwrap(), with_source);
    }

    #[test]
    fn edge_orders_agree() {
        let g = Graph::cycle(7).unwrap().complement();
        for order in [EdgeOrder::DegreeAscending, EdgeOrder::Lexicographic, EdgeOrder::Connected] {
            let r = Recognizer::new(SearchConfig::default().with_edge_order(order));
            assert!(r.is_word_representable(&g).unwrap());
            assert!(!r.is_word_representable(&Graph::wheel(5).unwrap()).unwrap());
            let arranged = order.arrange(&g);
            assert_eq!(arranged.len(), g.edge_count());
        }
    }

    #[test]
    fn classification_reports() {
        let c5 = classify(&Graph::cycle(5).unwrap()).unwrap();
        assert!(c5.is_consistent());
        assert_eq!(
            (
                c5.is_comparability(),
                c5.is_word_representable(),
                c5.is_minimal_non_comparability,
                c5.is_minimal_non_word_representable
            ),
            (false, true, true, false)
        );
        let w5 = classify(&Graph::wheel(5).unwrap()).unwrap();
        assert_eq!(
            (
                w5.is_comparability(),
                w5.is_word_representable(),
                w5.is_minimal_non_comparability,
                w5.is_minimal_non_word_representable
            ),
            (false, false, false, true)
        );
    }

    #[test]
    fn cone_check_small_cases() {
        assert!(cone_characterization_check(&Graph::cycle(5).unwrap()).unwrap());
        assert!(cone_characterization_check(&Graph::complete(4).unwrap()).unwrap());
        assert!(cone_characterization_check(&Graph::path(4).unwrap()).unwrap());
    }
}
