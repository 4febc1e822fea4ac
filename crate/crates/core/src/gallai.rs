//! Gallai's minimal non-comparability graphs: the nine infinite families
//! `G1..G9` and the seven-vertex sporadic graphs `H1..H11`, together with
//! known semi-transitive certificates for them.
//!
//! Vertex numbering is fixed per family and documented on [`generate`];
//! display labels travel alongside in [`LabeledGraph`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use crate::orientation::{Coloring, Orientation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
    G8,
    G9,
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
    H8,
    H9,
    H10,
    H11,
}

impl Family {
    pub const ALL: [Family; 20] = [
        Family::G1,
        Family::G2,
        Family::G3,
        Family::G4,
        Family::G5,
        Family::G6,
        Family::G7,
        Family::G8,
        Family::G9,
        Family::H1,
        Family::H2,
        Family::H3,
        Family::H4,
        Family::H5,
        Family::H6,
        Family::H7,
        Family::H8,
        Family::H9,
        Family::H10,
        Family::H11,
    ];

    /// Smallest allowed parameter, or `None` for the parameterless `H` graphs.
    pub fn floor(self) -> Option<usize> {
        use Family::*;
        match self {
            G1 | G2 => Some(2),
            G3 | G4 | G5 | G6 => Some(3),
            G7 | G8 => Some(1),
            G9 => Some(2),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        use Family::*;
        match self {
            G1 => "G1",
            G2 => "G2",
            G3 => "G3",
            G4 => "G4",
            G5 => "G5",
            G6 => "G6",
            G7 => "G7",
            G8 => "G8",
            G9 => "G9",
            H1 => "H1",
            H2 => "H2",
            H3 => "H3",
            H4 => "H4",
            H5 => "H5",
            H6 => "H6",
            H7 => "H7",
            H8 => "H8",
            H9 => "H9",
            H10 => "H10",
            H11 => "H11",
        }
    }

    fn vertex_count(self, n: usize) -> usize {
        use Family::*;
        match self {
            G1 => 2 * n + 1,
            G2 => 2 * n + 3,
            G3 => 2 * n + 2,
            G4 => 2 * n + 3,
            G5 => 2 * n,
            G6 => 2 * n + 1,
            G7 | G8 => n + 5,
            G9 => n + 4,
            _ => 7,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family together with its parameter (absent for `H1..H11`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    family: Family,
    n: Option<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, n: Option<usize>) -> Result<Self, FamilyError> {
        match (family.floor(), n) {
            (Some(_), None) => Err(FamilyError::BadParameter(format!("{family} requires a parameter"))),
            (None, Some(_)) => Err(FamilyError::BadParameter(format!("{family} takes no parameter"))),
            (Some(floor), Some(n)) if n < floor => {
                Err(FamilyError::BadParameter(format!("{family} needs n >= {floor}, got {n}")))
            }
            (Some(_), Some(n)) if family.vertex_count(n) > MAX_VERTICES => {
                Err(FamilyError::BadParameter(format!("{family}({n}) would have more than {MAX_VERTICES} vertices")))
            }
            _ => Ok(FamilySpec { family, n }),
        }
    }

    pub fn g(index: u8, n: usize) -> Result<Self, FamilyError> {
        let family = *Family::ALL[..9]
            .get(usize::from(index).wrapping_sub(1))
            .ok_or_else(|| FamilyError::UnknownFamily(format!("G{index}")))?;
        FamilySpec::new(family, Some(n))
    }

    pub fn h(index: u8) -> Result<Self, FamilyError> {
        let family = *Family::ALL[9..]
            .get(usize::from(index).wrapping_sub(1))
            .ok_or_else(|| FamilyError::UnknownFamily(format!("H{index}")))?;
        FamilySpec::new(family, None)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn parameter(&self) -> Option<usize> {
        self.n
    }

    fn param(&self) -> usize {
        self.n.unwrap_or(0)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            Some(n) => write!(f, "{}:{}", self.family, n),
            None => write!(f, "{}", self.family),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Accepts `g1:4`, `G9:2`, `h7` and so on.
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let s = s.trim();
        let (name, param) = match s.split_once(':') {
            Some((name, p)) => {
                let n = p
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| FamilyError::BadParameter(format!("`{p}` is not a non-negative integer")))?;
                (name.trim(), Some(n))
            }
            None => (s, None),
        };
        let family = Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(name))
            .ok_or_else(|| FamilyError::UnknownFamily(name.to_string()))?;
        FamilySpec::new(family, param)
    }
}

/// A graph with a display label for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    /// Vertex carrying `label`, if any.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Builds the family member.
///
/// Numbering (label -> vertex):
/// * `G1`: `i -> i-1`.
/// * `G2`, `G4`: `1..2n+1 -> 0..2n`, then `x`, `y`.
/// * `G3`: `1..2n -> 0..2n-1`, then `x`, `y`.
/// * `G5`: `a1,b1,...,an,bn` in cycle order. `G6`: `c0` first, then as `G5`.
/// * `G7`, `G8`: `a,b,c,d`, then `1..n`, then `x`.
/// * `G9`: `a`, `1..n`, `b`, `c`, `d`.
/// * `H*`: drawing node `k -> k-1`; labels are the printed ones.
pub fn generate(spec: &FamilySpec) -> Result<LabeledGraph, FamilyError> {
    use Family::*;
    let n = spec.param();
    let (nv, edges, labels): (usize, Vec<(usize, usize)>, Vec<String>) = match spec.family {
        G1 => {
            let k = 2 * n + 1;
            (k, (0..k).map(|i| (i, (i + 1) % k)).collect(), numbered(k))
        }
        G2 => {
            // Label L sits at L-1; x = 2n+1, y = 2n+2.
            let (x, y) = (2 * n + 1, 2 * n + 2);
            let mut e: Vec<_> = (1..2 * n).map(|i| (i, i + 1)).collect();
            e.extend((1..=2 * n).map(|i| (0, i)));
            e.push((x, 2 * n));
            e.push((y, 1));
            (2 * n + 3, e, with_xy(numbered(2 * n + 1)))
        }
        G3 => {
            let (x, y) = (2 * n, 2 * n + 1);
            let last = 2 * n - 1;
            let mut e: Vec<_> = (1..2 * n - 2).map(|i| (i, i + 1)).collect();
            for p in 1..=2 * n - 2 {
                e.push((0, p));
                e.push((last, p));
            }
            e.extend([(x, 0), (x, 2 * n - 2), (y, 1), (y, last)]);
            (2 * n + 2, e, with_xy(numbered(2 * n)))
        }
        G4 => {
            let (x, y) = (2 * n + 1, 2 * n + 2);
            let top = 2 * n;
            let mut e: Vec<_> = (1..2 * n - 1).map(|i| (i, i + 1)).collect();
            for p in 1..=2 * n - 1 {
                e.push((0, p));
                e.push((top, p));
            }
            e.extend([(0, top), (x, 0), (x, 2 * n - 1), (y, 1), (y, top)]);
            (2 * n + 3, e, with_xy(numbered(2 * n + 1)))
        }
        G5 => {
            let c = Graph::cycle(2 * n)?.complement();
            let labels = (1..=n).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
            (2 * n, c.edges().collect(), labels)
        }
        G6 => {
            let c = Graph::cycle(2 * n + 1)?.complement();
            let mut labels = vec!["c0".to_string()];
            labels.extend((1..=n).flat_map(|i| [format!("a{i}"), format!("b{i}")]));
            (2 * n + 1, c.edges().collect(), labels)
        }
        G7 | G8 => {
            let (a, b, c, d) = (0, 1, 2, 3);
            let lv = |i: usize| 3 + i;
            let x = n + 4;
            let mut e = vec![(a, c), (a, d), (b, d)];
            if spec.family == G8 {
                e.push((b, c));
            }
            e.extend(anti_path(&(1..=n).map(lv).collect::<Vec<_>>()));
            e.push((x, a));
            e.push((x, d));
            for i in 1..=n {
                e.push((x, lv(i)));
                if i != 1 {
                    e.push((a, lv(i)));
                }
                if i != n {
                    e.push((d, lv(i)));
                }
            }
            let mut labels: Vec<String> = ["a", "b", "c", "d"].map(String::from).to_vec();
            labels.extend(numbered(n));
            labels.push("x".into());
            (n + 5, e, labels)
        }
        G9 => {
            let (a, b, c, d) = (0, n + 1, n + 2, n + 3);
            let row: Vec<usize> = (0..=n + 1).collect();
            let mut e = anti_path(&row);
            e.extend([(c, a), (c, b), (d, a), (d, b)]);
            e.extend((1..=n).map(|i| (d, i)));
            let mut labels = vec!["a".to_string()];
            labels.extend(numbered(n));
            labels.extend(["b", "c", "d"].map(String::from));
            (n + 4, e, labels)
        }
        h => {
            let table = sporadic(h);
            let e = table.edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
            (7, e, table.labels.iter().map(|l| l.to_string()).collect())
        }
    };
    debug_assert_eq!(nv, spec.family.vertex_count(n));
    debug_assert_eq!(labels.len(), nv);
    Ok(LabeledGraph { graph: Graph::from_edge_list(nv, &edges)?, labels })
}

/// Known semi-transitive orientation for `G5..G8` and `H2..H11`.
pub fn prescribed_orientation(spec: &FamilySpec) -> Result<Option<Orientation>, FamilyError> {
    use Family::*;
    let g = generate(spec)?.graph;
    let n = spec.param();
    let o = match spec.family {
        G5 | G6 => {
            let key: Vec<i64> = (0..g.vertex_count() as i64).collect();
            Orientation::from_order(&g, &key).expect("index order is injective")
        }
        G7 | G8 => {
            // Level rank: level 1 < level 2 < level 3, level 2 by index.
            let level1: &[(usize, usize)] =
                if spec.family == G7 { &[(0, 2), (1, 3), (3, 0)] } else { &[(2, 0), (3, 1), (3, 0), (2, 1)] };
            let rank = |v: usize| {
                if v < 4 {
                    0
                } else if v < n + 4 {
                    v
                } else {
                    n + 4
                }
            };
            Orientation::from_fn(&g, |u, v| if u < 4 && v < 4 { level1.contains(&(u, v)) } else { rank(u) < rank(v) })
        }
        H2 | H3 | H4 | H5 | H6 | H7 | H8 | H9 | H10 | H11 => {
            let arcs: Vec<(usize, usize)> = sporadic(spec.family).arcs.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
            Orientation::from_arcs(&g, &arcs).expect("tabulated arcs orient every edge")
        }
        _ => return Ok(None),
    };
    Ok(Some(o))
}

/// Proper colouring with at most three colours for `G1..G3`.
pub fn prescribed_coloring(spec: &FamilySpec) -> Result<Option<Coloring>, FamilyError> {
    use Family::*;
    let n = spec.param();
    // Colours indexed by label, 1-based, then x and y where present.
    let colors: Vec<usize> = match spec.family {
        G1 => (1..=2 * n + 1)
            .map(|l| {
                if l == 2 * n + 1 {
                    2
                } else if l % 2 == 1 {
                    0
                } else {
                    1
                }
            })
            .collect(),
        G2 => {
            let mut c: Vec<usize> = (1..=2 * n + 1)
                .map(|l| {
                    if l == 1 {
                        0
                    } else if l % 2 == 0 {
                        1
                    } else {
                        2
                    }
                })
                .collect();
            c.extend([0, 0]);
            c
        }
        G3 => {
            let mut c: Vec<usize> = (1..=2 * n)
                .map(|l| {
                    if l == 1 || l == 2 * n {
                        0
                    } else if l % 2 == 0 {
                        1
                    } else {
                        2
                    }
                })
                .collect();
            c.extend([1, 2]);
            c
        }
        _ => return Ok(None),
    };
    Ok(Some(Coloring::new(colors)))
}

/// Whether the family member admits a semi-transitive orientation.
pub fn expected_semi_transitive(spec: &FamilySpec) -> bool {
    !matches!(spec.family, Family::G4 | Family::G9 | Family::H1)
}

fn numbered(k: usize) -> Vec<String> {
    (1..=k).map(|i| i.to_string()).collect()
}

fn with_xy(mut labels: Vec<String>) -> Vec<String> {
    labels.push("x".into());
    labels.push("y".into());
    labels
}

/// All pairs of `row` except consecutive ones.
fn anti_path(row: &[usize]) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..row.len() {
        for j in i + 2..row.len() {
            e.push((row[i], row[j]));
        }
    }
    e
}

struct Sporadic {
    labels: [&'static str; 7],
    edges: &'static [(usize, usize)],
    arcs: &'static [(usize, usize)],
}

// Drawing node ids, 1-based.
const H1_EDGES: &[(usize, usize)] = &[
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (1, 7),
    (2, 4),
    (2, 5),
    (2, 6),
    (2, 7),
    (3, 5),
    (3, 7),
    (4, 6),
    (4, 7),
    (5, 6),
    (5, 7),
];
const H2_ARCS: &[(usize, usize)] =
    &[(2, 4), (2, 6), (3, 6), (5, 2), (5, 3), (5, 7), (6, 4), (7, 1), (7, 2), (7, 3), (7, 6)];
const H3_ARCS: &[(usize, usize)] =
    &[(1, 3), (1, 4), (1, 6), (1, 7), (3, 7), (4, 2), (4, 7), (5, 1), (5, 3), (5, 6), (6, 2), (6, 4), (6, 7), (7, 2)];
const H4_ARCS: &[(usize, usize)] =
    &[(1, 4), (1, 7), (2, 7), (3, 4), (3, 7), (5, 1), (5, 2), (6, 1), (6, 2), (6, 3), (6, 5), (6, 7), (7, 4)];
const H5_ARCS: &[(usize, usize)] =
    &[(1, 3), (1, 7), (2, 3), (2, 4), (3, 4), (5, 1), (5, 2), (5, 6), (5, 7), (6, 1), (6, 2), (6, 3), (6, 7)];
const H6_ARCS: &[(usize, usize)] =
    &[(1, 3), (1, 7), (2, 3), (2, 4), (3, 4), (5, 1), (5, 2), (5, 6), (6, 1), (6, 2), (6, 3), (6, 7)];
const H7_EDGES: &[(usize, usize)] =
    &[(1, 2), (1, 3), (1, 4), (1, 6), (2, 4), (2, 5), (2, 6), (3, 6), (4, 5), (4, 7), (5, 7), (6, 7)];
const H8_EDGES: &[(usize, usize)] =
    &[(1, 2), (1, 3), (1, 4), (1, 6), (2, 4), (2, 5), (2, 6), (3, 6), (4, 5), (4, 7), (6, 7)];
const H9_EDGES: &[(usize, usize)] = &[(1, 2), (1, 3), (1, 4), (1, 6), (2, 4), (2, 5), (2, 6), (3, 6), (4, 5), (4, 7)];
const H10_EDGES: &[(usize, usize)] =
    &[(1, 2), (1, 3), (1, 4), (1, 6), (2, 4), (2, 5), (2, 6), (3, 6), (4, 5), (4, 7), (5, 7)];
const H11_ARCS: &[(usize, usize)] =
    &[(1, 2), (1, 4), (1, 5), (1, 6), (2, 5), (2, 7), (3, 1), (3, 2), (3, 4), (3, 5), (4, 5), (4, 6), (5, 7)];

const IDENTITY_LABELS: [&str; 7] = ["1", "2", "3", "4", "5", "6", "7"];
const H4_LABELS: [&str; 7] = ["2", "4", "5", "7", "3", "1", "6"];

fn sporadic(f: Family) -> Sporadic {
    use Family::*;
    match f {
        H1 => Sporadic { labels: ["1", "7", "4", "6", "3", "2", "5"], edges: H1_EDGES, arcs: &[] },
        H2 => Sporadic { labels: ["3", "4", "6", "7", "2", "5", "1"], edges: H2_ARCS, arcs: H2_ARCS },
        H3 => Sporadic { labels: ["1", "7", "2", "5", "3", "4", "6"], edges: H3_ARCS, arcs: H3_ARCS },
        H4 => Sporadic { labels: H4_LABELS, edges: H4_ARCS, arcs: H4_ARCS },
        H5 => Sporadic { labels: H4_LABELS, edges: H5_ARCS, arcs: H5_ARCS },
        H6 => Sporadic { labels: H4_LABELS, edges: H6_ARCS, arcs: H6_ARCS },
        // H7..H10 are oriented from lower to higher drawing id.
        H7 => Sporadic { labels: IDENTITY_LABELS, edges: H7_EDGES, arcs: H7_EDGES },
        H8 => Sporadic { labels: IDENTITY_LABELS, edges: H8_EDGES, arcs: H8_EDGES },
        H9 => Sporadic { labels: IDENTITY_LABELS, edges: H9_EDGES, arcs: H9_EDGES },
        H10 => Sporadic { labels: IDENTITY_LABELS, edges: H10_EDGES, arcs: H10_EDGES },
        H11 => Sporadic { labels: IDENTITY_LABELS, edges: H11_ARCS, arcs: H11_ARCS },
        _ => unreachable!("{f} is not sporadic"),
    }
}
