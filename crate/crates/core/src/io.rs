//! Text formats: graph6, a plain edge list, Graphviz DOT, and the JSON
//! report document.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gallai::{self, FamilySpec};
use crate::graph::{Graph, GraphError, MAX_VERTICES};
use crate::orientation::{Coloring, Orientation};
use crate::recognize::ClassificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("graph6 body has {found} bytes, expected {expected}")]
    TruncatedBits { expected: usize, found: usize },
    #[error("graph6 body has {found} bytes, expected {expected}")]
    TrailingBytes { expected: usize, found: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6 padding bits are not zero")]
    NonCanonicalPadding,
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. Surrounding whitespace and the optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let s = line.trim();
    let bytes = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::InvalidByte { byte, offset });
        }
    }
    let (n, body) = match bytes {
        [] => return Err(FormatError::MalformedHeader),
        [126, 126, ..] => {
            // 36-bit form: n >= 258048, far beyond the vertex cap.
            let digits = bytes.get(2..8).ok_or(FormatError::MalformedHeader)?;
            let n = digits.iter().fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
            return Err(GraphError::TooManyVertices(n).into());
        }
        [126, rest @ ..] => {
            let digits = rest.get(..3).ok_or(FormatError::MalformedHeader)?;
            let n = digits.iter().fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
            if n < 63 {
                return Err(FormatError::MalformedHeader);
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => (usize::from(first - 63), rest),
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() < expected {
        return Err(FormatError::TruncatedBits { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(FormatError::TrailingBytes { expected, found: body.len() });
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(FormatError::NonCanonicalPadding);
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(&rows)?)
}

/// Canonical graph6 encoding, without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, (n >> 12) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let (mut acc, mut filled) = (0u8, 0);
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                (acc, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses `n m` followed by `m` lines of 0-based `u v` pairs. Blank lines
/// and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: &str| FormatError::EdgeList { line, message: message.to_string() };
    let pair = |line: usize, l: &str| -> Result<(usize, usize), FormatError> {
        let nums: Vec<usize> = l
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| err(line, "expected integers"))?;
        match nums[..] {
            [a, b] => Ok((a, b)),
            _ => Err(err(line, "expected two integers")),
        }
    };
    let (line, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header"))?;
    let (n, m) = pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        edges.push(pair(line, l)?);
    }
    if edges.len() != m {
        return Err(err(line, &format!("header announces {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

fn dot_nodes(s: &mut String, n: usize, labels: Option<&[String]>) {
    for v in 0..n {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                let _ = writeln!(s, "  {v} [label=\"{}\"];", label.replace('\\', "\\\\").replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
}

/// Undirected DOT: node lines by vertex, then edge lines in lexicographic order.
pub fn emit_dot_graph(g: &Graph, labels: Option<&[String]>) -> String {
    let mut s = String::from("graph G {\n");
    dot_nodes(&mut s, g.vertex_count(), labels);
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

/// Directed DOT with arcs sorted by tail, then head.
pub fn emit_dot_orientation(o: &Orientation, labels: Option<&[String]>) -> String {
    let mut s = String::from("digraph G {\n");
    dot_nodes(&mut s, o.vertex_count(), labels);
    for (u, v) in o.arcs() {
        let _ = writeln!(s, "  {u} -> {v};");
    }
    s.push_str("}\n");
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("graph: {0}")]
    Graph(#[from] FormatError),
    #[error("{which} certificate does not verify")]
    BadCertificate { which: &'static str },
    #[error("verdict `{0}` disagrees with the certificates")]
    InconsistentVerdict(&'static str),
    #[error("family spec: {0}")]
    Family(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub comparability: bool,
    pub word_representable: bool,
    pub minimal_non_comparability: bool,
    pub minimal_non_word_representable: bool,
}

/// Certificates as arc lists `[tail, head]` and colour vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    /// Semi-transitive orientation found by the search.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transitive_orientation: Option<Vec<[usize; 2]>>,
    /// Family colouring, when one is tabulated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
}

/// One graph's verdicts, certificates and (for family members) the
/// tabulated expectation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    /// graph6 encoding.
    pub graph: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub verdicts: Verdicts,
    #[serde(default)]
    pub certificates: Certificates,
    /// Tabulated semi-transitivity verdict for the family member.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
    /// `expected == verdicts.word_representable`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    /// Whether the tabulated orientation for the family member is semi-transitive.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prescribed_orientation_valid: Option<bool>,
}

fn arc_list(o: &Orientation) -> Vec<[usize; 2]> {
    o.arcs().map(|(u, v)| [u, v]).collect()
}

impl ReportDocument {
    pub fn from_report(report: &ClassificationReport, family: Option<&FamilySpec>) -> Self {
        let expected = family.map(gallai::expected_semi_transitive);
        let coloring = family.and_then(|s| gallai::prescribed_coloring(s).ok().flatten()).map(|c| c.colors().to_vec());
        let prescribed_orientation_valid =
            family.and_then(|s| gallai::prescribed_orientation(s).ok().flatten()).map(|o| o.is_semi_transitive());
        ReportDocument {
            graph: emit_graph6(&report.graph),
            family: family.map(|s| s.to_string()),
            verdicts: Verdicts {
                comparability: report.is_comparability(),
                word_representable: report.is_word_representable(),
                minimal_non_comparability: report.is_minimal_non_comparability,
                minimal_non_word_representable: report.is_minimal_non_word_representable,
            },
            certificates: Certificates {
                orientation: report.semi_transitive_orientation.as_ref().map(arc_list),
                transitive_orientation: report.transitive_orientation.as_ref().map(arc_list),
                coloring,
            },
            expected,
            agree: expected.map(|e| e == report.is_word_representable()),
            prescribed_orientation_valid,
        }
    }

    /// Re-checks every certificate against the encoded graph and the
    /// verdicts that depend on them.
    pub fn verify(&self) -> Result<(), ReportError> {
        let g = parse_graph6(&self.graph)?;
        let orient = |arcs: &[[usize; 2]]| {
            let pairs: Vec<(usize, usize)> = arcs.iter().map(|&[u, v]| (u, v)).collect();
            Orientation::from_arcs(&g, &pairs).ok()
        };
        let v = &self.verdicts;
        if let Some(arcs) = &self.certificates.orientation {
            if !orient(arcs).is_some_and(|o| o.is_semi_transitive()) {
                return Err(ReportError::BadCertificate { which: "semi-transitive orientation" });
            }
        }
        if let Some(arcs) = &self.certificates.transitive_orientation {
            if !orient(arcs).is_some_and(|o| o.is_transitive()) {
                return Err(ReportError::BadCertificate { which: "transitive orientation" });
            }
        }
        if let Some(colors) = &self.certificates.coloring {
            let c = Coloring::new(colors.clone());
            if colors.len() != g.vertex_count() || !c.is_proper(&g) || c.num_colors() > 3 {
                return Err(ReportError::BadCertificate { which: "coloring" });
            }
        }
        if v.word_representable != self.certificates.orientation.is_some() {
            return Err(ReportError::InconsistentVerdict("word_representable"));
        }
        if v.comparability != self.certificates.transitive_orientation.is_some() {
            return Err(ReportError::InconsistentVerdict("comparability"));
        }
        if v.comparability && !v.word_representable {
            return Err(ReportError::InconsistentVerdict("comparability"));
        }
        if v.minimal_non_comparability && v.comparability {
            return Err(ReportError::InconsistentVerdict("minimal_non_comparability"));
        }
        if v.minimal_non_word_representable && v.word_representable {
            return Err(ReportError::InconsistentVerdict("minimal_non_word_representable"));
        }
        if let Some(family) = &self.family {
            let spec: FamilySpec =
                family.parse().map_err(|e: gallai::FamilyError| ReportError::Family(e.to_string()))?;
            let generated = gallai::generate(&spec).map_err(|e| ReportError::Family(e.to_string()))?;
            if generated.graph != g {
                return Err(ReportError::Family(format!("graph is not {spec}")));
            }
        }
        if self.agree != self.expected.map(|e| e == v.word_representable) {
            return Err(ReportError::InconsistentVerdict("agree"));
        }
        Ok(())
    }
}
