//! Word-representable graphs, semi-transitive orientations and the
//! comparability/word-representability deciders built on them.

pub mod gallai;
pub mod graph;
pub mod io;
pub mod orientation;
pub mod recognize;
pub mod words;

pub use gallai::{
    expected_semi_transitive, generate, prescribed_coloring, prescribed_orientation, Family, FamilyError, FamilySpec,
    LabeledGraph,
};
pub use graph::{Graph, GraphError, VertexSet};
pub use io::{
    emit_dot_graph, emit_dot_orientation, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, FormatError,
    ReportDocument, ReportError,
};
pub use orientation::{Coloring, DirectedPath, Orientation, OrientationError, Violation};
pub use recognize::{
    classify, cone_characterization_check, exists_semi_transitive_orientation, exists_transitive_orientation,
    is_comparability, is_minimal_non_comparability, is_minimal_non_word_representable, is_word_representable,
    ClassificationReport, EdgeOrder, Recognizer, SearchConfig, SearchError,
};
pub use words::{find_word_bruteforce, Word, WordError};
