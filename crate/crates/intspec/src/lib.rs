//! Interval spectra of edge labelings on regular graphs.

pub mod bounds;
pub mod generate;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod search;

pub use bounds::{
    check_proposition, check_theorem, corollary_bound, surr, theorem_bound, BoundError,
    BoundReport, PropositionVerdict, SurrEdgeCount, SurrSubgraph,
};
pub use generate::{expand_family, GenerateError, GeneratorSpec};
pub use graph::{ComponentPartition, Graph, GraphError, InducedSubgraph, VertexSet};
pub use labeling::{
    interval_report, EdgeLabeling, IntervalReport, IntervalVertexSet, LabelingError,
    VertexSpectrum,
};
pub use io::{emit_graph, emit_labeling, parse_graph, parse_labeling, IoError};
pub use search::{
    anneal_max, exhaustive_max, fuzz_labelings, search_max, sweep, FuzzReport, FuzzViolation,
    SearchConfig, SearchError, SearchMode, SearchOutcome, SweepRow, EXHAUSTIVE_EDGE_LIMIT,
};
