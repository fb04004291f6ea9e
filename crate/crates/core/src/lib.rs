//! Interval edge colorings of complete k-partite graphs `K_n^k`.
//!
//! An interval `t`-coloring is a proper edge coloring with colors `1..=t`,
//! each color used at least once, in which every vertex sees a run of
//! consecutive colors. The crate provides:
//!
//! * closed-form quantities for `K_n^k` ([`graph`]),
//! * explicit constructions and transforms ([`constructions`]),
//! * an independent checker ([`verify`]),
//! * an exact backtracking search for small instances ([`solver`]),
//! * the JSON file format shared with the command-line tool ([`document`]).

pub mod coloring;
pub mod constructions;
pub mod document;
pub mod error;
pub mod graph;
pub mod interval;
pub mod solver;
pub mod verify;

pub use coloring::{CompleteColoring, EdgeColoring};
pub use document::{ColoringDocument, DocumentKind, Provenance, Source};
pub use error::{Error, Result};
pub use graph::{
    best_w_lower, bound_report, chromatic_index, enumerate_edges, is_interval_colorable,
    max_degree, w_value, BoundReport, BoundSource, EdgeId, Graph, PartiteSpec, VertexId,
};
pub use interval::{is_interval_set, IntervalSet};
pub use solver::{SearchBudget, SearchOptions, SearchStatus, SolveOutcome};
pub use verify::{verify, verify_graph, Palette, VerificationReport, Violation, ViolationKind};
