//! Extremal graphs for vertex-degree-based connectivity functions
//! `M_f(G) = Σ_{uv ∈ E} f(d(u), d(v))` among connected graphs with a given
//! degree sequence.
//!
//! - [`degseq`]: validation, cyclomatic class, majorization, unit
//!   transformations.
//! - [`graphs`]: graph type, BFS-graph recognition, base graphs, edge
//!   switches and shifts, edge-list and DOT formats.
//! - [`indices`]: the function catalog, `M_f`, escalating / de-escalating
//!   classification.
//! - [`builders`]: greedy trees, `U_M(π)`, `B_M(π)` and the pendant-path and
//!   star-like families.
//! - [`oracle`]: exhaustive enumeration of `Γ(π)` and batch verification.

pub mod builders;
pub mod degseq;
pub mod graphs;
pub mod indices;
pub mod oracle;

pub use builders::BuildError;
pub use degseq::{CyclicClass, DegSeqError, DegreeSequence, UnitTransformation};
pub use graphs::{Graph, GraphError};
pub use indices::{BivariateFunction, FunctionClass, IndexError, Value, Verdict};
pub use oracle::{Direction, ExtremalReport, MajorizationVerdict, OracleError};

use thiserror::Error;

/// Any error raised by this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error(transparent)]
    DegreeSequence(#[from] DegSeqError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
