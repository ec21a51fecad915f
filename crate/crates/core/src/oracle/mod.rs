//! Exhaustive search over `Γ(π)` at small `n`, and checks of extremality
//! and majorization claims against it.

mod canon;
mod enumerate;
mod extremal;
mod surprising;
mod verify;

pub use canon::{
    are_isomorphic, canonical_code, canonical_form, graph_from_code, Code, CANON_MAX_N,
};
pub use enumerate::{
    enumerate_class, enumerate_realizations, EnumerationOptions, DEFAULT_MAX_N, MAX_N_ENV,
};
pub use extremal::{
    extremal_by_bruteforce, verify_extremal_construction, verify_majorization, Claim, Direction,
    ExtremalReport, MajorizationVerdict, Oracle,
};
pub use surprising::{find_surprising_vertex, is_surprising, shift_hypotheses_hold};
pub use verify::{
    class_extremal, count_connected_graphs, enumerate_connected, verify_majorization_suite,
    verify_shift_lemma, verify_suite, verify_surprising_suite, ClassOptimum, ShiftInstance,
    ShiftSummary, Suite, SurprisingRecord,
};

use thiserror::Error;

use crate::builders::BuildError;
use crate::degseq::DegSeqError;
use crate::graphs::GraphError;
use crate::indices::IndexError;

#[derive(Debug, Clone, Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the enumeration bound {max} (raise it with EXTREMAL_MAX_N)")]
    TooLarge { n: usize, max: usize },
    #[error("sequences are not comparable: {0}")]
    NotComparable(String),
    #[error("{0} is neither escalating nor de-escalating on the grid")]
    NotClassified(String),
    #[error("construction is not extremal for {} under {}", .0.pi, .0.f)]
    ConstructionMismatch(Box<ExtremalReport>),
    #[error(transparent)]
    DegreeSequence(#[from] DegSeqError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Build(#[from] BuildError),
}
