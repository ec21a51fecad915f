use std::path::PathBuf;

use extremal_core::{BuildError, DegSeqError, Error, GraphError, IndexError, OracleError};

/// Exit code when a verification ran but an assertion failed.
pub const VERIFICATION_FAILED: u8 = 1;
/// Exit code for argument combinations clap cannot reject on its own.
pub const USAGE: u8 = 2;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    Json(serde_json::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Json(e) => write!(f, "json: {e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl<E: Into<Error>> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Core(e.into())
    }
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => core_code(e),
            CliError::Io { .. } => 60,
            CliError::Json(_) => 61,
            CliError::Usage(_) => USAGE,
        }
    }
}

fn core_code(e: &Error) -> u8 {
    match e {
        Error::DegreeSequence(e) => degseq_code(e),
        Error::Graph(e) => graph_code(e),
        Error::Index(e) => index_code(e),
        Error::Build(e) => build_code(e),
        Error::Oracle(e) => oracle_code(e),
    }
}

fn degseq_code(e: &DegSeqError) -> u8 {
    match e {
        DegSeqError::Empty => 10,
        DegSeqError::NonPositiveEntry { .. } => 11,
        DegSeqError::NotGraphical(_) => 12,
        DegSeqError::NotConnectable { .. } => 13,
        DegSeqError::GapTooSmall { .. } => 14,
        DegSeqError::BadPositions { .. } => 15,
        DegSeqError::NotComparable => 16,
        DegSeqError::Parse { .. } => 17,
    }
}

fn graph_code(e: &GraphError) -> u8 {
    match e {
        GraphError::DuplicateEdge(..) => 20,
        GraphError::Loop(_) => 21,
        GraphError::VertexOutOfRange { .. } => 22,
        GraphError::Disconnected => 23,
        GraphError::PreconditionViolated(_) => 24,
        GraphError::Parse { .. } => 25,
        GraphError::DegreeSequence(e) => degseq_code(e),
    }
}

fn index_code(e: &IndexError) -> u8 {
    match e {
        IndexError::DomainViolation { .. } => 30,
        IndexError::UnknownName(_) => 31,
        IndexError::BadParameter(_) => 32,
        IndexError::NotEscalating(_) => 33,
        IndexError::Graph(e) => graph_code(e),
    }
}

fn build_code(e: &BuildError) -> u8 {
    match e {
        BuildError::NotTreeSequence(_) => 40,
        BuildError::NotUnicyclicSequence(_) => 41,
        BuildError::NotBicyclicSequence(_) => 42,
        BuildError::TooFewVertices { .. } => 43,
        BuildError::BadParameter(_) => 44,
        BuildError::NotGrowable(_) => 45,
        BuildError::Graph(e) => graph_code(e),
    }
}

fn oracle_code(e: &OracleError) -> u8 {
    match e {
        OracleError::TooLarge { .. } => 50,
        OracleError::NotComparable(_) => 51,
        OracleError::NotClassified(_) => 52,
        OracleError::ConstructionMismatch(_) => 53,
        OracleError::DegreeSequence(e) => degseq_code(e),
        OracleError::Graph(e) => graph_code(e),
        OracleError::Index(e) => index_code(e),
        OracleError::Build(e) => build_code(e),
    }
}
