use thiserror::Error;

use crate::group::HomogeneityReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a linear combination of paths was rejected as a relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationDiagnostic {
    Empty,
    ZeroCoefficient,
    UnknownArrow(String),
    /// Terms run between different endpoints; both (source, target) pairs are reported.
    NonParallel {
        first: (String, String),
        second: (String, String),
    },
    MixedLengths { first: usize, second: usize },
    TooShort { length: usize },
    BrokenPath,
}

impl std::fmt::Display for RelationDiagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Empty => write!(f, "relation has no terms"),
            Self::ZeroCoefficient => write!(f, "relation has a zero coefficient"),
            Self::UnknownArrow(a) => write!(f, "unknown arrow `{a}`"),
            Self::NonParallel { first, second } => write!(
                f,
                "terms are not parallel: {}→{} vs {}→{}",
                first.0, first.1, second.0, second.1
            ),
            Self::MixedLengths { first, second } => {
                write!(f, "terms have mixed lengths {first} and {second}")
            }
            Self::TooShort { length } => write!(f, "relation has length {length} < 2"),
            Self::BrokenPath => write!(f, "term is not a path (arrows do not compose)"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("arrow `{arrow}` has endpoint `{vertex}` which is not a vertex")]
    DanglingEndpoint { arrow: String, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("cannot compose: initial point {initial} of the outer path differs from terminal point {terminal} of the inner path")]
    EndpointMismatch { initial: String, terminal: String },
    #[error("invalid relation #{index}: {diagnostic}")]
    InvalidRelation {
        index: usize,
        diagnostic: RelationDiagnostic,
    },
    #[error("degree {degree} exceeds the truncation bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("presentation is not quadratic: relation #{0} does not have length 2")]
    NotQuadratic(usize),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("unknown group element `{0}`")]
    UnknownElement(String),
    #[error("weight function is not total: arrow `{0}` has no weight")]
    MissingWeight(String),
    #[error("grading is not homogeneous: {0}")]
    Inhomogeneous(HomogeneityReport),
    #[error("algebra is not finite-dimensional within degree bound {0}")]
    NotFiniteDimensional(usize),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("basis size mismatch: {left} vs {right}")]
    BasisSizeMismatch { left: usize, right: usize },
    #[error("insufficient bounds: {0}")]
    InsufficientBounds(String),
    #[error("algebra is not certified Koszul to the bound: {0}")]
    NotKoszul(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("corpus: {0}")]
    Corpus(String),
}
