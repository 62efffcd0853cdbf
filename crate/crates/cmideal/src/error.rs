use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{what} limited to {limit}, got {got}")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("no weight given for edge {{{u},{v}}}")]
    MissingWeight { u: usize, v: usize },

    #[error("weight function domain mismatch: {0}")]
    WeightDomain(String),

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("ideal is the unit ideal")]
    UnitIdeal,

    #[error("operation undefined on the void complex")]
    VoidComplex,

    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),

    #[error("skeleton dimension {dim} out of range -1..={max}")]
    SkeletonOutOfRange { dim: i64, max: i64 },

    #[error("unexpected graph shape: {0}")]
    WrongShape(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("verification budget exceeded: {0}")]
    Budget(String),
}
