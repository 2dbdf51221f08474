use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
    #[error("order {n} exceeds the supported range (max {max})")]
    TooLarge { n: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a dissociation set: vertex {0} has two or more neighbours inside the set")]
    NotDissociation(usize),
    #[error("invalid construction: {0}")]
    Construction(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error("set is not independent: edge {0}-{1}")]
    NotIndependent(usize, usize),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("time budget exhausted")]
    Timeout,
}

pub type Result<T> = std::result::Result<T, Error>;
