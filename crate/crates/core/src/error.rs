use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element name `{0}`")]
    UnknownName(String),
    #[error("cover relation has a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("carrier has {0} elements, at most {max} are supported", max = crate::set::MAX_ELEMENTS)]
    TooManyElements(usize),
    #[error("relation is not a partial order: {0}")]
    NotAnOrder(String),
    #[error("poset has no bottom or no top element")]
    NotBounded,
    #[error("operator argument is the empty set")]
    EmptyArgument,
    #[error("invalid complementation: {0}")]
    InvalidComplement(String),
    #[error("poset is not Boolean: {0}")]
    NotBoolean(String),
    #[error("structure fails its axioms: {0}")]
    AxiomsFail(String),
    #[error("derived structure is inconsistent: {0}")]
    ConsistencyFail(String),
    #[error("size {n} exceeds the exhaustive limit {max}")]
    SizeTooLarge { n: usize, max: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("expected a `{expected}` structure, found `{found}`")]
    KindMismatch { expected: String, found: String },
    #[error("operation needs a complementation but the input has none")]
    MissingComplement,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
