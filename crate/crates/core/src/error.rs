use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error(
        "group too large: closure exceeded the cap of {cap} elements after {partial} elements"
    )]
    GroupTooLarge { cap: usize, partial: usize },

    #[error("{what} too large: {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unknown builtin group `{0}`")]
    UnknownBuiltin(String),

    #[error("catalog line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("catalog entry {order}.{index}: declared order {order} but generators close to {computed} elements")]
    OrderMismatch {
        order: usize,
        index: usize,
        computed: usize,
    },

    #[error("catalog entry {order}.{index} appears more than once")]
    DuplicateEntry { order: usize, index: usize },

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
