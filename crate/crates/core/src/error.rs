use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclic order {0} is invalid, every order must be at least 2")]
    InvalidOrder(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid exponent partition: {0}")]
    InvalidPartition(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{what}: group order {order} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        order: u64,
        bound: u64,
    },

    #[error("element has {got} residues but the group has {expected} cyclic components")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("residue {residue} at component {component} is not reduced modulo {modulus}")]
    ResidueOutOfRange {
        component: usize,
        residue: u64,
        modulus: u64,
    },

    #[error("subgroups belong to different parent groups")]
    ParentMismatch,

    #[error("group is not a {0}-group")]
    NotPGroup(u64),

    #[error("subgroup data is inconsistent: {0}")]
    InconsistentSubgroup(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid suite parameter `{key}`: {message}")]
    InvalidParameter { key: String, message: String },

    #[error("cache error: {0}")]
    Cache(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit status used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Overflow(_) | Error::BoundExceeded { .. } => 3,
            Error::Cache(_) | Error::Io(_) => 1,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
