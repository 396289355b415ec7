use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos} in `{input}`: {message}")]
    Parse {
        input: String,
        pos: usize,
        message: String,
    },

    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("table does not define a commutative ring with identity: {axiom} fails at {witness:?}")]
    RingAxiom {
        axiom: &'static str,
        witness: Vec<u32>,
    },

    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: String, found: String },

    #[error("element code {code} out of range for a ring of size {size}")]
    ElementOutOfRange { code: u64, size: u32 },

    #[error("{what} of size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u64,
        cap: u64,
    },

    #[error("the ideal is not proper")]
    ImproperIdeal,

    #[error("the ideal is not prime")]
    NotPrime,

    #[error("condition ({which}) is not part of {theorem}")]
    UnknownCondition { theorem: &'static str, which: u8 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("lattice does not belong to this ring")]
    LatticeMismatch,

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("`{0}` is out of scope: it needs infinite rings or chains and is not executable here")]
    OutOfScope(String),

    #[error("closed form disagrees with the Z/{n} oracle on {field}: closed form {closed_form}, oracle {oracle}")]
    OracleDisagreement {
        n: u64,
        field: String,
        closed_form: String,
        oracle: String,
    },

    #[error("{0} is not prime")]
    NotAPrime(u64),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(input: &str, pos: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            pos,
            message: message.into(),
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }

    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::InvalidDescriptor(_)
                | Error::UnknownTheorem(_)
                | Error::OutOfScope(_)
                | Error::ElementOutOfRange { .. }
                | Error::NotAPrime(_)
                | Error::UnknownCondition { .. }
                | Error::InvalidArgument(_)
        )
    }
}
