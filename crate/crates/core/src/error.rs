use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {0} is not a power of two")]
    NotQubitIndexed(usize),

    #[error("malformed matrix: {0}")]
    Malformed(String),

    #[error("invalid qubit subset: {0}")]
    InvalidSubset(String),

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not involutory (max deviation of a^2 from I is {0:e})")]
    NotInvolutory(f64),

    #[error("zero vector")]
    ZeroVector,

    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("invalid Pauli letter {0:?}")]
    InvalidLetter(char),

    #[error("empty Pauli string")]
    EmptyPauliString,

    #[error("weight {weight} out of range for {n} qubits")]
    WeightOutOfRange { weight: usize, n: usize },

    #[error("identity coefficient missing or not 1 (found {0})")]
    MissingIdentity(f64),

    #[error("no separable certificate: {0}")]
    NoCertificate(String),

    #[error("{what} = {value} out of range {range}")]
    OutOfRange { what: &'static str, value: String, range: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: impl ToString, range: impl ToString) -> Self {
        Error::OutOfRange { what, value: value.to_string(), range: range.to_string() }
    }
}
