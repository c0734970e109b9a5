use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: &'static str, expected: usize, found: usize },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("duplicate assignment for basis tuple {0:?}")]
    DuplicateAssignment(Vec<usize>),

    #[error("basis tuple {tuple:?} is not strictly increasing within 0..{dim}")]
    IndexOutOfRange { tuple: Vec<usize>, dim: usize },

    #[error("not a Lie algebra: {0}")]
    NotLie(String),

    #[error("not a representation: {0}")]
    NotRepresentation(String),

    #[error("not a cocycle: {0}")]
    NotCocycle(String),

    #[error("operator is not a Nijenhuis operator")]
    NotNijenhuis,

    #[error("map is not a derivation")]
    NotDerivation,

    #[error("map is not nilpotent")]
    NotNilpotent,

    #[error("operator is not a twisted Rota-Baxter operator: {0}")]
    NotTwistedRb(String),

    #[error("inadmissible transformation: {0}")]
    NotAdmissible(&'static str),

    #[error("matrix is not skew-symmetric")]
    NotSkew,

    #[error("not an NS-Lie algebra: {0}")]
    NotNsLie(String),

    #[error("not an associative NS-algebra: {0}")]
    NotAssocNs(String),

    #[error("not a twisted generalized complex structure: {0}")]
    NotGcs(String),

    #[error("the twisting cocycle must vanish for this construction")]
    NonzeroH,

    #[error("missing section {0:?}")]
    MissingSection(&'static str),

    #[error("invalid input: {0}")]
    Parse(String),

    #[error("postcondition failed: {0}")]
    Postcondition(String),
}
