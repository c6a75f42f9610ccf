use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: expected {expected}, found {found}")]
    Syntax {
        position: usize,
        expected: String,
        found: String,
    },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("total degree {degree} exceeds the configured maximum {max}")]
    DegreeTooHigh { degree: u32, max: u32 },

    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("determinant `{0}` is not a constant; the inverse is not polynomial")]
    NonConstantDeterminant(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("not a left-symmetric algebroid: {0}")]
    NotLeftSymmetric(String),

    #[error("operation requires a zero-dimensional base")]
    NotPointCase,

    #[error("invalid degree: {0}")]
    InvalidDegree(String),

    #[error("not a representation: {0}")]
    NotARepresentation(String),

    #[error("not an action: condition fails for the pair (e{0}, e{1})", .i + 1, .j + 1)]
    NotAnAction { i: usize, j: usize },

    #[error("the canonical 2-form is not closed: {0}")]
    OmegaNotClosed(String),

    #[error("bracket is incompatible with the representation: {0}")]
    IncompatibleBracket(String),

    #[error("bilinear form is not invariant: {0}")]
    NotQuadratic(String),

    #[error("kernel frame section {0} is not annihilated by the anchor", .index + 1)]
    FrameNotInKernel { index: usize },

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("not an isomorphism: {0}")]
    NotIsomorphism(String),

    #[error("arity mismatch: expected {expected} arguments, got {got}")]
    ArityError { expected: usize, got: usize },

    #[error("not a deformation: {0}")]
    NotADeformation(String),

    #[error("not a Nijenhuis operator: {0}")]
    NotNijenhuis(String),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}
