use thiserror::Error;

/// Errors reported for invalid inputs.
///
/// Internal consistency failures (a constructed automorphism that does not
/// preserve brackets, a sign assignment that breaks the Jacobi identity)
/// are bugs, not input errors, and panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid simple type {letter}{rank}: {reason}")]
    InvalidTypeRank {
        letter: char,
        rank: usize,
        reason: String,
    },

    #[error("matrix is not of finite type")]
    NotFiniteType,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not square")]
    NotSquare,

    #[error("generator {index} is not a root of the ambient system")]
    GeneratorNotRoot { index: usize },

    #[error("automorphism is not involutive")]
    NotInvolutive,

    #[error("expected a {expected} algebra")]
    WrongForm { expected: &'static str },

    #[error("node permutation is not a symmetry of the Cartan matrix")]
    NotDiagramSymmetry,

    #[error("coweight must be a nonzero 0/1 vector of length {rank}")]
    BadCoweight { rank: usize },

    #[error("node index {node} out of range (valid: {valid})")]
    BadNode { node: usize, valid: String },

    #[error("codimension {codim} out of range for dimension {dim}")]
    BadCodim { codim: usize, dim: usize },

    #[error("{file}:{line}: {msg}")]
    DataFormat {
        file: String,
        line: usize,
        msg: String,
    },

    #[error("expression `{src}`: {msg}")]
    Expr { src: String, msg: String },

    #[error("unknown manifest row `{id}`")]
    UnknownRow { id: String },
}

pub type Result<T> = std::result::Result<T, Error>;
