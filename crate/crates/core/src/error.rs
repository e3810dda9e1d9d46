use thiserror::Error;

/// Errors produced by the library.
///
/// The CLI maps these onto process exit codes through [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input (bad parameters, invalid certificates).
    #[error("invalid input: {0}")]
    Input(String),

    /// A structural precondition of an algorithm does not hold for the input
    /// (for example a layer graph that should be outerplanar is not).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The graph admits no outerplanar layout.
    #[error("graph is not outerplanar")]
    NotOuterplanar,

    /// An internal invariant failed. Signals a bug or an input that slipped
    /// past validation.
    #[error("internal invariant failed: {0}")]
    Invariant(String),

    /// A size cap or iteration cap was hit.
    #[error("resource limit: {0}")]
    Resource(String),

    /// The time budget of an exact search ran out.
    #[error("time budget exhausted; best known bounds: {lower} <= value{}", upper.map(|u| format!(" <= {u}")).unwrap_or_default())]
    Budget { lower: usize, upper: Option<usize> },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    /// Exit code used by the command-line front end: 2 for input problems,
    /// 3 for resource and budget exhaustion.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Resource(_) | Error::Budget { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
