use thiserror::Error;

/// Errors raised by the engine. Exit codes used by the command-line front end
/// are attached through [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("size cap exceeded for {what}: {value} > {cap}")]
    Size { what: String, value: usize, cap: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("truncation too small: need weight {needed}, have {available}")]
    Truncation { needed: usize, available: usize },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("sign convention violated: {0}")]
    SignConvention(String),

    #[error("schema error in {path} at line {line}, column {column}: {message}")]
    Schema { path: String, line: usize, column: usize, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn size(what: impl Into<String>, value: usize, cap: usize) -> Self {
        Error::Size { what: what.into(), value, cap }
    }

    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    /// 2 for cap/size errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Size { .. } | Error::Truncation { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
