use thiserror::Error;

/// Failures that stop the CLI before any check runs; all exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("syntax error in {path} at position {position}: {message}")]
    Syntax {
        path: String,
        position: usize,
        message: String,
    },

    #[error("{0}")]
    Usage(String),
}
