use courant_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed scenario at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("scenario field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("check {check}: {source}")]
    Engine { check: String, source: Error },
}
