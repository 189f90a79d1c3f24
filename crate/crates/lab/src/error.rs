use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("config file {path}: line {line}: {msg}")]
    ConfigFile { path: PathBuf, line: usize, msg: String },
    #[error("unknown quantity `{name}`; valid names: {valid}")]
    UnknownQuantity { name: String, valid: String },
    #[error("unknown figure `{id}`; valid ids: {valid}")]
    UnknownFigure { id: String, valid: String },
    #[error(transparent)]
    Geometry(#[from] porism_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl LabError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        LabError::Io { path: path.into(), source }
    }

    /// Every error is a usage or configuration problem from the caller's side
    /// except a failed verdict, which is not an error at all.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub type Result<T> = std::result::Result<T, LabError>;
