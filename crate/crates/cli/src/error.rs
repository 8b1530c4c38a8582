use std::path::PathBuf;

/// Errors surfaced by the benchmark driver.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] vital_edges::Error),
    #[error("{0}")]
    Invalid(String),
    #[error("enumerating {required} subsets exceeds the cap of {cap}")]
    CapExceeded { required: u128, cap: u128 },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// Process exit code: 2 for validation problems, 1 for I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            _ => 2,
        }
    }
}
