use thiserror::Error;

/// CLI-level failures: anything from the core library, bad parameter
/// combinations caught before the library sees them, and I/O.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] trigbasis::Error),
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
