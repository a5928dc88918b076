use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Invalid parameters or a computation outside its domain.
    #[error("{0}")]
    Domain(String),
    #[error("{context}: {source}")]
    Io { context: String, source: std::io::Error },
    #[error(transparent)]
    Usage(#[from] clap::Error),
}

impl CliError {
    /// 0 for help/version output, 1 for invalid input or domain errors, 2 for I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Io { .. } => 2,
            CliError::Usage(e) if !e.use_stderr() => 0,
            CliError::Usage(_) => 1,
        }
    }
}

macro_rules! domain_from {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain(e.to_string())
            }
        })*
    };
}

domain_from!(
    polyweyl::AlgebraError,
    polyweyl::CoherentError,
    polyweyl::GrassmannError,
    polyweyl::MeasureError,
    polyweyl::BargmannError
);
