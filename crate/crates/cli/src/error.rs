use quadsat::dsee::DseeError;
use quadsat::quadcount::CountError;
use quadsat::search::SearchError;
use quadsat::spectral::SpectralError;
use quadsat::verify::{EnumerateError, VerifyError};
use quadsat::GraphError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    NonConvergence(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::NonConvergence(_) => 3,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::NoConvergence { .. } | SpectralError::JacobiNoConvergence { .. } => {
                CliError::NonConvergence(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::Spectral(s) => s.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<DseeError> for CliError {
    fn from(e: DseeError) -> Self {
        match e {
            DseeError::Spectral { source, step, .. } => match CliError::from(source) {
                CliError::NonConvergence(msg) => CliError::NonConvergence(format!("step {step}: {msg}")),
                other => other,
            },
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Spectral(s) => s.into(),
            VerifyError::Count(c) => c.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Spectral(s) => s.into(),
            SearchError::Enumerate(e) => e.into(),
            SearchError::Graph(g) => g.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}
