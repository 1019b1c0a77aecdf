use graph_energy_core::energy::EnergyError;
use graph_energy_core::proofkit::CertificateError;
use graph_energy_core::GraphError;

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum ExitStatus {
    Success = 0,
    Violation = 1,
    Usage = 2,
    Numerical = 3,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input: {0}")]
    Input(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("violation: {0}")]
    Violation(String),
}

impl CliError {
    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Usage(_) | CliError::Input(_) => ExitStatus::Usage,
            CliError::Numerical(_) => ExitStatus::Numerical,
            CliError::Violation(_) => ExitStatus::Violation,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::MalformedSpec(_) => CliError::Usage(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<EnergyError> for CliError {
    fn from(e: EnergyError) -> Self {
        match e {
            EnergyError::Graph(g) => g.into(),
            EnergyError::InvalidTolerance(_)
            | EnergyError::OrderMismatch(..)
            | EnergyError::DegreeMismatch(..) => CliError::Usage(e.to_string()),
            EnergyError::Poly(_) | EnergyError::NotMonic => CliError::Input(e.to_string()),
            EnergyError::NoConvergence { .. }
            | EnergyError::AccuracyUnreachable { .. }
            | EnergyError::QuadratureFailed { .. } => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<CertificateError> for CliError {
    fn from(e: CertificateError) -> Self {
        match e {
            CertificateError::Refused { .. } | CertificateError::Identity(_) => {
                CliError::Violation(e.to_string())
            }
            CertificateError::Quadrature { .. } => CliError::Numerical(e.to_string()),
            CertificateError::BadSample { .. }
            | CertificateError::EmptyGrid
            | CertificateError::BadScanRange => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
