use std::fmt;
use std::process::ExitCode;

use reeslin::{GbError, GraphError, MonomialError, ReesError, ResolutionError};

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum CliError {
    /// A property predicted by the hypotheses that hold did not hold.
    Predicted(String),
    Input(String),
    Resource(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Predicted(_) => 1,
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Predicted(m) => write!(f, "predicted property failed: {m}"),
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Resource(m) => write!(f, "resource bound exceeded: {m}"),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<MonomialError> for CliError {
    fn from(e: MonomialError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GbError> for CliError {
    fn from(e: GbError) -> Self {
        match e {
            GbError::DegreeCapExceeded { .. } => CliError::Resource(e.to_string()),
            GbError::Monomial(m) => m.into(),
            GbError::NotReduced => CliError::Input(e.to_string()),
        }
    }
}

impl From<ReesError> for CliError {
    fn from(e: ReesError) -> Self {
        match e {
            ReesError::Gb(g) => g.into(),
            ReesError::Monomial(m) => m.into(),
            ReesError::ZeroIdeal => CliError::Input(e.to_string()),
        }
    }
}

impl From<ResolutionError> for CliError {
    fn from(e: ResolutionError) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
