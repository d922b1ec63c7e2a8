//! Error-to-exit-code mapping shared by all subcommands.

use std::fmt;
use std::process::ExitCode;

/// What went wrong, classified by who has to fix it. Usage problems (bad
/// config, malformed input files, mismatched ids, missing keys) exit with
/// 2; a generation run that cannot complete exits with 3; everything else
/// (I/O on outputs, internal failures) exits with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(anyhow::Error),
    Stuck(anyhow::Error),
    Other(anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Stuck(_) => ExitCode::from(3),
            CliError::Other(_) => ExitCode::from(1),
        }
    }

    pub fn usage(error: impl Into<anyhow::Error>) -> Self {
        CliError::Usage(error.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (CliError::Usage(inner) | CliError::Stuck(inner) | CliError::Other(inner)) = self;
        write!(f, "{inner:#}")
    }
}

impl From<anyhow::Error> for CliError {
    fn from(error: anyhow::Error) -> Self {
        CliError::Other(error)
    }
}

pub type CliResult = Result<(), CliError>;
