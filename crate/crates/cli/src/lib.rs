//! Library side of the `affcover` command: certificate files, exporters and
//! the command implementations, kept out of `main` so tests can drive them.

pub mod cert;
pub mod commands;
pub mod export;

pub use cert::{CertificateFile, Loaded, MetaJson, CERT_VERSION};
pub use commands::{
    bounds_markdown, budget_from_env, draw, kn_rho23_rows, resolve_graph, table_kn_rho23, table_steiner, verify,
    DrawTarget, GraphSource, KnRow, VerifyReport,
};

use affcover_drawing::Violation;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("malformed certificate: {0}")]
    Format(String),
    #[error("verification failed: {0}")]
    Crossing(Violation),
    #[error("verification failed: {0}")]
    Witness(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 0 verified, 1 verification or construction failure, 2 usage error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
