//! JSON input and output, bundled surfaces, batch experiments and the
//! command-line front end for [`hermsp_core`].

use std::path::PathBuf;

pub mod cli;
pub mod experiments;
pub mod io;
pub mod report;
pub mod surfaces;

pub use hermsp_core as core;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] hermsp_core::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad input: {0}")]
    Format(String),
    #[error("no surface file or bundled surface named {0:?}")]
    UnknownSurface(String),
    #[error("missing option --{0}")]
    MissingOption(&'static str),
    #[error("verification failed: {}", failed.join(", "))]
    Verification { failed: Vec<String> },
}

impl Error {
    /// Stable name used in the error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Core(e) => e.code(),
            Error::Io { .. } => "Io",
            Error::Json(_) => "Json",
            Error::Format(_) => "Format",
            Error::UnknownSurface(_) => "UnknownSurface",
            Error::MissingOption(_) => "MissingOption",
            Error::Verification { .. } => "VerificationFailed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
