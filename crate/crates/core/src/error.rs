use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} did not converge: error estimate {estimate} exceeds 1e-{digits}")]
    ConvergenceFailure {
        what: String,
        estimate: String,
        digits: u32,
    },

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("parameters {params} are outside the domain of `{id}`")]
    ParamOutOfDomain { id: String, params: String },

    #[error("unknown closed form `{0}`")]
    UnknownForm(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }
}
