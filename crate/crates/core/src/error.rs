use thiserror::Error;

use crate::simplex::Simplex;
use crate::vertex::Vertex;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed simplex: {0}")]
    MalformedSimplex(String),

    #[error("{0} is not a simplex of the complex")]
    NotASimplex(Simplex),

    #[error("cone apex {0} is already a vertex of the base")]
    ApexCollision(Vertex),

    #[error("subcomplex violation: {0}")]
    NotSubcomplex(String),

    #[error("size limit exceeded: {what} is {actual}, limit {limit}")]
    SizeLimit {
        what: String,
        actual: u128,
        limit: u128,
    },

    #[error("label {label} is beyond the prime table bound {bound}")]
    LabelTooLarge { label: Vertex, bound: u64 },

    #[error("witness unavailable: {0}")]
    WitnessUnavailable(String),

    #[error("no witness among {pool} candidate vertices")]
    WitnessNotFound { pool: usize },

    #[error("base has external simplexes of the forbidden size: {}", crate::simplex::display_list(.offending))]
    DObstruction { offending: Vec<Simplex> },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn size(what: impl Into<String>, actual: impl TryInto<u128>, limit: impl TryInto<u128>) -> Self {
        Error::SizeLimit {
            what: what.into(),
            actual: actual.try_into().unwrap_or(u128::MAX),
            limit: limit.try_into().unwrap_or(u128::MAX),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
