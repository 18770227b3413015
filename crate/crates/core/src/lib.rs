//! Semi-direct products `q = g ⋉ V*`, modules of covariants `V -> g`, and
//! exact checks of the identities relating them.

pub mod exact;
pub mod lie;
pub mod covariant;
pub mod semidirect;
pub mod catalog;

use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("pfaffian of odd order {0}")]
    OddOrder(usize),
    #[error("exact expansion refused ({0}); use sampled mode")]
    ExactRefused(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("element is not in the span of the basis: {0}")]
    NotInSpan(String),
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("family is linearly dependent")]
    DependentFamily,
    #[error("incompatible block structure: {0}")]
    BlockStructure(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("catalog manifest: {0}")]
    Manifest(String),
    #[error("sampling did not stabilise: {0}")]
    Unstable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
