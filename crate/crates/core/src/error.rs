use thiserror::Error;

use crate::lattice::Coord5;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{0} is not an A4 root of the form ±(kᵢ − kⱼ)")]
    NotARoot(Coord5),
    #[error("{0} is not a five-fold center: no lattice translation completes the rotation")]
    NotFivefoldCenter(Coord5),
    #[error("element does not preserve the Coxeter plane")]
    NotPlaneCompatible,
    #[error("bad indices ({0}, {1}): expected distinct values in 1..=5")]
    BadIndices(usize, usize),
    #[error("tiling audit failed: {0}")]
    TilingMismatch(String),
    #[error("patch has no tiles")]
    EmptyPatch,
    #[error("malformed patch document: {0}")]
    SchemaError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
