use thiserror::Error;

/// Errors raised by operations whose preconditions are not met.
///
/// Law violations are never errors: validators and law checkers report them
/// as data ([`crate::fincat::ValidationReport`], [`crate::coherence::LawReport`]).
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("unknown element `{element}` in the fiber over `{object}`")]
    UnknownElement { object: String, element: String },

    #[error("`{g}` is not composable after `{f}`: {detail}")]
    NotComposable { g: String, f: String, detail: String },

    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),

    #[error("composite fiber over `{object}` would hold {size} elements, exceeding the bound {bound}")]
    FiberBound {
        object: String,
        size: usize,
        bound: usize,
    },

    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("malformed document: {0}")]
    Schema(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
