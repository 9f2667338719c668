//! Error type shared by every module of the library.

use thiserror::Error;

/// Errors surfaced by the library. Geometric routines prefer returning
/// structured verdicts; `Error` is reserved for violated preconditions,
/// guard limits, and malformed input.
#[derive(Debug, Error)]
pub enum Error {
    /// A matrix or configuration did not have the rank the operation requires.
    #[error("rank deficient: {0}")]
    RankDeficient(String),

    /// The columns do not generate the full lattice `Z^m` (the row lattice of
    /// the matrix is not saturated), which the operation requires.
    #[error("configuration does not generate the full integer lattice: {0}")]
    NotSaturated(String),

    /// The operation requires a pointed cone but the input has a nonzero
    /// lineality space.
    #[error("cone is not pointed: {0}")]
    NotPointed(String),

    /// An enumeration over a polyhedron was requested but the polyhedron is
    /// unbounded in a direction that makes the enumeration infinite.
    #[error("polyhedron is unbounded: {0}")]
    Unbounded(String),

    /// The vector was expected to lie in a cone but does not.
    #[error("vector not in cone: {0}")]
    NotInCone(String),

    /// A collection of cells failed to form a triangulation.
    #[error("not a triangulation: {0}")]
    NotATriangulation(String),

    /// A size guard was hit; pass larger limits to proceed deliberately.
    #[error("instance exceeds the configured limits: {0}")]
    TooLarge(String),

    /// Input could not be parsed or fails a structural invariant.
    #[error("bad input: {0}")]
    BadInput(String),

    /// The operation is not supported for this input shape.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Convenience alias used throughout the library.
pub type Result<T> = std::result::Result<T, Error>;
