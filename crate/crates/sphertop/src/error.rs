//! Error types shared by every module of the crate.

use thiserror::Error;

/// Errors raised by the geometric maps, lattice systems and samplers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input lies outside the domain on which the operation is defined
    /// (a cosine out of range, a radicand that is not positive, an
    /// inadmissible Gram matrix, ...).
    #[error("domain violation: {0}")]
    Domain(String),

    /// The configuration sits at the boundary of existence: a diagonal
    /// cofactor or factorization pivot is too small to divide by.
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    /// A rational map was evaluated too close to a pole.
    #[error("singular denominator: {0}")]
    Singular(String),

    /// The transformed triangle does not exist as a spherical triangle.
    #[error("transformed triangle does not exist: {0}")]
    Existence(String),

    /// Two routes that must agree differ by more than the allowed slack.
    #[error("consistency check failed: {0}")]
    Consistency(String),

    /// A vector had the wrong number of components.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// Rejection sampling accepted too small a fraction of proposals.
    #[error("sampling acceptance rate below {min_rate} after {proposals} proposals")]
    Sampling { min_rate: f64, proposals: u64 },

    /// Lattice evolution left the real domain; carries the corner of the
    /// first cube that failed.
    #[error("lattice evolution left the real domain at cube {cube:?}: {reason}")]
    LatticeDomain { cube: [usize; 3], reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
