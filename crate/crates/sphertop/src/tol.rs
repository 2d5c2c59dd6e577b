//! Numerical guards used by the library at run time.
//!
//! All phase-space quantities are cosines, so every threshold below is an
//! absolute number on a unit-scale quantity. Verification tolerances (what
//! the test battery asserts) live next to the suites in [`crate::verify`];
//! this module only holds the guards the maps themselves apply.

/// Positive-definiteness test: a leading principal minor at or below this
/// value flags the Gram matrix as invalid.
pub const POSDEF_MIN_MINOR: f64 = 1e-12;

/// A diagonal cofactor at or below this value means the simplex sits at the
/// boundary of existence and the cosine law may not divide by it.
pub const DEGENERATE_COFACTOR: f64 = 1e-12;

/// Cholesky pivot floor for vertex realization.
pub const CHOLESKY_MIN_PIVOT: f64 = 1e-12;

/// Rational maps refuse to evaluate when their denominator is this close
/// to zero.
pub const SINGULAR_DENOMINATOR: f64 = 1e-12;

/// Central-difference step for Jacobian cross-checks. Balances the O(h^2)
/// truncation error against roundoff at unit scale.
pub const FD_STEP: f64 = 1e-6;

/// Triangles whose Gram determinant is below this value are treated as
/// numerically degenerate by the transform sampler: conserved quantities
/// evaluated that close to the boundary carry no usable precision.
pub const TRANSFORM_MIN_D: f64 = 1e-3;

/// Scales at which the continuum-limit defect is measured.
pub const EPS_LIST: [f64; 3] = [1e-2, 5e-3, 2.5e-3];

/// Default amplitude for sampling the triangle angle domain.
pub const TAU_AMPLITUDE: f64 = 0.5;

/// Default amplitude for sampling admissible tetrahedra. The admissible set
/// thins out rapidly toward the cube boundary.
pub const TETRA_AMPLITUDE: f64 = 0.3;

/// Rejection sampling gives up below this acceptance rate.
pub const MIN_ACCEPTANCE_RATE: f64 = 1e-4;

/// Proposal budget before the acceptance rate is measured against
/// [`MIN_ACCEPTANCE_RATE`].
pub const MAX_PROPOSALS: u64 = 1_000_000;
