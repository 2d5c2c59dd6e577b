//! Cosine-law maps of spherical triangles and tetrahedra as discrete
//! integrable systems.
//!
//! The cosine law sending the angles of a spherical triangle (or the
//! dihedral angles of a spherical tetrahedron) to its side lengths is a
//! map of the cosine cube into itself. This crate implements those maps
//! and everything that makes them integrable systems:
//!
//! * [`gram`]: Gram matrices, cofactors, the generic cofactor cosine law
//!   and vertex realization (the existence certificates);
//! * [`triangle`]: the three-dimensional map `phi`, its conserved
//!   quantities, the birational second iterate, switch/polar/flip
//!   transformations, the closed-form Jacobian with invariant densities,
//!   and the family of invariant Poisson brackets;
//! * [`tetra`]: the six-dimensional map `psi`, four conserved
//!   quantities, tetrahedral sine laws, link triangles, the two-stage
//!   solve, the 6x6 Jacobian with determinant factorization, and the
//!   symmetry of the side-by-angle derivative matrix;
//! * [`darboux`]: the same maps as lattice systems on the 2-faces of a
//!   hypercube: the symmetric discrete Darboux system, its general and
//!   non-symmetric forms, four-dimensional consistency, box evolution;
//! * [`euler`]: the continuous quadratic flows the maps discretize, their
//!   decoupling, a fixed-step reference integrator, and consistency-order
//!   measurements;
//! * [`numutil`]: a portable seeded PRNG, domain rejection sampling,
//!   finite differences and residual reports;
//! * [`verify`]: the named battery of machine-precision checks behind
//!   `sphertop verify all` (see [`verify::manifest`] for the suite list).
//!
//! Every map is a pure function of immutable inputs; all types are `Send`
//! and `Sync`, so independent trajectories and sample batches can run on
//! any number of threads.
//!
//! The runnable examples under `examples/` demonstrate one capability
//! each; the thin `sphertop` binary exposes the same functionality as
//! subcommands (`triangle`, `tetra`, `lattice`, `verify`, `limit`).

// index loops over fixed-size matrices are the house style here
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod darboux;
pub mod error;
pub mod euler;
pub mod gram;
pub mod numutil;
pub mod orbit;
pub mod tetra;
pub mod tol;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
