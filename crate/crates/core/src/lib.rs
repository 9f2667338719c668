//! Exact-arithmetic toolkit for integer vector configurations.
//!
//! A *configuration* is a finite list of distinct nonzero integer vectors,
//! stored as the columns of an integer matrix. The library decides
//! normality and supernormality with witnesses, computes Hilbert bases,
//! tests tightness and total dual integrality of the associated inequality
//! systems, enumerates triangulations and chamber complexes (including the
//! planar picture with SVG output), computes lattice-ideal Groebner bases
//! and initial ideals with their cones, and establishes the bijection
//! between virtual chambers and virtual initial ideals — all over exact
//! integer and rational arithmetic, never floating point.

pub mod cone;
pub mod error;
pub mod fixtures;
pub mod hilbert;
pub mod intfeas;
pub mod limits;
pub mod linear;
pub mod matrix;
pub mod polyhedron;
pub mod supernormal;
pub mod arrangement;
pub mod chamber;
pub mod ideal;
pub mod polygon;
pub mod triangulate;
pub mod virtualch;

pub use error::{Error, Result};
pub use limits::Limits;
pub use matrix::IntMatrix;
