//! Exact geometry of Clifford hypersurfaces in spheres and projective spaces.
//!
//! * [`exactval`]: the value class `q · √s · π^(p/2)` with exact ordering.
//! * [`geometry`]: spheres, Clifford hypersurfaces, projective quotients and their areas.
//! * [`spectral`]: Laplace spectra on products of spheres, Jacobi thresholds, Morse indices.
//! * [`width`]: first min-max widths as exact minima over index-one candidates.

pub mod error;
pub mod exactval;
pub mod geometry;
pub mod spectral;
pub mod width;

pub use error::{Error, Result};
pub use exactval::{ExactError, ExactReal, Rational};
