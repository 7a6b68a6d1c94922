//! Exact computations with adjoint orbits of complex semisimple Lie algebras.
//!
//! All arithmetic is over the rationals (or Gaussian rationals); nothing
//! here uses floating point.

pub mod cli;
pub mod error;
pub mod linalg;
pub mod minorbit;
pub mod orbits;
pub mod poly;
pub mod rational;
pub mod rootsys;
pub mod sln;
pub mod ssorbits;
pub mod topology;
pub mod triples;

pub use error::{Error, Result};
