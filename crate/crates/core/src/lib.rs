//! Minimal graded free resolutions, Betti tables and regularity over
//! quotients of polynomial rings by homogeneous ideals, together with
//! filtered modules, their associated graded modules, standard bases and
//! the linearity defect.

pub mod algebra;
pub mod error;
pub mod filtration;
pub mod groebner;
pub mod linearity;
pub mod resolution;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod test_support;
