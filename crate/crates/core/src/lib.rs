//! Casimir free energy of Dirac fermions between mass barriers, discretized
//! with the tangent fermion on a space-time lattice.

// `!(x > 0.0)` is used on purpose so that NaN inputs are rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod abel_plana;
pub mod cli;
pub mod constants;
pub mod continuum;
pub mod error;
pub mod free_energy;
pub mod lattice;
pub mod protection;
pub mod quadrature;
pub mod scattering;
pub mod special;

pub use error::{CasimirError, Result};
pub use lattice::{BarrierConfig, BarrierLength, LatticeParams, Sites};
pub use quadrature::QuadratureSpec;
