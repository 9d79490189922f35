//! Bound states of a rotating diatomic molecule in a Morse potential.
//!
//! The analytic path replaces the centrifugal barrier by a three-term
//! exponential (Pekeris) surrogate, which turns the radial equation into a
//! hypergeometric-type equation solved with the Nikiforov-Uvarov machinery
//! in [`nu`]. The [`oracle`] module integrates the exact radial equation
//! with Numerov's method and is used to validate the analytic spectrum.
//!
//! All quantities use a single internal unit system: energies in eV,
//! lengths in Å, masses in amu.

// Guards written as `!(x > 0.0)` deliberately reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod nu;
pub mod oracle;
pub mod potential;
pub mod quadrature;
pub mod special;
pub mod spectrum;
pub mod units;

pub use error::{Error, Result};
pub use potential::{MoleculeParams, PekerisCoefficients};
pub use spectrum::{DimensionlessParams, EnergyLevel, LaguerreOrder, RadialWavefunction};
