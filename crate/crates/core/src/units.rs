//! Physical constants and the handful of unit conversions the crate needs.
//!
//! Everything internal is expressed in eV, Å and amu. Conversions only
//! happen where data enters (wavenumbers from molecule files).

use crate::error::{Error, Result};

pub type Energy = f64;
pub type Length = f64;
pub type InverseLength = f64;
pub type Mass = f64;
pub type Wavenumber = f64;

/// Reduced Planck constant, J s (CODATA 2018, exact).
const HBAR_SI: f64 = 1.054_571_817e-34;
/// Planck constant, J s (exact).
const H_SI: f64 = 6.626_070_15e-34;
/// Speed of light, m/s (exact).
const C_SI: f64 = 299_792_458.0;
/// Elementary charge, C (exact).
const E_SI: f64 = 1.602_176_634e-19;
/// Atomic mass constant, kg (CODATA 2018).
const AMU_SI: f64 = 1.660_539_066_60e-27;
const ANGSTROM_SI: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// ħ²/(1 amu · 1 Å²) in eV.
    pub hbar2_over_amu_a2: Energy,
    /// eV per cm⁻¹ (h·c/e · 100).
    pub cm1_to_ev: Energy,
}

impl PhysicalConstants {
    pub fn codata2018() -> Self {
        Self {
            hbar2_over_amu_a2: HBAR_SI * HBAR_SI / (AMU_SI * ANGSTROM_SI * ANGSTROM_SI) / E_SI,
            cm1_to_ev: H_SI * C_SI * 100.0 / E_SI,
        }
    }
}

/// ħ²/(amu·Å²) in eV.
pub fn hbar2() -> Energy {
    PhysicalConstants::codata2018().hbar2_over_amu_a2
}

pub fn cm1_to_ev(x: Wavenumber) -> Energy {
    x * PhysicalConstants::codata2018().cm1_to_ev
}

pub fn ev_to_cm1(e: Energy) -> Wavenumber {
    e / PhysicalConstants::codata2018().cm1_to_ev
}

/// ħ²/(2 μ r₀²): the rotational energy per unit of l(l+1).
pub fn rotational_unit(mu: Mass, r0: Length) -> Result<Energy> {
    if !(mu > 0.0) || !(r0 > 0.0) {
        return Err(Error::Domain(format!(
            "rotational_unit needs mu > 0 and r0 > 0 (got mu = {mu}, r0 = {r0})"
        )));
    }
    Ok(hbar2() / (2.0 * mu * r0 * r0))
}
