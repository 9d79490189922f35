//! Morse potential, effective radial potential and the Pekeris surrogate
//! for the centrifugal barrier.

use crate::error::{Error, Result};
use crate::units::{self, Energy, InverseLength, Length, Mass};

/// A diatomic system in a Morse well.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeParams {
    pub name: String,
    /// Dissociation energy (eV).
    pub d: Energy,
    /// Width parameter (Å⁻¹).
    pub a: InverseLength,
    /// Equilibrium bond length (Å).
    pub r0: Length,
    /// Reduced mass (amu).
    pub mu: Mass,
}

impl MoleculeParams {
    pub fn new(
        name: impl Into<String>,
        d: Energy,
        a: InverseLength,
        r0: Length,
        mu: Mass,
    ) -> Result<Self> {
        for (label, v) in [("D", d), ("a", a), ("r0", r0), ("mu", mu)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Domain(format!(
                    "{label} must be finite and > 0, got {v}"
                )));
            }
        }
        Ok(Self {
            name: name.into(),
            d,
            a,
            r0,
            mu,
        })
    }

    /// CO parameters with D given in cm⁻¹ (90540 cm⁻¹).
    #[allow(clippy::approx_constant)]
    pub fn carbon_monoxide() -> Self {
        Self::new("CO", units::cm1_to_ev(90540.0), 2.2994, 1.1283, 6.8606719).unwrap()
    }

    /// LiH parameters with D given in cm⁻¹ (20287 cm⁻¹).
    pub fn lithium_hydride() -> Self {
        Self::new("LiH", units::cm1_to_ev(20287.0), 1.1280, 1.5956, 0.8801221).unwrap()
    }

    /// α = a·r₀.
    pub fn alpha(&self) -> f64 {
        self.a * self.r0
    }

    /// x = (r − r₀)/r₀.
    pub fn to_x(&self, r: Length) -> f64 {
        (r - self.r0) / self.r0
    }

    pub fn to_r(&self, x: f64) -> Length {
        self.r0 * (1.0 + x)
    }

    /// ħ²/(2μr₀²).
    pub fn rotational_unit(&self) -> Energy {
        units::hbar2() / (2.0 * self.mu * self.r0 * self.r0)
    }
}

pub fn morse_potential(p: &MoleculeParams, r: Length) -> Energy {
    let e = (-p.a * (r - p.r0)).exp();
    p.d * (e * e - 2.0 * e)
}

/// Morse plus the exact centrifugal barrier ħ²l(l+1)/(2μr²).
pub fn effective_potential(p: &MoleculeParams, l: u32, r: Length) -> Result<Energy> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!(
            "effective_potential needs r > 0, got {r}"
        )));
    }
    Ok(morse_potential(p, r) + centrifugal(p, l, r))
}

pub(crate) fn centrifugal(p: &MoleculeParams, l: u32, r: Length) -> Energy {
    let ll = f64::from(l) * f64::from(l + 1);
    units::hbar2() * ll / (2.0 * p.mu * r * r)
}

/// Coefficients of γ(D₀ + D₁e^{−αx} + D₂e^{−2αx}), matched to γ/(1+x)² through x².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PekerisCoefficients {
    pub alpha: f64,
    /// γ = ħ²l(l+1)/(2μr₀²), eV.
    pub gamma: Energy,
    pub d0: f64,
    pub d1: f64,
    pub d2: f64,
}

impl PekerisCoefficients {
    /// Coefficients for a bare α with γ set to 1.
    pub fn for_alpha(alpha: f64) -> Self {
        let inv = 1.0 / alpha;
        let inv2 = inv * inv;
        Self {
            alpha,
            gamma: 1.0,
            d0: 1.0 - 3.0 * inv + 3.0 * inv2,
            d1: 4.0 * inv - 6.0 * inv2,
            d2: -inv + 3.0 * inv2,
        }
    }
}

pub fn pekeris_coefficients(p: &MoleculeParams, l: u32) -> PekerisCoefficients {
    let ll = f64::from(l) * f64::from(l + 1);
    PekerisCoefficients {
        gamma: p.rotational_unit() * ll,
        ..PekerisCoefficients::for_alpha(p.alpha())
    }
}

pub fn pekeris_rotational_potential(c: &PekerisCoefficients, x: f64) -> Energy {
    let e = (-c.alpha * x).exp();
    c.gamma * (c.d0 + c.d1 * e + c.d2 * e * e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn morse_minimum_and_asymptote() {
        let p = MoleculeParams::carbon_monoxide();
        assert_eq!(morse_potential(&p, p.r0), -p.d);
        assert!(morse_potential(&p, 100.0) < 0.0);
        assert!(morse_potential(&p, 100.0).abs() < 1e-40);
        let v = morse_potential(&p, p.r0 + 1.0 / p.a);
        // e^-2 - 2e^-1 = -0.600423599...
        assert!((v / p.d - (-0.600_423_599_106_272)).abs() < 1e-12);
    }

    #[test]
    fn morse_global_minimum_by_sampling() {
        let p = MoleculeParams::lithium_hydride();
        let h = 1e-4;
        let grid: Vec<f64> = (1..60_000).map(|i| i as f64 * h).collect();
        let (imin, vmin) = grid
            .iter()
            .map(|&r| morse_potential(&p, r))
            .enumerate()
            .fold(
                (0, f64::INFINITY),
                |acc, (i, v)| if v < acc.1 { (i, v) } else { acc },
            );
        assert!((grid[imin] - p.r0).abs() <= h);
        assert!(vmin >= -p.d);
        let dv = |r: f64| (morse_potential(&p, r + 1e-6) - morse_potential(&p, r - 1e-6)) / 2e-6;
        assert!(dv(p.r0 - 0.01) < 0.0 && dv(p.r0 + 0.01) > 0.0);
    }

    #[test]
    fn effective_potential_values() {
        let p = MoleculeParams::carbon_monoxide();
        for r in [0.3, 1.0, p.r0, 2.5, 7.0] {
            assert_eq!(
                effective_potential(&p, 0, r).unwrap(),
                morse_potential(&p, r)
            );
        }
        let u = p.rotational_unit();
        assert!((effective_potential(&p, 1, p.r0).unwrap() - (-p.d + 2.0 * u)).abs() < 1e-14);
        let v10 = effective_potential(&p, 10, p.r0).unwrap();
        assert!((v10 - (-p.d + 110.0 * 2.393_02e-4)).abs() < 1e-6);
        assert!(effective_potential(&p, 1, 0.0).is_err());
        assert!(effective_potential(&p, 1, -1.0).is_err());
    }

    #[test]
    fn pekeris_at_unit_alpha() {
        let c = PekerisCoefficients::for_alpha(1.0);
        assert_eq!((c.d0, c.d1, c.d2), (1.0, -2.0, 2.0));
    }

    #[test]
    fn pekeris_for_co() {
        let c = pekeris_coefficients(&MoleculeParams::carbon_monoxide(), 0);
        assert!((c.alpha - 2.594_413_02).abs() < 1e-8);
        assert!((c.d0 - 0.289_369_478).abs() < 1e-8);
        assert!((c.d1 - 0.650_373_762).abs() < 1e-8);
        assert!((c.d2 - 0.060_256_760).abs() < 1e-8);
        assert!((c.d0 + c.d1 + c.d2 - 1.0).abs() < 1e-15);
        assert_eq!(c.gamma, 0.0);
    }

    #[test]
    fn pekeris_potential_anchors() {
        let p = MoleculeParams::carbon_monoxide();
        let c5 = pekeris_coefficients(&p, 5);
        assert!((pekeris_rotational_potential(&c5, 0.0) - c5.gamma).abs() < 1e-15);
        let c0 = pekeris_coefficients(&p, 0);
        for x in [-0.5, 0.0, 0.3, 2.0] {
            assert_eq!(pekeris_rotational_potential(&c0, x), 0.0);
        }
        let exact = c5.gamma / (1.1f64 * 1.1);
        assert!((pekeris_rotational_potential(&c5, 0.1) - exact).abs() < 1e-3 * c5.gamma);
    }

    #[test]
    fn pekeris_third_order_agreement() {
        let c = pekeris_coefficients(&MoleculeParams::lithium_hydride(), 7);
        let mut worst: f64 = 0.0;
        for i in 1..=100 {
            let x = -0.05 + 0.1 * i as f64 / 100.0;
            if x.abs() < 1e-9 {
                continue;
            }
            let diff = pekeris_rotational_potential(&c, x) - c.gamma / (1.0 + x).powi(2);
            worst = worst.max((diff / c.gamma).abs() / x.abs().powi(3));
        }
        // the x^3 mismatch coefficient is |4 - D1 a^3/6 - 4 D2 a^3/3|, a few units at these alphas
        assert!(worst < 10.0, "x^3 ratio {worst}");
    }

    #[test]
    fn gamma_zero_iff_l_zero() {
        let p = MoleculeParams::lithium_hydride();
        assert_eq!(pekeris_coefficients(&p, 0).gamma, 0.0);
        for l in 1..20 {
            assert!(pekeris_coefficients(&p, l).gamma > 0.0);
        }
    }

    #[test]
    fn x_round_trip() {
        let p = MoleculeParams::carbon_monoxide();
        assert_eq!(p.to_x(p.r0), 0.0);
        assert!((p.to_r(p.to_x(2.3)) - 2.3).abs() < 1e-15);
    }

    #[test]
    fn rejects_invalid_params() {
        assert!(MoleculeParams::new("x", 0.0, 1.0, 1.0, 1.0).is_err());
        assert!(MoleculeParams::new("x", 1.0, -1.0, 1.0, 1.0).is_err());
        assert!(MoleculeParams::new("x", 1.0, 1.0, f64::NAN, 1.0).is_err());
        assert!(MoleculeParams::new("x", 1.0, 1.0, 1.0, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn taylor_matching_identities(alpha in 0.5f64..10.0) {
            let c = PekerisCoefficients::for_alpha(alpha);
            prop_assert!((c.d0 + c.d1 + c.d2 - 1.0).abs() < 1e-13);
            prop_assert!((c.d1 * alpha + 2.0 * c.d2 * alpha - 2.0).abs() < 1e-13);
            prop_assert!((c.d1 * alpha * alpha / 2.0 + 2.0 * c.d2 * alpha * alpha - 3.0).abs() < 1e-12);
        }
    }
}
