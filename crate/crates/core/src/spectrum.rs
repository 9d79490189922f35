//! Ro-vibrational Morse spectrum from the Pekeris-reduced radial equation.
//!
//! With s = e^{−αx} and x = (r − r₀)/r₀ the radial equation becomes
//!
//! ```text
//! R″ + R′/s + (−ε₁² + ε₂s − ε₃s²)/s² · R = 0
//! ```
//!
//! which [`crate::nu`] reduces to ε₁ = ε₂/(2√ε₃) − (n + ½). The bound-state
//! energy follows from the definition of ε₁, and the wavefunction is
//! φ(s)·L_n^β(2√ε₃ s) with φ and β taken from the admissible NU branch.

use crate::error::{Error, Result};
use crate::nu::{self, NuBranch, NuProblem};
use crate::potential::{pekeris_coefficients, MoleculeParams, PekerisCoefficients};
use crate::quadrature;
use crate::special::{laguerre, ln_factorial, ln_gamma};
use crate::units::{self, Energy, Length};

/// Absolute tolerance on ∫R² dr for the quadrature normalization.
pub const NORM_ABS_TOL: f64 = 1e-8;
/// Number of initial panels for the normalization quadrature.
const NORM_PANELS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessParams {
    /// ε₂ = 2μr₀²(2D − γD₁)/(ħ²α²)
    pub eps2: f64,
    /// ε₃ = 2μr₀²(D + γD₂)/(ħ²α²)
    pub eps3: f64,
    pub alpha: f64,
    pub gamma: Energy,
    pub pekeris: PekerisCoefficients,
    /// 2μr₀²/(ħ²α²) = 2μ/(ħ²a²), eV⁻¹.
    pub scale: f64,
}

impl DimensionlessParams {
    /// ε₂/(2√ε₃), the n-independent part of the quantized ε₁.
    pub fn ratio(&self) -> f64 {
        self.eps2 / (2.0 * self.eps3.sqrt())
    }

    /// ε₁ for vibrational quantum number n (may be ≤ 0 for unbound n).
    pub fn eps1_for(&self, n: u32) -> f64 {
        self.ratio() - (f64::from(n) + 0.5)
    }

    /// The energy that corresponds to a given ε₁: γD₀ − ε₁²/scale.
    pub fn energy_for_eps1(&self, eps1: f64) -> Energy {
        self.gamma * self.pekeris.d0 - eps1 * eps1 / self.scale
    }

    /// ε₁ for an arbitrary energy below γD₀.
    pub fn eps1_from_energy(&self, e: Energy) -> Option<f64> {
        let sq = -self.scale * (e - self.gamma * self.pekeris.d0);
        (sq >= 0.0).then(|| sq.sqrt())
    }

    pub fn nu_problem(&self, eps1: f64) -> NuProblem {
        NuProblem::morse(eps1, self.eps2, self.eps3)
    }
}

pub fn dimensionless_params(p: &MoleculeParams, l: u32) -> Result<DimensionlessParams> {
    let pekeris = pekeris_coefficients(p, l);
    let scale = 2.0 * p.mu / (units::hbar2() * p.a * p.a);
    let gamma = pekeris.gamma;
    let eps2 = scale * (2.0 * p.d - gamma * pekeris.d1);
    let eps3 = scale * (p.d + gamma * pekeris.d2);
    if !(eps3 > 0.0) {
        return Err(Error::NoBoundSpectrum { l, eps3 });
    }
    Ok(DimensionlessParams {
        eps2,
        eps3,
        alpha: pekeris.alpha,
        gamma,
        pekeris,
        scale,
    })
}

/// Largest n with ε₂/(2√ε₃) − (n + ½) > 0, given the ratio ε₂/(2√ε₃).
pub fn max_bound_n_from_ratio(ratio: f64) -> Option<u32> {
    let top = ratio - 0.5;
    if !(top > 0.0) {
        return None;
    }
    // strict inequality: an exact integer top is excluded
    let n = top.ceil() - 1.0;
    (n >= 0.0).then_some(n as u32)
}

pub fn max_bound_n(p: &MoleculeParams, l: u32) -> Result<u32> {
    let dp = dimensionless_params(p, l)?;
    max_bound_n_from_ratio(dp.ratio()).ok_or(Error::StateNotBound {
        n: 0,
        l,
        n_max: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub n: u32,
    pub l: u32,
    /// eV
    pub energy: Energy,
    /// Quantized ε₁ = ε₂/(2√ε₃) − (n + ½) > 0.
    pub eps1: f64,
}

pub fn energy_level(p: &MoleculeParams, n: u32, l: u32) -> Result<EnergyLevel> {
    let dp = dimensionless_params(p, l)?;
    level_from(&dp, n, l)
}

fn level_from(dp: &DimensionlessParams, n: u32, l: u32) -> Result<EnergyLevel> {
    let eps1 = dp.eps1_for(n);
    if !(eps1 > 0.0) {
        return Err(Error::StateNotBound {
            n,
            l,
            n_max: max_bound_n_from_ratio(dp.ratio()),
        });
    }
    Ok(EnergyLevel {
        n,
        l,
        energy: dp.energy_for_eps1(eps1),
        eps1,
    })
}

/// Every bound level at rotational quantum number l, n = 0..=n_max.
pub fn bound_levels(p: &MoleculeParams, l: u32) -> Result<Vec<EnergyLevel>> {
    let dp = dimensionless_params(p, l)?;
    let n_max = max_bound_n_from_ratio(dp.ratio()).ok_or(Error::StateNotBound {
        n: 0,
        l,
        n_max: None,
    })?;
    (0..=n_max).map(|n| level_from(&dp, n, l)).collect()
}

/// Which associated-Laguerre order to use in the radial wavefunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LaguerreOrder {
    /// β = power of the weight function solving (σρ)′ = τρ, i.e. 2ε₁.
    #[default]
    Derived,
    /// β = 1 + 2ε₁, the order printed alongside the closed-form normalization.
    AsPrinted,
}

/// Normalized R_{nl}(r) = A·s^{ε₁}e^{−ν/2}·L_n^β(ν), ν = 2√ε₃·s, s = e^{−a(r−r₀)}.
#[derive(Debug, Clone)]
pub struct RadialWavefunction {
    pub level: EnergyLevel,
    pub params: MoleculeParams,
    pub dimensionless: DimensionlessParams,
    pub laguerre_order: f64,
    pub order_kind: LaguerreOrder,
    /// ln A, A in the convention R = A·(2√ε₃)^{−ε₁}ν^{ε₁}e^{−ν/2}L_n^β(ν).
    pub ln_norm: f64,
    /// Upper end of the normalization interval (0, r_max).
    pub r_max: Length,
    phi_power: f64,
    phi_rate: f64,
    two_sqrt_eps3: f64,
    log_shift: f64,
    scaled_norm: f64,
}

impl RadialWavefunction {
    /// A_{nl}. May overflow to infinity for very deep wells; see [`Self::ln_norm`].
    pub fn norm(&self) -> f64 {
        self.ln_norm.exp()
    }

    fn shape(&self, r: Length) -> f64 {
        let s = (-self.params.a * (r - self.params.r0)).exp();
        let log_phi = self.phi_power * s.ln() + self.phi_rate * s - self.log_shift;
        log_phi.exp() * laguerre(self.level.n, self.laguerre_order, self.two_sqrt_eps3 * s)
    }

    pub fn eval(&self, r: Length) -> f64 {
        self.scaled_norm * self.shape(r)
    }

    pub fn sample(&self, rs: &[Length]) -> Vec<f64> {
        rs.iter().map(|&r| self.eval(r)).collect()
    }

    /// ∫ R² over (lo, hi) by adaptive quadrature.
    pub fn probability(&self, lo: Length, hi: Length) -> Result<f64> {
        integrate_panels(
            |r| self.eval(r).powi(2),
            lo,
            hi,
            NORM_PANELS,
            NORM_ABS_TOL * 1e-2,
        )
    }

    /// Sign changes of R on `points` equally spaced samples over (0, r_max).
    pub fn node_count(&self, points: usize) -> usize {
        let h = self.r_max / points as f64;
        let vals: Vec<f64> = (1..points).map(|i| self.eval(i as f64 * h)).collect();
        count_sign_changes(&vals)
    }
}

pub(crate) fn count_sign_changes(vals: &[f64]) -> usize {
    let mut last = 0.0f64;
    let mut changes = 0;
    for &v in vals {
        if v == 0.0 || !v.is_finite() {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            changes += 1;
        }
        last = v;
    }
    changes
}

fn integrate_panels<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    panels: usize,
    abs_tol: f64,
) -> Result<f64> {
    let w = (b - a) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let lo = a + i as f64 * w;
        let hi = if i + 1 == panels { b } else { lo + w };
        total += quadrature::integrate(&f, lo, hi, abs_tol / panels as f64)?.value;
    }
    Ok(total)
}

pub fn radial_wavefunction(p: &MoleculeParams, n: u32, l: u32) -> Result<RadialWavefunction> {
    radial_wavefunction_with(p, n, l, LaguerreOrder::Derived)
}

pub fn radial_wavefunction_with(
    p: &MoleculeParams,
    n: u32,
    l: u32,
    order_kind: LaguerreOrder,
) -> Result<RadialWavefunction> {
    let dp = dimensionless_params(p, l)?;
    let level = level_from(&dp, n, l)?;
    let problem = dp.nu_problem(level.eps1);
    let branch: NuBranch = *nu::admissible_branches(&problem)?
        .first()
        .ok_or(Error::NoAdmissibleBranch)?;
    let weight = nu::weight_function_exponents(&branch, &problem)?;
    // φ′/φ = π/σ with σ = s ⇒ φ = s^{π₀}e^{π₁s}
    let (phi_power, phi_rate) = (branch.pi_poly.c0, branch.pi_poly.c1);
    let laguerre_order = match order_kind {
        LaguerreOrder::Derived => weight.power,
        LaguerreOrder::AsPrinted => nu::printed_weight_power(level.eps1),
    };
    // peak of s^{π₀}e^{π₁s} sits at s* = −π₀/π₁
    let s_peak = -phi_power / phi_rate;
    let log_shift = phi_power * s_peak.ln() + phi_rate * s_peak;

    let mut wf = RadialWavefunction {
        level,
        params: p.clone(),
        dimensionless: dp,
        laguerre_order,
        order_kind,
        ln_norm: 0.0,
        r_max: p.r0 + 30.0 / p.a,
        phi_power,
        phi_rate,
        two_sqrt_eps3: 2.0 * dp.eps3.sqrt(),
        log_shift,
        scaled_norm: 1.0,
    };

    // coarse pass fixes the scale so the absolute tolerance applies to ∫R² ≈ 1
    let coarse = integrate_panels(
        |r| wf.shape(r).powi(2),
        0.0,
        wf.r_max,
        NORM_PANELS,
        f64::MAX,
    )?;
    if !(coarse > 0.0) || !coarse.is_finite() {
        return Err(Error::Quadrature(format!(
            "unnormalizable state (n = {n}, l = {l})"
        )));
    }
    let fine = integrate_panels(
        |r| wf.shape(r).powi(2),
        0.0,
        wf.r_max,
        NORM_PANELS,
        NORM_ABS_TOL * coarse,
    )?;
    wf.scaled_norm = 1.0 / fine.sqrt();
    wf.ln_norm = wf.scaled_norm.ln() - log_shift;
    Ok(wf)
}

/// Closed-form A_{nl} from A² = 4a·n!·(1+n+ε₁)²·(2√ε₃)^{2ε₁}/Γ(2+n+2ε₁).
/// Diagnostic only; the quadrature norm is authoritative.
pub fn normalization_constant_printed(p: &MoleculeParams, n: u32, l: u32) -> Result<f64> {
    let dp = dimensionless_params(p, l)?;
    let level = level_from(&dp, n, l)?;
    Ok(ln_normalization_constant_printed(p.a, n, level.eps1, dp.eps3)?.exp())
}

pub fn ln_normalization_constant_printed(a: f64, n: u32, eps1: f64, eps3: f64) -> Result<f64> {
    let nf = f64::from(n);
    let arg = 1.0 + nf + 2.0 * eps1;
    if arg <= -1.0 && arg.fract() == 0.0 {
        return Err(Error::Domain(format!(
            "Gamma pole at factorial argument {arg}"
        )));
    }
    let ln_a2 = (4.0 * a).ln()
        + ln_factorial(nf)
        + 2.0 * (1.0 + nf + eps1).abs().ln()
        + 2.0 * eps1 * (2.0 * eps3.sqrt()).ln()
        - ln_gamma(arg + 1.0);
    Ok(0.5 * ln_a2)
}
