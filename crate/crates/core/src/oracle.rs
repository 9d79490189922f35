//! Numerov shooting solver for the exact radial equation
//!
//! ```text
//! u″(r) = (2μ/ħ²)·(V(r) + ħ²l(l+1)/(2μr²) − E)·u(r)
//! ```
//!
//! with the true 1/r² barrier. Levels are found by bisection on a monotone
//! "E lies above level n" predicate built from the node count and the sign of
//! the outer log-derivative mismatch, so no derivative of the residual is
//! ever needed.

use crate::error::{Error, Result};
use crate::potential::{effective_potential, MoleculeParams};
use crate::spectrum::count_sign_changes;
use crate::units::{self, Energy, Length};

/// Default bisection tolerance on the energy bracket, eV.
pub const DEFAULT_TOL: Energy = 1e-7;
/// Grid points per local de Broglie wavelength at E = −D/2.
pub const POINTS_PER_WAVELENGTH: f64 = 40.0;
/// Upper bound on the default step, Å.
pub const MAX_DEFAULT_STEP: Length = 5e-4;
pub const MIN_POINTS: usize = 1000;
/// |matching residual| below which a bisected level counts as converged.
pub const RESIDUAL_TOL: f64 = 1e-4;

const RESCALE_ABOVE: f64 = 1e150;
/// Largest accepted h²w/12 at r_min.
const MAX_STIFFNESS: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    pub r_min: Length,
    pub r_max: Length,
    pub step: Length,
    pub points: usize,
}

impl RadialGrid {
    /// Uniform grid whose step is adjusted down so the end points land exactly.
    pub fn new(r_min: Length, r_max: Length, max_step: Length) -> Result<Self> {
        if !(r_min > 0.0) || !(r_max > r_min) || !(max_step > 0.0) {
            return Err(Error::Domain(format!(
                "invalid grid r_min = {r_min}, r_max = {r_max}, step = {max_step}"
            )));
        }
        let intervals = ((r_max - r_min) / max_step).ceil().max(1.0) as usize;
        let points = intervals + 1;
        if points < MIN_POINTS {
            return Err(Error::Domain(format!(
                "grid has {points} points, need at least {MIN_POINTS}"
            )));
        }
        Ok(Self {
            r_min,
            r_max,
            step: (r_max - r_min) / intervals as f64,
            points,
        })
    }

    /// r_min = max(0.05·r₀, 0.05 Å), r_max = r₀ + 30/a, step from the de Broglie
    /// wavelength at kinetic energy D/2, capped at [`MAX_DEFAULT_STEP`].
    pub fn default_for(p: &MoleculeParams) -> Self {
        let step = Self::de_broglie_step(p).min(MAX_DEFAULT_STEP);
        Self::new((0.05 * p.r0).max(0.05), p.r0 + 30.0 / p.a, step)
            .expect("default grid is valid for valid molecule parameters")
    }

    /// λ/40 for the local de Broglie wavelength at E = −D/2 over the well bottom.
    pub fn de_broglie_step(p: &MoleculeParams) -> Length {
        let k = (2.0 * p.mu * 0.5 * p.d / units::hbar2()).sqrt();
        2.0 * std::f64::consts::PI / k / POINTS_PER_WAVELENGTH
    }

    pub fn with_step(&self, max_step: Length) -> Result<Self> {
        Self::new(self.r_min, self.r_max, max_step)
    }

    pub fn r(&self, i: usize) -> Length {
        self.r_min + i as f64 * self.step
    }

    pub fn radii(&self) -> Vec<Length> {
        (0..self.points).map(|i| self.r(i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumerovOutcome {
    pub node_count: usize,
    /// (u_N/u_{N−1} − e^{−κh})/h at r_max, Å⁻¹; positive when |u| decays slower
    /// than the bound-state asymptote.
    pub boundary_residual: f64,
    /// u on the grid, rescaled on the fly to avoid overflow (shape only).
    pub samples: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingResult {
    pub n: u32,
    pub l: u32,
    pub energy: Energy,
    pub node_count: usize,
    /// Relative log-derivative mismatch (per step) between the outward and
    /// inward solutions at the outer turning point.
    pub boundary_residual: f64,
    pub converged: bool,
}

/// (2μ/ħ²)(V_eff(r) − E) on the grid.
fn coupling(p: &MoleculeParams, l: u32, e: Energy, grid: &RadialGrid) -> Vec<f64> {
    let k = 2.0 * p.mu / units::hbar2();
    (0..grid.points)
        .map(|i| k * (effective_potential(p, l, grid.r(i)).expect("grid radii are positive") - e))
        .collect()
}

/// Numerov recursion from the two preset points at `start` (and its neighbour
/// in the sweep direction) up to and including `stop`. Samples already
/// written are divided by [`RESCALE_ABOVE`] whenever |u| exceeds it, so sign
/// changes are counted as the values are produced and the count is returned.
fn numerov_sweep(w: &[f64], h: f64, u: &mut [f64], start: usize, stop: usize) -> usize {
    let f = |i: usize| 1.0 - h * h * w[i] / 12.0;
    let outward = stop > start;
    let steps = start.abs_diff(stop);
    let mut prev = start;
    let mut cur = if outward { start + 1 } else { start - 1 };
    let mut sign = [u[start], u[cur]]
        .into_iter()
        .rev()
        .find(|v| *v != 0.0)
        .map_or(0.0, f64::signum);
    let mut nodes = 0;
    for _ in 1..steps {
        let next = if outward { cur + 1 } else { cur - 1 };
        u[next] = ((12.0 - 10.0 * f(cur)) * u[cur] - f(prev) * u[prev]) / f(next);
        if u[next].abs() > RESCALE_ABOVE {
            for v in &mut u[start.min(next)..=start.max(next)] {
                *v /= RESCALE_ABOVE;
            }
        }
        if u[next] != 0.0 {
            if sign != 0.0 && u[next].signum() != sign {
                nodes += 1;
            }
            sign = u[next].signum();
        }
        prev = cur;
        cur = next;
    }
    nodes
}

pub fn numerov_integrate(
    p: &MoleculeParams,
    l: u32,
    e: Energy,
    grid: &RadialGrid,
) -> NumerovOutcome {
    let w = coupling(p, l, e, grid);
    let h = grid.step;
    let n = grid.points;
    let mut u = vec![0.0; n];
    u[1] = h;
    let node_count = numerov_sweep(&w, h, &mut u, 0, n - 1);

    let kappa = w[n - 1].max(0.0).sqrt();
    let boundary_residual = if u[n - 2] != 0.0 {
        (u[n - 1] / u[n - 2] - (-kappa * h).exp()) / h
    } else {
        f64::INFINITY.copysign(u[n - 1])
    };
    NumerovOutcome {
        node_count,
        boundary_residual,
        samples: u,
    }
}

/// True when E lies above the n-th level for this grid.
fn above_level(p: &MoleculeParams, l: u32, e: Energy, n: u32, grid: &RadialGrid) -> bool {
    let out = numerov_integrate(p, l, e, grid);
    let n = n as usize;
    if out.node_count != n {
        return out.node_count > n;
    }
    // with n nodes the tail either runs away from the axis (below level n) or
    // bends toward its next crossing (above); the ratio form is sign-free
    out.boundary_residual < 0.0
}

pub fn solve_level(p: &MoleculeParams, n: u32, l: u32, tol: Energy) -> Result<ShootingResult> {
    solve_level_on(p, n, l, tol, &RadialGrid::default_for(p))
}

pub fn solve_level_on(
    p: &MoleculeParams,
    n: u32,
    l: u32,
    tol: Energy,
    grid: &RadialGrid,
) -> Result<ShootingResult> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be > 0, got {tol}")));
    }
    let v_min = (0..grid.points)
        .map(|i| effective_potential(p, l, grid.r(i)).expect("grid radii are positive"))
        .fold(f64::INFINITY, f64::min);
    let mut lo = v_min.max(-p.d * (1.0 + 1e-12));
    // Numerov's 1 − h²w/12 factor must stay positive on the inner wall
    let stiff = 2.0 * p.mu / units::hbar2() * (effective_potential(p, l, grid.r_min)? - lo);
    if grid.step * grid.step * stiff / 12.0 >= MAX_STIFFNESS {
        return Err(Error::Domain(format!(
            "step {} Å is too coarse for the inner wall at r_min = {} Å",
            grid.step, grid.r_min
        )));
    }
    // just below the continuum so κ stays real
    let mut hi = -1e-12 * p.d;
    if lo >= hi || !above_level(p, l, hi, n, grid) {
        return Err(Error::NotBoundNumerically { n, l });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if above_level(p, l, mid, n, grid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let energy = 0.5 * (lo + hi);
    let ef = eigenfunction_on(p, l, energy, grid);
    Ok(ShootingResult {
        n,
        l,
        energy,
        node_count: ef.node_count,
        boundary_residual: ef.matching_residual,
        converged: ef.node_count == n as usize && ef.matching_residual.abs() < RESIDUAL_TOL,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenfunction {
    pub radii: Vec<Length>,
    /// Normalized so that ∫u² dr = 1 (composite Simpson on the grid), with a
    /// positive outermost lobe.
    pub values: Vec<f64>,
    pub node_count: usize,
    pub matching_residual: f64,
    pub match_index: usize,
}

/// Outward and inward Numerov solutions joined at the outer classical turning point.
pub fn eigenfunction_on(p: &MoleculeParams, l: u32, e: Energy, grid: &RadialGrid) -> Eigenfunction {
    let w = coupling(p, l, e, grid);
    let h = grid.step;
    let n = grid.points;
    let turning = (0..n).rev().find(|&i| w[i] < 0.0).unwrap_or(n / 2);
    let m = turning.clamp(2, n - 3);

    let mut out = vec![0.0; n];
    out[1] = h;
    numerov_sweep(&w, h, &mut out, 0, m + 1);

    let mut inw = vec![0.0; n];
    let kappa = w[n - 1].max(0.0).sqrt();
    inw[n - 1] = 1e-200;
    inw[n - 2] = 1e-200 * (kappa * h).exp();
    numerov_sweep(&w, h, &mut inw, n - 1, m - 1);

    let scale = out[m] / inw[m];
    let mut values: Vec<f64> = (0..n)
        .map(|i| if i <= m { out[i] } else { inw[i] * scale })
        .collect();
    let d_out = out[m + 1] - out[m - 1];
    let d_in = (inw[m + 1] - inw[m - 1]) * scale;
    let matching_residual = (d_out - d_in) / (2.0 * out[m]);
    let norm = simpson(&values.iter().map(|v| v * v).collect::<Vec<_>>(), h).sqrt();
    let last_sign = values[m].signum();
    for v in &mut values {
        *v *= last_sign / norm;
    }
    Eigenfunction {
        radii: grid.radii(),
        node_count: count_sign_changes(&values[1..]),
        values,
        matching_residual,
        match_index: m,
    }
}

/// Composite Simpson on equally spaced samples (trapezoid on a trailing odd panel).
pub fn simpson(f: &[f64], h: f64) -> f64 {
    let n = f.len();
    if n < 2 {
        return 0.0;
    }
    let even = if (n - 1).is_multiple_of(2) { n } else { n - 1 };
    let mut s = f[0] + f[even - 1];
    for (i, v) in f.iter().enumerate().take(even - 1).skip(1) {
        s += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
    }
    let mut total = s * h / 3.0;
    if even < n {
        total += 0.5 * h * (f[n - 2] + f[n - 1]);
    }
    total
}

/// Observed convergence order log₂((E_h − E_{h/2})/(E_{h/2} − E_{h/4})).
pub fn richardson_order(p: &MoleculeParams, n: u32, l: u32, base_step: Length) -> Result<f64> {
    let base = RadialGrid::default_for(p);
    let e: Vec<f64> = [1.0, 2.0, 4.0]
        .iter()
        .map(|d| solve_level_on(p, n, l, 1e-12, &base.with_step(base_step / d)?).map(|r| r.energy))
        .collect::<Result<_>>()?;
    Ok(((e[0] - e[1]) / (e[1] - e[2])).abs().log2())
}
