//! The three subcommands, as functions from parsed inputs to (output, exit code).

use std::fmt::Write as _;

use morse_nu::oracle::{self, DEFAULT_TOL};
use morse_nu::spectrum::{self, radial_wavefunction};
use morse_nu::MoleculeParams;
use rayon::prelude::*;

use crate::error::{exit, CliError};
use crate::report::{render, Format, Layout, RowStatus, SpectrumRow};

/// Analytic rows for every (n, l), n outer and l inner.
pub fn spectrum_rows(p: &MoleculeParams, ns: &[u32], ls: &[u32]) -> Vec<SpectrumRow> {
    grid(ns, ls)
        .map(|(n, l)| match spectrum::energy_level(p, n, l) {
            Ok(level) => SpectrumRow {
                n,
                l,
                e_nu: Some(level.energy),
                e_oracle: None,
                status: RowStatus::Ok,
            },
            Err(_) => SpectrumRow {
                n,
                l,
                e_nu: None,
                e_oracle: None,
                status: RowStatus::Unbound,
            },
        })
        .collect()
}

fn grid<'a>(ns: &'a [u32], ls: &'a [u32]) -> impl Iterator<Item = (u32, u32)> + 'a {
    ns.iter()
        .flat_map(move |&n| ls.iter().map(move |&l| (n, l)))
}

fn check_lists(ns: &[u32], ls: &[u32]) -> Result<(), CliError> {
    if ns.is_empty() {
        return Err(CliError::Usage("--n needs at least one value".into()));
    }
    if ls.is_empty() {
        return Err(CliError::Usage("--l needs at least one value".into()));
    }
    Ok(())
}

pub fn cmd_spectrum(
    p: &MoleculeParams,
    ns: &[u32],
    ls: &[u32],
    layout: &Layout,
) -> Result<(String, u8), CliError> {
    check_lists(ns, ls)?;
    let rows = spectrum_rows(p, ns, ls);
    let code = if rows.iter().any(|r| r.status == RowStatus::Unbound) {
        exit::SOLVER
    } else {
        exit::SUCCESS
    };
    Ok((render(&rows, layout), code))
}

/// Analytic and oracle energies side by side. Oracle solves run in parallel;
/// rows come back in input order.
pub fn validation_rows(
    p: &MoleculeParams,
    ns: &[u32],
    ls: &[u32],
    tol_ev: f64,
) -> Vec<SpectrumRow> {
    let pairs: Vec<(u32, u32)> = grid(ns, ls).collect();
    pairs
        .par_iter()
        .map(|&(n, l)| {
            let e_nu = spectrum::energy_level(p, n, l).ok().map(|lvl| lvl.energy);
            let e_oracle = oracle::solve_level(p, n, l, DEFAULT_TOL)
                .ok()
                .filter(|r| r.converged)
                .map(|r| r.energy);
            let status = match (e_nu, e_oracle) {
                (None, _) => RowStatus::Unbound,
                (_, None) => RowStatus::SolverFailure,
                (Some(a), Some(b)) if (a - b).abs() <= tol_ev => RowStatus::Ok,
                _ => RowStatus::ToleranceExceeded,
            };
            SpectrumRow {
                n,
                l,
                e_nu,
                e_oracle,
                status,
            }
        })
        .collect()
}

pub fn cmd_validate(
    p: &MoleculeParams,
    ns: &[u32],
    ls: &[u32],
    tol_ev: f64,
    layout: &Layout,
) -> Result<(String, u8), CliError> {
    check_lists(ns, ls)?;
    if !(tol_ev > 0.0) {
        return Err(CliError::Usage(format!(
            "--tol-ev must be positive, got {tol_ev}"
        )));
    }
    let rows = validation_rows(p, ns, ls, tol_ev);
    let failed = |s| rows.iter().any(|r| r.status == s);
    let code = if failed(RowStatus::SolverFailure) || failed(RowStatus::Unbound) {
        exit::SOLVER
    } else if failed(RowStatus::ToleranceExceeded) {
        exit::TOLERANCE
    } else {
        exit::SUCCESS
    };
    Ok((
        render(
            &rows,
            &Layout {
                with_oracle: true,
                ..*layout
            },
        ),
        code,
    ))
}

pub fn cmd_wavefunction(
    p: &MoleculeParams,
    n: u32,
    l: u32,
    r_min: f64,
    r_max: f64,
    samples: usize,
) -> Result<String, CliError> {
    if !(r_min >= 0.0) || !(r_max > r_min) {
        return Err(CliError::Usage(format!(
            "need 0 <= r-min < r-max, got {r_min}, {r_max}"
        )));
    }
    if samples < 2 {
        return Err(CliError::Usage(format!(
            "--samples must be at least 2, got {samples}"
        )));
    }
    let wf = radial_wavefunction(p, n, l)?;
    let mut out = String::new();
    let _ = writeln!(out, "# molecule={} n={} l={}", p.name, n, l);
    let _ = writeln!(
        out,
        "# energy_eV={:.10} eps1={:.10} eps3={:.10} ln_norm={:.10} norm_method=quadrature",
        wf.level.energy, wf.level.eps1, wf.dimensionless.eps3, wf.ln_norm
    );
    let _ = writeln!(out, "r_angstrom,R_nl");
    let h = (r_max - r_min) / (samples - 1) as f64;
    for i in 0..samples {
        let r = if i + 1 == samples {
            r_max
        } else {
            r_min + i as f64 * h
        };
        let _ = writeln!(out, "{r:.8},{:.12e}", wf.eval(r));
    }
    Ok(out)
}

/// Default layout for a format (4 decimals for spectra, 6 for validation).
pub fn layout(format: Format, unit: crate::report::EnergyUnit, validation: bool) -> Layout {
    Layout {
        format,
        unit,
        with_oracle: validation,
        decimals: if validation { 6 } else { 4 },
    }
}
