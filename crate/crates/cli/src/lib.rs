//! Command-line front end: molecule files in, spectrum tables, oracle
//! validation reports and sampled wavefunctions out.

// Guards written as `!(x > 0.0)` deliberately reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod error;
pub mod molecule;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use error::{exit, CliError};
pub use molecule::MoleculeFile;
use report::{EnergyUnit, Format};

#[derive(Debug, Parser)]
#[command(
    name = "morse-nu",
    version,
    about = "Rotating Morse oscillator spectra (Pekeris + Nikiforov-Uvarov)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// A comma-separated list of quantum numbers, e.g. `0,5,7`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumNumbers(pub Vec<u32>);

fn parse_list(s: &str) -> Result<QuantumNumbers, String> {
    let items: Vec<&str> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect();
    if items.is_empty() {
        return Err("list must contain at least one nonnegative integer".into());
    }
    items
        .iter()
        .map(|t| t.parse::<u32>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(QuantumNumbers)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analytic energies for every (n, l) pair.
    Spectrum {
        #[arg(long)]
        molecule: PathBuf,
        /// Comma-separated vibrational quantum numbers.
        #[arg(long = "n", value_parser = parse_list)]
        n_list: QuantumNumbers,
        /// Comma-separated rotational quantum numbers.
        #[arg(long = "l", value_parser = parse_list)]
        l_list: QuantumNumbers,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value = "ev")]
        unit: EnergyUnit,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare analytic energies with the Numerov oracle.
    Validate {
        #[arg(long)]
        molecule: PathBuf,
        #[arg(long = "n", value_parser = parse_list)]
        n_list: QuantumNumbers,
        #[arg(long = "l", value_parser = parse_list)]
        l_list: QuantumNumbers,
        #[arg(long = "tol-ev", default_value_t = 0.01)]
        tol_ev: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value = "ev")]
        unit: EnergyUnit,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample the normalized radial wavefunction R_nl(r).
    Wavefunction {
        #[arg(long)]
        molecule: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long = "r-min")]
        r_min: f64,
        #[arg(long = "r-max")]
        r_max: f64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Runs a parsed command, writing the table to `stdout` (or its --output file).
pub fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let (text, code, output) = match cli.command {
        Command::Spectrum {
            molecule,
            n_list,
            l_list,
            format,
            unit,
            output,
        } => {
            let p = MoleculeFile::load(&molecule)?.params();
            let lay = commands::layout(format, unit, false);
            let (text, code) = commands::cmd_spectrum(&p, &n_list.0, &l_list.0, &lay)?;
            (text, code, output)
        }
        Command::Validate {
            molecule,
            n_list,
            l_list,
            tol_ev,
            format,
            unit,
            output,
        } => {
            let p = MoleculeFile::load(&molecule)?.params();
            let lay = commands::layout(format, unit, true);
            let (text, code) = commands::cmd_validate(&p, &n_list.0, &l_list.0, tol_ev, &lay)?;
            (text, code, output)
        }
        Command::Wavefunction {
            molecule,
            n,
            l,
            r_min,
            r_max,
            samples,
            output,
        } => {
            let p = MoleculeFile::load(&molecule)?.params();
            (
                commands::cmd_wavefunction(&p, n, l, r_min, r_max, samples)?,
                exit::SUCCESS,
                output,
            )
        }
    };
    match output {
        Some(path) => {
            std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?
        }
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(code)
}
