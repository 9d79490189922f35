//! Spectrum rows and their text, CSV and JSON renderings.

use std::fmt::Write as _;

use morse_nu::units::{ev_to_cm1, Energy};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum EnergyUnit {
    #[default]
    Ev,
    Cm1,
}

impl EnergyUnit {
    fn suffix(self) -> &'static str {
        match self {
            EnergyUnit::Ev => "eV",
            EnergyUnit::Cm1 => "cm1",
        }
    }

    fn convert(self, e: Energy) -> f64 {
        match self {
            EnergyUnit::Ev => e,
            EnergyUnit::Cm1 => ev_to_cm1(e),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Ok,
    Unbound,
    ToleranceExceeded,
    SolverFailure,
}

impl RowStatus {
    fn label(self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::Unbound => "unbound",
            RowStatus::ToleranceExceeded => "tolerance_exceeded",
            RowStatus::SolverFailure => "solver_failure",
        }
    }
}

/// One (n, l) entry. Energies are full precision; rounding happens on output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumRow {
    pub n: u32,
    pub l: u32,
    pub e_nu: Option<Energy>,
    pub e_oracle: Option<Energy>,
    pub status: RowStatus,
}

impl SpectrumRow {
    /// E_nu − E_oracle when both are present.
    pub fn delta(&self) -> Option<Energy> {
        Some(self.e_nu? - self.e_oracle?)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Layout {
    pub format: Format,
    pub unit: EnergyUnit,
    /// Emit oracle and delta columns.
    pub with_oracle: bool,
    /// Decimal places for energies.
    pub decimals: usize,
}

fn fixed(v: Option<f64>, decimals: usize) -> String {
    v.map_or_else(String::new, |x| format!("{x:.decimals$}"))
}

fn sci(v: Option<f64>) -> String {
    v.map_or_else(String::new, |x| format!("{x:.3e}"))
}

pub fn render(rows: &[SpectrumRow], layout: &Layout) -> String {
    match layout.format {
        Format::Csv => render_csv(rows, layout),
        Format::Json => render_json(rows, layout),
        Format::Text => render_text(rows, layout),
    }
}

fn render_csv(rows: &[SpectrumRow], lay: &Layout) -> String {
    let u = lay.unit.suffix();
    let mut out = format!("n,l,E_nu_{u}");
    if lay.with_oracle {
        let _ = write!(out, ",E_oracle_{u},delta_{u}");
    }
    out.push('\n');
    for r in rows {
        let e_nu = r.e_nu.map(|e| lay.unit.convert(e));
        if r.status == RowStatus::Unbound {
            let _ = writeln!(out, "{},{},unbound", r.n, r.l);
            continue;
        }
        let _ = write!(out, "{},{},{}", r.n, r.l, fixed(e_nu, lay.decimals));
        if lay.with_oracle {
            let e_or = r.e_oracle.map(|e| lay.unit.convert(e));
            let d = r.delta().map(|e| lay.unit.convert(e));
            let _ = write!(out, ",{},{}", fixed(e_or, lay.decimals), sci(d));
        }
        out.push('\n');
    }
    out
}

fn round_to(x: f64, decimals: usize) -> f64 {
    // through the decimal string so the JSON number matches the text output
    format!("{x:.decimals$}")
        .parse()
        .expect("formatted float parses")
}

#[derive(Serialize)]
struct JsonRow {
    n: u32,
    l: u32,
    unit: &'static str,
    e_nu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e_oracle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<f64>,
    status: RowStatus,
}

fn render_json(rows: &[SpectrumRow], lay: &Layout) -> String {
    let items: Vec<JsonRow> = rows
        .iter()
        .map(|r| JsonRow {
            n: r.n,
            l: r.l,
            unit: lay.unit.suffix(),
            e_nu: r.e_nu.map(|e| round_to(lay.unit.convert(e), lay.decimals)),
            e_oracle: if lay.with_oracle {
                r.e_oracle
                    .map(|e| round_to(lay.unit.convert(e), lay.decimals))
            } else {
                None
            },
            delta: if lay.with_oracle {
                r.delta().map(|e| lay.unit.convert(e))
            } else {
                None
            },
            status: r.status,
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&items).expect("rows serialize");
    s.push('\n');
    s
}

fn render_text(rows: &[SpectrumRow], lay: &Layout) -> String {
    let u = lay.unit.suffix();
    let w = 14;
    let mut out = format!("{:>3} {:>3} {:>w$}", "n", "l", format!("E_NU ({u})"));
    if lay.with_oracle {
        let _ = write!(out, " {:>w$} {:>11}", format!("E_oracle ({u})"), "delta");
    }
    let _ = writeln!(out, "  status");
    for r in rows {
        let e_nu = if r.status == RowStatus::Unbound {
            "unbound".to_string()
        } else {
            fixed(r.e_nu.map(|e| lay.unit.convert(e)), lay.decimals)
        };
        let _ = write!(out, "{:>3} {:>3} {e_nu:>w$}", r.n, r.l);
        if lay.with_oracle {
            let e_or = fixed(r.e_oracle.map(|e| lay.unit.convert(e)), lay.decimals);
            let d = sci(r.delta().map(|e| lay.unit.convert(e)));
            let _ = write!(out, " {e_or:>w$} {d:>11}");
        }
        let _ = writeln!(out, "  {}", r.status.label());
    }
    out
}
