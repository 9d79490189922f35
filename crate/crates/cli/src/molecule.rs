//! JSON molecule files.

use std::path::Path;

use morse_nu::units::cm1_to_ev;
use morse_nu::MoleculeParams;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoleculeFile {
    pub name: String,
    #[serde(rename = "D_cm1")]
    pub d_cm1: f64,
    pub a_inv_angstrom: f64,
    pub r0_angstrom: f64,
    pub mu_amu: f64,
}

impl MoleculeFile {
    pub fn from_json(text: &str) -> Result<Self, String> {
        let file: MoleculeFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
        file.check()?;
        Ok(file)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text).map_err(|message| CliError::Parse {
            path: path.to_path_buf(),
            message,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain struct serializes")
    }

    fn check(&self) -> Result<(), String> {
        for (key, v) in [
            ("D_cm1", self.d_cm1),
            ("a_inv_angstrom", self.a_inv_angstrom),
            ("r0_angstrom", self.r0_angstrom),
            ("mu_amu", self.mu_amu),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(format!("{key} must be a finite positive number, got {v}"));
            }
        }
        Ok(())
    }

    pub fn params(&self) -> MoleculeParams {
        MoleculeParams::new(
            self.name.clone(),
            cm1_to_ev(self.d_cm1),
            self.a_inv_angstrom,
            self.r0_angstrom,
            self.mu_amu,
        )
        .expect("fields were checked on load")
    }
}
