//! Datum files and built-in data.

use std::path::Path;

use cmtate::builtin;
use cmtate::{group_from_generators, CmGaloisDatum, FiniteGroup};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Generators { degree: usize, generators: Vec<Vec<usize>> },
    Cayley { cayley: Vec<Vec<usize>> },
}

/// `{"group": <group>, "iota": id, "decomposition": [ids]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumSpec {
    pub group: GroupSpec,
    pub iota: usize,
    #[serde(default)]
    pub decomposition: Vec<usize>,
}

impl DatumSpec {
    pub fn build(&self) -> Result<CmGaloisDatum, CliError> {
        let group = match &self.group {
            GroupSpec::Generators { degree, generators } => group_from_generators(*degree, generators),
            GroupSpec::Cayley { cayley } => FiniteGroup::from_cayley(cayley),
        }?;
        Ok(CmGaloisDatum::new(&group, self.iota, &self.decomposition)?)
    }
}

pub fn parse_datum(text: &str) -> Result<CmGaloisDatum, CliError> {
    let spec: DatumSpec = serde_json::from_str(text).map_err(|e| CliError::Malformed(e.to_string()))?;
    spec.build()
}

pub fn read_datum(path: &Path) -> Result<CmGaloisDatum, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_datum(&text)
}

pub fn builtin_datum(name: &str) -> Result<CmGaloisDatum, CliError> {
    builtin::by_name(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown built-in datum {name:?}; expected one of {}",
            builtin::BUILTIN_NAMES.join(", ")
        ))
    })
}

/// First 16 hex digits of SHA-256 over the Cayley table, `ι` and `D`.
pub fn datum_hash(datum: &CmGaloisDatum) -> String {
    let group = datum.group();
    let mut text = format!("order={};identity={};table=", group.order(), group.identity());
    for row in group.cayley_rows() {
        let row: Vec<String> = row.iter().map(usize::to_string).collect();
        text.push_str(&row.join(","));
        text.push(';');
    }
    let d: Vec<String> = datum.decomposition().members().iter().map(usize::to_string).collect();
    text.push_str(&format!("iota={};D={}", datum.iota(), d.join(",")));
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}
