//! JSON input and output records.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::engine::{EpsilonReport, PeriodReport};
use crate::exact::{ExactError, GaussRat, Rat};
use crate::langlands::{
    ArchField, CuspidalFactor, LanglandsError, MultChar, StandardModule, SymplecticDecision,
};
use crate::orbits::{format_roots, ClassTag, OrbitDescriptor};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {source}")]
    Number {
        field: &'static str,
        source: ExactError,
    },
    #[error(transparent)]
    Langlands(#[from] LanglandsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldTag {
    R,
    C,
}

impl From<FieldTag> for ArchField {
    fn from(t: FieldTag) -> Self {
        match t {
            FieldTag::R => ArchField::Real,
            FieldTag::C => ArchField::Complex,
        }
    }
}

impl From<ArchField> for FieldTag {
    fn from(f: ArchField) -> Self {
        match f {
            ArchField::Real => FieldTag::R,
            ArchField::Complex => FieldTag::C,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FactorRecord {
    #[serde(rename = "chi")]
    Chi { k: i64, lambda: String },
    #[serde(rename = "D")]
    D { k: i64, lambda: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EtaRecord {
    pub k: i64,
    pub z: String,
}

/// The module file format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleRecord {
    pub field: FieldTag,
    pub factors: Vec<FactorRecord>,
    pub eta: EtaRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi_a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assume_generic: Option<bool>,
}

/// A validated module file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleInput {
    pub module: StandardModule,
    pub eta: MultChar,
    pub psi_a: Option<Rat>,
    pub assume_generic: Option<bool>,
}

fn gauss(field: &'static str, s: &str) -> Result<GaussRat, InputError> {
    s.parse()
        .map_err(|source| InputError::Number { field, source })
}

impl ModuleRecord {
    /// Validates the record. Factors are sorted into the canonical order, so
    /// any listing of the same factors gives the same module.
    pub fn validate(&self) -> Result<ModuleInput, InputError> {
        let field: ArchField = self.field.into();
        let factors = self
            .factors
            .iter()
            .map(|f| match f {
                FactorRecord::Chi { k, lambda } => Ok(CuspidalFactor::Char(MultChar::new(
                    field,
                    *k,
                    gauss("lambda", lambda)?,
                )?)),
                FactorRecord::D { k, lambda } => {
                    Ok(CuspidalFactor::disc(*k, gauss("lambda", lambda)?)?)
                }
            })
            .collect::<Result<Vec<_>, InputError>>()?;
        let module = StandardModule::normalized(field, factors)?;
        let eta = MultChar::new(field, self.eta.k, gauss("eta.z", &self.eta.z)?)?;
        let psi_a = self
            .psi_a
            .as_deref()
            .map(|s| {
                s.parse::<Rat>().map_err(|source| InputError::Number {
                    field: "psi_a",
                    source,
                })
            })
            .transpose()?;
        Ok(ModuleInput {
            module,
            eta,
            psi_a,
            assume_generic: self.assume_generic,
        })
    }

    pub fn from_module(m: &StandardModule, eta: &MultChar) -> Self {
        ModuleRecord {
            field: m.field().into(),
            factors: m
                .factors()
                .iter()
                .map(|f| match f {
                    CuspidalFactor::Char(c) => FactorRecord::Chi {
                        k: c.k(),
                        lambda: c.lambda().to_string(),
                    },
                    CuspidalFactor::Disc { k, lambda } => FactorRecord::D {
                        k: *k,
                        lambda: lambda.to_string(),
                    },
                })
                .collect(),
            eta: EtaRecord {
                k: eta.k(),
                z: eta.lambda().to_string(),
            },
            psi_a: None,
            assume_generic: None,
        }
    }
}

pub fn parse_module(text: &str) -> Result<ModuleInput, InputError> {
    let record: ModuleRecord = serde_json::from_str(text)?;
    record.validate()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymplecticRecord {
    pub symplectic: bool,
    pub dim: usize,
    pub pairing: Vec<[usize; 2]>,
}

impl SymplecticRecord {
    pub fn new(d: &SymplecticDecision, dim: usize) -> Self {
        SymplecticRecord {
            symplectic: d.symplectic,
            dim,
            pairing: d.pairing.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodRecord {
    pub necessary: bool,
    pub matching_orbits: usize,
    pub compatible_orbits: usize,
    pub witness_omega: Option<String>,
    pub dim_upper_bound: usize,
    pub verdict: String,
    pub pairing: Vec<[usize; 2]>,
}

impl From<&PeriodReport> for PeriodRecord {
    fn from(r: &PeriodReport) -> Self {
        PeriodRecord {
            necessary: r.necessary,
            matching_orbits: r.matching_orbits,
            compatible_orbits: r.compatible_orbits,
            witness_omega: r.witness.as_ref().map(|w| w.omega.to_string()),
            dim_upper_bound: r.dim_upper_bound,
            verdict: r.verdict.to_string(),
            pairing: r.pairing.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpsilonRecord {
    pub p: usize,
    pub q: usize,
    pub epsilon: i8,
}

impl From<&EpsilonReport> for EpsilonRecord {
    fn from(r: &EpsilonReport) -> Self {
        EpsilonRecord {
            p: r.p,
            q: r.q,
            epsilon: r.epsilon,
        }
    }
}

/// One row of an unclassified orbit table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitRow {
    pub omega: String,
    pub gamma: String,
    pub sigma: String,
}

impl From<&OrbitDescriptor> for OrbitRow {
    fn from(d: &OrbitDescriptor) -> Self {
        OrbitRow {
            omega: d.omega.to_string(),
            gamma: d.gamma.to_string(),
            sigma: d.sigma.to_string(),
        }
    }
}

/// One row of a classified orbit table. `n_omega` is `|N_omega|`, absent
/// for psi-vanishing orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifiedOrbitRow {
    pub omega: String,
    pub class: String,
    pub psi_sets: String,
    pub s_omega: Option<String>,
    pub n_omega: Option<usize>,
}

/// `ma=...;wh=...;um=...`, or `-` for a psi-vanishing orbit.
pub fn psi_sets_text(d: &OrbitDescriptor) -> String {
    if d.class == ClassTag::PsiVanishing {
        return "-".to_string();
    }
    format!(
        "ma={};wh={};um={}",
        format_roots(&d.psi_ma),
        format_roots(&d.psi_wh),
        format_roots(&d.psi_um)
    )
}

impl From<&OrbitDescriptor> for ClassifiedOrbitRow {
    fn from(d: &OrbitDescriptor) -> Self {
        ClassifiedOrbitRow {
            omega: d.omega.to_string(),
            class: d.class.to_string(),
            psi_sets: psi_sets_text(d),
            s_omega: d.s_omega.as_ref().map(|s| s.to_string()),
            n_omega: (d.class != ClassTag::PsiVanishing).then_some(d.conormal.len()),
        }
    }
}

pub const ORBIT_COLUMNS: [&str; 3] = ["omega", "gamma", "sigma"];
pub const CLASSIFIED_COLUMNS: [&str; 5] = ["omega", "class", "psi_sets", "s_omega", "n_omega"];

/// TSV rendering of one JSON value: `-` for null and empty lists, index
/// pairs as `i-j` joined by `;`.
pub fn tsv_cell(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "-".to_string(),
        Value::Array(items) => items
            .iter()
            .map(|x| match x {
                Value::Array(pair) => pair.iter().map(tsv_cell).collect::<Vec<_>>().join("-"),
                other => tsv_cell(other),
            })
            .collect::<Vec<_>>()
            .join(";"),
        other => other.to_string(),
    }
}

fn tsv_title(key: &str) -> &str {
    match key {
        "n_omega" => "|N_omega|",
        k => k,
    }
}

/// Header line plus one line per record, each newline-terminated.
pub fn tsv_table(columns: &[&str], rows: &[Value]) -> String {
    let mut out = String::new();
    let titles: Vec<&str> = columns.iter().map(|c| tsv_title(c)).collect();
    out.push_str(&titles.join("\t"));
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = columns.iter().map(|c| tsv_cell(&row[*c])).collect();
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    out
}

/// The classified orbit table as TSV.
pub fn classified_tsv(table: &[OrbitDescriptor]) -> String {
    let rows: Vec<Value> = table
        .iter()
        .map(|d| serde_json::to_value(ClassifiedOrbitRow::from(d)).expect("rows serialize"))
        .collect();
    tsv_table(&CLASSIFIED_COLUMNS, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{"field":"R","factors":[{"type":"D","k":3,"lambda":"1/2"},{"type":"D","k":3,"lambda":"1/2"}],"eta":{"k":1,"z":"1"}}"#;

    #[test]
    fn parse_sample() {
        let m = parse_module(SAMPLE).unwrap();
        assert_eq!(m.module.composition(), vec![2, 2]);
        assert_eq!(m.eta, MultChar::real(1, "1".parse().unwrap()).unwrap());
        assert_eq!(m.psi_a, None);
    }

    #[test]
    fn record_roundtrip() {
        let m = parse_module(SAMPLE).unwrap();
        let rec = ModuleRecord::from_module(&m.module, &m.eta);
        let text = serde_json::to_string(&rec).unwrap();
        assert_eq!(text, SAMPLE);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_module("{"), Err(InputError::Json(_))));
        let bad_k = SAMPLE.replace(r#""eta":{"k":1"#, r#""eta":{"k":2"#);
        assert!(matches!(
            parse_module(&bad_k),
            Err(InputError::Langlands(_))
        ));
        let bad_num = SAMPLE.replace("1/2", "1/0");
        assert!(matches!(
            parse_module(&bad_num),
            Err(InputError::Number { .. })
        ));
        let extra = SAMPLE.replace(r#""field":"R","#, r#""field":"R","x":1,"#);
        assert!(parse_module(&extra).is_err());
    }
}
