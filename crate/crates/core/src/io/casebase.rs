//! Casebase files.
//!
//! Two encodings are accepted:
//!
//! * JSON: `{"default": {"id", "features", "outcome"}, "complement"?, "features"?, "cases": [{"id", "features", "outcome"}]}`
//! * CSV: a header row of feature columns plus a `label` column (and an
//!   optional `id` column), with `0`/`1` cells. Rows without an `id` get
//!   `R1`, `R2`, … by position. The default argument comes from [`LoadOptions`].

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::ModelError;
use crate::model::{Case, Casebase, DedupReport, FeatureSet, Outcome};

pub const LABEL_COLUMN: &str = "label";
pub const ID_COLUMN: &str = "id";
pub const DEFAULT_ID: &str = "default";

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot infer format of {}; use a .json or .csv extension or pass the format explicitly", .0.display())]
    UnknownFormat(PathBuf),
    #[error("malformed JSON casebase: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed CSV casebase: {0}")]
    Csv(#[from] csv::Error),
    #[error("CSV header has no `{LABEL_COLUMN}` column")]
    MissingLabelColumn,
    #[error("CSV input has no header row")]
    MissingHeader,
    #[error("column `{0}` appears more than once")]
    DuplicateColumn(String),
    #[error("feature `{0}` cannot be written as a CSV column (reserved name)")]
    ReservedColumn(String),
    #[error("empty feature name")]
    EmptyFeatureName,
    #[error("row {row}: expected {expected} cells, found {found}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("row {row}, column `{column}`: expected 0 or 1, found `{value}`")]
    BadCell {
        row: usize,
        column: String,
        value: String,
    },
    #[error("row {row}: empty {what}")]
    EmptyCell { row: usize, what: &'static str },
    #[error("no default outcome given")]
    MissingDefaultOutcome,
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "csv" => Some(Format::Csv),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

/// Settings for the default argument. For JSON input, `Some` values override
/// the file; for CSV input they are the only source.
#[derive(Debug, Clone, Default)]
pub struct LoadOptions {
    pub default_id: Option<String>,
    pub default_outcome: Option<Outcome>,
    pub default_features: Option<FeatureSet>,
    pub complement: Option<Outcome>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loaded {
    pub casebase: Casebase<FeatureSet>,
    /// Every feature named in the file, including all-zero CSV columns.
    pub features: BTreeSet<String>,
    pub report: DedupReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefaultEntry {
    #[serde(default = "default_id")]
    pub id: String,
    #[serde(default)]
    pub features: Vec<String>,
    pub outcome: String,
}

fn default_id() -> String {
    DEFAULT_ID.to_owned()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseEntry {
    pub id: String,
    pub features: Vec<String>,
    pub outcome: String,
}

/// The structured (JSON) casebase file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CasebaseDocument {
    pub default: DefaultEntry,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement: Option<String>,
    /// Optional feature universe; features used by cases are always included.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub features: Vec<String>,
    pub cases: Vec<CaseEntry>,
}

fn feature_set(names: &[String]) -> Result<FeatureSet, LoadError> {
    if names.iter().any(|n| n.is_empty()) {
        return Err(LoadError::EmptyFeatureName);
    }
    Ok(names.iter().cloned().collect())
}

impl CasebaseDocument {
    pub fn parse(text: &str) -> Result<Self, LoadError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn into_loaded(self, options: &LoadOptions) -> Result<Loaded, LoadError> {
        let mut universe: BTreeSet<String> = BTreeSet::new();
        if self.features.iter().any(String::is_empty) {
            return Err(LoadError::EmptyFeatureName);
        }
        universe.extend(self.features.iter().cloned());

        let default = Case::new(
            options.default_id.clone().unwrap_or(self.default.id),
            match &options.default_features {
                Some(f) => f.clone(),
                None => feature_set(&self.default.features)?,
            },
            options
                .default_outcome
                .clone()
                .unwrap_or_else(|| Outcome::new(self.default.outcome)),
        );
        universe.extend(default.characterisation.iter().map(str::to_owned));

        let mut cases = Vec::with_capacity(self.cases.len());
        for entry in self.cases {
            let features = feature_set(&entry.features)?;
            universe.extend(features.iter().map(str::to_owned));
            cases.push(Case::new(entry.id, features, Outcome::new(entry.outcome)));
        }
        let complement = options
            .complement
            .clone()
            .or_else(|| self.complement.map(Outcome::new));
        let (casebase, report) = Casebase::new(cases, default, complement)?;
        Ok(Loaded {
            casebase,
            features: universe,
            report,
        })
    }

    /// Structured form of a casebase. The complement outcome is always
    /// written so that reloading does not depend on inference.
    pub fn from_casebase(casebase: &Casebase<FeatureSet>, features: &BTreeSet<String>) -> Self {
        let names = |fs: &FeatureSet| fs.iter().map(str::to_owned).collect::<Vec<_>>();
        let default = casebase.default_case();
        CasebaseDocument {
            default: DefaultEntry {
                id: default.id.clone(),
                features: names(&default.characterisation),
                outcome: default.outcome.to_string(),
            },
            complement: Some(casebase.outcomes().complement_outcome().to_string()),
            features: features.iter().cloned().collect(),
            cases: casebase
                .cases()
                .iter()
                .map(|c| CaseEntry {
                    id: c.id.clone(),
                    features: names(&c.characterisation),
                    outcome: c.outcome.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out =
            serde_json::to_string_pretty(self).expect("document serialization is infallible");
        out.push('\n');
        out
    }
}

/// Parses a JSON casebase.
pub fn parse_json(text: &str, options: &LoadOptions) -> Result<Loaded, LoadError> {
    CasebaseDocument::parse(text)?.into_loaded(options)
}

/// Parses a CSV casebase.
pub fn parse_csv(data: &[u8], options: &LoadOptions) -> Result<Loaded, LoadError> {
    let default_outcome = options
        .default_outcome
        .clone()
        .ok_or(LoadError::MissingDefaultOutcome)?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(data);
    let mut records = reader.records();
    let header = records.next().ok_or(LoadError::MissingHeader)??;

    let mut seen = BTreeSet::new();
    let mut label_col = None;
    let mut id_col = None;
    let mut feature_cols = Vec::new();
    for (i, name) in header.iter().enumerate() {
        if !seen.insert(name) {
            return Err(LoadError::DuplicateColumn(name.to_owned()));
        }
        match name {
            LABEL_COLUMN => label_col = Some(i),
            ID_COLUMN => id_col = Some(i),
            "" => return Err(LoadError::EmptyFeatureName),
            _ => feature_cols.push((i, name.to_owned())),
        }
    }
    let label_col = label_col.ok_or(LoadError::MissingLabelColumn)?;

    let mut cases = Vec::new();
    for (k, record) in records.enumerate() {
        let record = record?;
        let row = k + 1;
        if record.len() == 1 && record.get(0) == Some("") {
            continue;
        }
        if record.len() != header.len() {
            return Err(LoadError::RowLength {
                row,
                expected: header.len(),
                found: record.len(),
            });
        }
        let mut features = Vec::new();
        for (col, name) in &feature_cols {
            match &record[*col] {
                "1" => features.push(name.as_str()),
                "0" => {}
                other => {
                    return Err(LoadError::BadCell {
                        row,
                        column: name.clone(),
                        value: other.to_owned(),
                    })
                }
            }
        }
        let label = &record[label_col];
        if label.is_empty() {
            return Err(LoadError::EmptyCell { row, what: "label" });
        }
        let id = match id_col {
            Some(c) if record[c].is_empty() => {
                return Err(LoadError::EmptyCell { row, what: "id" })
            }
            Some(c) => record[c].to_owned(),
            None => format!("R{row}"),
        };
        cases.push(Case::new(
            id,
            features.into_iter().collect::<FeatureSet>(),
            label,
        ));
    }

    let default_features = options.default_features.clone().unwrap_or_default();
    let mut universe: BTreeSet<String> = feature_cols.into_iter().map(|(_, n)| n).collect();
    universe.extend(default_features.iter().map(str::to_owned));
    let default = Case::new(
        options.default_id.clone().unwrap_or_else(default_id),
        default_features,
        default_outcome,
    );
    let (casebase, report) = Casebase::new(cases, default, options.complement.clone())?;
    Ok(Loaded {
        casebase,
        features: universe,
        report,
    })
}

/// Tabular form of a casebase: `id`, one column per feature, `label`.
pub fn to_csv(
    casebase: &Casebase<FeatureSet>,
    features: &BTreeSet<String>,
) -> Result<String, LoadError> {
    let mut universe = features.clone();
    for case in casebase.cases() {
        universe.extend(case.characterisation.iter().map(str::to_owned));
    }
    if let Some(bad) = universe
        .iter()
        .find(|f| *f == LABEL_COLUMN || *f == ID_COLUMN)
    {
        return Err(LoadError::ReservedColumn(bad.clone()));
    }
    let mut writer = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once(ID_COLUMN)
        .chain(universe.iter().map(String::as_str))
        .chain(std::iter::once(LABEL_COLUMN));
    writer.write_record(header)?;
    for case in casebase.cases() {
        let cells = std::iter::once(case.id.as_str())
            .chain(universe.iter().map(|f| {
                if case.characterisation.contains(f) {
                    "1"
                } else {
                    "0"
                }
            }))
            .chain(std::iter::once(case.outcome.as_str()));
        writer.write_record(cells)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| LoadError::Csv(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn load_casebase(
    path: &Path,
    format: Option<Format>,
    options: &LoadOptions,
) -> Result<Loaded, LoadError> {
    let format = format
        .or_else(|| Format::from_path(path))
        .ok_or_else(|| LoadError::UnknownFormat(path.to_owned()))?;
    let bytes = fs::read(path).map_err(|source| LoadError::Io {
        path: path.to_owned(),
        source,
    })?;
    match format {
        Format::Csv => parse_csv(&bytes, options),
        Format::Json => {
            let text = String::from_utf8(bytes).map_err(|e| LoadError::Io {
                path: path.to_owned(),
                source: std::io::Error::new(std::io::ErrorKind::InvalidData, e),
            })?;
            parse_json(&text, options)
        }
    }
}
