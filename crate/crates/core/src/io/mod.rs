//! File formats: casebase ingestion and serialization, graph export, and
//! structured prediction reports.

mod casebase;
mod dot;
mod report;

pub use casebase::{
    load_casebase, parse_csv, parse_json, to_csv, CaseEntry, CasebaseDocument, DefaultEntry,
    Format, LoadError, LoadOptions, Loaded, DEFAULT_ID, ID_COLUMN, LABEL_COLUMN,
};
pub use dot::{export_bipolar, export_graph, export_translated, Stage};
pub use report::{EdgeReport, PredictionReport, SupportReport};
