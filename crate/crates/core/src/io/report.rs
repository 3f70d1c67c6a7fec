//! Structured (JSON) rendering of predictions.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;

use crate::classifier::{ModelConfig, Prediction};
use crate::semantics::Label;
use crate::translation::Provenance;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeReport {
    pub source: String,
    pub target: String,
    pub provenance: Vec<Provenance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportReport {
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictionReport {
    pub outcome: String,
    pub default_accepted: bool,
    pub config: ModelConfig,
    pub new_case: String,
    pub extension: Vec<String>,
    pub labelling: BTreeMap<String, Label>,
    pub iterations: usize,
    pub spikes: Vec<String>,
    pub attacks: Vec<EdgeReport>,
    pub supports: Vec<SupportReport>,
}

impl PredictionReport {
    pub fn new<C: Display>(prediction: &Prediction<C>, config: &ModelConfig) -> Self {
        let af = &prediction.framework;
        let name = |i: crate::mining::ArgId| af.argument(i).id.clone();
        let mut extension: Vec<String> = prediction
            .grounded
            .extension
            .iter()
            .map(|&i| name(i))
            .collect();
        extension.sort();
        let labelling = prediction
            .grounded
            .labelling
            .iter()
            .enumerate()
            .map(|(i, l)| (af.arguments()[i].id.clone(), *l))
            .collect();
        let mut attacks: Vec<EdgeReport> = af
            .edges()
            .iter()
            .map(|(&(a, b), p)| EdgeReport {
                source: name(a),
                target: name(b),
                provenance: p.iter().copied().collect(),
            })
            .collect();
        attacks.sort_by(|x, y| (&x.source, &x.target).cmp(&(&y.source, &y.target)));
        let mut supports: Vec<SupportReport> = prediction
            .bipolar
            .supports()
            .iter()
            .map(|&(a, b)| SupportReport {
                source: name(a),
                target: name(b),
            })
            .collect();
        supports.sort_by(|x, y| (&x.source, &x.target).cmp(&(&y.source, &y.target)));
        let new_case = af
            .new_case()
            .map(|i| af.argument(i).characterisation.to_string())
            .unwrap_or_default();
        PredictionReport {
            outcome: prediction.outcome.to_string(),
            default_accepted: prediction.default_accepted,
            config: *config,
            new_case,
            extension,
            labelling,
            iterations: prediction.grounded.iterations,
            spikes: prediction.spikes.iter().cloned().collect(),
            attacks,
            supports,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out =
            serde_json::to_string_pretty(self).expect("report serialization is infallible");
        out.push('\n');
        out
    }
}
