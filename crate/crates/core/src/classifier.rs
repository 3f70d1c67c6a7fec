//! The prediction pipeline, spike detection and evaluation.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::mining::{mine_framework, ArgId, BipolarFramework, Role};
use crate::model::{Casebase, Characterisation, Outcome};
use crate::semantics::{grounded_extension, GroundedResult};
use crate::translation::{translate, AttackFramework};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Attacks only.
    Aacbr,
    /// Attacks and supports.
    #[default]
    Saacbr,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "aacbr" => Ok(Mode::Aacbr),
            "saacbr" => Ok(Mode::Saacbr),
            other => Err(format!("unknown mode `{other}` (expected aacbr or saacbr)")),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Aacbr => "aacbr",
            Mode::Saacbr => "saacbr",
        })
    }
}

/// Model options. The default argument itself lives on the [`Casebase`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ModelConfig {
    pub mode: Mode,
    pub secondary_attacks: bool,
}

impl ModelConfig {
    pub fn aacbr() -> Self {
        ModelConfig {
            mode: Mode::Aacbr,
            secondary_attacks: false,
        }
    }

    pub fn saacbr() -> Self {
        ModelConfig {
            mode: Mode::Saacbr,
            secondary_attacks: false,
        }
    }

    pub fn with_secondary_attacks(mut self) -> Self {
        self.secondary_attacks = true;
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.secondary_attacks && self.mode != Mode::Saacbr {
            return Err(Error::SecondaryWithoutSupports);
        }
        Ok(())
    }
}

/// A classification together with everything needed to explain it.
#[derive(Debug, Clone)]
pub struct Prediction<C> {
    pub outcome: Outcome,
    pub default_accepted: bool,
    pub bipolar: BipolarFramework<C>,
    pub framework: AttackFramework<C>,
    pub grounded: GroundedResult,
    /// Ids of past cases with no path to the default argument.
    pub spikes: BTreeSet<String>,
}

/// Classifies `x_new`: the default outcome iff the default argument is in the
/// grounded extension of the translated framework.
pub fn predict<C: Characterisation>(
    casebase: &Casebase<C>,
    config: &ModelConfig,
    x_new: &C,
) -> Result<Prediction<C>, Error> {
    config.validate()?;
    let bipolar = mine_framework(casebase, x_new, config);
    let framework = translate(&bipolar, config);
    let grounded = grounded_extension(&framework.graph());
    let default_accepted = grounded.contains(framework.default_argument());
    let outcomes = casebase.outcomes();
    let outcome = if default_accepted {
        outcomes.default_outcome().clone()
    } else {
        outcomes.complement_outcome().clone()
    };
    let spikes = find_spikes(&bipolar);
    Ok(Prediction {
        outcome,
        default_accepted,
        bipolar,
        framework,
        grounded,
        spikes,
    })
}

/// Past cases with no directed path to the default over attacks and supports.
pub fn find_spikes<C>(baf: &BipolarFramework<C>) -> BTreeSet<String> {
    let mut predecessors: Vec<Vec<ArgId>> = vec![Vec::new(); baf.len()];
    for &(a, b) in baf.attacks().keys().chain(baf.supports()) {
        predecessors[b.0].push(a);
    }
    let mut reaches = vec![false; baf.len()];
    let start = baf.default_argument();
    reaches[start.0] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(node) = queue.pop_front() {
        for &p in &predecessors[node.0] {
            if !reaches[p.0] {
                reaches[p.0] = true;
                queue.push_back(p);
            }
        }
    }
    baf.arguments()
        .iter()
        .zip(reaches)
        .filter(|(arg, reached)| arg.role == Role::Past && !reached)
        .map(|(arg, _)| arg.id.clone())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalRecord {
    pub id: String,
    pub actual: Outcome,
    pub predicted: Outcome,
    /// Spikes in the framework mined for this case.
    pub spikes: usize,
}

/// Confusion counts, with the default outcome as the reference class.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Confusion {
    pub default_as_default: usize,
    pub default_as_complement: usize,
    pub complement_as_default: usize,
    pub complement_as_complement: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub records: Vec<EvalRecord>,
    pub correct: usize,
    pub total: usize,
    pub accuracy: f64,
    pub confusion: Confusion,
    pub total_spikes: usize,
}

impl EvalReport {
    fn from_records<C: Characterisation>(casebase: &Casebase<C>, records: Vec<EvalRecord>) -> Self {
        let default = casebase.outcomes().default_outcome();
        let mut confusion = Confusion::default();
        for r in &records {
            let slot = match (r.actual == *default, r.predicted == *default) {
                (true, true) => &mut confusion.default_as_default,
                (true, false) => &mut confusion.default_as_complement,
                (false, true) => &mut confusion.complement_as_default,
                (false, false) => &mut confusion.complement_as_complement,
            };
            *slot += 1;
        }
        let correct = records.iter().filter(|r| r.actual == r.predicted).count();
        let total = records.len();
        EvalReport {
            correct,
            total,
            accuracy: if total == 0 {
                0.0
            } else {
                correct as f64 / total as f64
            },
            confusion,
            total_spikes: records.iter().map(|r| r.spikes).sum(),
            records,
        }
    }
}

fn evaluate_fold<C: Characterisation>(
    train: &Casebase<C>,
    config: &ModelConfig,
    held_out: &crate::model::Case<C>,
) -> Result<EvalRecord, Error> {
    let p = predict(train, config, &held_out.characterisation)?;
    Ok(EvalRecord {
        id: held_out.id.clone(),
        actual: held_out.outcome.clone(),
        predicted: p.outcome,
        spikes: p.spikes.len(),
    })
}

/// Leave-one-out: each case is predicted from all the others.
pub fn evaluate_loo<C: Characterisation>(
    casebase: &Casebase<C>,
    config: &ModelConfig,
) -> Result<EvalReport, Error> {
    config.validate()?;
    if casebase.len() < 2 {
        return Err(Error::CasebaseTooSmall {
            required: 2,
            actual: casebase.len(),
        });
    }
    let records = casebase
        .cases()
        .iter()
        .enumerate()
        .map(|(i, case)| evaluate_fold(&casebase.without(i), config, case))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EvalReport::from_records(casebase, records))
}

/// Seeded random split: `ratio` of the cases train, the rest are predicted.
pub fn evaluate_split<C: Characterisation>(
    casebase: &Casebase<C>,
    config: &ModelConfig,
    ratio: f64,
    seed: u64,
) -> Result<EvalReport, Error> {
    config.validate()?;
    let n = casebase.len();
    if n < 2 {
        return Err(Error::CasebaseTooSmall {
            required: 2,
            actual: n,
        });
    }
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(Error::InvalidSplit(ratio));
    }
    let train_len = (ratio * n as f64).round() as usize;
    if train_len == 0 || train_len >= n {
        return Err(Error::InvalidSplit(ratio));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut in_train = vec![false; n];
    for &i in &order[..train_len] {
        in_train[i] = true;
    }
    let train = casebase.retain(|i, _| in_train[i]);
    let records = order[train_len..]
        .iter()
        .map(|&i| evaluate_fold(&train, config, &casebase.cases()[i]))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EvalReport::from_records(casebase, records))
}
