//! Domain types: outcomes, characterisations and their exceptionality order,
//! cases, and validated casebases.
//!
//! The exceptionality order and the irrelevance relation are abstracted
//! behind [`Characterisation`]. [`FeatureSet`] is the reference
//! instantiation: a finite set of feature names ordered by `⊇`, where a past
//! case is irrelevant to a new one when the new case does not contain all of
//! its features.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ModelError;

/// Id given to the new (unlabelled) case inside mined frameworks.
pub const NEW_CASE_ID: &str = "N";

/// Result of comparing two characterisations under the exceptionality order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderRelation {
    MoreExceptional,
    LessExceptional,
    Equal,
    Incomparable,
}

impl OrderRelation {
    pub fn reverse(self) -> Self {
        match self {
            OrderRelation::MoreExceptional => OrderRelation::LessExceptional,
            OrderRelation::LessExceptional => OrderRelation::MoreExceptional,
            other => other,
        }
    }
}

/// A value that can be compared for exceptionality and tested for irrelevance.
///
/// `compare` must induce a partial order: `Equal` exactly on equal values,
/// and `compare(a, b) == compare(b, a).reverse()`.
pub trait Characterisation: Clone + Eq + Ord + fmt::Debug + Send + Sync {
    fn compare(&self, other: &Self) -> OrderRelation;

    /// Whether a past case characterised by `past` is irrelevant to a new case
    /// characterised by `self`.
    fn is_irrelevant(&self, past: &Self) -> bool;

    /// `self ≻ other`
    fn more_exceptional_than(&self, other: &Self) -> bool {
        self.compare(other) == OrderRelation::MoreExceptional
    }
}

/// Free-function form of [`Characterisation::compare`].
pub fn compare<C: Characterisation>(a: &C, b: &C) -> OrderRelation {
    a.compare(b)
}

/// Free-function form of [`Characterisation::is_irrelevant`].
pub fn is_irrelevant<C: Characterisation>(x_new: &C, x_past: &C) -> bool {
    x_new.is_irrelevant(x_past)
}

/// A finite set of opaque feature names, ordered by superset.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FeatureSet(BTreeSet<String>);

impl FeatureSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses a comma-separated feature list such as `"A,B, C"`.
    ///
    /// Whitespace around names is trimmed and empty entries are skipped, so
    /// `""` is the empty set.
    pub fn parse_list(text: &str) -> Self {
        text.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::to_owned)
            .collect()
    }

    pub fn contains(&self, feature: &str) -> bool {
        self.0.contains(feature)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        self.0.is_superset(&other.0)
    }
}

impl<S: Into<String>> FromIterator<S> for FeatureSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        FeatureSet(iter.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for FeatureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, feature) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(feature)?;
        }
        f.write_str("}")
    }
}

impl Characterisation for FeatureSet {
    fn compare(&self, other: &Self) -> OrderRelation {
        match (self.is_superset(other), other.is_superset(self)) {
            (true, true) => OrderRelation::Equal,
            (true, false) => OrderRelation::MoreExceptional,
            (false, true) => OrderRelation::LessExceptional,
            (false, false) => OrderRelation::Incomparable,
        }
    }

    fn is_irrelevant(&self, past: &Self) -> bool {
        !self.is_superset(past)
    }
}

/// An outcome label token.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Outcome(String);

impl Outcome {
    pub fn new(token: impl Into<String>) -> Self {
        Outcome(token.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Outcome {
    fn from(s: &str) -> Self {
        Outcome::new(s)
    }
}

/// The two outcomes of a run: the default outcome and its complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeSpace {
    default: Outcome,
    complement: Outcome,
}

impl OutcomeSpace {
    pub fn new(default: Outcome, complement: Outcome) -> Result<Self, ModelError> {
        if default == complement {
            return Err(ModelError::IdenticalOutcomes(default.0));
        }
        Ok(OutcomeSpace {
            default,
            complement,
        })
    }

    pub fn default_outcome(&self) -> &Outcome {
        &self.default
    }

    pub fn complement_outcome(&self) -> &Outcome {
        &self.complement
    }

    pub fn contains(&self, outcome: &Outcome) -> bool {
        *outcome == self.default || *outcome == self.complement
    }

    /// The other outcome, or `None` for a token outside the space.
    pub fn complement(&self, outcome: &Outcome) -> Option<&Outcome> {
        if *outcome == self.default {
            Some(&self.complement)
        } else if *outcome == self.complement {
            Some(&self.default)
        } else {
            None
        }
    }

    /// Placeholder complement for casebases that never mention one.
    fn fallback_complement(default: &Outcome) -> Outcome {
        match default.as_str() {
            "+" => Outcome::new("−"),
            "−" | "-" => Outcome::new("+"),
            other => Outcome::new(format!("not-{other}")),
        }
    }
}

/// A labelled past case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case<C> {
    pub id: String,
    pub characterisation: C,
    pub outcome: Outcome,
}

impl<C> Case<C> {
    pub fn new(id: impl Into<String>, characterisation: C, outcome: impl Into<Outcome>) -> Self {
        Case {
            id: id.into(),
            characterisation,
            outcome: outcome.into(),
        }
    }
}

/// A case with unknown outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewCase<C> {
    pub characterisation: C,
}

impl<C> NewCase<C> {
    pub fn new(characterisation: C) -> Self {
        NewCase { characterisation }
    }
}

/// What [`Casebase::new`] dropped while enforcing set semantics.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DedupReport {
    /// Ids of cases that repeated an earlier (characterisation, outcome) pair.
    pub duplicates: Vec<String>,
    /// Ids of cases identical to the default argument.
    pub merged_into_default: Vec<String>,
}

impl DedupReport {
    pub fn dropped(&self) -> usize {
        self.duplicates.len() + self.merged_into_default.len()
    }
}

/// A validated casebase `D` together with its default argument.
///
/// Invariants: case ids are unique and distinct from the default's id and
/// [`NEW_CASE_ID`]; no two cases share a (characterisation, outcome) pair;
/// no case equals the default argument; every outcome lies in
/// [`Casebase::outcomes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Casebase<C> {
    cases: Vec<Case<C>>,
    default: Case<C>,
    outcomes: OutcomeSpace,
}

impl<C: Characterisation> Casebase<C> {
    /// Validates and deduplicates `cases`.
    ///
    /// The complement outcome is inferred as the unique label other than the
    /// default's. `complement`, when given, must agree with the data.
    pub fn new(
        cases: Vec<Case<C>>,
        default: Case<C>,
        complement: Option<Outcome>,
    ) -> Result<(Self, DedupReport), ModelError> {
        let mut labels: BTreeSet<&Outcome> = cases.iter().map(|c| &c.outcome).collect();
        labels.insert(&default.outcome);
        if let Some(declared) = &complement {
            if *declared == default.outcome {
                return Err(ModelError::IdenticalOutcomes(declared.0.clone()));
            }
            if let Some(unknown) = labels
                .iter()
                .find(|l| ***l != default.outcome && **l != declared)
            {
                return Err(ModelError::UnknownOutcome(unknown.0.clone()));
            }
        }
        if labels.len() > 2 {
            return Err(ModelError::TooManyOutcomes(
                labels.iter().map(|l| l.0.clone()).collect(),
            ));
        }
        let complement = match complement {
            Some(c) => c,
            None => labels
                .iter()
                .find(|l| ***l != default.outcome)
                .map(|l| (*l).clone())
                .unwrap_or_else(|| OutcomeSpace::fallback_complement(&default.outcome)),
        };
        let outcomes = OutcomeSpace::new(default.outcome.clone(), complement)?;

        let mut ids: HashSet<&str> = HashSet::new();
        ids.insert(NEW_CASE_ID);
        if default.id == NEW_CASE_ID {
            return Err(ModelError::ReservedId(default.id.clone()));
        }
        ids.insert(&default.id);
        for case in &cases {
            if case.id == NEW_CASE_ID {
                return Err(ModelError::ReservedId(case.id.clone()));
            }
            if !ids.insert(&case.id) {
                return Err(ModelError::DuplicateId(case.id.clone()));
            }
        }

        let mut report = DedupReport::default();
        let mut seen: BTreeSet<(&C, &Outcome)> = BTreeSet::new();
        let mut kept = Vec::with_capacity(cases.len());
        for case in &cases {
            if case.characterisation == default.characterisation && case.outcome == default.outcome
            {
                log::warn!(
                    "case {} is identical to the default argument {}; merged",
                    case.id,
                    default.id
                );
                report.merged_into_default.push(case.id.clone());
            } else if !seen.insert((&case.characterisation, &case.outcome)) {
                report.duplicates.push(case.id.clone());
            } else {
                kept.push(case.clone());
            }
        }

        Ok((
            Casebase {
                cases: kept,
                default,
                outcomes,
            },
            report,
        ))
    }

    /// Shorthand for [`Casebase::new`] that discards the dedup report.
    pub fn build(
        cases: Vec<Case<C>>,
        default: Case<C>,
        complement: Option<Outcome>,
    ) -> Result<Self, ModelError> {
        Self::new(cases, default, complement).map(|(cb, _)| cb)
    }

    pub fn cases(&self) -> &[Case<C>] {
        &self.cases
    }

    pub fn default_case(&self) -> &Case<C> {
        &self.default
    }

    pub fn outcomes(&self) -> &OutcomeSpace {
        &self.outcomes
    }

    pub fn len(&self) -> usize {
        self.cases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cases.is_empty()
    }

    /// `D ∪ {(x_δ, δ)}`, default first.
    pub fn pool(&self) -> Vec<&Case<C>> {
        std::iter::once(&self.default).chain(&self.cases).collect()
    }

    /// The same casebase with the case at `index` removed.
    pub fn without(&self, index: usize) -> Self {
        self.retain(|i, _| i != index)
    }

    /// The casebase restricted to cases for which `keep` holds.
    pub fn retain(&self, mut keep: impl FnMut(usize, &Case<C>) -> bool) -> Self {
        Casebase {
            cases: self
                .cases
                .iter()
                .enumerate()
                .filter(|(i, c)| keep(*i, c))
                .map(|(_, c)| c.clone())
                .collect(),
            default: self.default.clone(),
            outcomes: self.outcomes.clone(),
        }
    }

    /// Whether every case is at least as exceptional as the default, which is
    /// the precondition for spike-freeness.
    pub fn default_is_least(&self) -> bool {
        self.cases.iter().all(|c| {
            matches!(
                c.characterisation.compare(&self.default.characterisation),
                OrderRelation::MoreExceptional | OrderRelation::Equal
            )
        })
    }

    /// Count of cases per outcome.
    pub fn outcome_counts(&self) -> BTreeMap<&Outcome, usize> {
        let mut counts = BTreeMap::new();
        for case in &self.cases {
            *counts.entry(&case.outcome).or_insert(0) += 1;
        }
        counts
    }
}
