//! Mining the bipolar framework of attacks and supports from a casebase and
//! a new case.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::classifier::{Mode, ModelConfig};
use crate::model::{Case, Casebase, Characterisation, OrderRelation, Outcome, NEW_CASE_ID};

/// Index of an argument inside a framework.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ArgId(pub usize);

impl fmt::Display for ArgId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

pub type Edge = (ArgId, ArgId);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Default,
    Past,
    New,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Argument<C> {
    pub id: String,
    pub characterisation: C,
    /// `None` only for the new case.
    pub outcome: Option<Outcome>,
    pub role: Role,
}

impl<C: Clone> Argument<C> {
    fn from_case(case: &Case<C>, role: Role) -> Self {
        Argument {
            id: case.id.clone(),
            characterisation: case.characterisation.clone(),
            outcome: Some(case.outcome.clone()),
            role,
        }
    }
}

/// How a mined attack arose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AttackKind {
    /// Strictly more exceptional attacker at minimal difference.
    Direct,
    /// Same characterisation, opposite outcome (always mutual).
    Equal,
    /// From the new case to a case irrelevant to it.
    Irrelevance,
}

/// `⟨Args, ⇝, ⤳⟩`. Arguments are stored default first, then the past cases in
/// casebase order, then the new case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipolarFramework<C> {
    arguments: Vec<Argument<C>>,
    attacks: BTreeMap<Edge, AttackKind>,
    supports: BTreeSet<Edge>,
}

impl<C> BipolarFramework<C> {
    /// Assembles a framework from explicit parts. Exactly one argument must
    /// have [`Role::Default`], and it must come first.
    pub fn from_parts(
        arguments: Vec<Argument<C>>,
        attacks: BTreeMap<Edge, AttackKind>,
        supports: BTreeSet<Edge>,
    ) -> Self {
        assert!(
            matches!(arguments.first(), Some(a) if a.role == Role::Default),
            "the default argument must be first"
        );
        let n = arguments.len();
        assert!(
            attacks
                .keys()
                .chain(&supports)
                .all(|(a, b)| a.0 < n && b.0 < n),
            "edge endpoint out of range"
        );
        BipolarFramework {
            arguments,
            attacks,
            supports,
        }
    }

    pub fn arguments(&self) -> &[Argument<C>] {
        &self.arguments
    }

    pub fn argument(&self, id: ArgId) -> &Argument<C> {
        &self.arguments[id.0]
    }

    pub fn ids(&self) -> impl Iterator<Item = ArgId> {
        (0..self.arguments.len()).map(ArgId)
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn default_argument(&self) -> ArgId {
        ArgId(0)
    }

    pub fn new_case(&self) -> Option<ArgId> {
        self.arguments
            .iter()
            .position(|a| a.role == Role::New)
            .map(ArgId)
    }

    pub fn find(&self, name: &str) -> Option<ArgId> {
        self.arguments.iter().position(|a| a.id == name).map(ArgId)
    }

    pub fn attacks(&self) -> &BTreeMap<Edge, AttackKind> {
        &self.attacks
    }

    pub fn supports(&self) -> &BTreeSet<Edge> {
        &self.supports
    }

    /// Attack edges as (attacker name, target name) pairs.
    pub fn named_attacks(&self) -> BTreeSet<(&str, &str)> {
        self.attacks.keys().map(|e| self.named(*e)).collect()
    }

    pub fn named_supports(&self) -> BTreeSet<(&str, &str)> {
        self.supports.iter().map(|e| self.named(*e)).collect()
    }

    pub fn named(&self, (a, b): Edge) -> (&str, &str) {
        (&self.arguments[a.0].id, &self.arguments[b.0].id)
    }
}

/// `a ⇝ b` among labelled cases: opposite outcomes and either `x_a ≻ x_b`
/// with no case of `a`'s outcome strictly between, or `x_a = x_b`.
pub fn attacks_def<C: Characterisation>(a: &Case<C>, b: &Case<C>, pool: &[&Case<C>]) -> bool {
    if a.outcome == b.outcome {
        return false;
    }
    match a.characterisation.compare(&b.characterisation) {
        OrderRelation::Equal => true,
        OrderRelation::MoreExceptional => !pool.iter().any(|g| {
            g.outcome == a.outcome
                && a.characterisation
                    .more_exceptional_than(&g.characterisation)
                && g.characterisation
                    .more_exceptional_than(&b.characterisation)
        }),
        _ => false,
    }
}

/// `a ⤳ b`: equal outcomes, `x_a ≻ x_b`, and no case of any outcome strictly
/// between.
pub fn supports_def<C: Characterisation>(a: &Case<C>, b: &Case<C>, pool: &[&Case<C>]) -> bool {
    a.outcome == b.outcome
        && a.characterisation
            .more_exceptional_than(&b.characterisation)
        && !pool.iter().any(|g| {
            a.characterisation
                .more_exceptional_than(&g.characterisation)
                && g.characterisation
                    .more_exceptional_than(&b.characterisation)
        })
}

/// Builds the bipolar framework for `x_new`. Supports are left empty in
/// [`Mode::Aacbr`].
pub fn mine_framework<C: Characterisation>(
    casebase: &Casebase<C>,
    x_new: &C,
    config: &ModelConfig,
) -> BipolarFramework<C> {
    let pool = casebase.pool();
    let mut arguments: Vec<Argument<C>> = Vec::with_capacity(pool.len() + 1);
    arguments.push(Argument::from_case(casebase.default_case(), Role::Default));
    arguments.extend(
        casebase
            .cases()
            .iter()
            .map(|c| Argument::from_case(c, Role::Past)),
    );
    let new_id = ArgId(arguments.len());
    arguments.push(Argument {
        id: NEW_CASE_ID.to_owned(),
        characterisation: x_new.clone(),
        outcome: None,
        role: Role::New,
    });

    let mut attacks = BTreeMap::new();
    let mut supports = BTreeSet::new();
    for (i, a) in pool.iter().enumerate() {
        for (j, b) in pool.iter().enumerate() {
            if i == j {
                continue;
            }
            let edge = (ArgId(i), ArgId(j));
            if attacks_def(a, b, &pool) {
                let kind = if a.characterisation == b.characterisation {
                    AttackKind::Equal
                } else {
                    AttackKind::Direct
                };
                attacks.insert(edge, kind);
            } else if config.mode == Mode::Saacbr && supports_def(a, b, &pool) {
                supports.insert(edge);
            }
        }
        if x_new.is_irrelevant(&a.characterisation) {
            attacks.insert((new_id, ArgId(i)), AttackKind::Irrelevance);
        }
    }

    BipolarFramework {
        arguments,
        attacks,
        supports,
    }
}
