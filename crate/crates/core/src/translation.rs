//! Reduction of a bipolar framework to an attack-only framework.
//!
//! Supports are replaced by complex attacks computed in one pass over the
//! mined relations:
//!
//! * supported attack `a → b`: `a ⤳ … ⤳ c ⇝ b` (one or more supports, then one attack)
//! * secondary attack `a → b`: `a ⇝ c ⤳ … ⤳ b` (one attack, then one or more supports)
//!
//! Secondary attacks whose first attack comes from the new case are not
//! generated, since those attacks only remove irrelevant cases. Mediated
//! attacks are never generated.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::classifier::ModelConfig;
use crate::mining::{ArgId, Argument, AttackKind, BipolarFramework, Edge, Role};
use crate::semantics::AttackGraph;

/// Where an edge of the translated framework came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Direct,
    Equal,
    Irrelevance,
    Supported,
    Secondary,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Direct => "direct",
            Provenance::Equal => "equal",
            Provenance::Irrelevance => "irrelevance",
            Provenance::Supported => "supported",
            Provenance::Secondary => "secondary",
        }
    }

    pub fn is_complex(self) -> bool {
        matches!(self, Provenance::Supported | Provenance::Secondary)
    }
}

impl From<AttackKind> for Provenance {
    fn from(kind: AttackKind) -> Self {
        match kind {
            AttackKind::Direct => Provenance::Direct,
            AttackKind::Equal => Provenance::Equal,
            AttackKind::Irrelevance => Provenance::Irrelevance,
        }
    }
}

/// Attack-only framework. Each edge keeps every provenance that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackFramework<C> {
    arguments: Vec<Argument<C>>,
    edges: BTreeMap<Edge, BTreeSet<Provenance>>,
}

impl<C> AttackFramework<C> {
    pub fn arguments(&self) -> &[Argument<C>] {
        &self.arguments
    }

    pub fn argument(&self, id: ArgId) -> &Argument<C> {
        &self.arguments[id.0]
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

    pub fn edges(&self) -> &BTreeMap<Edge, BTreeSet<Provenance>> {
        &self.edges
    }

    pub fn named(&self, (a, b): Edge) -> (&str, &str) {
        (&self.arguments[a.0].id, &self.arguments[b.0].id)
    }

    pub fn named_edges(&self) -> BTreeSet<(&str, &str)> {
        self.edges.keys().map(|e| self.named(*e)).collect()
    }

    /// Edges carrying `provenance`, by name.
    pub fn named_edges_with(&self, provenance: Provenance) -> BTreeSet<(&str, &str)> {
        self.edges
            .iter()
            .filter(|(_, p)| p.contains(&provenance))
            .map(|(e, _)| self.named(*e))
            .collect()
    }

    pub fn graph(&self) -> AttackGraph {
        AttackGraph::from_edges(self.arguments.len(), self.edges.keys().copied())
    }
}

/// Targets reachable from each argument through a non-empty support chain.
fn support_reach<C>(baf: &BipolarFramework<C>) -> Vec<BTreeSet<ArgId>> {
    let n = baf.len();
    let mut successors = vec![Vec::new(); n];
    for &(a, b) in baf.supports() {
        successors[a.0].push(b);
    }
    (0..n)
        .map(|start| {
            let mut seen = BTreeSet::new();
            let mut stack: Vec<ArgId> = successors[start].clone();
            while let Some(next) = stack.pop() {
                if seen.insert(next) {
                    stack.extend(successors[next.0].iter().copied());
                }
            }
            seen
        })
        .collect()
}

/// `(a, b)` for every chain `a ⤳ … ⤳ c ⇝ b`.
pub fn supported_attacks<C>(baf: &BipolarFramework<C>) -> BTreeSet<Edge> {
    let mut attacked_by: BTreeMap<ArgId, Vec<ArgId>> = BTreeMap::new();
    for &(c, b) in baf.attacks().keys() {
        attacked_by.entry(c).or_default().push(b);
    }
    let reach = support_reach(baf);
    let mut out = BTreeSet::new();
    for (a, reached) in reach.iter().enumerate() {
        for c in reached {
            if let Some(targets) = attacked_by.get(c) {
                out.extend(targets.iter().map(|&b| (ArgId(a), b)));
            }
        }
    }
    out
}

/// `(a, b)` for every chain `a ⇝ c ⤳ … ⤳ b` with `a` not the new case.
pub fn secondary_attacks<C>(baf: &BipolarFramework<C>) -> BTreeSet<Edge> {
    let reach = support_reach(baf);
    let mut out = BTreeSet::new();
    for &(a, c) in baf.attacks().keys() {
        if baf.argument(a).role == Role::New {
            continue;
        }
        out.extend(reach[c.0].iter().map(|&b| (a, b)));
    }
    out
}

/// Original attacks plus complex attacks, with supports discarded.
pub fn translate<C: Clone>(baf: &BipolarFramework<C>, config: &ModelConfig) -> AttackFramework<C> {
    let mut edges: BTreeMap<Edge, BTreeSet<Provenance>> = BTreeMap::new();
    for (&edge, &kind) in baf.attacks() {
        edges.entry(edge).or_default().insert(kind.into());
    }
    for edge in supported_attacks(baf) {
        edges.entry(edge).or_default().insert(Provenance::Supported);
    }
    if config.secondary_attacks {
        for edge in secondary_attacks(baf) {
            edges.entry(edge).or_default().insert(Provenance::Secondary);
        }
    }
    AttackFramework {
        arguments: baf.arguments().to_vec(),
        edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mining::mine_framework;
    use crate::model::{Case, Casebase, FeatureSet};

    fn arg(id: &str, role: Role) -> Argument<FeatureSet> {
        Argument {
            id: id.into(),
            characterisation: FeatureSet::new(),
            outcome: None,
            role,
        }
    }

    /// Arguments `d` (default), then the given names.
    fn synthetic(
        names: &[&str],
        attacks: &[(usize, usize)],
        supports: &[(usize, usize)],
    ) -> BipolarFramework<FeatureSet> {
        let mut args = vec![arg("d", Role::Default)];
        args.extend(names.iter().map(|n| arg(n, Role::Past)));
        BipolarFramework::from_parts(
            args,
            attacks
                .iter()
                .map(|&(a, b)| ((ArgId(a), ArgId(b)), AttackKind::Direct))
                .collect(),
            supports
                .iter()
                .map(|&(a, b)| (ArgId(a), ArgId(b)))
                .collect(),
        )
    }

    fn names<'a>(
        baf: &'a BipolarFramework<FeatureSet>,
        edges: &BTreeSet<Edge>,
    ) -> BTreeSet<(&'a str, &'a str)> {
        edges.iter().map(|e| baf.named(*e)).collect()
    }

    fn figure_baf() -> BipolarFramework<FeatureSet> {
        let fs = |items: &[&str]| items.iter().copied().collect::<FeatureSet>();
        let cb = Casebase::build(
            vec![
                Case::new("C1", fs(&["A"]), "+"),
                Case::new("C2", fs(&["A", "B", "C"]), "+"),
                Case::new("C3", fs(&["A", "B"]), "−"),
                Case::new("C4", fs(&["A", "B", "D"]), "−"),
            ],
            Case::new("C0", FeatureSet::new(), "−"),
            None,
        )
        .unwrap();
        mine_framework(&cb, &fs(&["A", "B", "C", "D"]), &ModelConfig::saacbr())
    }

    #[test]
    fn figure_supported_attack() {
        let baf = figure_baf();
        assert_eq!(
            names(&baf, &supported_attacks(&baf)),
            BTreeSet::from([("C4", "C1")])
        );
        assert!(secondary_attacks(&baf).is_empty());
    }

    #[test]
    fn support_chain_then_attack() {
        // a ⤳ b ⤳ c ⇝ e
        let baf = synthetic(&["a", "b", "c", "e"], &[(3, 4)], &[(1, 2), (2, 3)]);
        assert_eq!(
            names(&baf, &supported_attacks(&baf)),
            BTreeSet::from([("a", "e"), ("b", "e")])
        );
    }

    #[test]
    fn attack_then_support() {
        // a ⇝ c, c ⤳ b
        let baf = synthetic(&["a", "b", "c"], &[(1, 3)], &[(3, 2)]);
        assert_eq!(
            names(&baf, &secondary_attacks(&baf)),
            BTreeSet::from([("a", "b")])
        );
    }

    #[test]
    fn no_supports_means_no_complex_attacks() {
        let baf = synthetic(&["a", "b"], &[(1, 2), (2, 0)], &[]);
        assert!(supported_attacks(&baf).is_empty());
        assert!(secondary_attacks(&baf).is_empty());
        let af = translate(&baf, &ModelConfig::saacbr().with_secondary_attacks());
        assert_eq!(
            af.edges().keys().copied().collect::<BTreeSet<_>>(),
            baf.attacks().keys().copied().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn new_case_is_not_a_secondary_source() {
        let mut args = vec![
            arg("d", Role::Default),
            arg("b", Role::Past),
            arg("c", Role::Past),
        ];
        args.push(arg("N", Role::New));
        let baf = BipolarFramework::from_parts(
            args,
            BTreeMap::from([((ArgId(3), ArgId(2)), AttackKind::Irrelevance)]),
            BTreeSet::from([(ArgId(2), ArgId(1))]),
        );
        assert!(secondary_attacks(&baf).is_empty());
    }

    #[test]
    fn translate_figure() {
        let baf = figure_baf();
        let af = translate(&baf, &ModelConfig::saacbr());
        assert_eq!(
            af.named_edges(),
            BTreeSet::from([("C1", "C0"), ("C3", "C1"), ("C2", "C3"), ("C4", "C1")])
        );
        assert_eq!(
            af.named_edges_with(Provenance::Supported),
            BTreeSet::from([("C4", "C1")])
        );
    }

    #[test]
    fn duplicate_pairs_keep_all_provenances() {
        // a ⇝ b directly and also a ⤳ c ⇝ b
        let baf = synthetic(&["a", "b", "c"], &[(1, 2), (3, 2)], &[(1, 3)]);
        let af = translate(&baf, &ModelConfig::saacbr());
        let provs = &af.edges()[&(ArgId(1), ArgId(2))];
        assert_eq!(
            provs,
            &BTreeSet::from([Provenance::Direct, Provenance::Supported])
        );
    }
}
