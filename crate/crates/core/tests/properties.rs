mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use saacbr::semantics::oracle::grounded_by_enumeration;
use saacbr::{
    compare, defends, find_spikes, grounded_extension, is_irrelevant, mine_framework, predict,
    secondary_attacks, supported_attacks, translate, ArgId, AttackGraph, AttackKind,
    BipolarFramework, Case, Casebase, FeatureSet, Label, ModelConfig, OrderRelation, Role,
};

fn features_from_bits(bits: u8, universe: usize) -> FeatureSet {
    (0..universe)
        .filter(|i| bits & (1 << i) != 0)
        .map(|i| format!("F{i}"))
        .collect()
}

fn feature_set() -> impl Strategy<Value = FeatureSet> {
    any::<u8>().prop_map(|b| features_from_bits(b, 5))
}

/// Casebases of ≤ 8 cases over ≤ 5 features, default (∅, −).
fn casebase() -> impl Strategy<Value = Casebase<FeatureSet>> {
    prop::collection::vec((any::<u8>(), any::<bool>()), 0..=8).prop_map(|rows| {
        let cases = rows
            .into_iter()
            .enumerate()
            .map(|(i, (bits, plus))| {
                Case::new(
                    format!("c{i}"),
                    features_from_bits(bits, 5),
                    if plus { OTHER_OUTCOME } else { DEFAULT_OUTCOME },
                )
            })
            .collect();
        Casebase::build(
            cases,
            Case::new("C0", FeatureSet::new(), DEFAULT_OUTCOME),
            None,
        )
        .unwrap()
    })
}

fn attack_graph() -> impl Strategy<Value = AttackGraph> {
    (0usize..=10).prop_flat_map(|n| {
        prop::collection::vec((0..n.max(1), 0..n.max(1)), 0..=(n * 2)).prop_map(move |edges| {
            let edges = if n == 0 { Vec::new() } else { edges };
            AttackGraph::from_edges(n, edges.into_iter().map(|(a, b)| (ArgId(a), ArgId(b))))
        })
    })
}

fn edge_names<C>(
    baf: &BipolarFramework<C>,
    edges: &BTreeSet<(ArgId, ArgId)>,
) -> BTreeSet<(String, String)> {
    edges
        .iter()
        .map(|e| {
            let (a, b) = baf.named(*e);
            (a.to_owned(), b.to_owned())
        })
        .collect()
}

proptest! {
    #[test]
    fn order_is_a_partial_order(a in feature_set(), b in feature_set(), c in feature_set()) {
        let geq = |x: &FeatureSet, y: &FeatureSet| matches!(compare(x, y), OrderRelation::MoreExceptional | OrderRelation::Equal);
        prop_assert!(geq(&a, &a));
        if geq(&a, &b) && geq(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if geq(&a, &b) && geq(&b, &c) {
            prop_assert!(geq(&a, &c));
        }
        prop_assert_eq!(compare(&a, &b), compare(&b, &a).reverse());
        prop_assert_eq!(compare(&a, &b), compare(&a.clone(), &b.clone()));
    }

    #[test]
    fn nothing_is_irrelevant_to_itself(a in feature_set()) {
        prop_assert!(!is_irrelevant(&a, &a));
        prop_assert!(!is_irrelevant(&a, &FeatureSet::new()));
    }

    #[test]
    fn mining_matches_literal_definition(cb in casebase(), x_new in feature_set()) {
        let baf = mine_framework(&cb, &x_new, &ModelConfig::saacbr());
        let literal = literal_edges(&cb, &x_new, true);
        let mut expected_attacks = literal.attacks.clone();
        expected_attacks.extend(literal.irrelevance.iter().cloned());
        let attacks: BTreeSet<(String, String)> =
            baf.named_attacks().into_iter().map(|(a, b)| (a.to_owned(), b.to_owned())).collect();
        let supports: BTreeSet<(String, String)> =
            baf.named_supports().into_iter().map(|(a, b)| (a.to_owned(), b.to_owned())).collect();
        prop_assert_eq!(attacks, expected_attacks);
        prop_assert_eq!(supports, literal.supports);
    }

    #[test]
    fn supports_never_change_mined_attacks(cb in casebase(), x_new in feature_set()) {
        let with = mine_framework(&cb, &x_new, &ModelConfig::saacbr());
        let without = mine_framework(&cb, &x_new, &ModelConfig::aacbr());
        prop_assert_eq!(with.attacks(), without.attacks());
        prop_assert!(without.supports().is_empty());
    }

    #[test]
    fn new_case_only_sources_irrelevance(cb in casebase(), x_new in feature_set()) {
        let baf = mine_framework(&cb, &x_new, &ModelConfig::saacbr());
        let n = baf.new_case().unwrap();
        for (&(a, b), kind) in baf.attacks() {
            prop_assert_ne!(b, n);
            prop_assert_eq!(a == n, *kind == AttackKind::Irrelevance);
            if *kind == AttackKind::Equal {
                prop_assert!(baf.attacks().contains_key(&(b, a)));
            }
        }
        prop_assert!(baf.supports().iter().all(|&(a, b)| a != n && b != n));
    }

    #[test]
    fn complex_attacks_match_path_enumeration(cb in casebase(), x_new in feature_set()) {
        let baf = mine_framework(&cb, &x_new, &ModelConfig::saacbr());
        let (supported, secondary) = brute_force_complex(&baf);
        prop_assert_eq!(edge_names(&baf, &supported_attacks(&baf)), edge_names(&baf, &supported));
        prop_assert_eq!(edge_names(&baf, &secondary_attacks(&baf)), edge_names(&baf, &secondary));
    }

    #[test]
    fn translation_is_monotone_and_closed(cb in casebase(), x_new in feature_set()) {
        let config = ModelConfig::saacbr();
        let baf = mine_framework(&cb, &x_new, &config);
        let af = translate(&baf, &config);
        prop_assert!(baf.attacks().keys().all(|e| af.edges().contains_key(e)));

        // Reading the translated edges as attacks, with the same supports,
        // a second supported-attack pass adds nothing.
        let again = BipolarFramework::from_parts(
            baf.arguments().to_vec(),
            af.edges().keys().map(|&e| (e, AttackKind::Direct)).collect(),
            baf.supports().clone(),
        );
        let second = translate(&again, &config);
        let first: BTreeSet<_> = af.edges().keys().copied().collect();
        let closed: BTreeSet<_> = second.edges().keys().copied().collect();
        prop_assert_eq!(first, closed);
    }

    #[test]
    fn grounded_matches_enumeration(g in attack_graph()) {
        let r = grounded_extension(&g);
        prop_assert_eq!(&r.extension, &grounded_by_enumeration(&g).unwrap());
        prop_assert!(r.iterations <= g.len());
        for &a in &r.extension {
            prop_assert!(defends(&r.extension, a, &g));
            for &b in &r.extension {
                prop_assert!(!g.attacks(a, b));
            }
        }
        for a in g.ids() {
            let label = r.label(a);
            prop_assert_eq!(label == Label::In, r.extension.contains(&a));
            let attacked_by_in = g.attackers(a).iter().any(|x| r.extension.contains(x));
            prop_assert_eq!(label == Label::Out, attacked_by_in);
        }
    }

    #[test]
    fn isolated_argument_joins_extension(g in attack_graph()) {
        let n = g.len();
        let extended = AttackGraph::from_edges(n + 1, g.edges());
        let before = grounded_extension(&g).extension;
        let mut after = grounded_extension(&extended).extension;
        prop_assert!(after.remove(&ArgId(n)));
        prop_assert_eq!(before, after);
    }

    #[test]
    fn new_case_in_and_irrelevant_cases_out(cb in casebase(), x_new in feature_set()) {
        let p = predict(&cb, &ModelConfig::saacbr(), &x_new).unwrap();
        let n = p.framework.new_case().unwrap();
        prop_assert_eq!(p.grounded.label(n), Label::In);
        for (&(a, b), kind) in p.bipolar.attacks() {
            if *kind == AttackKind::Irrelevance {
                prop_assert_eq!(a, n);
                prop_assert_eq!(p.grounded.label(b), Label::Out);
            }
        }
    }

    #[test]
    fn outcome_follows_default_membership(cb in casebase(), x_new in feature_set(), baseline in any::<bool>()) {
        let config = if baseline { ModelConfig::aacbr() } else { ModelConfig::saacbr() };
        let p = predict(&cb, &config, &x_new).unwrap();
        let accepted = p.grounded.contains(p.framework.default_argument());
        prop_assert_eq!(accepted, p.default_accepted);
        prop_assert_eq!(accepted, p.outcome.as_str() == DEFAULT_OUTCOME);
    }

    #[test]
    fn supported_mode_has_no_spikes(cb in casebase(), x_new in feature_set()) {
        let baf = mine_framework(&cb, &x_new, &ModelConfig::saacbr());
        prop_assert!(find_spikes(&baf).is_empty());
    }

    #[test]
    fn irrelevant_case_never_changes_prediction(
        cb in casebase(),
        x_new in feature_set(),
        extra in feature_set(),
        plus in any::<bool>(),
        secondary in any::<bool>(),
    ) {
        prop_assume!(is_irrelevant(&x_new, &extra));
        let mut cases = cb.cases().to_vec();
        cases.push(Case::new("extra", extra, if plus { OTHER_OUTCOME } else { DEFAULT_OUTCOME }));
        let bigger = Casebase::build(cases, cb.default_case().clone(), None).unwrap();
        let config = if secondary { ModelConfig::saacbr().with_secondary_attacks() } else { ModelConfig::saacbr() };
        let before = predict(&cb, &config, &x_new).unwrap();
        let after = predict(&bigger, &config, &x_new).unwrap();
        prop_assert_eq!(before.outcome, after.outcome);
    }

    #[test]
    fn spikes_are_past_cases(cb in casebase(), x_new in feature_set()) {
        let baf = mine_framework(&cb, &x_new, &ModelConfig::aacbr());
        for id in find_spikes(&baf) {
            let arg = baf.argument(baf.find(&id).unwrap());
            prop_assert_eq!(arg.role, Role::Past);
        }
    }
}
