//! Shared fixtures, random generators and independent oracles.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::Rng;
use saacbr::{ArgId, AttackGraph, BipolarFramework, Case, Casebase, FeatureSet};

pub const DEFAULT_OUTCOME: &str = "−";
pub const OTHER_OUTCOME: &str = "+";

pub fn fs(items: &[&str]) -> FeatureSet {
    items.iter().copied().collect()
}

pub fn figure_cases() -> Vec<Case<FeatureSet>> {
    vec![
        Case::new("C1", fs(&["A"]), "+"),
        Case::new("C2", fs(&["A", "B", "C"]), "+"),
        Case::new("C3", fs(&["A", "B"]), "−"),
        Case::new("C4", fs(&["A", "B", "D"]), "−"),
    ]
}

pub fn figure_default() -> Case<FeatureSet> {
    Case::new("C0", FeatureSet::new(), DEFAULT_OUTCOME)
}

pub fn figure_casebase() -> Casebase<FeatureSet> {
    Casebase::build(figure_cases(), figure_default(), None).unwrap()
}

pub fn figure_new_case() -> FeatureSet {
    fs(&["A", "B", "C", "D"])
}

pub fn random_features<R: Rng>(rng: &mut R, universe: usize) -> FeatureSet {
    (0..universe)
        .filter(|_| rng.gen_bool(0.5))
        .map(|i| format!("F{i}"))
        .collect()
}

/// Up to `max_cases` cases over up to `max_features` features, random
/// labels, default `(∅, −)`.
pub fn random_casebase<R: Rng>(
    rng: &mut R,
    max_cases: usize,
    max_features: usize,
) -> Casebase<FeatureSet> {
    let universe = rng.gen_range(1..=max_features);
    let n = rng.gen_range(0..=max_cases);
    let cases = (0..n)
        .map(|i| {
            let outcome = if rng.gen_bool(0.5) {
                OTHER_OUTCOME
            } else {
                DEFAULT_OUTCOME
            };
            Case::new(format!("c{i}"), random_features(rng, universe), outcome)
        })
        .collect();
    Casebase::build(
        cases,
        Case::new("C0", FeatureSet::new(), DEFAULT_OUTCOME),
        None,
    )
    .unwrap()
}

pub fn random_new_case<R: Rng>(rng: &mut R, max_features: usize) -> FeatureSet {
    random_features(rng, max_features)
}

pub fn random_attack_graph<R: Rng>(rng: &mut R, max_args: usize) -> AttackGraph {
    let n = rng.gen_range(0..=max_args);
    let density: f64 = rng.gen_range(0.0..0.4);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if rng.gen_bool(density) {
                edges.push((ArgId(a), ArgId(b)));
            }
        }
    }
    AttackGraph::from_edges(n, edges)
}

pub type NamedEdges = BTreeSet<(String, String)>;

/// Edge sets written clause by clause from the mining definition, using raw
/// set operations only.
pub struct LiteralEdges {
    pub attacks: NamedEdges,
    pub supports: NamedEdges,
    pub irrelevance: NamedEdges,
}

fn strictly_contains(a: &FeatureSet, b: &FeatureSet) -> bool {
    let a: HashSet<&str> = a.iter().collect();
    let b: HashSet<&str> = b.iter().collect();
    a.len() > b.len() && b.iter().all(|f| a.contains(f))
}

fn same_set(a: &FeatureSet, b: &FeatureSet) -> bool {
    let a: HashSet<&str> = a.iter().collect();
    let b: HashSet<&str> = b.iter().collect();
    a == b
}

pub fn literal_edges(
    casebase: &Casebase<FeatureSet>,
    x_new: &FeatureSet,
    with_supports: bool,
) -> LiteralEdges {
    let mut pool: Vec<&Case<FeatureSet>> = vec![casebase.default_case()];
    pool.extend(casebase.cases());
    let mut attacks = NamedEdges::new();
    let mut supports = NamedEdges::new();
    let mut irrelevance = NamedEdges::new();
    for a in &pool {
        for b in &pool {
            if std::ptr::eq(*a, *b) {
                continue;
            }
            // attack clause 1 and 2(a)/2(b)
            if a.outcome != b.outcome {
                let exceptional = strictly_contains(&a.characterisation, &b.characterisation);
                let no_witness = !pool.iter().any(|g| {
                    g.outcome == a.outcome
                        && strictly_contains(&a.characterisation, &g.characterisation)
                        && strictly_contains(&g.characterisation, &b.characterisation)
                });
                if (exceptional && no_witness) || same_set(&a.characterisation, &b.characterisation)
                {
                    attacks.insert((a.id.clone(), b.id.clone()));
                }
            }
            // support clause
            if with_supports
                && a.outcome == b.outcome
                && strictly_contains(&a.characterisation, &b.characterisation)
                && !pool.iter().any(|g| {
                    strictly_contains(&a.characterisation, &g.characterisation)
                        && strictly_contains(&g.characterisation, &b.characterisation)
                })
            {
                supports.insert((a.id.clone(), b.id.clone()));
            }
        }
        // irrelevance clause: x_N does not contain x_a
        if !a.characterisation.iter().all(|f| x_new.contains(f)) {
            irrelevance.insert(("N".to_string(), a.id.clone()));
        }
    }
    LiteralEdges {
        attacks,
        supports,
        irrelevance,
    }
}

pub type EdgeSet = BTreeSet<(ArgId, ArgId)>;

/// Complex attacks by explicit enumeration of every support path, as
/// `(supported, secondary)`.
pub fn brute_force_complex<C>(baf: &BipolarFramework<C>) -> (EdgeSet, EdgeSet) {
    let n = baf.len();
    let supports: Vec<(ArgId, ArgId)> = baf.supports().iter().copied().collect();
    let attacks: Vec<(ArgId, ArgId)> = baf.attacks().keys().copied().collect();

    // all support paths with at least one edge, as (start, end)
    let mut paths: BTreeSet<(ArgId, ArgId)> = BTreeSet::new();
    fn walk(
        start: ArgId,
        at: ArgId,
        supports: &[(ArgId, ArgId)],
        visited: &mut Vec<ArgId>,
        out: &mut BTreeSet<(ArgId, ArgId)>,
    ) {
        for &(s, t) in supports {
            if s == at && !visited.contains(&t) {
                out.insert((start, t));
                visited.push(t);
                walk(start, t, supports, visited, out);
                visited.pop();
            }
        }
    }
    for i in 0..n {
        let mut visited = vec![ArgId(i)];
        walk(ArgId(i), ArgId(i), &supports, &mut visited, &mut paths);
    }

    let mut supported = BTreeSet::new();
    let mut secondary = BTreeSet::new();
    for &(start, end) in &paths {
        for &(a, b) in &attacks {
            if a == end {
                supported.insert((start, b));
            }
            if b == start && baf.argument(a).role != saacbr::Role::New {
                secondary.insert((a, end));
            }
        }
    }
    (supported, secondary)
}
