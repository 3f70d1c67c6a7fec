//! Grounded semantics over attack-only frameworks.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::mining::{ArgId, Edge};

/// Attack relation over arguments `0..len`, with per-argument adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AttackGraph {
    attackers: Vec<Vec<ArgId>>,
    targets: Vec<Vec<ArgId>>,
}

impl AttackGraph {
    pub fn from_edges(len: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut attackers = vec![Vec::new(); len];
        let mut targets = vec![Vec::new(); len];
        for (a, b) in edges {
            attackers[b.0].push(a);
            targets[a.0].push(b);
        }
        for list in attackers.iter_mut().chain(targets.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        AttackGraph { attackers, targets }
    }

    pub fn len(&self) -> usize {
        self.attackers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.attackers.is_empty()
    }

    pub fn attackers(&self, id: ArgId) -> &[ArgId] {
        &self.attackers[id.0]
    }

    pub fn targets(&self, id: ArgId) -> &[ArgId] {
        &self.targets[id.0]
    }

    pub fn attacks(&self, a: ArgId, b: ArgId) -> bool {
        self.targets[a.0].binary_search(&b).is_ok()
    }

    pub fn ids(&self) -> impl Iterator<Item = ArgId> {
        (0..self.len()).map(ArgId)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.targets
            .iter()
            .enumerate()
            .flat_map(|(a, ts)| ts.iter().map(move |&b| (ArgId(a), b)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    In,
    Out,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundedResult {
    pub extension: BTreeSet<ArgId>,
    /// Indexed by argument.
    pub labelling: Vec<Label>,
    /// Number of defence rounds after `G_0` that grew the set.
    pub iterations: usize,
}

impl GroundedResult {
    pub fn label(&self, id: ArgId) -> Label {
        self.labelling[id.0]
    }

    pub fn contains(&self, id: ArgId) -> bool {
        self.extension.contains(&id)
    }
}

/// Whether every attacker of `b` is attacked by some member of `set`.
pub fn defends(set: &BTreeSet<ArgId>, b: ArgId, graph: &AttackGraph) -> bool {
    graph
        .attackers(b)
        .iter()
        .all(|&attacker| graph.attackers(attacker).iter().any(|c| set.contains(c)))
}

/// Grounded extension by iterating from the unattacked arguments:
/// `G_{i+1}` is everything `G_i` defends, until the set stops growing.
pub fn grounded_extension(graph: &AttackGraph) -> GroundedResult {
    let mut current: BTreeSet<ArgId> = graph
        .ids()
        .filter(|&a| graph.attackers(a).is_empty())
        .collect();
    let mut iterations = 0;
    loop {
        let next: BTreeSet<ArgId> = graph
            .ids()
            .filter(|&b| defends(&current, b, graph))
            .collect();
        debug_assert!(current.is_subset(&next));
        if next == current {
            break;
        }
        current = next;
        iterations += 1;
    }
    let labelling = graph
        .ids()
        .map(|a| {
            if current.contains(&a) {
                Label::In
            } else if graph.attackers(a).iter().any(|x| current.contains(x)) {
                Label::Out
            } else {
                Label::Undecided
            }
        })
        .collect();
    GroundedResult {
        extension: current,
        labelling,
        iterations,
    }
}

/// Independent reference computations of the grounded extension.
pub mod oracle {
    use std::collections::BTreeSet;

    use super::AttackGraph;
    use crate::error::Error;
    use crate::mining::ArgId;

    /// Largest framework [`grounded_by_enumeration`] accepts.
    pub const ENUMERATION_LIMIT: usize = 16;

    fn masks(graph: &AttackGraph) -> Vec<u32> {
        graph
            .ids()
            .map(|b| graph.attackers(b).iter().fold(0u32, |m, a| m | (1 << a.0)))
            .collect()
    }

    fn to_set(mask: u32, len: usize) -> BTreeSet<ArgId> {
        (0..len)
            .filter(|i| mask & (1 << i) != 0)
            .map(ArgId)
            .collect()
    }

    /// Arguments acceptable w.r.t. `set`, as a bitmask.
    fn characteristic(attackers: &[u32], set: u32) -> u32 {
        let attacked_by_set = attackers
            .iter()
            .enumerate()
            .filter(|(_, m)| *m & set != 0)
            .fold(0u32, |m, (i, _)| m | (1 << i));
        attackers
            .iter()
            .enumerate()
            .filter(|(_, m)| *m & !attacked_by_set == 0)
            .fold(0u32, |m, (i, _)| m | (1 << i))
    }

    /// Least fixpoint of the characteristic function, iterated from `∅`.
    pub fn characteristic_fixpoint(graph: &AttackGraph) -> Result<BTreeSet<ArgId>, Error> {
        if graph.len() > 32 {
            return Err(Error::TooLargeForEnumeration {
                actual: graph.len(),
                limit: 32,
            });
        }
        let attackers = masks(graph);
        let mut set = 0u32;
        loop {
            let next = characteristic(&attackers, set);
            if next == set {
                return Ok(to_set(set, graph.len()));
            }
            set = next;
        }
    }

    /// Every complete extension, found by checking all subsets.
    pub fn complete_extensions(graph: &AttackGraph) -> Result<Vec<BTreeSet<ArgId>>, Error> {
        let n = graph.len();
        if n > ENUMERATION_LIMIT {
            return Err(Error::TooLargeForEnumeration {
                actual: n,
                limit: ENUMERATION_LIMIT,
            });
        }
        let attackers = masks(graph);
        let mut found = Vec::new();
        for set in 0u32..(1u32 << n) {
            let conflict_free = (0..n).all(|i| set & (1 << i) == 0 || attackers[i] & set == 0);
            if conflict_free && characteristic(&attackers, set) == set {
                found.push(set);
            }
        }
        Ok(found.into_iter().map(|m| to_set(m, n)).collect())
    }

    /// The subset-minimal complete extension.
    pub fn grounded_by_enumeration(graph: &AttackGraph) -> Result<BTreeSet<ArgId>, Error> {
        let complete = complete_extensions(graph)?;
        let least = complete
            .iter()
            .find(|e| complete.iter().all(|other| e.is_subset(other)))
            .expect("complete extensions always have a least element")
            .clone();
        Ok(least)
    }
}
