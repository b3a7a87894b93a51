//! Node-to-character-set labelings. Characters are stored as column indices
//! into the paired [`CharacterMatrix`](crate::matrix::CharacterMatrix).

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use crate::network::{LgtNetwork, NodeId};

/// Assigns every node of a network the set of characters it possesses.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CLabeling {
    labels: BTreeMap<NodeId, BTreeSet<usize>>,
}

fn empty_set() -> &'static BTreeSet<usize> {
    static EMPTY: OnceLock<BTreeSet<usize>> = OnceLock::new();
    EMPTY.get_or_init(BTreeSet::new)
}

impl CLabeling {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every node of `net` labeled with the empty set.
    pub fn with_domain(net: &LgtNetwork) -> Self {
        CLabeling { labels: net.node_ids().map(|v| (v, BTreeSet::new())).collect() }
    }

    pub fn get(&self, v: NodeId) -> &BTreeSet<usize> {
        self.labels.get(&v).unwrap_or_else(|| empty_set())
    }

    pub fn has(&self, v: NodeId, character: usize) -> bool {
        self.labels.get(&v).is_some_and(|s| s.contains(&character))
    }

    pub fn add(&mut self, v: NodeId, character: usize) {
        self.labels.entry(v).or_default().insert(character);
    }

    pub fn set(&mut self, v: NodeId, characters: BTreeSet<usize>) {
        self.labels.insert(v, characters);
    }

    pub fn nodes_with(&self, character: usize) -> Vec<NodeId> {
        self.labels
            .iter()
            .filter(|(_, s)| s.contains(&character))
            .map(|(&v, _)| v)
            .collect()
    }

    /// True when the labeling's domain is exactly the node set of `net`.
    pub fn covers(&self, net: &LgtNetwork) -> bool {
        self.labels.len() == net.node_count() && net.node_ids().all(|v| self.labels.contains_key(&v))
    }

    /// Drops entries for nodes no longer present in `net`.
    pub fn restricted_to(&self, net: &LgtNetwork) -> CLabeling {
        CLabeling {
            labels: self
                .labels
                .iter()
                .filter(|(&v, _)| net.contains(v))
                .map(|(&v, s)| (v, s.clone()))
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, &BTreeSet<usize>)> {
        self.labels.iter().map(|(&v, s)| (v, s))
    }
}
