//! Time maps witnessing the temporal feasibility of a network: times
//! strictly decrease along support edges and are equal across transfer
//! edges, so a transfer's donor and recipient co-existed.

use std::collections::BTreeMap;

use crate::dyadic::Dyadic;
use crate::network::{LgtNetwork, NodeId};

/// Exact node times. Constructed maps pin every leaf to time 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TimeMap {
    times: BTreeMap<NodeId, Dyadic>,
}

impl TimeMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, v: NodeId) -> Option<&Dyadic> {
        self.times.get(&v)
    }

    /// Time of `v`; panics when `v` has no entry.
    pub fn time(&self, v: NodeId) -> &Dyadic {
        self.times.get(&v).expect("node has a time")
    }

    pub fn set(&mut self, v: NodeId, t: Dyadic) {
        self.times.insert(v, t);
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, &Dyadic)> {
        self.times.iter().map(|(&v, t)| (v, t))
    }

    pub fn restricted_to(&self, net: &LgtNetwork) -> TimeMap {
        TimeMap {
            times: self
                .times
                .iter()
                .filter(|(&v, _)| net.contains(v))
                .map(|(&v, t)| (v, t.clone()))
                .collect(),
        }
    }

    /// Checks this map against `net`: domain coverage, strict decrease on
    /// support edges, equality on transfer edges, leaves at 0.
    pub fn validate(&self, net: &LgtNetwork) -> Result<(), TimeMapViolation> {
        for v in net.node_ids() {
            if self.get(v).is_none() {
                return Err(TimeMapViolation::MissingNode { node: v });
            }
        }
        for (u, v) in net.support_edges() {
            if self.time(u) <= self.time(v) {
                return Err(TimeMapViolation::SupportNotDecreasing { edge: (u, v) });
            }
        }
        for (u, v) in net.transfer_edges() {
            if self.time(u) != self.time(v) {
                return Err(TimeMapViolation::TransferNotSimultaneous { edge: (u, v) });
            }
        }
        for v in net.leaves() {
            if !self.time(v).is_zero() {
                return Err(TimeMapViolation::LeafNotAtZero { leaf: v });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TimeMapViolation {
    #[error("node {node} has no time")]
    MissingNode { node: NodeId },
    #[error("support edge ({}, {}) does not strictly decrease", edge.0, edge.1)]
    SupportNotDecreasing { edge: (NodeId, NodeId) },
    #[error("transfer edge ({}, {}) endpoints differ in time", edge.0, edge.1)]
    TransferNotSimultaneous { edge: (NodeId, NodeId) },
    #[error("leaf {leaf} is not at time 0")]
    LeafNotAtZero { leaf: NodeId },
}

/// Outcome of [`check_time_consistency`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TimeConsistency {
    Consistent(TimeMap),
    /// No time map exists; the classes listed form a cycle of "must be
    /// strictly older than" constraints (each class is a set of nodes glued
    /// together by transfer edges).
    Infeasible { class_cycle: Vec<Vec<NodeId>> },
}

impl TimeConsistency {
    pub fn is_consistent(&self) -> bool {
        matches!(self, TimeConsistency::Consistent(_))
    }

    pub fn into_time_map(self) -> Option<TimeMap> {
        match self {
            TimeConsistency::Consistent(t) => Some(t),
            TimeConsistency::Infeasible { .. } => None,
        }
    }
}

/// Decides whether `net` admits a time-consistent map.
///
/// Transfer edges force their endpoints into equality classes; support edges
/// then induce a strict order between classes. The network is
/// time-consistent iff that class relation is acyclic, in which case the
/// witness assigns each class its longest-path-to-a-leaf level (all leaves
/// end up at 0).
pub fn check_time_consistency(net: &LgtNetwork) -> TimeConsistency {
    let n = net
        .node_ids()
        .map(|v| v.index())
        .max()
        .map_or(0, |m| m + 1);
    let mut uf = UnionFind::new(n);
    for (u, v) in net.transfer_edges() {
        uf.union(u.index(), v.index());
    }

    // Class adjacency induced by support edges.
    let mut class_edges: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut classes: BTreeMap<usize, Vec<NodeId>> = BTreeMap::new();
    for v in net.node_ids() {
        classes.entry(uf.find(v.index())).or_default().push(v);
    }
    for (u, v) in net.support_edges() {
        let (cu, cv) = (uf.find(u.index()), uf.find(v.index()));
        if cu == cv {
            // The donor of some transfer is an ancestor of its recipient.
            return TimeConsistency::Infeasible { class_cycle: vec![classes[&cu].clone()] };
        }
        class_edges.entry(cu).or_default().push(cv);
    }

    // Longest path to a sink per class, computed by DFS with a cycle check.
    let mut level: BTreeMap<usize, Option<u64>> = BTreeMap::new(); // None = in progress
    let mut order: Vec<usize> = classes.keys().copied().collect();
    order.sort();
    for &start in &order {
        if level.contains_key(&start) {
            continue;
        }
        // Iterative DFS; stack holds (class, next-child-index).
        let mut stack = vec![(start, 0usize)];
        level.insert(start, None);
        let mut path = vec![start];
        while let Some(&(c, idx)) = stack.last() {
            let children = class_edges.get(&c).map_or(&[][..], Vec::as_slice);
            if idx < children.len() {
                stack.last_mut().expect("nonempty stack").1 += 1;
                let child = children[idx];
                match level.get(&child) {
                    None => {
                        level.insert(child, None);
                        stack.push((child, 0));
                        path.push(child);
                    }
                    Some(None) => {
                        // Cycle: the slice of `path` from `child` onward.
                        let at = path.iter().position(|&x| x == child).expect("on path");
                        let cycle = path[at..].iter().map(|c| classes[c].clone()).collect();
                        return TimeConsistency::Infeasible { class_cycle: cycle };
                    }
                    Some(Some(_)) => {}
                }
            } else {
                let height = children
                    .iter()
                    .map(|ch| level[ch].expect("finished child") + 1)
                    .max()
                    .unwrap_or(0);
                level.insert(c, Some(height));
                stack.pop();
                path.pop();
            }
        }
    }

    let mut map = TimeMap::new();
    for v in net.node_ids() {
        let h = level[&uf.find(v.index())].expect("all classes finished");
        map.set(v, Dyadic::from_integer(h));
    }
    debug_assert!(map.validate(net).is_ok());
    TimeConsistency::Consistent(map)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // Smaller root wins so class representatives are deterministic.
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::insert_transfer;
    use crate::network::LgtNetwork;

    fn balanced_four() -> LgtNetwork {
        let mut b = LgtNetwork::builder();
        let r = b.add_internal(Some("r"));
        let p = b.add_internal(Some("p"));
        let q = b.add_internal(Some("q"));
        let (a, c) = (b.add_leaf("A"), b.add_leaf("B"));
        let (d, e) = (b.add_leaf("C"), b.add_leaf("D"));
        b.support_edge(r, p)
            .support_edge(r, q)
            .support_edge(p, a)
            .support_edge(p, c)
            .support_edge(q, d)
            .support_edge(q, e);
        b.build().unwrap()
    }

    #[test]
    fn trees_are_always_consistent_with_height_levels() {
        let net = balanced_four();
        let map = match check_time_consistency(&net) {
            TimeConsistency::Consistent(m) => m,
            other => panic!("expected consistent, got {other:?}"),
        };
        assert_eq!(map.time(net.root()), &Dyadic::from_integer(2));
        for leaf in net.leaves() {
            assert!(map.time(leaf).is_zero());
        }
        map.validate(&net).unwrap();
    }

    #[test]
    fn donor_above_its_own_recipient_is_infeasible() {
        // transfer whose donor sits on the support path above its recipient:
        // the merged class must be strictly older than itself.
        let net = balanced_four();
        let a = net.leaf_by_taxon("A").unwrap();
        let p = net.node_by_name("p").unwrap();
        // donor above p's edge, recipient above A's edge; p is A's parent
        let ins = insert_transfer(&net, p, a).unwrap();
        let out = check_time_consistency(&ins.network);
        match out {
            TimeConsistency::Infeasible { class_cycle } => {
                assert!(!class_cycle.is_empty());
            }
            TimeConsistency::Consistent(_) => panic!("expected infeasible"),
        }
    }

    #[test]
    fn crossing_transfers_between_incomparable_subtrees_can_cycle() {
        // Two transfers: one from deep under p into the edge above q, one
        // from deep under q into the edge above p. The first forces
        // class(above-q) to be younger than p's child level; the second
        // forces class(above-p) younger than q's child level; together the
        // classes chase each other and no assignment exists.
        let net = balanced_four();
        let a = net.leaf_by_taxon("A").unwrap();
        let d = net.leaf_by_taxon("C").unwrap();
        let p = net.node_by_name("p").unwrap();
        let q = net.node_by_name("q").unwrap();
        let ins = insert_transfer(&net, a, q).unwrap();
        let net2 = ins.network;
        let ins2 = insert_transfer(&net2, d, p).unwrap();
        let out = check_time_consistency(&ins2.network);
        match out {
            TimeConsistency::Infeasible { class_cycle } => {
                assert!(class_cycle.len() >= 2, "cycle spans several classes");
            }
            TimeConsistency::Consistent(_) => panic!("expected infeasible"),
        }
    }
}
