//! The graph model: binary tree-based networks with an explicit partition of
//! the edges into a spanning support tree and transfer edges.
//!
//! A valid network is a rooted DAG in which every node matches one of the
//! degree profiles below (over support and transfer edges combined):
//!
//! | kind         | in | out |
//! |--------------|----|-----|
//! | root         | 0  | 2   |
//! | tree node    | 1  | 2   |
//! | reticulation | 2  | 1   |
//! | subdivision  | 1  | 1   |
//! | leaf         | 1  | 0   |
//!
//! plus the single-node network. The support edges alone must form a tree on
//! all nodes whose leaf set equals the network's leaf set, every reticulation
//! has exactly one incoming transfer and one incoming support edge, and the
//! taxon map assigns a distinct taxon to every leaf.
//!
//! Networks are immutable after construction; edits (transfer insertion,
//! pruning) produce new values, so recognition and the oracles can share
//! instances across threads freely. Node ids are stable across such edits:
//! removed ids are never reused within the derived value.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Deref;

use crate::error::CoreError;

/// Dense handle for a node within one network instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    fn new(i: usize) -> Self {
        NodeId(u32::try_from(i).expect("node count fits in u32"))
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Node classification derived from the degree table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Root,
    TreeNode,
    Reticulation,
    Subdivision,
    Leaf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Slot {
    name: String,
    taxon: Option<String>,
}

/// A tree-based (LGT) network with known support/transfer edge partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LgtNetwork {
    slots: Vec<Option<Slot>>,
    support_parent: Vec<Option<NodeId>>,
    support_children: Vec<Vec<NodeId>>,
    transfer_in: Vec<Vec<NodeId>>,
    transfer_out: Vec<Vec<NodeId>>,
    root: NodeId,
    node_count: usize,
}

impl LgtNetwork {
    pub fn builder() -> NetworkBuilder {
        NetworkBuilder::default()
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// All live node ids, ascending.
    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_some())
            .map(|(i, _)| NodeId::new(i))
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.slots.get(v.index()).is_some_and(|s| s.is_some())
    }

    /// Upper bound on `NodeId::index` values; for slot-indexed scratch masks.
    pub(crate) fn slot_len(&self) -> usize {
        self.slots.len()
    }

    /// Post-order over the support tree, children in stored order.
    pub fn support_postorder(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.node_count);
        let mut stack = vec![(self.root, 0usize)];
        while let Some(&(v, idx)) = stack.last() {
            let kids = self.support_children(v);
            if idx < kids.len() {
                stack.last_mut().expect("nonempty stack").1 += 1;
                stack.push((kids[idx], 0));
            } else {
                out.push(v);
                stack.pop();
            }
        }
        out
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    fn slot(&self, v: NodeId) -> &Slot {
        self.slots[v.index()].as_ref().expect("live node id")
    }

    pub fn name(&self, v: NodeId) -> &str {
        &self.slot(v).name
    }

    pub fn taxon(&self, v: NodeId) -> Option<&str> {
        self.slot(v).taxon.as_deref()
    }

    pub fn node_by_name(&self, name: &str) -> Option<NodeId> {
        self.node_ids().find(|&v| self.name(v) == name)
    }

    pub fn leaf_by_taxon(&self, taxon: &str) -> Option<NodeId> {
        self.node_ids().find(|&v| self.taxon(v) == Some(taxon))
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.out_degree(v) == 0
    }

    /// Leaves in ascending id order.
    pub fn leaves(&self) -> Vec<NodeId> {
        self.node_ids().filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn support_parent(&self, v: NodeId) -> Option<NodeId> {
        self.support_parent[v.index()]
    }

    pub fn support_children(&self, v: NodeId) -> &[NodeId] {
        &self.support_children[v.index()]
    }

    pub fn transfer_parents(&self, v: NodeId) -> &[NodeId] {
        &self.transfer_in[v.index()]
    }

    pub fn transfer_children(&self, v: NodeId) -> &[NodeId] {
        &self.transfer_out[v.index()]
    }

    pub fn in_degree(&self, v: NodeId) -> usize {
        usize::from(self.support_parent[v.index()].is_some()) + self.transfer_in[v.index()].len()
    }

    pub fn out_degree(&self, v: NodeId) -> usize {
        self.support_children[v.index()].len() + self.transfer_out[v.index()].len()
    }

    pub fn kind(&self, v: NodeId) -> NodeKind {
        match (self.in_degree(v), self.out_degree(v)) {
            (0, _) => NodeKind::Root,
            (1, 0) => NodeKind::Leaf,
            (1, 2) => NodeKind::TreeNode,
            (2, 1) => NodeKind::Reticulation,
            (1, 1) => NodeKind::Subdivision,
            (i, o) => unreachable!("invalid degrees ({i}, {o}) in a validated network"),
        }
    }

    pub fn out_neighbors(&self, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.support_children[v.index()]
            .iter()
            .chain(self.transfer_out[v.index()].iter())
            .copied()
    }

    pub fn in_neighbors(&self, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.support_parent[v.index()]
            .iter()
            .chain(self.transfer_in[v.index()].iter())
            .copied()
    }

    /// Support edges in parent-id order, children in stored order.
    pub fn support_edges(&self) -> Vec<(NodeId, NodeId)> {
        let mut edges = Vec::with_capacity(self.node_count.saturating_sub(1));
        for u in self.node_ids() {
            for &v in self.support_children(u) {
                edges.push((u, v));
            }
        }
        edges
    }

    pub fn transfer_edges(&self) -> Vec<(NodeId, NodeId)> {
        let mut edges = Vec::new();
        for u in self.node_ids() {
            for &v in self.transfer_children(u) {
                edges.push((u, v));
            }
        }
        edges.sort();
        edges
    }

    pub fn transfer_count(&self) -> usize {
        self.transfer_in.iter().map(Vec::len).sum()
    }

    pub fn is_tree(&self) -> bool {
        self.transfer_count() == 0
            && self
                .node_ids()
                .all(|v| !matches!(self.kind(v), NodeKind::Subdivision | NodeKind::Reticulation))
    }

    /// True when `anc` lies on the support path from the root to `v`
    /// (every node is its own ancestor).
    pub fn is_support_ancestor(&self, anc: NodeId, v: NodeId) -> bool {
        let mut cur = Some(v);
        while let Some(x) = cur {
            if x == anc {
                return true;
            }
            cur = self.support_parent(x);
        }
        false
    }

    /// Directed reachability over support and transfer edges combined.
    pub fn reaches(&self, from: NodeId, to: NodeId) -> bool {
        let mut seen = vec![false; self.slots.len()];
        let mut stack = vec![from];
        seen[from.index()] = true;
        while let Some(x) = stack.pop() {
            if x == to {
                return true;
            }
            for y in self.out_neighbors(x) {
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    /// Nodes reachable from `v` by directed paths that avoid `forbidden`.
    /// Contains `v` itself; callers must not put `v` in `forbidden`.
    pub fn reachable_set(
        &self,
        v: NodeId,
        forbidden: &BTreeSet<NodeId>,
    ) -> Result<BTreeSet<NodeId>, CoreError> {
        if !self.contains(v) {
            return Err(CoreError::VertexNotFound(v));
        }
        debug_assert!(!forbidden.contains(&v), "start node must not be forbidden");
        if forbidden.contains(&v) {
            return Ok(BTreeSet::new());
        }
        let mut mask = vec![false; self.slots.len()];
        for f in forbidden {
            if self.contains(*f) {
                mask[f.index()] = true;
            }
        }
        let mut visited = vec![false; self.slots.len()];
        self.reach_into(v, &mask, &mut visited);
        Ok(self
            .node_ids()
            .filter(|x| visited[x.index()])
            .collect())
    }

    /// Slot-mask flavor of reachability used by the recognition hot path.
    pub(crate) fn reach_into(&self, v: NodeId, forbidden: &[bool], visited: &mut [bool]) {
        let mut stack = vec![v];
        visited[v.index()] = true;
        while let Some(x) = stack.pop() {
            for y in self.out_neighbors(x) {
                if !forbidden[y.index()] && !visited[y.index()] {
                    visited[y.index()] = true;
                    stack.push(y);
                }
            }
        }
    }

    /// The support tree `(V, E_S)`: the same nodes with every transfer edge
    /// dropped. Former transfer endpoints remain as subdivision nodes.
    pub fn support_tree(&self) -> LgtNetwork {
        let mut net = self.clone();
        for l in &mut net.transfer_in {
            l.clear();
        }
        for l in &mut net.transfer_out {
            l.clear();
        }
        net
    }

    /// The base tree: the support tree with every subdivision node
    /// suppressed. Surviving nodes keep their ids.
    pub fn base_tree(&self) -> Tree {
        let mut net = self.support_tree();
        // A root left unary in the support tree is suppressed downward.
        while net.support_children(net.root).len() == 1 {
            let child = net.support_children(net.root)[0];
            net.support_parent[child.index()] = None;
            let old = net.root;
            net.root = child;
            net.tombstone(old);
        }
        let unary: Vec<NodeId> = net
            .node_ids()
            .filter(|&v| v != net.root && net.support_children(v).len() == 1)
            .collect();
        for v in unary {
            net.suppress_unary(v);
        }
        Tree::try_new(net).expect("suppressing subdivision nodes yields a tree")
    }

    pub fn validate(&self) -> Result<(), CoreError> {
        if self.node_count == 0 {
            return Err(CoreError::EmptyNetwork);
        }
        let mut names = HashSet::new();
        for v in self.node_ids() {
            if !names.insert(self.name(v)) {
                return Err(CoreError::DuplicateName { name: self.name(v).to_string() });
            }
        }

        let roots: Vec<NodeId> = self.node_ids().filter(|&v| self.in_degree(v) == 0).collect();
        if roots.is_empty() {
            return Err(CoreError::CyclicGraph { cycle: self.named(&self.find_cycle()) });
        }
        if roots.len() > 1 {
            return Err(CoreError::MultipleRoots {
                roots: roots.iter().map(|&v| self.name(v).to_string()).collect(),
            });
        }
        if roots[0] != self.root {
            return Err(CoreError::SupportNotTree {
                node: self.name(roots[0]).to_string(),
                reason: "is the unique source but not the designated root".into(),
            });
        }

        if self.node_count == 1 {
            let v = self.root;
            if self.taxon(v).is_none() {
                return Err(CoreError::SigmaNotBijection {
                    detail: format!("single node {:?} has no taxon", self.name(v)),
                });
            }
            return Ok(());
        }

        let mut taxa = HashSet::new();
        for v in self.node_ids() {
            let (ind, outd) = (self.in_degree(v), self.out_degree(v));
            let ok = if v == self.root {
                (ind, outd) == (0, 2)
            } else {
                matches!((ind, outd), (1, 0) | (1, 2) | (2, 1) | (1, 1))
            };
            if !ok {
                return Err(CoreError::BadDegrees {
                    node: self.name(v).to_string(),
                    in_degree: ind,
                    out_degree: outd,
                });
            }
            match self.taxon(v) {
                Some(t) if self.is_leaf(v) => {
                    if !taxa.insert(t) {
                        return Err(CoreError::SigmaNotBijection {
                            detail: format!("taxon {t:?} is mapped by two leaves"),
                        });
                    }
                }
                Some(t) => {
                    return Err(CoreError::SigmaNotBijection {
                        detail: format!(
                            "internal node {:?} carries taxon {t:?}",
                            self.name(v)
                        ),
                    });
                }
                None if self.is_leaf(v) => {
                    return Err(CoreError::SigmaNotBijection {
                        detail: format!("leaf {:?} has no taxon", self.name(v)),
                    });
                }
                None => {}
            }
        }

        if let Some(cycle) = self.try_find_cycle() {
            return Err(CoreError::CyclicGraph { cycle: self.named(&cycle) });
        }

        for v in self.node_ids() {
            if v != self.root && self.support_parent(v).is_none() {
                return Err(CoreError::SupportNotTree {
                    node: self.name(v).to_string(),
                    reason: "has no support parent".into(),
                });
            }
            if !self.is_leaf(v) && self.support_children(v).is_empty() {
                return Err(CoreError::SupportNotTree {
                    node: self.name(v).to_string(),
                    reason: "is a support-tree leaf but not a network leaf".into(),
                });
            }
        }
        Ok(())
    }

    fn named(&self, nodes: &[NodeId]) -> Vec<String> {
        nodes.iter().map(|&v| self.name(v).to_string()).collect()
    }

    fn find_cycle(&self) -> Vec<NodeId> {
        self.try_find_cycle().unwrap_or_default()
    }

    /// Kahn's algorithm; on failure extracts one directed cycle by walking
    /// in-neighbors among the unconsumed nodes.
    fn try_find_cycle(&self) -> Option<Vec<NodeId>> {
        let n = self.slots.len();
        let mut indeg = vec![0usize; n];
        let mut live = 0usize;
        for v in self.node_ids() {
            indeg[v.index()] = self.in_degree(v);
            live += 1;
        }
        let mut queue: VecDeque<NodeId> =
            self.node_ids().filter(|&v| indeg[v.index()] == 0).collect();
        let mut consumed = 0usize;
        while let Some(v) = queue.pop_front() {
            consumed += 1;
            for w in self.out_neighbors(v) {
                indeg[w.index()] -= 1;
                if indeg[w.index()] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if consumed == live {
            return None;
        }
        let start = self.node_ids().find(|&v| indeg[v.index()] > 0).expect("leftover node");
        let mut path = vec![start];
        let mut seen = HashMap::new();
        seen.insert(start, 0usize);
        let mut cur = start;
        loop {
            let prev = self
                .in_neighbors(cur)
                .find(|p| indeg[p.index()] > 0)
                .expect("cyclic node has a cyclic in-neighbor");
            if let Some(&at) = seen.get(&prev) {
                let mut cycle: Vec<NodeId> = path[at..].to_vec();
                cycle.reverse();
                return Some(cycle);
            }
            seen.insert(prev, path.len());
            path.push(prev);
            cur = prev;
        }
    }

    // -- crate-internal mutators used by completion, pruning and io --------

    pub(crate) fn alloc_node(&mut self, name: String, taxon: Option<String>) -> NodeId {
        let id = NodeId::new(self.slots.len());
        self.slots.push(Some(Slot { name, taxon }));
        self.support_parent.push(None);
        self.support_children.push(Vec::new());
        self.transfer_in.push(Vec::new());
        self.transfer_out.push(Vec::new());
        self.node_count += 1;
        id
    }

    fn tombstone(&mut self, v: NodeId) {
        self.slots[v.index()] = None;
        self.support_parent[v.index()] = None;
        self.support_children[v.index()].clear();
        self.transfer_in[v.index()].clear();
        self.transfer_out[v.index()].clear();
        self.node_count -= 1;
    }

    /// Splits the incoming support edge of `child`, returning the new node.
    /// The new node takes `child`'s position in its parent's child list so
    /// serialization order is stable.
    pub(crate) fn subdivide_above(&mut self, child: NodeId, name: String) -> NodeId {
        let parent = self.support_parent(child).expect("subdivided node has a support parent");
        let mid = self.alloc_node(name, None);
        let pos = self.support_children[parent.index()]
            .iter()
            .position(|&c| c == child)
            .expect("child listed under parent");
        self.support_children[parent.index()][pos] = mid;
        self.support_parent[mid.index()] = Some(parent);
        self.support_children[mid.index()].push(child);
        self.support_parent[child.index()] = Some(mid);
        mid
    }

    pub(crate) fn add_transfer(&mut self, donor: NodeId, recipient: NodeId) {
        self.transfer_out[donor.index()].push(recipient);
        self.transfer_in[recipient.index()].push(donor);
    }

    /// Removes the transfer edge and suppresses the two endpoints, which the
    /// removal leaves as subdivision nodes.
    pub(crate) fn remove_transfer_and_suppress(&mut self, donor: NodeId, recipient: NodeId) {
        let pos = self.transfer_out[donor.index()]
            .iter()
            .position(|&v| v == recipient)
            .expect("transfer edge present");
        self.transfer_out[donor.index()].remove(pos);
        let pos = self.transfer_in[recipient.index()]
            .iter()
            .position(|&v| v == donor)
            .expect("transfer edge present");
        self.transfer_in[recipient.index()].remove(pos);
        self.suppress_unary(donor);
        self.suppress_unary(recipient);
    }

    fn suppress_unary(&mut self, v: NodeId) {
        debug_assert_eq!(self.support_children(v).len(), 1);
        debug_assert!(self.transfer_in[v.index()].is_empty());
        debug_assert!(self.transfer_out[v.index()].is_empty());
        let child = self.support_children[v.index()][0];
        match self.support_parent(v) {
            Some(p) => {
                let pos = self.support_children[p.index()]
                    .iter()
                    .position(|&c| c == v)
                    .expect("node listed under parent");
                self.support_children[p.index()][pos] = child;
                self.support_parent[child.index()] = Some(p);
            }
            None => {
                self.support_parent[child.index()] = None;
                self.root = child;
            }
        }
        self.tombstone(v);
    }

    /// Fresh node names of the form `n<k>` that collide with nothing.
    pub(crate) fn fresh_names(&self, count: usize) -> Vec<String> {
        let used: HashSet<&str> = self.node_ids().map(|v| self.name(v)).collect();
        let mut next = 1 + self
            .node_ids()
            .filter_map(|v| self.name(v).strip_prefix('n').and_then(|s| s.parse::<u64>().ok()))
            .max()
            .unwrap_or(0);
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let candidate = format!("n{next}");
            next += 1;
            if !used.contains(candidate.as_str()) {
                out.push(candidate);
            }
        }
        out
    }
}

/// A network with no transfer edges and no subdivision or reticulation
/// nodes: a rooted binary tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree(LgtNetwork);

impl Tree {
    pub fn try_new(net: LgtNetwork) -> Result<Tree, CoreError> {
        net.validate()?;
        if net.transfer_count() != 0 {
            return Err(CoreError::NotATree { reason: "network has transfer edges".into() });
        }
        for v in net.node_ids() {
            if matches!(net.kind(v), NodeKind::Subdivision | NodeKind::Reticulation) {
                return Err(CoreError::NotATree {
                    reason: format!("node {:?} is not binary", net.name(v)),
                });
            }
        }
        Ok(Tree(net))
    }

    pub fn as_network(&self) -> &LgtNetwork {
        &self.0
    }

    pub fn into_network(self) -> LgtNetwork {
        self.0
    }
}

impl Deref for Tree {
    type Target = LgtNetwork;

    fn deref(&self) -> &LgtNetwork {
        &self.0
    }
}

/// Collects raw nodes and edge lists, then validates everything at `build`.
#[derive(Debug, Default)]
pub struct NetworkBuilder {
    nodes: Vec<(Option<String>, Option<String>)>,
    support_edges: Vec<(NodeId, NodeId)>,
    transfer_edges: Vec<(NodeId, NodeId)>,
}

impl NetworkBuilder {
    /// An internal node; unnamed nodes get `n<k>` names at build time.
    pub fn add_internal(&mut self, name: Option<&str>) -> NodeId {
        let id = NodeId::new(self.nodes.len());
        self.nodes.push((name.map(str::to_string), None));
        id
    }

    /// A leaf named by its taxon.
    pub fn add_leaf(&mut self, taxon: &str) -> NodeId {
        let id = NodeId::new(self.nodes.len());
        self.nodes.push((Some(taxon.to_string()), Some(taxon.to_string())));
        id
    }

    pub fn support_edge(&mut self, from: NodeId, to: NodeId) -> &mut Self {
        self.support_edges.push((from, to));
        self
    }

    pub fn transfer_edge(&mut self, from: NodeId, to: NodeId) -> &mut Self {
        self.transfer_edges.push((from, to));
        self
    }

    pub fn build(self) -> Result<LgtNetwork, CoreError> {
        if self.nodes.is_empty() {
            return Err(CoreError::EmptyNetwork);
        }
        let n = self.nodes.len();
        let mut used: HashSet<String> =
            self.nodes.iter().filter_map(|(name, _)| name.clone()).collect();
        let mut next_auto = 1u64;
        let mut slots = Vec::with_capacity(n);
        for (name, taxon) in self.nodes {
            let name = match name {
                Some(name) => name,
                None => loop {
                    let candidate = format!("n{next_auto}");
                    next_auto += 1;
                    if used.insert(candidate.clone()) {
                        break candidate;
                    }
                },
            };
            slots.push(Some(Slot { name, taxon }));
        }

        let mut net = LgtNetwork {
            slots,
            support_parent: vec![None; n],
            support_children: vec![Vec::new(); n],
            transfer_in: vec![Vec::new(); n],
            transfer_out: vec![Vec::new(); n],
            root: NodeId::new(0),
            node_count: n,
        };

        let check = |v: NodeId| -> Result<(), CoreError> {
            if v.index() < n {
                Ok(())
            } else {
                Err(CoreError::VertexNotFound(v))
            }
        };
        let mut seen_edges = HashSet::new();
        for &(u, v) in self.support_edges.iter().chain(self.transfer_edges.iter()) {
            check(u)?;
            check(v)?;
            if !seen_edges.insert((u, v)) {
                return Err(CoreError::DuplicateEdge {
                    from: net.name(u).to_string(),
                    to: net.name(v).to_string(),
                });
            }
            if u == v {
                return Err(CoreError::CyclicGraph { cycle: vec![net.name(u).to_string()] });
            }
        }
        for (u, v) in self.support_edges {
            if net.support_parent[v.index()].is_some() {
                return Err(CoreError::SupportNotTree {
                    node: net.name(v).to_string(),
                    reason: "has two support parents".into(),
                });
            }
            net.support_parent[v.index()] = Some(u);
            net.support_children[u.index()].push(v);
        }
        for (u, v) in self.transfer_edges {
            net.add_transfer(u, v);
        }

        let roots: Vec<NodeId> = net.node_ids().filter(|&v| net.in_degree(v) == 0).collect();
        match roots.as_slice() {
            [] => {
                return Err(CoreError::CyclicGraph { cycle: net.named(&net.find_cycle()) });
            }
            [r] => net.root = *r,
            _ => {
                return Err(CoreError::MultipleRoots {
                    roots: roots.iter().map(|&v| net.name(v).to_string()).collect(),
                });
            }
        }
        net.validate()?;
        Ok(net)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::insert_transfer;

    /// Root with two leaf children.
    pub(crate) fn cherry() -> LgtNetwork {
        let mut b = LgtNetwork::builder();
        let r = b.add_internal(Some("r"));
        let x = b.add_leaf("X");
        let y = b.add_leaf("Y");
        b.support_edge(r, x).support_edge(r, y);
        b.build().unwrap()
    }

    #[test]
    fn single_node_network_is_its_own_root_and_leaf() {
        let mut b = LgtNetwork::builder();
        b.add_leaf("X");
        let net = b.build().unwrap();
        assert_eq!(net.node_count(), 1);
        assert_eq!(net.leaves(), vec![net.root()]);
        assert!(net.is_leaf(net.root()));
        assert_eq!(net.kind(net.root()), NodeKind::Root);
    }

    #[test]
    fn cherry_is_a_tree() {
        let net = cherry();
        assert!(net.is_tree());
        assert!(Tree::try_new(net).is_ok());
    }

    #[test]
    fn transfer_between_leaves_is_rejected_by_degrees() {
        let mut b = LgtNetwork::builder();
        let r = b.add_internal(Some("r"));
        let x = b.add_leaf("X");
        let y = b.add_leaf("Y");
        b.support_edge(r, x).support_edge(r, y).transfer_edge(x, y);
        match b.build() {
            Err(CoreError::BadDegrees { node, .. }) => assert_eq!(node, "Y"),
            other => panic!("expected BadDegrees, got {other:?}"),
        }
    }

    #[test]
    fn builder_rejects_structural_defects() {
        // two roots
        let mut b = LgtNetwork::builder();
        let r1 = b.add_internal(Some("r1"));
        let r2 = b.add_internal(Some("r2"));
        let (a, c, d, e) = (b.add_leaf("A"), b.add_leaf("C"), b.add_leaf("D"), b.add_leaf("E"));
        b.support_edge(r1, a).support_edge(r1, c).support_edge(r2, d).support_edge(r2, e);
        assert!(matches!(b.build(), Err(CoreError::MultipleRoots { .. })));

        // duplicate leaf taxon
        let mut b = LgtNetwork::builder();
        let r = b.add_internal(None);
        let x1 = b.add_leaf("X");
        let x2 = b.add_leaf("X");
        b.support_edge(r, x1).support_edge(r, x2);
        assert!(matches!(b.build(), Err(CoreError::DuplicateName { .. })));
    }

    #[test]
    fn support_tree_keeps_transfer_endpoints_as_subdivisions() {
        // tree input: the support tree is the network itself
        let net = cherry();
        assert_eq!(net.support_tree(), net);

        // one transfer: two subdivision nodes in the support tree
        let mut b = LgtNetwork::builder();
        let r = b.add_internal(Some("r"));
        let p = b.add_internal(Some("p"));
        let (x, y, z) = (b.add_leaf("X"), b.add_leaf("Y"), b.add_leaf("Z"));
        b.support_edge(r, p).support_edge(r, z).support_edge(p, x).support_edge(p, y);
        let net = b.build().unwrap();
        let net = insert_transfer(&net, x, z).unwrap().network;
        let sup = net.support_tree();
        let subdivisions = |n: &LgtNetwork| {
            n.node_ids().filter(|&v| n.kind(v) == NodeKind::Subdivision).count()
        };
        assert_eq!(subdivisions(&sup), 2);

        // three transfers: six subdivision nodes
        let net = insert_transfer(&net, y, z).unwrap().network;
        let net = insert_transfer(&net, x, y).unwrap().network;
        assert_eq!(net.transfer_count(), 3);
        assert_eq!(subdivisions(&net.support_tree()), 6);
    }

    #[test]
    fn base_tree_suppresses_subdivision_chains() {
        // support chain r -> u1 -> u2 -> x plus (r, y): u1, u2 unattached
        // subdivision nodes; both are suppressed and surviving ids are kept.
        let mut b = LgtNetwork::builder();
        let r = b.add_internal(Some("r"));
        let u1 = b.add_internal(Some("u1"));
        let u2 = b.add_internal(Some("u2"));
        let x = b.add_leaf("X");
        let y = b.add_leaf("Y");
        b.support_edge(r, u1).support_edge(u1, u2).support_edge(u2, x).support_edge(r, y);
        let net = b.build().unwrap();
        let base = net.base_tree();
        assert_eq!(base.node_count(), 3);
        assert_eq!(base.support_parent(x), Some(r));
        assert!(!base.contains(u1) && !base.contains(u2));

        // tree input: unchanged
        let net = cherry();
        assert_eq!(net.base_tree().as_network(), &net);
    }

    #[test]
    fn reachable_set_examples() {
        let mut b = LgtNetwork::builder();
        let r = b.add_internal(Some("r"));
        let p = b.add_internal(Some("p"));
        let (x, y, z) = (b.add_leaf("X"), b.add_leaf("Y"), b.add_leaf("Z"));
        b.support_edge(r, p).support_edge(r, z).support_edge(p, x).support_edge(p, y);
        let net = b.build().unwrap();

        let none = BTreeSet::new();
        assert_eq!(net.reachable_set(x, &none).unwrap(), BTreeSet::from([x]));
        assert_eq!(net.reachable_set(r, &none).unwrap(), net.node_ids().collect());
        let children: BTreeSet<NodeId> = [p, z].into();
        assert_eq!(net.reachable_set(r, &children).unwrap(), BTreeSet::from([r]));
        assert!(net.reachable_set(NodeId::new(99), &none).is_err());
    }

    #[test]
    fn fresh_names_skip_existing() {
        let net = cherry(); // has auto name? r is named; leaves X, Y
        assert_eq!(net.fresh_names(2), vec!["n1", "n2"]);
        let mut b = LgtNetwork::builder();
        let r = b.add_internal(Some("n3"));
        let x = b.add_leaf("n1");
        let y = b.add_leaf("Y");
        b.support_edge(r, x).support_edge(r, y);
        let net = b.build().unwrap();
        assert_eq!(net.fresh_names(2), vec!["n4", "n5"]);
    }
}
