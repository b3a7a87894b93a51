//! Structural errors shared by the graph model.

use crate::network::NodeId;

/// Errors raised while building or validating networks, trees, and matrices.
///
/// Variants carry the name of the offending node or edge where one exists.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("duplicate name {name:?}")]
    DuplicateName { name: String },

    #[error("matrix rows are not rectangular")]
    NotRectangular,

    #[error("network has no nodes")]
    EmptyNetwork,

    #[error("node id {0} does not exist in this network")]
    VertexNotFound(NodeId),

    #[error("graph contains a directed cycle through {}", cycle.join(" -> "))]
    CyclicGraph { cycle: Vec<String> },

    #[error("multiple in-degree-0 nodes: {}", roots.join(", "))]
    MultipleRoots { roots: Vec<String> },

    #[error("node {node:?} has in-degree {in_degree} and out-degree {out_degree}, which matches no node kind")]
    BadDegrees { node: String, in_degree: usize, out_degree: usize },

    #[error("support edges do not form a tree: node {node:?} {reason}")]
    SupportNotTree { node: String, reason: String },

    #[error("leaf-to-taxon map is not a bijection: {detail}")]
    SigmaNotBijection { detail: String },

    #[error("duplicate edge {from:?} -> {to:?}")]
    DuplicateEdge { from: String, to: String },

    #[error("not a tree: {reason}")]
    NotATree { reason: String },
}
