//! Immutable weighted graphs in adjacency form.
//!
//! Nodes are dense indices `0..node_count`. Edges carry strictly positive,
//! finite weights; self-loops are rejected and parallel edges collapse to the
//! lightest one. Undirected graphs store each edge once (with `from < to`) and
//! expose a symmetric adjacency.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Dense node index in `0..node_count`.
pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Directedness {
    Directed,
    Undirected,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub from: NodeId,
    pub to: NodeId,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    node_count: usize,
    directedness: Directedness,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<(NodeId, f64)>>,
    // Empty for undirected graphs, where `out_adj` is already symmetric.
    in_adj: Vec<Vec<(NodeId, f64)>>,
}

impl Graph {
    /// Builds a graph from an edge list.
    ///
    /// Edges are canonically sorted; for undirected graphs `(u, v)` and
    /// `(v, u)` denote the same edge. Parallel edges keep the minimum weight.
    pub fn new<I>(node_count: usize, edges: I, directedness: Directedness) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId, f64)>,
    {
        if node_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut unique: BTreeMap<(NodeId, NodeId), f64> = BTreeMap::new();
        for (from, to, weight) in edges {
            for node in [from, to] {
                if node >= node_count {
                    return Err(Error::NodeOutOfRange { node, node_count });
                }
            }
            if !(weight.is_finite() && weight > 0.0) {
                return Err(Error::InvalidWeight { from, to, weight });
            }
            if from == to {
                return Err(Error::SelfLoop(from));
            }
            let key = match directedness {
                Directedness::Directed => (from, to),
                Directedness::Undirected => (from.min(to), from.max(to)),
            };
            unique
                .entry(key)
                .and_modify(|w| *w = w.min(weight))
                .or_insert(weight);
        }

        let edges: Vec<Edge> = unique
            .into_iter()
            .map(|((from, to), weight)| Edge { from, to, weight })
            .collect();

        let mut out_adj = vec![Vec::new(); node_count];
        let mut in_adj = Vec::new();
        match directedness {
            Directedness::Directed => {
                in_adj = vec![Vec::new(); node_count];
                for e in &edges {
                    out_adj[e.from].push((e.to, e.weight));
                    in_adj[e.to].push((e.from, e.weight));
                }
            }
            Directedness::Undirected => {
                for e in &edges {
                    out_adj[e.from].push((e.to, e.weight));
                    out_adj[e.to].push((e.from, e.weight));
                }
                for list in &mut out_adj {
                    list.sort_unstable_by_key(|&(n, _)| n);
                }
            }
        }

        Ok(Graph {
            node_count,
            directedness,
            edges,
            out_adj,
            in_adj,
        })
    }

    pub fn directed<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId, f64)>,
    {
        Self::new(node_count, edges, Directedness::Directed)
    }

    pub fn undirected<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId, f64)>,
    {
        Self::new(node_count, edges, Directedness::Undirected)
    }

    /// Builds a graph where every edge has weight 1.0.
    pub fn unweighted<I>(node_count: usize, edges: I, directedness: Directedness) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        Self::new(
            node_count,
            edges.into_iter().map(|(u, v)| (u, v, 1.0)),
            directedness,
        )
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn directedness(&self) -> Directedness {
        self.directedness
    }

    pub fn is_directed(&self) -> bool {
        self.directedness == Directedness::Directed
    }

    /// Stored edges in canonical order (sorted by `(from, to)`; `from < to`
    /// for undirected graphs).
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn nodes(&self) -> std::ops::Range<NodeId> {
        0..self.node_count
    }

    /// Neighbors reachable by following one edge out of `v`. For undirected
    /// graphs this is every adjacent node.
    pub fn out_neighbors(&self, v: NodeId) -> &[(NodeId, f64)] {
        &self.out_adj[v]
    }

    /// Nodes with an edge into `v`. Equal to [`Graph::out_neighbors`] for
    /// undirected graphs.
    pub fn in_neighbors(&self, v: NodeId) -> &[(NodeId, f64)] {
        match self.directedness {
            Directedness::Directed => &self.in_adj[v],
            Directedness::Undirected => &self.out_adj[v],
        }
    }

    pub fn out_degree(&self, v: NodeId) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: NodeId) -> usize {
        self.in_neighbors(v).len()
    }

    pub fn contains_edge(&self, from: NodeId, to: NodeId) -> bool {
        from < self.node_count
            && self.out_adj[from]
                .iter()
                .any(|&(neighbor, _)| neighbor == to)
    }

    pub fn edge_weight(&self, from: NodeId, to: NodeId) -> Option<f64> {
        if from >= self.node_count {
            return None;
        }
        self.out_adj[from]
            .iter()
            .find(|&&(neighbor, _)| neighbor == to)
            .map(|&(_, w)| w)
    }

    pub(crate) fn check_node(&self, node: NodeId) -> Result<()> {
        if node < self.node_count {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node,
                node_count: self.node_count,
            })
        }
    }

    /// Extracts the subgraph induced by `nodes`: every edge of `self` whose
    /// endpoints both lie in the set, re-indexed in ascending parent order.
    /// Duplicate entries in `nodes` are ignored.
    pub fn induced_subgraph(&self, nodes: &[NodeId]) -> Result<Subgraph> {
        if nodes.is_empty() {
            return Err(Error::EmptyNodeSet);
        }
        let mut parent: Vec<NodeId> = nodes.to_vec();
        parent.sort_unstable();
        parent.dedup();

        let mut local = vec![usize::MAX; self.node_count];
        for (i, &v) in parent.iter().enumerate() {
            self.check_node(v)?;
            local[v] = i;
        }

        let edges = parent.iter().flat_map(|&u| {
            let local = &local;
            self.out_adj[u].iter().filter_map(move |&(v, w)| {
                let (lu, lv) = (local[u], local[v]);
                // Undirected adjacency lists each edge twice; keep one copy.
                let keep =
                    lv != usize::MAX && (self.directedness == Directedness::Directed || lu < lv);
                keep.then_some((lu, lv, w))
            })
        });
        let graph = Graph::new(parent.len(), edges, self.directedness)?;
        Ok(Subgraph { parent, graph })
    }
}

/// An induced subgraph together with the mapping back to its parent graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Subgraph {
    parent: Vec<NodeId>,
    graph: Graph,
}

impl Subgraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Parent NodeIds, ascending; position `i` is local node `i`.
    pub fn parent_nodes(&self) -> &[NodeId] {
        &self.parent
    }

    pub fn to_parent(&self, local: NodeId) -> NodeId {
        self.parent[local]
    }

    pub fn to_local(&self, parent: NodeId) -> Option<NodeId> {
        self.parent.binary_search(&parent).ok()
    }

    pub fn into_parts(self) -> (Vec<NodeId>, Graph) {
        (self.parent, self.graph)
    }
}
