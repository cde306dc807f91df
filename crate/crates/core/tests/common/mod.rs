//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;
use std::sync::atomic::{AtomicBool, Ordering};

use graph_kmeans::{
    sssp, Centrality, CentralityScores, ClusteringResult, Directedness, Graph, NodeId, Result,
};
use nalgebra::{DMatrix, DVector};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn directedness(directed: bool) -> Directedness {
    if directed {
        Directedness::Directed
    } else {
        Directedness::Undirected
    }
}

/// Erdős–Rényi style graph. Integer weights in `1..=max_weight` make distance
/// ties common, which is what the tie-break checks need.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    n: usize,
    p: f64,
    directed: bool,
    max_weight: u32,
) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || (!directed && v < u) {
                continue;
            }
            if rng.random_bool(p) {
                edges.push((u, v, rng.random_range(1..=max_weight) as f64));
            }
        }
    }
    Graph::new(n, edges, directedness(directed)).unwrap()
}

/// Random graph with real-valued weights, so distances tie with probability 0.
pub fn random_real_graph<R: Rng>(rng: &mut R, n: usize, p: f64, directed: bool) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || (!directed && v < u) {
                continue;
            }
            if rng.random_bool(p) {
                edges.push((u, v, rng.random_range(0.5..3.0)));
            }
        }
    }
    Graph::new(n, edges, directedness(directed)).unwrap()
}

pub fn clique_edges(nodes: std::ops::Range<usize>) -> Vec<(usize, usize)> {
    nodes
        .clone()
        .flat_map(|u| nodes.clone().filter(move |&v| v > u).map(move |v| (u, v)))
        .collect()
}

/// Disjoint union of two cliques on `0..size` and `size..2*size`.
pub fn two_cliques(size: usize) -> Graph {
    let mut edges = clique_edges(0..size);
    edges.extend(clique_edges(size..2 * size));
    Graph::unweighted(2 * size, edges, Directedness::Undirected).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::unweighted(n, (1..n).map(|v| (v - 1, v)), Directedness::Undirected).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::unweighted(
        leaves + 1,
        (1..=leaves).map(|v| (0, v)),
        Directedness::Undirected,
    )
    .unwrap()
}

pub fn cycle(n: usize, d: Directedness) -> Graph {
    Graph::unweighted(n, (0..n).map(|v| (v, (v + 1) % n)), d).unwrap()
}

pub fn complete(n: usize, d: Directedness) -> Graph {
    let edges: Vec<_> = match d {
        Directedness::Directed => (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect(),
        Directedness::Undirected => clique_edges(0..n),
    };
    Graph::unweighted(n, edges, d).unwrap()
}

/// Relabels node `v` as `perm[v]`.
pub fn permute(g: &Graph, perm: &[NodeId]) -> Graph {
    Graph::new(
        g.node_count(),
        g.edges()
            .iter()
            .map(|e| (perm[e.from], perm[e.to], e.weight)),
        g.directedness(),
    )
    .unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<NodeId> {
    let mut perm: Vec<NodeId> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// PageRank as the solution of `(I - a P^T) x = (1 - a)/n * 1`, where `P` is
/// the row-stochastic transition matrix with dangling rows set to uniform.
pub fn pagerank_oracle(g: &Graph, damping: f64) -> Vec<f64> {
    let n = g.node_count();
    let mut p = DMatrix::<f64>::zeros(n, n);
    for u in 0..n {
        let out = g.out_neighbors(u);
        if out.is_empty() {
            for v in 0..n {
                p[(u, v)] = 1.0 / n as f64;
            }
        } else {
            for &(v, _) in out {
                p[(u, v)] += 1.0 / out.len() as f64;
            }
        }
    }
    let system = DMatrix::<f64>::identity(n, n) - p.transpose() * damping;
    let rhs = DVector::<f64>::from_element(n, (1.0 - damping) / n as f64);
    let x = system
        .lu()
        .solve(&rhs)
        .expect("PageRank system is nonsingular");
    x.iter().copied().collect()
}

/// Bellman–Ford distances from `source`, following edge direction.
pub fn bellman_ford(g: &Graph, source: NodeId) -> Vec<f64> {
    let n = g.node_count();
    let mut dist = vec![f64::INFINITY; n];
    dist[source] = 0.0;
    let arcs: Vec<(usize, usize, f64)> = g
        .edges()
        .iter()
        .flat_map(|e| {
            let back = (!g.is_directed()).then_some((e.to, e.from, e.weight));
            std::iter::once((e.from, e.to, e.weight)).chain(back)
        })
        .collect();
    for _ in 0..n {
        let mut changed = false;
        for &(u, v, w) in &arcs {
            if dist[u] + w < dist[v] {
                dist[v] = dist[u] + w;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    dist
}

/// All-pairs distances `d[u][v]` by Floyd–Warshall.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.node_count();
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0.0;
    }
    for e in g.edges() {
        d[e.from][e.to] = d[e.from][e.to].min(e.weight);
        if !g.is_directed() {
            d[e.to][e.from] = d[e.to][e.from].min(e.weight);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Voronoi assignment from `k` independent single-source runs followed by a
/// per-node argmin, ties to the smallest centroid index.
pub fn voronoi_oracle(g: &Graph, centroids: &[NodeId]) -> Vec<Option<usize>> {
    let runs: Vec<Vec<f64>> = centroids.iter().map(|&c| sssp(g, c).unwrap()).collect();
    (0..g.node_count())
        .map(|v| {
            let mut best: Option<(f64, usize)> = None;
            for (i, dist) in runs.iter().enumerate() {
                let d = dist[v];
                if d.is_finite() && best.is_none_or(|(bd, _)| d < bd) {
                    best = Some((d, i));
                }
            }
            best.map(|(_, i)| i)
        })
        .collect()
}

/// Connected components of the node subset `nodes` inside `g`, ignoring
/// direction.
pub fn weakly_connected_within(g: &Graph, nodes: &[NodeId]) -> bool {
    if nodes.is_empty() {
        return true;
    }
    let mut inside = vec![false; g.node_count()];
    for &v in nodes {
        inside[v] = true;
    }
    let mut seen = vec![false; g.node_count()];
    let mut queue = VecDeque::from([nodes[0]]);
    seen[nodes[0]] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &(v, _) in g.out_neighbors(u).iter().chain(g.in_neighbors(u)) {
            if inside[v] && !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count == nodes.len()
}

/// Checks the partition laws of a clustering result, returning a description
/// of the first violation.
pub fn partition_violation(g: &Graph, r: &ClusteringResult) -> Option<String> {
    let n = g.node_count();
    let diagram = r.diagram();
    if r.assignment.len() != n {
        return Some(format!(
            "assignment has {} entries for {n} nodes",
            r.assignment.len()
        ));
    }
    let mut owner = vec![None; n];
    for (i, cell) in diagram.cells().iter().enumerate() {
        for &v in cell {
            if let Some(j) = owner[v] {
                return Some(format!("node {v} is in cells {j} and {i}"));
            }
            owner[v] = Some(i);
        }
    }
    if owner != r.assignment {
        return Some("assignment disagrees with diagram cells".into());
    }
    for (i, &c) in r.centroids().iter().enumerate() {
        if r.assignment[c] != Some(i) {
            return Some(format!("centroid {c} is not in its own cell {i}"));
        }
    }
    let assigned: usize = r.cluster_sizes().iter().sum();
    if assigned + r.unassigned_count() != n {
        return Some(format!(
            "{assigned} assigned + {} unassigned != {n}",
            r.unassigned_count()
        ));
    }
    if r.cluster_sizes().contains(&0) {
        return Some("empty cluster".into());
    }
    None
}

/// Wraps a measure and records whether any update stage had a near tie for
/// the maximum score.
pub struct TieDetecting<C> {
    pub inner: C,
    pub saw_tie: AtomicBool,
}

impl<C> TieDetecting<C> {
    pub fn new(inner: C) -> Self {
        TieDetecting {
            inner,
            saw_tie: AtomicBool::new(false),
        }
    }

    pub fn saw_tie(&self) -> bool {
        self.saw_tie.load(Ordering::Relaxed)
    }
}

impl<C: Centrality> Centrality for TieDetecting<C> {
    fn name(&self) -> &'static str {
        self.inner.name()
    }

    fn scores(&self, g: &Graph) -> Result<CentralityScores> {
        let scores = self.inner.scores(g)?;
        let mut sorted = scores.values().to_vec();
        sorted.sort_by(|a, b| b.total_cmp(a));
        if sorted.len() >= 2 && (sorted[0] - sorted[1]).abs() <= 1e-9 * sorted[0].abs().max(1.0) {
            self.saw_tie.store(true, Ordering::Relaxed);
        }
        Ok(scores)
    }
}
