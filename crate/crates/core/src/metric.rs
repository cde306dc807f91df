//! Shortest-path distances and graph Voronoi diagrams.
//!
//! Distances follow edge direction: on a directed graph the distance from a
//! centroid `c` to a node `v` is the length of the shortest path `c -> v`.
//! Unreachable nodes get `f64::INFINITY`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Which adjacency to follow during a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Follow edges forward: distances from the sources.
    Outgoing,
    /// Follow edges backward: distances into the sources.
    Incoming,
}

#[derive(Debug, Clone, Copy)]
struct State {
    dist: f64,
    label: usize,
    node: NodeId,
}

impl PartialEq for State {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for State {}

impl PartialOrd for State {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for State {
    // Reversed so the max-heap pops the smallest (dist, label) first.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.label.cmp(&self.label))
            .then_with(|| other.node.cmp(&self.node))
    }
}

/// Multi-source Dijkstra with lexicographic `(distance, source index)` labels.
///
/// Returns per-node distance to the nearest source and the index (into
/// `sources`) of that source, ties going to the smaller index. Stale heap
/// entries are skipped rather than decreased in place.
pub(crate) fn labelled_dijkstra(
    g: &Graph,
    sources: &[NodeId],
    direction: Direction,
) -> (Vec<f64>, Vec<Option<usize>>) {
    let n = g.node_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut label: Vec<Option<usize>> = vec![None; n];
    let mut heap = BinaryHeap::new();

    for (i, &s) in sources.iter().enumerate() {
        if label[s].is_none() {
            dist[s] = 0.0;
            label[s] = Some(i);
            heap.push(State {
                dist: 0.0,
                label: i,
                node: s,
            });
        }
    }

    while let Some(State {
        dist: d,
        label: l,
        node: u,
    }) = heap.pop()
    {
        if d > dist[u] || (d == dist[u] && Some(l) != label[u]) {
            continue;
        }
        let neighbors = match direction {
            Direction::Outgoing => g.out_neighbors(u),
            Direction::Incoming => g.in_neighbors(u),
        };
        for &(v, w) in neighbors {
            let candidate = d + w;
            let better = match candidate.total_cmp(&dist[v]) {
                Ordering::Less => true,
                Ordering::Equal => label[v].is_none_or(|lv| l < lv),
                Ordering::Greater => false,
            };
            if better {
                dist[v] = candidate;
                label[v] = Some(l);
                heap.push(State {
                    dist: candidate,
                    label: l,
                    node: v,
                });
            }
        }
    }
    (dist, label)
}

/// Single-source shortest-path distances from `source`, following edge
/// direction on directed graphs.
pub fn sssp(g: &Graph, source: NodeId) -> Result<Vec<f64>> {
    g.check_node(source)?;
    Ok(labelled_dijkstra(g, &[source], Direction::Outgoing).0)
}

/// Shortest-path distances from every node *into* `target`.
pub fn sssp_incoming(g: &Graph, target: NodeId) -> Result<Vec<f64>> {
    g.check_node(target)?;
    Ok(labelled_dijkstra(g, &[target], Direction::Incoming).0)
}

/// Partition of the reachable nodes into cells, one per centroid.
#[derive(Debug, Clone, PartialEq)]
pub struct VoronoiDiagram {
    centroids: Vec<NodeId>,
    cell_of: Vec<Option<usize>>,
    cells: Vec<Vec<NodeId>>,
    distance: Vec<f64>,
}

impl VoronoiDiagram {
    pub fn centroids(&self) -> &[NodeId] {
        &self.centroids
    }

    /// Cell index of every node, `None` for nodes no centroid reaches.
    pub fn cell_of(&self) -> &[Option<usize>] {
        &self.cell_of
    }

    /// Per-centroid member lists, each sorted ascending.
    pub fn cells(&self) -> &[Vec<NodeId>] {
        &self.cells
    }

    pub fn cell(&self, index: usize) -> &[NodeId] {
        &self.cells[index]
    }

    /// Distance from each node's assigned centroid (infinite if unassigned).
    pub fn distances(&self) -> &[f64] {
        &self.distance
    }

    pub fn unreachable(&self) -> Vec<NodeId> {
        self.cell_of
            .iter()
            .enumerate()
            .filter_map(|(v, c)| c.is_none().then_some(v))
            .collect()
    }

    pub fn unreachable_count(&self) -> usize {
        self.cell_of.iter().filter(|c| c.is_none()).count()
    }

    /// True when both diagrams put every node in the same cell index.
    pub fn same_partition(&self, other: &VoronoiDiagram) -> bool {
        self.cell_of == other.cell_of
    }
}

/// Assigns every node to the centroid closest to it (distance measured from
/// the centroid), breaking ties by the centroid's position in `centroids`.
/// Nodes no centroid can reach are left unassigned.
pub fn voronoi_diagram(g: &Graph, centroids: &[NodeId]) -> Result<VoronoiDiagram> {
    if centroids.is_empty() {
        return Err(Error::EmptyCentroids);
    }
    let mut seen = vec![false; g.node_count()];
    for &c in centroids {
        g.check_node(c)?;
        if std::mem::replace(&mut seen[c], true) {
            return Err(Error::DuplicateCentroid(c));
        }
    }

    let (distance, cell_of) = labelled_dijkstra(g, centroids, Direction::Outgoing);
    let mut cells = vec![Vec::new(); centroids.len()];
    for (v, cell) in cell_of.iter().enumerate() {
        if let Some(i) = *cell {
            cells[i].push(v);
        }
    }
    Ok(VoronoiDiagram {
        centroids: centroids.to_vec(),
        cell_of,
        cells,
        distance,
    })
}
