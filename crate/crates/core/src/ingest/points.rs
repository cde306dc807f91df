use std::collections::HashMap;
use std::io::BufRead;

use super::strip_comment;
use crate::error::{Error, Result};
use crate::graph::{Directedness, Graph, NodeId};

/// Points in R^n with a fixed dimension, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    dim: usize,
    coords: Vec<f64>,
}

impl PointCloud {
    pub fn new<P: AsRef<[f64]>>(points: &[P]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let dim = first.as_ref().len();
        if dim == 0 {
            return Err(Error::InvalidParameter(
                "points must have at least one coordinate".into(),
            ));
        }
        let mut coords = Vec::with_capacity(dim * points.len());
        for (i, p) in points.iter().enumerate() {
            let p = p.as_ref();
            if p.len() != dim {
                return Err(Error::InvalidParameter(format!(
                    "point {i} has dimension {}, expected {dim}",
                    p.len()
                )));
            }
            if let Some(x) = p.iter().find(|x| !x.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "point {i} has non-finite coordinate {x}"
                )));
            }
            coords.extend_from_slice(p);
        }
        Ok(PointCloud { dim, coords })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        euclidean(self.point(i), self.point(j))
    }
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Reads one point per line. The dimension is fixed by the first row.
pub fn read_point_cloud<R: BufRead>(reader: R) -> Result<PointCloud> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let data = strip_comment(&line);
        if data.is_empty() {
            continue;
        }
        let row = data
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| Error::parse(line_no, format!("invalid coordinate `{t}`")))
            })
            .collect::<Result<Vec<f64>>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(Error::parse(
                    line_no,
                    format!(
                        "ragged row: {} coordinates, expected {}",
                        row.len(),
                        first.len()
                    ),
                ));
            }
        }
        rows.push(row);
    }
    PointCloud::new(&rows)
}

/// How [`neighborhood_graph_with`] finds candidate pairs. Both produce the
/// same edge set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NeighborhoodMethod {
    /// Compare every pair of points.
    BruteForce,
    /// Bucket points into a uniform grid of side roughly `epsilon` and only
    /// compare points in adjacent buckets. Falls back to the pair scan above
    /// four dimensions.
    #[default]
    Grid,
}

// Grid cells are slightly wider than epsilon so rounding in `x / side` can
// never push two points within epsilon more than one bucket apart.
const GRID_SLACK: f64 = 1.0 + 1e-9;
const GRID_MAX_DIM: usize = 4;

/// Builds the epsilon-neighborhood graph: an undirected edge joins every pair
/// of distinct points at Euclidean distance `<= epsilon`, weighted by that
/// distance. Uses the grid accelerator.
pub fn neighborhood_graph(pc: &PointCloud, epsilon: f64) -> Result<Graph> {
    neighborhood_graph_with(pc, epsilon, NeighborhoodMethod::default())
}

pub fn neighborhood_graph_with(
    pc: &PointCloud,
    epsilon: f64,
    method: NeighborhoodMethod,
) -> Result<Graph> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be positive and finite, got {epsilon}"
        )));
    }
    let mut edges = match method {
        NeighborhoodMethod::Grid if pc.dim() <= GRID_MAX_DIM => grid_pairs(pc, epsilon),
        _ => brute_force_pairs(pc, epsilon),
    };
    edges.sort_unstable_by_key(|&(i, j, _)| (i, j));
    if let Some(&(i, j, _)) = edges.iter().find(|e| e.2 == 0.0) {
        return Err(Error::CoincidentPoints(i, j));
    }
    Graph::new(pc.len(), edges, Directedness::Undirected)
}

fn brute_force_pairs(pc: &PointCloud, epsilon: f64) -> Vec<(NodeId, NodeId, f64)> {
    let n = pc.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter_map(|(i, j)| {
            let d = pc.distance(i, j);
            (d <= epsilon).then_some((i, j, d))
        })
        .collect()
}

fn grid_pairs(pc: &PointCloud, epsilon: f64) -> Vec<(NodeId, NodeId, f64)> {
    let side = epsilon * GRID_SLACK;
    let key = |p: &[f64]| -> Vec<i64> { p.iter().map(|x| (x / side).floor() as i64).collect() };

    let mut buckets: HashMap<Vec<i64>, Vec<NodeId>> = HashMap::new();
    for (i, p) in pc.points().enumerate() {
        buckets.entry(key(p)).or_default().push(i);
    }

    let offsets = neighbor_offsets(pc.dim());
    let mut edges = Vec::new();
    let mut probe = vec![0i64; pc.dim()];
    for (i, p) in pc.points().enumerate() {
        let home = key(p);
        for offset in &offsets {
            for (slot, (h, o)) in probe.iter_mut().zip(home.iter().zip(offset)) {
                *slot = h + o;
            }
            let Some(members) = buckets.get(&probe) else {
                continue;
            };
            for &j in members.iter().filter(|&&j| j > i) {
                let d = pc.distance(i, j);
                if d <= epsilon {
                    edges.push((i, j, d));
                }
            }
        }
    }
    edges
}

/// All vectors in {-1, 0, 1}^dim.
fn neighbor_offsets(dim: usize) -> Vec<Vec<i64>> {
    (0..dim).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix| {
                (-1..=1).map(move |step| {
                    let mut next = prefix.clone();
                    next.push(step);
                    next
                })
            })
            .collect()
    })
}
