//! Node centrality measures.
//!
//! Every measure implements [`Centrality`], which is what the clustering
//! update stage is generic over. [`Measure`] is the closed set of built-in
//! measures, selectable by name (`"pagerank"`, `"harmonic"`, `"closeness"`,
//! `"eigenvector"`, `"degree"`).
//!
//! Edge weights are only used by the distance-based measures (harmonic and
//! closeness). PageRank and eigenvector centrality look at connectivity
//! alone. On directed graphs, harmonic and closeness centrality use distances
//! *into* a node, so a node scores high when it is easily reached.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::metric::{labelled_dijkstra, Direction};

/// Scores within this relative distance of the maximum count as tied.
const TIE_TOLERANCE: f64 = 1e-12;

/// Per-node scores produced by a centrality measure.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityScores {
    values: Vec<f64>,
    measure: &'static str,
}

impl CentralityScores {
    pub fn new(values: Vec<f64>, measure: &'static str) -> Self {
        CentralityScores { values, measure }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn measure(&self) -> &'static str {
        self.measure
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Node with the highest score. Scores within a relative `1e-12` of the
    /// maximum are treated as equal and the smallest NodeId among them wins,
    /// so floating-point noise on symmetric graphs cannot decide the result.
    pub fn argmax(&self) -> Option<NodeId> {
        let max = self
            .values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        if !max.is_finite() {
            return None;
        }
        let threshold = max - TIE_TOLERANCE * max.abs().max(1.0);
        self.values.iter().position(|&x| x >= threshold)
    }
}

/// A centrality measure that can score any graph.
pub trait Centrality {
    fn name(&self) -> &'static str;
    fn scores(&self, g: &Graph) -> Result<CentralityScores>;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageRankParams {
    /// Probability of following an out-edge instead of jumping uniformly.
    pub damping: f64,
    /// Stop once the L1 change between iterations drops below this.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PageRankParams {
    fn default() -> Self {
        PageRankParams {
            damping: 0.85,
            tolerance: 1e-10,
            max_iterations: 1000,
        }
    }
}

impl PageRankParams {
    pub fn with_damping(damping: f64) -> Self {
        PageRankParams {
            damping,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.damping > 0.0 && self.damping < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "damping must lie in (0, 1), got {}",
                self.damping
            )));
        }
        validate_iteration(self.tolerance, self.max_iterations)
    }
}

fn validate_iteration(tolerance: f64, max_iterations: usize) -> Result<()> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    if max_iterations == 0 {
        return Err(Error::InvalidParameter(
            "max_iterations must be positive".into(),
        ));
    }
    Ok(())
}

/// PageRank by power iteration.
///
/// Iterates `PR(v) = (1 - a)/n + a * (dangling/n + sum over in-neighbors u
/// of PR(u)/out(u))` from the uniform vector, where `dangling` is the total rank
/// held by nodes without out-edges. Undirected edges count in both
/// directions. Transitions are uniform over out-edges regardless of weight.
/// The result is L1-normalized.
pub fn pagerank(g: &Graph, params: &PageRankParams) -> Result<CentralityScores> {
    params.validate()?;
    let n = g.node_count();
    let nf = n as f64;
    let alpha = params.damping;
    let inv_out: Vec<f64> = g
        .nodes()
        .map(|v| match g.out_degree(v) {
            0 => 0.0,
            d => 1.0 / d as f64,
        })
        .collect();

    let mut rank = vec![1.0 / nf; n];
    let mut next = vec![0.0; n];
    for _ in 0..params.max_iterations {
        let dangling: f64 = g
            .nodes()
            .filter(|&v| g.out_degree(v) == 0)
            .map(|v| rank[v])
            .sum();
        let base = (1.0 - alpha) / nf + alpha * dangling / nf;
        for v in g.nodes() {
            let inflow: f64 = g
                .in_neighbors(v)
                .iter()
                .map(|&(u, _)| rank[u] * inv_out[u])
                .sum();
            next[v] = base + alpha * inflow;
        }
        let change: f64 = rank.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut rank, &mut next);
        if change < params.tolerance {
            break;
        }
    }

    let total: f64 = rank.iter().sum();
    rank.iter_mut().for_each(|x| *x /= total);
    Ok(CentralityScores::new(rank, "pagerank"))
}

/// Harmonic centrality: sum of `1/d(u, v)` over every other node `u` that
/// can reach `v`.
pub fn harmonic_centrality(g: &Graph) -> Result<CentralityScores> {
    let values = g
        .nodes()
        .map(|v| {
            incoming_distances(g, v)
                .into_iter()
                .filter(|d| d.is_finite() && *d > 0.0)
                .map(|d| 1.0 / d)
                .sum()
        })
        .collect();
    Ok(CentralityScores::new(values, "harmonic"))
}

/// Closeness centrality in the reachability-scaled form
/// `((r - 1) / total distance) * ((r - 1) / (n - 1))`, where `r` counts the
/// nodes (including `v`) that can reach `v`. Nodes nothing reaches score 0.
pub fn closeness_centrality(g: &Graph) -> Result<CentralityScores> {
    let n = g.node_count();
    let values = g
        .nodes()
        .map(|v| {
            let (reached, total) = incoming_distances(g, v)
                .into_iter()
                .filter(|d| d.is_finite())
                .fold((0usize, 0.0), |(r, s), d| (r + 1, s + d));
            if reached <= 1 {
                return 0.0;
            }
            let others = (reached - 1) as f64;
            (others / total) * (others / (n - 1) as f64)
        })
        .collect();
    Ok(CentralityScores::new(values, "closeness"))
}

fn incoming_distances(g: &Graph, v: NodeId) -> Vec<f64> {
    labelled_dijkstra(g, &[v], Direction::Incoming).0
}

/// Eigenvector centrality by power iteration on the unweighted adjacency.
///
/// Each step computes `x <- (A + I)^T x` and L2-normalizes. The identity
/// shift leaves the eigenvectors unchanged but keeps the iteration from
/// oscillating on bipartite graphs, where `A` has eigenvalues `+l` and `-l`.
/// Fails with [`Error::NotConverged`] if the L2 change never drops below
/// `tolerance`, and also when the graph has no edges (then `A^T x` is the
/// zero vector and there is no dominant eigenvector to find).
pub fn eigenvector_centrality(
    g: &Graph,
    tolerance: f64,
    max_iterations: usize,
) -> Result<CentralityScores> {
    validate_iteration(tolerance, max_iterations)?;
    let not_converged = |iterations| Error::NotConverged {
        measure: "eigenvector",
        iterations,
    };
    if g.edge_count() == 0 {
        return Err(not_converged(0));
    }

    let n = g.node_count();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut next = vec![0.0; n];
    for _ in 0..max_iterations {
        for v in g.nodes() {
            next[v] = x[v] + g.in_neighbors(v).iter().map(|&(u, _)| x[u]).sum::<f64>();
        }
        let norm = next.iter().map(|a| a * a).sum::<f64>().sqrt();
        next.iter_mut().for_each(|a| *a /= norm);
        let change = x
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        std::mem::swap(&mut x, &mut next);
        if change < tolerance {
            return Ok(CentralityScores::new(x, "eigenvector"));
        }
    }
    Err(not_converged(max_iterations))
}

/// Total degree per node: in + out on directed graphs, plain degree otherwise.
pub fn degree_centrality(g: &Graph) -> Result<CentralityScores> {
    let values = g
        .nodes()
        .map(|v| {
            let d = if g.is_directed() {
                g.in_degree(v) + g.out_degree(v)
            } else {
                g.out_degree(v)
            };
            d as f64
        })
        .collect();
    Ok(CentralityScores::new(values, "degree"))
}

/// Built-in centrality measures with their parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    PageRank(PageRankParams),
    Harmonic,
    Closeness,
    Eigenvector {
        tolerance: f64,
        max_iterations: usize,
    },
    Degree,
}

impl Default for Measure {
    fn default() -> Self {
        Measure::PageRank(PageRankParams::default())
    }
}

impl Measure {
    pub const NAMES: [&'static str; 5] =
        ["pagerank", "harmonic", "closeness", "eigenvector", "degree"];

    pub fn eigenvector() -> Self {
        Measure::Eigenvector {
            tolerance: 1e-10,
            max_iterations: 1000,
        }
    }

    pub fn damping(&self) -> Option<f64> {
        match self {
            Measure::PageRank(p) => Some(p.damping),
            _ => None,
        }
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pagerank" => Ok(Measure::default()),
            "harmonic" => Ok(Measure::Harmonic),
            "closeness" => Ok(Measure::Closeness),
            "eigenvector" => Ok(Measure::eigenvector()),
            "degree" => Ok(Measure::Degree),
            _ => Err(Error::UnknownMeasure(s.to_string())),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Centrality for Measure {
    fn name(&self) -> &'static str {
        match self {
            Measure::PageRank(_) => "pagerank",
            Measure::Harmonic => "harmonic",
            Measure::Closeness => "closeness",
            Measure::Eigenvector { .. } => "eigenvector",
            Measure::Degree => "degree",
        }
    }

    fn scores(&self, g: &Graph) -> Result<CentralityScores> {
        match *self {
            Measure::PageRank(ref params) => pagerank(g, params),
            Measure::Harmonic => harmonic_centrality(g),
            Measure::Closeness => closeness_centrality(g),
            Measure::Eigenvector {
                tolerance,
                max_iterations,
            } => eigenvector_centrality(g, tolerance, max_iterations),
            Measure::Degree => degree_centrality(g),
        }
    }
}
