//! Lloyd-style k-means on graphs.
//!
//! Each round has two stages. The assignment stage computes the graph Voronoi
//! diagram of the current centroids. The update stage replaces every centroid
//! by the most central node of its cell, scored on the subgraph the cell
//! induces. The loop stops once the diagram has repeated for
//! `stability_window` consecutive rounds, or after `max_iterations` rounds.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::centrality::{Centrality, Measure};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::metric::{voronoi_diagram, VoronoiDiagram};

#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringConfig {
    pub k: usize,
    /// Centrality used to elect centroids. Defaults to PageRank with
    /// damping 0.85.
    pub measure: Measure,
    /// Upper bound on assignment stages.
    pub max_iterations: usize,
    /// Number of consecutive identical diagrams that counts as converged.
    /// Must be at least 2.
    pub stability_window: usize,
    pub rng_seed: u64,
}

impl ClusteringConfig {
    pub fn new(k: usize) -> Self {
        ClusteringConfig {
            k,
            measure: Measure::default(),
            max_iterations: 100,
            stability_window: 2,
            rng_seed: 0,
        }
    }

    pub fn with_measure(mut self, measure: Measure) -> Self {
        self.measure = measure;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.rng_seed = seed;
        self
    }

    pub fn with_max_iterations(mut self, max_iterations: usize) -> Self {
        self.max_iterations = max_iterations;
        self
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_k(g, self.k)?;
        if self.max_iterations == 0 {
            return Err(Error::InvalidParameter(
                "max_iterations must be positive".into(),
            ));
        }
        if self.stability_window < 2 {
            return Err(Error::InvalidParameter(format!(
                "stability_window must be at least 2, got {}",
                self.stability_window
            )));
        }
        if let Measure::PageRank(params) = &self.measure {
            params.validate()?;
        }
        Ok(())
    }
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k == 0 || k > g.node_count() {
        return Err(Error::InvalidK {
            k,
            node_count: g.node_count(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringState {
    /// Centroids that produced `diagram`.
    pub centroids: Vec<NodeId>,
    pub diagram: VoronoiDiagram,
    /// Assignment stages executed.
    pub iteration: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringResult {
    pub state: ClusteringState,
    /// Cluster index per node; `None` when no centroid reached the node.
    pub assignment: Vec<Option<usize>>,
    /// Centroid list used by each assignment stage, in order.
    pub history: Vec<Vec<NodeId>>,
}

impl ClusteringResult {
    pub fn centroids(&self) -> &[NodeId] {
        &self.state.centroids
    }

    pub fn diagram(&self) -> &VoronoiDiagram {
        &self.state.diagram
    }

    pub fn converged(&self) -> bool {
        self.state.converged
    }

    pub fn iterations(&self) -> usize {
        self.state.iteration
    }

    pub fn k(&self) -> usize {
        self.state.centroids.len()
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        self.state.diagram.cells().iter().map(Vec::len).collect()
    }

    pub fn unassigned_count(&self) -> usize {
        self.assignment.iter().filter(|a| a.is_none()).count()
    }
}

/// Samples `k` distinct nodes uniformly at random. The same seed always
/// yields the same list.
pub fn initialize_centroids(g: &Graph, k: usize, rng_seed: u64) -> Result<Vec<NodeId>> {
    check_k(g, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    Ok(index::sample(&mut rng, g.node_count(), k).into_vec())
}

/// Elects a new centroid for every cell of `diagram`: the node with the
/// highest centrality on the cell's induced subgraph, smallest NodeId on
/// ties. Cells are scored in parallel; the output keeps cell order.
pub fn update_centroids<C>(g: &Graph, diagram: &VoronoiDiagram, measure: &C) -> Result<Vec<NodeId>>
where
    C: Centrality + Sync + ?Sized,
{
    diagram
        .cells()
        .par_iter()
        .map(|cell| {
            if let [only] = cell[..] {
                return Ok(only);
            }
            let sub = g.induced_subgraph(cell)?;
            let scores = measure.scores(sub.graph())?;
            let best = scores.argmax().ok_or(Error::NotConverged {
                measure: measure.name(),
                iterations: 0,
            })?;
            Ok(sub.to_parent(best))
        })
        .collect()
}

/// Runs the clustering loop from centroids drawn by [`initialize_centroids`].
pub fn cluster(g: &Graph, config: &ClusteringConfig) -> Result<ClusteringResult> {
    config.validate(g)?;
    let initial = initialize_centroids(g, config.k, config.rng_seed)?;
    cluster_with(g, config, initial, &config.measure)
}

/// Runs the clustering loop from explicit initial centroids. `config.k` must
/// match their count.
pub fn cluster_from(
    g: &Graph,
    config: &ClusteringConfig,
    initial: Vec<NodeId>,
) -> Result<ClusteringResult> {
    config.validate(g)?;
    cluster_with(g, config, initial, &config.measure)
}

/// Runs the clustering loop with any centrality measure, ignoring
/// `config.measure`.
pub fn cluster_with<C>(
    g: &Graph,
    config: &ClusteringConfig,
    initial: Vec<NodeId>,
    measure: &C,
) -> Result<ClusteringResult>
where
    C: Centrality + Sync + ?Sized,
{
    config.validate(g)?;
    if initial.len() != config.k {
        return Err(Error::InvalidParameter(format!(
            "expected {} initial centroids, got {}",
            config.k,
            initial.len()
        )));
    }

    let mut centroids = initial;
    let mut history = Vec::new();
    let mut previous: Option<VoronoiDiagram> = None;
    let mut streak = 0;
    let mut iteration = 0;

    let (diagram, converged) = loop {
        let diagram = voronoi_diagram(g, &centroids)?;
        history.push(centroids.clone());
        iteration += 1;

        streak = match &previous {
            Some(p) if p.same_partition(&diagram) => streak + 1,
            _ => 1,
        };
        if streak >= config.stability_window {
            break (diagram, true);
        }
        if iteration >= config.max_iterations {
            break (diagram, false);
        }
        centroids = update_centroids(g, &diagram, measure)?;
        previous = Some(diagram);
    };

    Ok(ClusteringResult {
        assignment: diagram.cell_of().to_vec(),
        state: ClusteringState {
            centroids,
            diagram,
            iteration,
            converged,
        },
        history,
    })
}
