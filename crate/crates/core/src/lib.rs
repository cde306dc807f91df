//! k-means clustering for graphs.
//!
//! The classic Lloyd iteration alternates between assigning points to their
//! nearest centroid and moving each centroid to the mean of its cluster.
//! Graphs have no mean, so this crate replaces the two stages as follows:
//!
//! * **assignment**: the graph Voronoi diagram of the centroids under
//!   shortest-path distance ([`voronoi_diagram`]);
//! * **update**: each cell's new centroid is the node of highest centrality
//!   in the subgraph the cell induces ([`update_centroids`]), PageRank by
//!   default.
//!
//! Both directed and undirected graphs are supported. Point clouds and
//! triangle meshes are clustered through the graphs built in [`ingest`].
//!
//! ```
//! use graph_kmeans::{cluster, ClusteringConfig, Directedness, Graph};
//!
//! // Two triangles joined by a single bridge edge.
//! let g = Graph::unweighted(
//!     6,
//!     [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
//!     Directedness::Undirected,
//! )?;
//! let result = cluster(&g, &ClusteringConfig::new(2).with_seed(7))?;
//! assert_eq!(result.cluster_sizes().iter().sum::<usize>(), 6);
//! # Ok::<(), graph_kmeans::Error>(())
//! ```

pub mod centrality;
pub mod cli;
pub mod clustering;
pub mod dot;
mod error;
pub mod graph;
pub mod ingest;
pub mod metric;
pub mod report;

pub use centrality::{
    closeness_centrality, degree_centrality, eigenvector_centrality, harmonic_centrality, pagerank,
    Centrality, CentralityScores, Measure, PageRankParams,
};
pub use clustering::{
    cluster, cluster_from, cluster_with, initialize_centroids, update_centroids, ClusteringConfig,
    ClusteringResult, ClusteringState,
};
pub use dot::write_dot;
pub use error::{Error, Result};
pub use graph::{Directedness, Edge, Graph, NodeId, Subgraph};
pub use ingest::{LabelTable, MeshSurface, PointCloud};
pub use metric::{sssp, voronoi_diagram, VoronoiDiagram};
pub use report::{write_assignment_json, RunReport};
