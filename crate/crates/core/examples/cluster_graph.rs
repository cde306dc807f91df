//! Clusters a "connected caveman" graph: four 6-cliques joined in a ring by
//! single edges, with k = 4.
//!
//! cargo run --example cluster_graph

use graph_kmeans::{cluster, ClusteringConfig, ClusteringResult, Directedness, Graph};

pub const CAVES: usize = 4;
pub const CAVE_SIZE: usize = 6;

pub fn caveman() -> Graph {
    let mut edges = Vec::new();
    for cave in 0..CAVES {
        let base = cave * CAVE_SIZE;
        for u in 0..CAVE_SIZE {
            for v in u + 1..CAVE_SIZE {
                edges.push((base + u, base + v));
            }
        }
        // Bridge from this cave's last node to the next cave's first.
        edges.push((base + CAVE_SIZE - 1, ((cave + 1) % CAVES) * CAVE_SIZE));
    }
    Graph::unweighted(CAVES * CAVE_SIZE, edges, Directedness::Undirected).unwrap()
}

pub fn run_example() -> Result<ClusteringResult, Box<dyn std::error::Error>> {
    let g = caveman();
    // Seed 1 places the initial centroids in four different caves.
    let result = cluster(&g, &ClusteringConfig::new(CAVES).with_seed(1))?;

    println!(
        "converged = {} after {} iterations",
        result.converged(),
        result.iterations()
    );
    for (i, cell) in result.diagram().cells().iter().enumerate() {
        println!("cluster {i} (centroid {}): {cell:?}", result.centroids()[i]);
    }
    println!("centroid history: {:?}", result.history);
    Ok(result)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
