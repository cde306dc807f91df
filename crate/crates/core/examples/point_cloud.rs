//! Clusters two interleaved half-moons through their epsilon-neighborhood
//! graph. Distances are measured along each moon, so the clusters follow the
//! shapes rather than splitting the plane in half.
//!
//! cargo run --example point_cloud

use std::f64::consts::PI;

use graph_kmeans::ingest::neighborhood_graph;
use graph_kmeans::{cluster, ClusteringConfig, ClusteringResult, PointCloud};

pub const PER_MOON: usize = 60;

pub fn moons() -> PointCloud {
    let mut points = Vec::with_capacity(2 * PER_MOON);
    for i in 0..PER_MOON {
        let t = PI * i as f64 / (PER_MOON - 1) as f64;
        points.push([t.cos(), t.sin()]);
        points.push([1.0 - t.cos(), 0.5 - t.sin()]);
    }
    PointCloud::new(&points).unwrap()
}

pub fn run_example() -> Result<ClusteringResult, Box<dyn std::error::Error>> {
    let cloud = moons();
    let g = neighborhood_graph(&cloud, 0.2)?;
    println!(
        "{} points, {} neighborhood edges",
        g.node_count(),
        g.edge_count()
    );

    // The moons are separate components, so a centroid only reaches its own
    // moon. Seed 1 starts one centroid on each.
    let result = cluster(&g, &ClusteringConfig::new(2).with_seed(1))?;
    for (i, cell) in result.diagram().cells().iter().enumerate() {
        let upper = cell.iter().filter(|&&v| v % 2 == 0).count();
        println!(
            "cluster {i}: {} points ({upper} from the upper moon, {} from the lower)",
            cell.len(),
            cell.len() - upper
        );
    }
    println!("unassigned: {}", result.unassigned_count());
    Ok(result)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
