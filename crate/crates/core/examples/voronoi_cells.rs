//! Graph Voronoi cells on a weighted road network, and how direction changes
//! them: on a directed graph a cell only contains what its centroid can reach.
//!
//! cargo run --example voronoi_cells

use graph_kmeans::{voronoi_diagram, Graph, VoronoiDiagram};

pub fn run_example() -> Result<(VoronoiDiagram, VoronoiDiagram), Box<dyn std::error::Error>> {
    let roads = [
        (0, 1, 2.0),
        (1, 2, 2.0),
        (2, 3, 1.0),
        (3, 4, 4.0),
        (4, 5, 1.0),
        (1, 5, 3.0),
        (5, 6, 2.5),
    ];
    let centroids = [0, 4];

    let undirected = voronoi_diagram(&Graph::undirected(7, roads)?, &centroids)?;
    let one_way = voronoi_diagram(&Graph::directed(7, roads)?, &centroids)?;

    for (name, d) in [("two-way", &undirected), ("one-way", &one_way)] {
        println!("{name} streets:");
        for (i, cell) in d.cells().iter().enumerate() {
            println!("  centroid {} -> {cell:?}", d.centroids()[i]);
        }
        println!("  unreachable: {:?}", d.unreachable());
    }
    Ok((undirected, one_way))
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
