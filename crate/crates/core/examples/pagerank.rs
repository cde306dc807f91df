//! PageRank scores on a small directed web graph, including a dangling page.
//!
//! cargo run --example pagerank

use graph_kmeans::{pagerank, Directedness, Graph, PageRankParams};

pub fn run_example() -> Result<Vec<f64>, Box<dyn std::error::Error>> {
    // 4 has no out-links; its rank is spread evenly over every page.
    let g = Graph::unweighted(
        5,
        [(0, 1), (1, 2), (2, 0), (3, 2), (2, 4), (1, 4)],
        Directedness::Directed,
    )?;
    let scores = pagerank(&g, &PageRankParams::default())?;
    for (v, score) in scores.values().iter().enumerate() {
        println!("page {v}: {score:.6}");
    }
    println!("most central page: {}", scores.argmax().unwrap());
    Ok(scores.into_values())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
