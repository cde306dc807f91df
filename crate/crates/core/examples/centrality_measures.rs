//! Compares the built-in centrality measures on a "lollipop": a 4-clique with
//! a 3-node tail. Any of them can drive the clustering update stage.
//!
//! cargo run --example centrality_measures

use graph_kmeans::{Centrality, Directedness, Graph, Measure, NodeId};

pub fn run_example() -> Result<Vec<(&'static str, NodeId)>, Box<dyn std::error::Error>> {
    let g = Graph::unweighted(
        7,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
        ],
        Directedness::Undirected,
    )?;
    let mut winners = Vec::new();
    for name in Measure::NAMES {
        let measure: Measure = name.parse()?;
        let scores = measure.scores(&g)?;
        let formatted: Vec<String> = scores.values().iter().map(|s| format!("{s:.3}")).collect();
        let best = scores.argmax().unwrap();
        println!("{name:>12}: [{}] -> node {best}", formatted.join(", "));
        winners.push((name, best));
    }
    Ok(winners)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
