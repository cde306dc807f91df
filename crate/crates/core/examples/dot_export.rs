//! Reads a labelled edge list, clusters it and prints Graphviz DOT plus the
//! assignment JSON. Pipe the DOT into `dot -Tpng` to draw it.
//!
//! cargo run --example dot_export

use graph_kmeans::ingest::read_edge_list;
use graph_kmeans::{
    cluster, write_assignment_json, write_dot, ClusteringConfig, Directedness, RunReport,
};

const EDGES: &str = "\
# two friend groups and one acquaintance between them
ana ben
ana cleo
ben cleo
cleo dev
dev eli
eli fay
dev fay
fay gus
";

pub fn run_example() -> Result<(String, String), Box<dyn std::error::Error>> {
    let (g, labels) = read_edge_list(EDGES.as_bytes(), Directedness::Undirected)?;
    let config = ClusteringConfig::new(2).with_seed(3);
    let result = cluster(&g, &config)?;

    let mut dot = Vec::new();
    write_dot(&g, &result, &labels, &mut dot)?;
    let report = RunReport::new("inline", "graph", None, &g, &config, &result, &labels);
    let mut json = Vec::new();
    write_assignment_json(&result, &labels, &report, &mut json)?;

    let (dot, json) = (String::from_utf8(dot)?, String::from_utf8(json)?);
    print!("{dot}");
    print!("{json}");
    Ok((dot, json))
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
