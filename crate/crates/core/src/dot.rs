//! Graphviz DOT export with nodes filled by cluster.

use std::io::Write;

use crate::clustering::ClusteringResult;
use crate::error::Result;
use crate::graph::Graph;
use crate::ingest::LabelTable;
use crate::report::label_of;

/// Fill colors indexed by cluster, reused modulo its length.
pub const PALETTE: [&str; 12] = [
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c", "#fdbf6f", "#ff7f00",
    "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
];

pub const UNASSIGNED_COLOR: &str = "gray";

pub fn cluster_color(cluster: Option<usize>) -> &'static str {
    cluster.map_or(UNASSIGNED_COLOR, |c| PALETTE[c % PALETTE.len()])
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Writes `g` as DOT with one filled node per NodeId (ascending) and edges in
/// canonical order. Centroids get a thick outline.
pub fn write_dot<W: Write>(
    g: &Graph,
    result: &ClusteringResult,
    labels: &LabelTable,
    mut out: W,
) -> Result<()> {
    let (keyword, arrow) = if g.is_directed() {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let centroids = result.centroids();

    writeln!(out, "{keyword} clusters {{")?;
    writeln!(out, "  node [style=filled];")?;
    for v in g.nodes() {
        let cluster = result.assignment[v];
        let cluster_attr = cluster.map_or_else(|| "none".to_string(), |c| c.to_string());
        write!(
            out,
            "  n{v} [label=\"{}\", fillcolor=\"{}\", cluster=\"{cluster_attr}\"",
            escape(&label_of(labels, v)),
            cluster_color(cluster),
        )?;
        if centroids.contains(&v) {
            write!(out, ", penwidth=3")?;
        }
        writeln!(out, "];")?;
    }
    for e in g.edges() {
        writeln!(out, "  n{} {arrow} n{};", e.from, e.to)?;
    }
    writeln!(out, "}}")?;
    Ok(())
}
