//! Machine-readable run output: the `assignment.json` document and the
//! [`RunReport`] summary.
//!
//! `assignment.json` is a single JSON object:
//!
//! ```text
//! {
//!   "nodes": { "<label>": <cluster index> | null, ... },   // NodeId order
//!   "input": str, "mode": "graph" | "points" | "mesh", "directed": bool,
//!   "k": int, "measure": str, "damping": float | null, "seed": int,
//!   "epsilon": float | null, "max_iterations": int, "stability_window": int,
//!   "node_count": int, "iterations": int, "converged": bool,
//!   "cluster_sizes": [int], "unassigned": int, "centroids": [label]
//! }
//! ```
//!
//! Wall-clock time is left out of the file so that identical runs produce
//! identical bytes; it only appears in the report printed by the CLI.

use std::io::Write;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::clustering::{ClusteringConfig, ClusteringResult};
use crate::error::Result;
use crate::graph::Graph;
use crate::ingest::LabelTable;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub input: String,
    pub mode: String,
    pub directed: bool,
    pub k: usize,
    pub measure: String,
    pub damping: Option<f64>,
    pub seed: u64,
    pub epsilon: Option<f64>,
    pub max_iterations: usize,
    pub stability_window: usize,
    pub node_count: usize,
    pub iterations: usize,
    pub converged: bool,
    pub cluster_sizes: Vec<usize>,
    pub unassigned: usize,
    pub centroids: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl RunReport {
    pub fn new(
        input: impl Into<String>,
        mode: impl Into<String>,
        epsilon: Option<f64>,
        g: &Graph,
        config: &ClusteringConfig,
        result: &ClusteringResult,
        labels: &LabelTable,
    ) -> Self {
        RunReport {
            input: input.into(),
            mode: mode.into(),
            directed: g.is_directed(),
            k: config.k,
            measure: config.measure.to_string(),
            damping: config.measure.damping(),
            seed: config.rng_seed,
            epsilon,
            max_iterations: config.max_iterations,
            stability_window: config.stability_window,
            node_count: g.node_count(),
            iterations: result.iterations(),
            converged: result.converged(),
            cluster_sizes: result.cluster_sizes(),
            unassigned: result.unassigned_count(),
            centroids: result
                .centroids()
                .iter()
                .map(|&c| label_of(labels, c))
                .collect(),
            elapsed_ms: None,
        }
    }
}

pub(crate) fn label_of(labels: &LabelTable, v: usize) -> String {
    labels
        .label(v)
        .map_or_else(|| v.to_string(), str::to_string)
}

struct NodeMap<'a> {
    assignment: &'a [Option<usize>],
    labels: &'a LabelTable,
}

impl Serialize for NodeMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.assignment.len()))?;
        for (v, cluster) in self.assignment.iter().enumerate() {
            map.serialize_entry(&label_of(self.labels, v), cluster)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct AssignmentDocument<'a> {
    nodes: NodeMap<'a>,
    #[serde(flatten)]
    report: &'a RunReport,
}

/// Writes the `assignment.json` document. `report.elapsed_ms` is omitted
/// regardless of its value.
pub fn write_assignment_json<W: Write>(
    result: &ClusteringResult,
    labels: &LabelTable,
    report: &RunReport,
    mut out: W,
) -> Result<()> {
    let report = RunReport {
        elapsed_ms: None,
        ..report.clone()
    };
    let doc = AssignmentDocument {
        nodes: NodeMap {
            assignment: &result.assignment,
            labels,
        },
        report: &report,
    };
    serde_json::to_writer_pretty(&mut out, &doc).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}
