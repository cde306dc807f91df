//! Segments a capsule-like tube mesh into three parts by clustering its edge
//! graph with harmonic centrality.
//!
//! cargo run --example mesh_segmentation

use std::f64::consts::TAU;
use std::fmt::Write;

use graph_kmeans::ingest::{mesh_to_graph, read_obj_mesh};
use graph_kmeans::{cluster, ClusteringConfig, ClusteringResult, Measure};

pub const RINGS: usize = 24;
pub const SEGMENTS: usize = 8;

/// An open tube, written as OBJ text so the example also exercises the reader.
pub fn tube_obj() -> String {
    let mut obj = String::from("# open tube\n");
    for ring in 0..RINGS {
        for s in 0..SEGMENTS {
            let a = TAU * s as f64 / SEGMENTS as f64;
            writeln!(
                obj,
                "v {:.6} {:.6} {:.6}",
                a.cos(),
                a.sin(),
                ring as f64 * 0.5
            )
            .unwrap();
        }
    }
    let index = |ring: usize, s: usize| ring * SEGMENTS + s % SEGMENTS + 1;
    for ring in 0..RINGS - 1 {
        for s in 0..SEGMENTS {
            writeln!(
                obj,
                "f {} {} {} {}",
                index(ring, s),
                index(ring, s + 1),
                index(ring + 1, s + 1),
                index(ring + 1, s)
            )
            .unwrap();
        }
    }
    obj
}

pub fn run_example() -> Result<ClusteringResult, Box<dyn std::error::Error>> {
    let mesh = read_obj_mesh(tube_obj().as_bytes())?;
    let g = mesh_to_graph(&mesh)?;
    println!(
        "{} vertices, {} triangles, {} edges",
        mesh.vertices().len(),
        mesh.faces().len(),
        g.edge_count()
    );

    let config = ClusteringConfig::new(3)
        .with_measure(Measure::Harmonic)
        .with_seed(4);
    let result = cluster(&g, &config)?;
    for (i, cell) in result.diagram().cells().iter().enumerate() {
        let rings: Vec<usize> = cell.iter().map(|v| v / SEGMENTS).collect();
        println!(
            "segment {i}: {} vertices, rings {}..={}",
            cell.len(),
            rings.iter().min().unwrap(),
            rings.iter().max().unwrap()
        );
    }
    Ok(result)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}
