use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use graph_kmeans::clustering::initialize_centroids;
use graph_kmeans::ingest::read_edge_list;
use graph_kmeans::Directedness;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graph-kmeans"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn read_json(prefix: &Path) -> Value {
    let text = fs::read_to_string(format!("{}.assignment.json", prefix.display())).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn read_dot(prefix: &Path) -> String {
    fs::read_to_string(format!("{}.dot", prefix.display())).unwrap()
}

/// First seed whose initial centroids fall in different cliques of the
/// two-clique fixture.
fn splitting_seed() -> u64 {
    let file = fs::File::open(fixture("two_cliques.txt")).unwrap();
    let (g, labels) =
        read_edge_list(std::io::BufReader::new(file), Directedness::Undirected).unwrap();
    (0..)
        .find(|&seed| {
            let init = initialize_centroids(&g, 2, seed).unwrap();
            let clique = |v| labels.label(v).unwrap().as_bytes()[0];
            clique(init[0]) != clique(init[1])
        })
        .unwrap()
}

fn check_schema(doc: &Value, node_count: usize) {
    let obj = doc.as_object().expect("top-level object");
    for key in [
        "nodes",
        "centroids",
        "k",
        "measure",
        "iterations",
        "converged",
        "unassigned",
        "seed",
    ] {
        assert!(obj.contains_key(key), "missing `{key}`");
    }
    let k = doc["k"].as_u64().unwrap();
    let nodes = doc["nodes"].as_object().unwrap();
    assert_eq!(nodes.len(), node_count);
    for value in nodes.values() {
        assert!(
            value.is_null() || value.as_u64().is_some_and(|c| c < k),
            "bad cluster {value}"
        );
    }
    assert_eq!(doc["centroids"].as_array().unwrap().len() as u64, k);
    assert!(doc["measure"].is_string());
    assert!(doc["converged"].is_boolean());
    assert!(doc["iterations"].as_u64().is_some());
    let sizes: u64 = doc["cluster_sizes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_u64().unwrap())
        .sum();
    assert_eq!(
        sizes + doc["unassigned"].as_u64().unwrap(),
        node_count as u64
    );
    assert!(
        obj.get("elapsed_ms").is_none(),
        "wall-clock time leaks into the file"
    );
}

#[test]
fn two_clique_graph_splits_along_cliques() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("cliques");
    let seed = splitting_seed().to_string();
    let input = fixture("two_cliques.txt");
    let out = run(&[
        "graph",
        "--input",
        input.to_str().unwrap(),
        "--undirected",
        "--k",
        "2",
        "--seed",
        &seed,
        "--out",
        prefix.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let doc = read_json(&prefix);
    check_schema(&doc, 10);
    assert_eq!(doc["converged"], Value::Bool(true));
    assert_eq!(doc["measure"], "pagerank");
    assert_eq!(doc["damping"], 0.85);
    let nodes = doc["nodes"].as_object().unwrap();
    let a = &nodes["a0"];
    let b = &nodes["b0"];
    assert_ne!(a, b);
    for (label, cluster) in nodes {
        let expected = if label.starts_with('a') { a } else { b };
        assert_eq!(cluster, expected, "{label}");
    }
    // Node order in the file follows NodeIds.
    let keys: Vec<&String> = nodes.keys().collect();
    assert_eq!(keys[0], "a0");

    let dot = read_dot(&prefix);
    assert!(dot.starts_with("graph clusters {"));
    let colors: std::collections::BTreeSet<&str> = dot
        .lines()
        .filter_map(|l| l.split("fillcolor=\"").nth(1))
        .map(|rest| rest.split('"').next().unwrap())
        .collect();
    assert_eq!(colors.len(), 2);

    // The stdout report carries the timing the file omits.
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["elapsed_ms"].as_f64().is_some());
    assert_eq!(report["converged"], Value::Bool(true));
}

#[test]
fn square_points_with_k_four_are_singletons() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("square");
    let input = fixture("square.csv");
    let out = run(&[
        "points",
        "--input",
        input.to_str().unwrap(),
        "--epsilon",
        "1.1",
        "--k",
        "4",
        "--out",
        prefix.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc = read_json(&prefix);
    check_schema(&doc, 4);
    assert_eq!(doc["epsilon"], 1.1);
    assert_eq!(doc["cluster_sizes"], serde_json::json!([1, 1, 1, 1]));
    let mut clusters: Vec<u64> = doc["nodes"]
        .as_object()
        .unwrap()
        .values()
        .map(|v| v.as_u64().unwrap())
        .collect();
    clusters.sort();
    assert_eq!(clusters, vec![0, 1, 2, 3]);
    assert_eq!(read_dot(&prefix).matches(" -- ").count(), 4);
}

#[test]
fn mesh_run_with_alternate_measure() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("torus");
    let input = fixture("torus.obj");
    let out = run(&[
        "mesh",
        "--input",
        input.to_str().unwrap(),
        "--k",
        "3",
        "--measure",
        "closeness",
        "--seed",
        "9",
        "--max-iters",
        "50",
        "--out",
        prefix.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc = read_json(&prefix);
    check_schema(&doc, 128);
    assert_eq!(doc["measure"], "closeness");
    assert_eq!(doc["damping"], Value::Null);
    assert_eq!(doc["seed"], 9);
    assert_eq!(doc["max_iterations"], 50);
    assert_eq!(doc["mode"], "mesh");
}

#[test]
fn directed_graph_writes_digraph() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("cycle.txt");
    fs::write(&input, "x y\ny z\nz x\n").unwrap();
    let prefix = dir.path().join("cycle");
    let out = run(&[
        "graph",
        "--input",
        input.to_str().unwrap(),
        "--directed",
        "--k",
        "1",
        "--out",
        prefix.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let dot = read_dot(&prefix);
    assert!(dot.starts_with("digraph clusters {"));
    assert_eq!(dot.matches(" -> ").count(), 3);
    assert_eq!(read_json(&prefix)["directed"], Value::Bool(true));
}

#[test]
fn unreachable_nodes_are_null() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("fork.txt");
    // Whatever centroid is chosen, at least one node cannot be reached.
    fs::write(&input, "a b\nc b\n").unwrap();
    let prefix = dir.path().join("fork");
    let out = run(&[
        "graph",
        "--input",
        input.to_str().unwrap(),
        "--directed",
        "--k",
        "1",
        "--out",
        prefix.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc = read_json(&prefix);
    check_schema(&doc, 3);
    assert!(doc["unassigned"].as_u64().unwrap() >= 1);
    assert!(doc["nodes"]
        .as_object()
        .unwrap()
        .values()
        .any(Value::is_null));
    assert!(read_dot(&prefix).contains("fillcolor=\"gray\""));
}

#[test]
fn missing_file_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.txt");
    let out = run(&[
        "graph",
        "--input",
        missing.to_str().unwrap(),
        "--undirected",
        "--k",
        "2",
        "--out",
        dir.path().join("x").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains(missing.to_str().unwrap()));
}

#[test]
fn parse_errors_report_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.txt");
    fs::write(&input, "a b\nb b\n").unwrap();
    let out = run(&[
        "graph",
        "--input",
        input.to_str().unwrap(),
        "--undirected",
        "--k",
        "1",
        "--out",
        dir.path().join("x").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("bad.txt") && stderr.contains("line 2"),
        "{stderr}"
    );
}

#[test]
fn k_larger_than_graph_is_a_runtime_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = fixture("square.csv");
    let out = run(&[
        "points",
        "--input",
        input.to_str().unwrap(),
        "--epsilon",
        "1.1",
        "--k",
        "5",
        "--out",
        dir.path().join("x").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!dir.path().join("x.assignment.json").exists());
}

#[test]
fn usage_errors_exit_two() {
    let input = fixture("two_cliques.txt");
    let input = input.to_str().unwrap();
    let cases: [&[&str]; 5] = [
        &[
            "graph",
            "--input",
            input,
            "--undirected",
            "--k",
            "2",
            "--out",
            "x",
            "--bogus",
        ],
        &["graph", "--input", input, "--k", "2", "--out", "x"],
        &[
            "graph",
            "--input",
            input,
            "--directed",
            "--undirected",
            "--k",
            "2",
            "--out",
            "x",
        ],
        &["points", "--input", input, "--k", "2", "--out", "x"],
        &["cluster", "--input", input],
    ];
    for args in cases {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "graph",
        "--input",
        input,
        "--undirected",
        "--k",
        "2",
        "--measure",
        "betweenness",
        "--out",
        dir.path().join("x").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("betweenness"));
}

#[test]
fn bad_damping_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let input = fixture("two_cliques.txt");
    let out = run(&[
        "graph",
        "--input",
        input.to_str().unwrap(),
        "--undirected",
        "--k",
        "2",
        "--damping",
        "1.5",
        "--out",
        dir.path().join("x").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("damping"));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("points"));
}
