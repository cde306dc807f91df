//! Batch command-line front end.
//!
//! ```text
//! graph-kmeans graph  --input FILE (--directed | --undirected) --k K [options] --out PREFIX
//! graph-kmeans points --input FILE --epsilon E --k K [options] --out PREFIX
//! graph-kmeans mesh   --input FILE --k K [options] --out PREFIX
//! ```
//!
//! Each run writes `PREFIX.assignment.json` and `PREFIX.dot` and prints a
//! one-line JSON [`RunReport`] to stdout. Exit status is 0 on success, 2 for
//! bad arguments or unreadable input, and 1 when clustering itself fails
//! (for example `k > |V|`).

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::centrality::{Measure, PageRankParams};
use crate::clustering::{cluster, ClusteringConfig};
use crate::dot::write_dot;
use crate::error::Error;
use crate::graph::{Directedness, Graph};
use crate::ingest::{self, LabelTable};
use crate::report::{write_assignment_json, RunReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "graph-kmeans",
    version,
    about = "k-means clustering on graphs, point clouds and meshes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cluster an edge-list graph.
    Graph {
        #[arg(long)]
        input: PathBuf,
        #[arg(
            long,
            conflicts_with = "undirected",
            required_unless_present = "undirected"
        )]
        directed: bool,
        #[arg(long)]
        undirected: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Cluster the epsilon-neighborhood graph of a point cloud.
    Points {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        epsilon: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Segment a triangle mesh (OBJ) by clustering its edge graph.
    Mesh {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[arg(long)]
    k: usize,
    /// pagerank | harmonic | closeness | eigenvector | degree
    #[arg(long, default_value = "pagerank")]
    measure: String,
    /// PageRank damping factor.
    #[arg(long, default_value_t = 0.85)]
    damping: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "max-iters", default_value_t = 100)]
    max_iters: usize,
    /// Output path prefix.
    #[arg(long)]
    out: PathBuf,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn from_error(context: &str, err: Error) -> Self {
        let code = if err.is_input_error() {
            EXIT_INPUT
        } else {
            EXIT_RUNTIME
        };
        Failure {
            code,
            message: format!("{context}: {err}"),
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit status. Diagnostics go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(report) => {
            if let Ok(line) = serde_json::to_string(&report) {
                println!("{line}");
            }
            EXIT_OK
        }
        Err(f) => {
            eprintln!("graph-kmeans: {}", f.message);
            f.code
        }
    }
}

fn open(path: &Path) -> Result<BufReader<File>, Failure> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Failure::input(format!("cannot open {}: {e}", path.display())))
}

fn execute(command: Command) -> Result<RunReport, Failure> {
    let start = Instant::now();
    let (mode, input, epsilon, common) = match &command {
        Command::Graph { input, common, .. } => ("graph", input, None, common),
        Command::Points {
            input,
            epsilon,
            common,
        } => ("points", input, Some(*epsilon), common),
        Command::Mesh { input, common } => ("mesh", input, None, common),
    };
    let context = input.display().to_string();
    let load = |e| Failure::from_error(&context, e);

    let (graph, labels): (Graph, LabelTable) = match &command {
        Command::Graph { directed, .. } => {
            let directedness = if *directed {
                Directedness::Directed
            } else {
                Directedness::Undirected
            };
            ingest::read_edge_list(open(input)?, directedness).map_err(load)?
        }
        Command::Points { epsilon, .. } => {
            let cloud = ingest::read_point_cloud(open(input)?).map_err(load)?;
            let g = ingest::neighborhood_graph(&cloud, *epsilon).map_err(load)?;
            let n = g.node_count();
            (g, LabelTable::numeric(n))
        }
        Command::Mesh { .. } => {
            let mesh = ingest::read_obj_mesh(open(input)?).map_err(load)?;
            let g = ingest::mesh_to_graph(&mesh).map_err(load)?;
            let n = g.node_count();
            (g, LabelTable::numeric(n))
        }
    };

    let measure = match common.measure.parse::<Measure>() {
        Ok(Measure::PageRank(_)) => Measure::PageRank(PageRankParams::with_damping(common.damping)),
        Ok(m) => m,
        Err(e) => return Err(Failure::input(e.to_string())),
    };
    if let Measure::PageRank(params) = &measure {
        params
            .validate()
            .map_err(|e| Failure::input(e.to_string()))?;
    }
    let config = ClusteringConfig::new(common.k)
        .with_measure(measure)
        .with_seed(common.seed)
        .with_max_iterations(common.max_iters);
    let result = cluster(&graph, &config).map_err(|e| Failure {
        code: EXIT_RUNTIME,
        message: e.to_string(),
    })?;

    let mut report = RunReport::new(
        input.display().to_string(),
        mode,
        epsilon,
        &graph,
        &config,
        &result,
        &labels,
    );
    let assignment_path = with_suffix(&common.out, "assignment.json");
    let dot_path = with_suffix(&common.out, "dot");
    write_file(&assignment_path, |w| {
        write_assignment_json(&result, &labels, &report, w)
    })?;
    write_file(&dot_path, |w| write_dot(&graph, &result, &labels, w))?;

    report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    Ok(report)
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_os_string();
    name.push(".");
    name.push(suffix);
    PathBuf::from(name)
}

fn write_file<F>(path: &Path, body: F) -> Result<(), Failure>
where
    F: FnOnce(&mut BufWriter<File>) -> crate::error::Result<()>,
{
    let fail = |e: &dyn std::fmt::Display| Failure {
        code: EXIT_RUNTIME,
        message: format!("cannot write {}: {e}", path.display()),
    };
    let file = File::create(path).map_err(|e| fail(&e))?;
    let mut writer = BufWriter::new(file);
    body(&mut writer).map_err(|e| fail(&e))?;
    writer.flush().map_err(|e| fail(&e))
}
