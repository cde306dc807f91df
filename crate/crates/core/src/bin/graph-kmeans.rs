fn main() {
    std::process::exit(graph_kmeans::cli::run(std::env::args_os()));
}
