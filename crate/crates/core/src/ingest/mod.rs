//! Readers and builders that turn external data into [`Graph`](crate::Graph)s.
//!
//! Three text formats are understood:
//!
//! * **Edge lists** ([`read_edge_list`]): one edge per line, `src dst
//!   [weight]`, separated by whitespace. Labels are arbitrary tokens without
//!   whitespace. A missing weight means `1.0`. `#` starts a comment that runs
//!   to the end of the line; blank lines are skipped.
//! * **Point clouds** ([`read_point_cloud`]): one point per line, coordinates
//!   separated by commas and/or whitespace. Every row must have the same
//!   number of coordinates. `#` comments and blank lines are skipped.
//! * **Wavefront OBJ** ([`read_obj_mesh`]): only `v x y z` and `f a b c ...`
//!   records are read. Face indices are 1-based (negative indices count back
//!   from the last vertex read so far), may carry `/vt/vn` suffixes, and
//!   polygons are fan-triangulated. All other records are ignored.

mod edge_list;
mod labels;
mod mesh;
mod points;

pub use edge_list::{read_edge_list, write_edge_list};
pub use labels::LabelTable;
pub use mesh::{mesh_to_graph, read_obj_mesh, MeshSurface};
pub use points::{
    neighborhood_graph, neighborhood_graph_with, read_point_cloud, NeighborhoodMethod, PointCloud,
};

/// Strips a trailing `#` comment and surrounding whitespace.
fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(data, _)| data).trim()
}
