use std::collections::BTreeSet;
use std::io::BufRead;

use super::strip_comment;
use crate::error::{Error, Result};
use crate::graph::{Directedness, Graph};

/// Triangle mesh: vertex positions plus faces as 0-based index triples.
#[derive(Debug, Clone, PartialEq)]
pub struct MeshSurface {
    vertices: Vec<[f64; 3]>,
    faces: Vec<[usize; 3]>,
}

impl MeshSurface {
    pub fn new(vertices: Vec<[f64; 3]>, faces: Vec<[usize; 3]>) -> Result<Self> {
        let n = vertices.len();
        if let Some(v) = vertices.iter().find(|v| v.iter().any(|x| !x.is_finite())) {
            return Err(Error::InvalidParameter(format!("non-finite vertex {v:?}")));
        }
        for (i, face) in faces.iter().enumerate() {
            if let Some(&bad) = face.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidParameter(format!(
                    "face {i} references vertex {bad}, mesh has {n}"
                )));
            }
            let [a, b, c] = *face;
            if a == b || b == c || a == c {
                return Err(Error::InvalidParameter(format!(
                    "face {i} is degenerate: {face:?}"
                )));
            }
        }
        Ok(MeshSurface { vertices, faces })
    }

    pub fn vertices(&self) -> &[[f64; 3]] {
        &self.vertices
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }
}

/// Reads the `v` and `f` records of a Wavefront OBJ file.
pub fn read_obj_mesh<R: BufRead>(reader: R) -> Result<MeshSurface> {
    let mut vertices: Vec<[f64; 3]> = Vec::new();
    let mut faces = Vec::new();

    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let mut tokens = strip_comment(&line).split_whitespace();
        match tokens.next() {
            Some("v") => {
                let coords: Vec<&str> = tokens.collect();
                if coords.len() < 3 {
                    return Err(Error::parse(line_no, "vertex needs 3 coordinates"));
                }
                let mut position = [0.0; 3];
                for (slot, t) in position.iter_mut().zip(&coords) {
                    *slot = t
                        .parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .ok_or_else(|| {
                            Error::parse(line_no, format!("invalid coordinate `{t}`"))
                        })?;
                }
                vertices.push(position);
            }
            Some("f") => {
                let corners = tokens
                    .map(|t| resolve_index(t, vertices.len(), line_no))
                    .collect::<Result<Vec<usize>>>()?;
                if corners.len() < 3 {
                    return Err(Error::parse(
                        line_no,
                        format!("face has {} vertices, need at least 3", corners.len()),
                    ));
                }
                for pair in corners[1..].windows(2) {
                    let tri = [corners[0], pair[0], pair[1]];
                    if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                        return Err(Error::parse(line_no, format!("degenerate face {tri:?}")));
                    }
                    faces.push(tri);
                }
            }
            _ => {}
        }
    }
    MeshSurface::new(vertices, faces)
}

/// Resolves an OBJ face token (`7`, `7/1/3`, `-1`) against the vertices read
/// so far.
fn resolve_index(token: &str, vertex_count: usize, line_no: usize) -> Result<usize> {
    let raw = token.split('/').next().unwrap_or_default();
    let index: i64 = raw
        .parse()
        .map_err(|_| Error::parse(line_no, format!("invalid face index `{token}`")))?;
    let resolved = match index {
        i if i > 0 => i - 1,
        i if i < 0 => vertex_count as i64 + i,
        _ => -1,
    };
    if resolved < 0 || resolved >= vertex_count as i64 {
        return Err(Error::parse(
            line_no,
            format!("face index {index} out of range ({vertex_count} vertices)"),
        ));
    }
    Ok(resolved as usize)
}

/// Undirected graph on the mesh vertices with one edge per distinct mesh
/// edge, weighted by its Euclidean length.
pub fn mesh_to_graph(mesh: &MeshSurface) -> Result<Graph> {
    let unique: BTreeSet<(usize, usize)> = mesh
        .faces
        .iter()
        .flat_map(|&[a, b, c]| [(a, b), (b, c), (c, a)])
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();

    let mut edges = Vec::with_capacity(unique.len());
    for (u, v) in unique {
        let length = mesh.vertices[u]
            .iter()
            .zip(&mesh.vertices[v])
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        if length == 0.0 {
            return Err(Error::ZeroLengthEdge(u, v));
        }
        edges.push((u, v, length));
    }
    Graph::new(mesh.vertices.len(), edges, Directedness::Undirected)
}
