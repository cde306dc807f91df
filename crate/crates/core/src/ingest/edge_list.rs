use std::io::{BufRead, Write};

use super::{strip_comment, LabelTable};
use crate::error::{Error, Result};
use crate::graph::{Directedness, Graph};

/// Parses a whitespace-separated edge list. Labels receive NodeIds in order
/// of first appearance. Errors carry the 1-based line number.
pub fn read_edge_list<R: BufRead>(
    reader: R,
    directedness: Directedness,
) -> Result<(Graph, LabelTable)> {
    let mut labels = LabelTable::new();
    let mut edges = Vec::new();

    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let data = strip_comment(&line);
        if data.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = data.split_whitespace().collect();
        let (src, dst, weight) = match tokens[..] {
            [s, d] => (s, d, 1.0),
            [s, d, w] => {
                let weight: f64 = w
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("unparsable weight `{w}`")))?;
                (s, d, weight)
            }
            _ => {
                return Err(Error::parse(
                    line_no,
                    format!("expected `src dst [weight]`, found {} tokens", tokens.len()),
                ))
            }
        };
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::parse(
                line_no,
                format!("weight must be finite and positive, got {weight}"),
            ));
        }
        if src == dst {
            return Err(Error::parse(line_no, format!("self-loop on `{src}`")));
        }
        edges.push((labels.intern(src), labels.intern(dst), weight));
    }

    if labels.is_empty() {
        return Err(Error::EmptyInput);
    }
    let graph = Graph::new(labels.len(), edges, directedness)?;
    Ok((graph, labels))
}

/// Writes `g` in the format [`read_edge_list`] accepts. Isolated nodes have no
/// representation in this format and are dropped.
pub fn write_edge_list<W: Write>(g: &Graph, labels: &LabelTable, mut out: W) -> Result<()> {
    for e in g.edges() {
        let name = |v| {
            labels
                .label(v)
                .map_or_else(|| v.to_string(), str::to_string)
        };
        writeln!(out, "{} {} {}", name(e.from), name(e.to), e.weight)?;
    }
    Ok(())
}
