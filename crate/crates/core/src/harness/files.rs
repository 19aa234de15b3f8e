//! Graph and coloring files, and transform specs for the command line.

use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::coloring::{ColoringError, EdgeColoring};
use crate::graph::{parse_edge_list, parse_graph6, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FileError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("bad coloring: {0}")]
    Coloring(String),
    #[error("graph6 input holds {0} graphs, expected exactly one")]
    NotOneGraph(usize),
    #[error("bad transform {0:?}; expected subdivide:K, delete-vertex:V, delete-edge:U-V or contract:U-V")]
    BadOp(String),
    #[error("no edge {0}-{1}")]
    NoSuchEdge(usize, usize),
}

impl From<ColoringError> for FileError {
    fn from(e: ColoringError) -> Self {
        FileError::Coloring(e.to_string())
    }
}

fn read_text(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|e| FileError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Edge-list text, or a single graph6 line (optionally behind a
/// `>>graph6<<` header). Edge lists are recognised by a leading `p`, `e`
/// or `#` line.
pub fn parse_graph_text(text: &str) -> Result<Graph, FileError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    let edge_list = match first {
        None => true,
        Some(l) => l.starts_with('#') || l.starts_with("p ") || l.starts_with("e ") || l == "p",
    };
    if edge_list {
        return Ok(parse_edge_list(text)?);
    }
    let mut graphs = parse_graph6(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        n => Err(FileError::NotOneGraph(n)),
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, FileError> {
    parse_graph_text(&read_text(path)?)
}

/// A coloring as JSON (`{"k": .., "colors": [..]}` or a bare array) or as
/// integers separated by whitespace or commas.
pub fn parse_coloring(text: &str) -> Result<EdgeColoring, FileError> {
    let t = text.trim();
    if t.starts_with('{') {
        return serde_json::from_str(t).map_err(|e| FileError::Coloring(e.to_string()));
    }
    let colors: Vec<usize> = if t.starts_with('[') {
        serde_json::from_str(t).map_err(|e| FileError::Coloring(e.to_string()))?
    } else {
        t.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse()
                    .map_err(|_| FileError::Coloring(format!("not a color: {s:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    Ok(EdgeColoring::new(colors)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformOp {
    Subdivide(usize),
    DeleteVertex(usize),
    DeleteEdge(usize, usize),
    Contract(usize, usize),
}

impl FromStr for TransformOp {
    type Err = FileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FileError::BadOp(s.to_string());
        let (name, arg) = s.split_once(':').ok_or_else(bad)?;
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
        let pair = |x: &str| -> Result<(usize, usize), FileError> {
            let (u, v) = x.split_once('-').ok_or_else(bad)?;
            Ok((num(u)?, num(v)?))
        };
        match name.trim() {
            "subdivide" => Ok(TransformOp::Subdivide(num(arg)?)),
            "delete-vertex" => Ok(TransformOp::DeleteVertex(num(arg)?)),
            "delete-edge" => pair(arg).map(|(u, v)| TransformOp::DeleteEdge(u, v)),
            "contract" => pair(arg).map(|(u, v)| TransformOp::Contract(u, v)),
            _ => Err(bad()),
        }
    }
}

impl TransformOp {
    pub fn apply(self, g: &Graph) -> Result<Graph, FileError> {
        let edge = |u: usize, v: usize| -> Result<usize, FileError> {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            g.edge_id(u, v).ok_or(FileError::NoSuchEdge(u, v))
        };
        Ok(match self {
            TransformOp::Subdivide(k) => g.subdivide(k)?.graph,
            TransformOp::DeleteVertex(v) => g.delete_vertex(v)?.0,
            TransformOp::DeleteEdge(u, v) => g.delete_edge(edge(u, v)?)?,
            TransformOp::Contract(u, v) => g.contract_edge(edge(u, v)?)?.0,
        })
    }
}
