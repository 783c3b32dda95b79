//! Graph ingestion, validation, generation and conversion to adjacency
//! matrices.

mod adjacency;
mod edge_list;
mod generate;
pub mod mtx;

use std::collections::BTreeSet;

use thiserror::Error;

pub use adjacency::AdjacencyMatrix;
pub use edge_list::parse_edge_list;
pub use generate::{gen_random_digraph, gen_random_graph, gen_structured_graph, StructuredKind};
pub use mtx::{parse_matrix_market, MtxError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("self-loop on node {node}{}", at_line(*line))]
    SelfLoop { node: usize, line: Option<usize> },
    #[error("endpoint {endpoint} out of range for {k} nodes{}", at_line(*line))]
    EndpointOutOfRange { endpoint: usize, k: usize, line: Option<usize> },
    #[error("graph has no nodes")]
    EmptyInput,
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("{parts} parts do not evenly divide {k} nodes")]
    BadPartition { k: usize, parts: usize },
}

fn at_line(line: Option<usize>) -> String {
    line.map(|l| format!(" (line {l})")).unwrap_or_default()
}

/// A validated simple graph on nodes `0..node_count`.
///
/// Undirected graphs store both orientations of every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    node_count: usize,
    edges: BTreeSet<(usize, usize)>,
    directed: bool,
}

impl Graph {
    pub fn new(
        node_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        directed: bool,
    ) -> Result<Self, GraphError> {
        if node_count == 0 {
            return Err(GraphError::EmptyInput);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            check_edge(u, v, node_count, None)?;
            set.insert((u, v));
            if !directed {
                set.insert((v, u));
            }
        }
        Ok(Self { node_count, edges: set, directed })
    }

    pub fn undirected(
        node_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Self::new(node_count, edges, false)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Stored ordered pairs (both orientations for undirected graphs).
    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    /// Number of links: ordered pairs when directed, unordered otherwise.
    pub fn link_count(&self) -> usize {
        if self.directed {
            self.edges.len()
        } else {
            self.edges.len() / 2
        }
    }

    /// Edge-list text that [`parse_edge_list`] reads back to `self`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("nodes={}\ndirected={}\n", self.node_count, self.directed);
        for &(u, v) in &self.edges {
            if self.directed || u < v {
                out.push_str(&format!("{u} {v}\n"));
            }
        }
        out
    }

    /// S with `S[u][v] = 1` iff `(u, v)` is an edge.
    pub fn to_adjacency(&self) -> AdjacencyMatrix {
        AdjacencyMatrix::from_graph(self)
    }
}

fn check_edge(u: usize, v: usize, k: usize, line: Option<usize>) -> Result<(), GraphError> {
    if u == v {
        return Err(GraphError::SelfLoop { node: u, line });
    }
    if let Some(&endpoint) = [u, v].iter().find(|&&x| x >= k) {
        return Err(GraphError::EndpointOutOfRange { endpoint, k, line });
    }
    Ok(())
}

/// Same as [`Graph::to_adjacency`].
pub fn graph_to_adjacency(g: &Graph) -> AdjacencyMatrix {
    g.to_adjacency()
}
