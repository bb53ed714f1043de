//! Simple undirected graphs, the edge-list text format, and the distance and
//! geodesic machinery the rest of the crate is built on.

mod distance;
mod geodesic;
mod structure;

use std::fmt::{self, Write as _};

use thiserror::Error;

pub use distance::{all_pairs_distances, bfs_distances, diameter, DistanceMatrix, UNREACHABLE};
pub(crate) use geodesic::internal_pair_on_geodesic_in;
pub use geodesic::{count_geodesics, enumerate_paths, internal_pair_on_geodesic, PathEnumeration};
pub use structure::{classify_graph, cut_vertices, GraphClass};

/// Vertex identifier, 0-based and contiguous.
pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed line {text:?}")]
    Malformed { line: usize, text: String },
    #[error("missing header line \"<n> <m>\"")]
    MissingHeader,
    #[error("line {line}: vertex id {id} out of range for order {order}")]
    VertexOutOfRange { line: usize, id: usize, order: usize },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("graph order must be positive")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(Vertex),
}

/// Immutable simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Loops, duplicates and out-of-range ids
    /// are rejected.
    pub fn from_edges(order: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        if order == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); order];
        for (i, &(u, v)) in edges.iter().enumerate() {
            let line = i + 1;
            for id in [u, v] {
                if id >= order {
                    return Err(GraphError::VertexOutOfRange { line, id, order });
                }
            }
            if u == v {
                return Err(GraphError::Loop { line, vertex: u });
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge {
                    line,
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            edge_count: edges.len(),
        })
    }

    pub fn empty(order: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(order, &[])
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let dist = bfs_distances(self, 0);
        dist.iter().all(|&d| d != UNREACHABLE)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count == n * (n - 1) / 2
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::NoSuchVertex(v))
        }
    }

    /// The graph with vertex `x` removed; remaining vertices keep their
    /// relative order (ids above `x` shift down by one).
    pub fn remove_vertex(&self, x: Vertex) -> Result<Graph, GraphError> {
        self.check_vertex(x)?;
        let relabel = |v: Vertex| if v > x { v - 1 } else { v };
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| u != x && v != x)
            .map(|(u, v)| (relabel(u), relabel(v)))
            .collect();
        Graph::from_edges(self.order() - 1, &edges)
    }

    pub fn remove_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        Graph::from_edges(self.order(), &edges).expect("subgraph of a valid graph")
    }

    /// Parses the edge-list format: a header `<n> <m>` followed by `m` lines
    /// `<u> <v>`. Lines starting with `#` and blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut adj: Vec<Vec<Vertex>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let malformed = || GraphError::Malformed {
                line,
                text: raw.to_string(),
            };
            let mut fields = trimmed.split_whitespace();
            let (a, b) = match (fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), None) => (
                    a.parse::<usize>().map_err(|_| malformed())?,
                    b.parse::<usize>().map_err(|_| malformed())?,
                ),
                _ => return Err(malformed()),
            };
            match header {
                None => {
                    if a == 0 {
                        return Err(GraphError::EmptyGraph);
                    }
                    header = Some((a, b));
                    adj = vec![Vec::new(); a];
                }
                Some((order, _)) => {
                    for id in [a, b] {
                        if id >= order {
                            return Err(GraphError::VertexOutOfRange { line, id, order });
                        }
                    }
                    if a == b {
                        return Err(GraphError::Loop { line, vertex: a });
                    }
                    if adj[a].contains(&b) {
                        return Err(GraphError::DuplicateEdge {
                            line,
                            u: a.min(b),
                            v: a.max(b),
                        });
                    }
                    adj[a].push(b);
                    adj[b].push(a);
                    edges.push((a, b));
                }
            }
        }
        let (order, declared) = header.ok_or(GraphError::MissingHeader)?;
        if declared != edges.len() {
            return Err(GraphError::EdgeCountMismatch {
                declared,
                found: edges.len(),
            });
        }
        Graph::from_edges(order, &edges)
    }

    /// Serializes to the edge-list format with `u < v` on every line and
    /// edges in lexicographic order. `comment`, when given, becomes a leading
    /// `# ` line.
    pub fn to_edge_list(&self, comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(c) = comment {
            for line in c.lines() {
                let _ = writeln!(out, "# {line}");
            }
        }
        let _ = writeln!(out, "{} {}", self.order(), self.edge_count);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}
