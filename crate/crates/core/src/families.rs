//! Deterministic generators for the named graph families.
//!
//! Labeling conventions:
//!
//! * path, cycle: `0..n` in order around the path or cycle;
//! * wheel: rim `0..n` as a cycle, hub `n`;
//! * complete bipartite `K_{s,t}`: `0..s` then `s..s+t`;
//! * complete multipartite: parts sorted ascending, each a contiguous block;
//! * two-layers wheel `W2_n`: hub `w = 0`, inner cycle `u_i = i`, outer
//!   cycle `v_i = n + i` for `1 <= i <= n`, with spokes `w u_i` and rungs
//!   `u_i v_i`;
//! * `G(a, b)`: `W2_n` with `n = 5b - 5a + 10`, plus a pendant path
//!   `s_0 .. s_{a-3}` on ids `2n + 1 + i` whose last vertex is joined to `w`
//!   (so `w` plays the role of `s_{a-2}`).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} needs {requirement}")]
    BadParameter {
        family: &'static str,
        requirement: &'static str,
    },
}

fn bad(family: &'static str, requirement: &'static str) -> FamilyError {
    FamilyError::BadParameter {
        family,
        requirement,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Bipartite { s: usize, t: usize },
    Multipartite { parts: Vec<usize> },
    Wheel { n: usize },
    Wheel2 { n: usize },
    Thm4 { a: usize, b: usize },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "path n={n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle n={n}"),
            FamilySpec::Complete { n } => write!(f, "complete n={n}"),
            FamilySpec::Bipartite { s, t } => write!(f, "bipartite s={s} t={t}"),
            FamilySpec::Multipartite { parts } => {
                let mut sorted = parts.clone();
                sorted.sort_unstable();
                let joined: Vec<String> = sorted.iter().map(|p| p.to_string()).collect();
                write!(f, "multipartite parts={}", joined.join(","))
            }
            FamilySpec::Wheel { n } => write!(f, "wheel n={n}"),
            FamilySpec::Wheel2 { n } => write!(f, "wheel2 n={n}"),
            FamilySpec::Thm4 { a, b } => write!(f, "thm4 a={a} b={b}"),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let graph = match *spec {
        FamilySpec::Path { n } => {
            if n == 0 {
                return Err(bad("path", "n >= 1"));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(bad("cycle", "n >= 3"));
            }
            Graph::from_edges(n, &cycle_edges(&(0..n).collect::<Vec<_>>()))
        }
        FamilySpec::Complete { n } => {
            if n == 0 {
                return Err(bad("complete", "n >= 1"));
            }
            Graph::from_edges(n, &complete_edges(n))
        }
        FamilySpec::Bipartite { s, t } => {
            if s == 0 || t == 0 {
                return Err(bad("bipartite", "s >= 1 and t >= 1"));
            }
            let edges: Vec<_> = (0..s)
                .flat_map(|a| (s..s + t).map(move |b| (a, b)))
                .collect();
            Graph::from_edges(s + t, &edges)
        }
        FamilySpec::Multipartite { ref parts } => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(bad("multipartite", "at least one part, all parts >= 1"));
            }
            let mut sorted = parts.clone();
            sorted.sort_unstable();
            let mut block = Vec::new();
            for (i, &size) in sorted.iter().enumerate() {
                block.extend(std::iter::repeat_n(i, size));
            }
            let n = block.len();
            let edges: Vec<_> = complete_edges(n)
                .into_iter()
                .filter(|&(u, v)| block[u] != block[v])
                .collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Wheel { n } => {
            if n < 3 {
                return Err(bad("wheel", "n >= 3"));
            }
            let mut edges = cycle_edges(&(0..n).collect::<Vec<_>>());
            edges.extend((0..n).map(|i| (i, n)));
            Graph::from_edges(n + 1, &edges)
        }
        FamilySpec::Wheel2 { n } => {
            if n < 3 {
                return Err(bad("wheel2", "n >= 3"));
            }
            Graph::from_edges(2 * n + 1, &wheel2_edges(n))
        }
        FamilySpec::Thm4 { a, b } => return thm4_graph(a, b),
    };
    Ok(graph.expect("generators emit simple graphs"))
}

fn cycle_edges(vertices: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let n = vertices.len();
    (0..n).map(|i| (vertices[i], vertices[(i + 1) % n])).collect()
}

fn complete_edges(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect()
}

fn wheel2_edges(n: usize) -> Vec<(Vertex, Vertex)> {
    let inner: Vec<_> = (1..=n).map(|i| wheel2::u(n, i)).collect();
    let outer: Vec<_> = (1..=n).map(|i| wheel2::v(n, i)).collect();
    let mut edges = cycle_edges(&inner);
    edges.extend(cycle_edges(&outer));
    for i in 1..=n {
        edges.push((wheel2::W, wheel2::u(n, i)));
        edges.push((wheel2::u(n, i), wheel2::v(n, i)));
    }
    edges
}

/// Vertex ids of `W2_n` in terms of the 1-based inner/outer indices.
pub mod wheel2 {
    use crate::graph::Vertex;

    pub const W: Vertex = 0;

    pub fn u(_n: usize, i: usize) -> Vertex {
        i
    }

    pub fn v(n: usize, i: usize) -> Vertex {
        n + i
    }

    /// Human-readable label for a vertex id: `w`, `u_i` or `v_i`.
    pub fn label(n: usize, id: Vertex) -> String {
        match id {
            0 => "w".to_string(),
            i if i <= n => format!("u_{i}"),
            i => format!("v_{}", i - n),
        }
    }
}

/// Parameters of `G(a, b)` derived from `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Thm4Layout {
    pub a: usize,
    pub b: usize,
    /// Cycle length of the embedded two-layers wheel.
    pub n: usize,
}

impl Thm4Layout {
    pub fn new(a: usize, b: usize) -> Result<Thm4Layout, FamilyError> {
        if a < 5 || 5 * b < 7 * a - 8 {
            return Err(bad("thm4", "a >= 5 and 5b >= 7a - 8"));
        }
        Ok(Thm4Layout {
            a,
            b,
            n: 5 * b + 10 - 5 * a,
        })
    }

    /// Id of `s_i` for `0 <= i <= a - 2`; `s_{a-2}` is the hub `w`.
    pub fn s(&self, i: usize) -> Vertex {
        if i == self.a - 2 {
            wheel2::W
        } else {
            2 * self.n + 1 + i
        }
    }

    pub fn order(&self) -> usize {
        2 * self.n + 1 + (self.a - 2)
    }

    pub fn label(&self, id: Vertex) -> String {
        if id <= 2 * self.n {
            wheel2::label(self.n, id)
        } else {
            format!("s_{}", id - 2 * self.n - 1)
        }
    }
}

/// `G(a, b)`: the two-layers wheel `W2_n`, `n = 5b - 5a + 10`, with a path of
/// order `a - 1` glued onto its hub.
pub fn thm4_graph(a: usize, b: usize) -> Result<Graph, FamilyError> {
    let layout = Thm4Layout::new(a, b)?;
    let mut edges = wheel2_edges(layout.n);
    for i in 0..a - 2 {
        edges.push((layout.s(i), layout.s(i + 1)));
    }
    Ok(Graph::from_edges(layout.order(), &edges).expect("construction is simple"))
}
