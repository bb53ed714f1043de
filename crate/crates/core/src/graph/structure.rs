use serde::Serialize;

use super::{Graph, Vertex};

/// Structural predicates used by the characterization checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    pub connected: bool,
    pub complete: bool,
    /// Isomorphic to the path on `order` vertices. `K1` counts as a path.
    pub path_graph: bool,
    pub min_degree: usize,
    pub cut_vertex_count: usize,
}

/// Articulation points, ascending. Works per component on disconnected input.
pub fn cut_vertices(g: &Graph) -> Vec<Vertex> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;

    // Iterative DFS: frames are (vertex, parent, next neighbor index).
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut root_children = 0;
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (x, parent, ref mut next)) = stack.last_mut() {
            if let Some(&y) = g.neighbors(x).get(*next) {
                *next += 1;
                if disc[y] == usize::MAX {
                    disc[y] = time;
                    low[y] = time;
                    time += 1;
                    if x == root {
                        root_children += 1;
                    }
                    stack.push((y, x, 0));
                } else if y != parent {
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[x]);
                    if p != root && low[x] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

pub fn classify_graph(g: &Graph) -> GraphClass {
    let n = g.order();
    let connected = g.is_connected();
    let min_degree = g.vertices().map(|v| g.degree(v)).min().unwrap_or(0);
    let path_graph = connected
        && match n {
            1 => true,
            _ => {
                let leaves = g.vertices().filter(|&v| g.degree(v) == 1).count();
                let inner = g.vertices().filter(|&v| g.degree(v) == 2).count();
                g.edge_count() == n - 1 && leaves == 2 && leaves + inner == n
            }
        };
    GraphClass {
        connected,
        complete: g.is_complete(),
        path_graph,
        min_degree,
        cut_vertex_count: cut_vertices(g).len(),
    }
}
