use std::collections::VecDeque;

use super::{Graph, GraphError, Vertex};

/// Marker for vertex pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }

    /// Largest entry, or `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        if self.is_connected() {
            Some(self.dist.iter().copied().max().unwrap_or(0))
        } else {
            None
        }
    }

    pub fn eccentricity(&self, u: Vertex) -> Option<u32> {
        let row = self.row(u);
        if row.contains(&UNREACHABLE) {
            None
        } else {
            row.iter().copied().max()
        }
    }
}

pub fn bfs_distances(g: &Graph, source: Vertex) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.order()];
    let mut queue = VecDeque::with_capacity(g.order());
    dist[source] = 0;
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == UNREACHABLE {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// One BFS per source.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut dist = Vec::with_capacity(n * n);
    for s in g.vertices() {
        dist.extend(bfs_distances(g, s));
    }
    DistanceMatrix { order: n, dist }
}

pub fn diameter(g: &Graph) -> Result<u32, GraphError> {
    all_pairs_distances(g)
        .diameter()
        .ok_or(GraphError::Disconnected)
}
