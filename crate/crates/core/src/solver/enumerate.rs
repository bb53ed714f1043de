use crate::graph::{Graph, Vertex};

use super::SolveError;

pub const ENUMERATION_LIMIT: usize = 7;

/// All labeled connected graphs on `n` vertices.
///
/// Edge `i` of the mask is the `i`-th pair in `(0,1), (0,2), .., (0,n-1),
/// (1,2), ..` order; masks are visited in ascending order.
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(Vertex, Vertex)>,
    next: u64,
    end: u64,
}

impl ConnectedGraphs {
    fn connected(&self, mask: u64) -> bool {
        let mut adj = [0u8; ENUMERATION_LIMIT];
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let all = ((1u16 << self.n) - 1) as u8;
        let mut seen = 1u8;
        let mut frontier = 1u8;
        while frontier != 0 {
            let mut next = 0u8;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[x];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    fn graph(&self, mask: u64) -> Graph {
        let edges: Vec<_> = (0..self.pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.pairs[i])
            .collect();
        Graph::from_edges(self.n, &edges).expect("pairs are distinct")
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if self.connected(mask) {
                return Some(self.graph(mask));
            }
        }
        None
    }
}

pub fn enumerate_connected_graphs(n: usize) -> Result<ConnectedGraphs, SolveError> {
    if !(1..=ENUMERATION_LIMIT).contains(&n) {
        return Err(SolveError::OrderOutOfRange {
            order: n,
            min: 1,
            max: ENUMERATION_LIMIT,
        });
    }
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let end = 1u64 << pairs.len();
    Ok(ConnectedGraphs {
        n,
        pairs,
        next: 0,
        end,
    })
}

/// Number of labeled connected graphs on `n` vertices from the standard
/// recurrence `c(n) = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2)`.
pub fn connected_graph_count(n: usize) -> u128 {
    fn binom(n: usize, k: usize) -> u128 {
        (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
    }
    let total = |m: usize| 1u128 << (m * m.saturating_sub(1) / 2);
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let mut disconnected = 0;
        for k in 1..m {
            disconnected += binom(m - 1, k - 1) * c[k] * total(m - k);
        }
        c[m] = total(m) - disconnected;
    }
    c[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_recurrence() {
        let expected = [1u128, 1, 4, 38, 728, 26704];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(connected_graph_count(n), count);
            assert_eq!(enumerate_connected_graphs(n).unwrap().count() as u128, count, "n = {n}");
        }
        assert_eq!(connected_graph_count(7), 1_866_256);
    }

    #[test]
    fn first_graphs_in_order() {
        let mut it = enumerate_connected_graphs(3).unwrap();
        assert_eq!(it.next().unwrap().edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(it.next().unwrap().edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(it.next().unwrap().edges(), vec![(0, 2), (1, 2)]);
        assert_eq!(it.next().unwrap().edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(it.next().is_none());
    }

    #[test]
    fn range_is_enforced() {
        assert!(enumerate_connected_graphs(0).is_err());
        assert!(enumerate_connected_graphs(8).is_err());
    }
}
