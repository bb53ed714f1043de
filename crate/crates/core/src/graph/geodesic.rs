use super::{all_pairs_distances, bfs_distances, DistanceMatrix, Graph, GraphError, Vertex, UNREACHABLE};

/// Whether some geodesic `w1 - w2` carries both `x` and `y` as internal
/// vertices. Needs only the distance matrix: such a geodesic exists iff there
/// are endpoints outside `{x, y}` with `d(w1,x) + d(x,y) + d(y,w2) = d(w1,w2)`
/// (in either orientation).
pub fn internal_pair_on_geodesic(g: &Graph, x: Vertex, y: Vertex) -> Result<bool, GraphError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    let dist = all_pairs_distances(g);
    if !dist.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(internal_pair_on_geodesic_in(&dist, x, y))
}

pub(crate) fn internal_pair_on_geodesic_in(dist: &DistanceMatrix, x: Vertex, y: Vertex) -> bool {
    if x == y {
        return false;
    }
    let n = dist.order();
    let dxy = dist.get(x, y);
    // Orientation w1 .. x .. y .. w2; the other orientation is the same
    // condition with w1 and w2 swapped, which the double loop covers.
    for w1 in 0..n {
        if w1 == x || w1 == y {
            continue;
        }
        let head = dist.get(w1, x) + dxy;
        for w2 in 0..n {
            if w2 == x || w2 == y || w2 == w1 {
                continue;
            }
            if head + dist.get(y, w2) == dist.get(w1, w2) {
                return true;
            }
        }
    }
    false
}

/// Number of distinct shortest `u - v` paths, by dynamic programming over BFS
/// layers. Saturates at `u64::MAX`.
pub fn count_geodesics(g: &Graph, u: Vertex, v: Vertex) -> Result<u64, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let dist = bfs_distances(g, u);
    if dist[v] == UNREACHABLE {
        return Err(GraphError::Disconnected);
    }
    let mut order: Vec<Vertex> = g.vertices().filter(|&x| dist[x] <= dist[v]).collect();
    order.sort_by_key(|&x| dist[x]);
    let mut ways = vec![0u64; g.order()];
    ways[u] = 1;
    for &x in &order {
        if x == u {
            continue;
        }
        ways[x] = g
            .neighbors(x)
            .iter()
            .filter(|&&p| dist[p] != UNREACHABLE && dist[p] + 1 == dist[x])
            .fold(0u64, |acc, &p| acc.saturating_add(ways[p]));
    }
    Ok(ways[v])
}

/// Result of [`enumerate_paths`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathEnumeration {
    pub paths: Vec<Vec<Vertex>>,
    /// Set when the cap cut the enumeration short.
    pub truncated: bool,
}

/// All simple `u - v` paths with at most `max_len` edges, in lexicographic
/// order of their vertex sequences, stopping after `cap` paths.
pub fn enumerate_paths(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    max_len: usize,
    cap: usize,
) -> Result<PathEnumeration, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let cap = cap.max(1);
    let mut out = PathEnumeration {
        paths: Vec::new(),
        truncated: false,
    };
    if u == v {
        out.paths.push(vec![u]);
        return Ok(out);
    }
    // Remaining-distance bound prunes branches that cannot reach v in time.
    let to_v = bfs_distances(g, v);
    let mut on_path = vec![false; g.order()];
    let mut path = vec![u];
    on_path[u] = true;
    extend(g, v, max_len, cap, &to_v, &mut on_path, &mut path, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    target: Vertex,
    max_len: usize,
    cap: usize,
    to_target: &[u32],
    on_path: &mut [bool],
    path: &mut Vec<Vertex>,
    out: &mut PathEnumeration,
) {
    let x = *path.last().expect("path is never empty");
    let len = path.len() - 1;
    for &y in g.neighbors(x) {
        if out.truncated {
            return;
        }
        if on_path[y] || to_target[y] == UNREACHABLE || len + 1 + to_target[y] as usize > max_len {
            continue;
        }
        path.push(y);
        if y == target {
            if out.paths.len() == cap {
                out.truncated = true;
            } else {
                out.paths.push(path.clone());
            }
        } else {
            on_path[y] = true;
            extend(g, target, max_len, cap, to_target, on_path, path, out);
            on_path[y] = false;
        }
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    /// Every geodesic of the graph, by exhaustive simple-path enumeration.
    fn all_geodesics(g: &Graph) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        for a in g.vertices() {
            for b in g.vertices() {
                if a == b {
                    continue;
                }
                let paths = enumerate_paths(g, a, b, g.order(), usize::MAX).unwrap().paths;
                let shortest = paths.iter().map(Vec::len).min().unwrap();
                out.extend(paths.into_iter().filter(|p| p.len() == shortest));
            }
        }
        out
    }

    fn brute_internal_pair(geodesics: &[Vec<Vertex>], x: Vertex, y: Vertex) -> bool {
        geodesics.iter().any(|p| {
            let inner = &p[1..p.len() - 1];
            inner.contains(&x) && inner.contains(&y)
        })
    }

    #[test]
    fn path_cases() {
        let p5 = generate(&FamilySpec::Path { n: 5 }).unwrap();
        assert!(internal_pair_on_geodesic(&p5, 1, 3).unwrap());
        assert!(!internal_pair_on_geodesic(&p5, 0, 4).unwrap());
    }

    #[test]
    fn c5_pairs_at_diameter() {
        let c5 = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        let geos = all_geodesics(&c5);
        let dist = all_pairs_distances(&c5);
        for x in 0..5 {
            for y in 0..5 {
                if x != y && dist.get(x, y) == 2 {
                    assert!(!brute_internal_pair(&geos, x, y));
                    assert!(!internal_pair_on_geodesic(&c5, x, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn internal_pair_matches_brute_force_on_order_5() {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let geos = all_geodesics(&g);
            for x in 0..5 {
                for y in 0..5 {
                    if x != y {
                        assert_eq!(
                            internal_pair_on_geodesic(&g, x, y).unwrap(),
                            brute_internal_pair(&geos, x, y),
                            "{g:?} {x} {y}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn geodesic_counts() {
        let p4 = generate(&FamilySpec::Path { n: 4 }).unwrap();
        assert_eq!(count_geodesics(&p4, 0, 3).unwrap(), 1);
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        assert_eq!(count_geodesics(&c4, 0, 2).unwrap(), 2);
        assert_eq!(count_geodesics(&c4, 1, 1).unwrap(), 1);
    }

    #[test]
    fn wheel2_11_unique_geodesic() {
        // v_1 = 12, v_7 = 18; u_1 = 1, u_7 = 7; w = 0.
        let g = generate(&FamilySpec::Wheel2 { n: 11 }).unwrap();
        assert_eq!(count_geodesics(&g, 12, 18).unwrap(), 1);
        let paths = enumerate_paths(&g, 12, 18, 4, 100).unwrap();
        assert_eq!(paths.paths, vec![vec![12, 1, 0, 7, 18]]);
    }

    #[test]
    fn enumeration_examples() {
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        assert_eq!(enumerate_paths(&p3, 0, 2, 2, 10).unwrap().paths, vec![vec![0, 1, 2]]);
        assert!(enumerate_paths(&p3, 0, 2, 1, 10).unwrap().paths.is_empty());
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let e = enumerate_paths(&c4, 0, 2, 4, 10).unwrap();
        assert_eq!(e.paths, vec![vec![0, 1, 2], vec![0, 3, 2]]);
        assert!(!e.truncated);
        let e = enumerate_paths(&c4, 0, 2, 4, 1).unwrap();
        assert_eq!(e.paths.len(), 1);
        assert!(e.truncated);
    }

    #[test]
    fn thm4_unique_short_path_to_spokes() {
        // (5,6): s_0 = 31, w = 0, u_1 = 1. Length a - 1 = 4.
        let g = crate::families::thm4_graph(5, 6).unwrap();
        let e = enumerate_paths(&g, 31, 1, 4, 10).unwrap();
        assert_eq!(e.paths, vec![vec![31, 32, 33, 0, 1]]);
    }
}
