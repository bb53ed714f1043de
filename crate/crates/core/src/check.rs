//! Deciding whether a vertex coloring is rainbow vertex-connecting.
//!
//! A `u - v` path is rainbow when its internal vertices carry pairwise
//! distinct colors; the colors of `u` and `v` play no role.
//!
//! Both predicates search over states `(vertex, set of internal colors used)`
//! rather than over simple paths. The state search accepts walks whose
//! internal vertices have distinct colors. Such a walk cannot repeat an
//! internal vertex (it would repeat that vertex's color), so the only possible
//! repetitions involve the endpoints, e.g. a walk leaving `u` and coming back
//! through it. Cutting the walk at the last visit of `u` yields a simple path
//! whose internal vertices are a subset of the walk's, hence still rainbow.
//! So a rainbow walk exists iff a rainbow path does, and the search is sound
//! and complete. Whether a rainbow path may pass through one of its own
//! endpoints never has to be decided.
//!
//! A state `(x, S)` is dominated by `(x, S')` with `S' ⊆ S`: anything
//! reachable from the former is reachable from the latter. Dominated states
//! are never expanded.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, VertexColoring, MAX_PALETTE};
use crate::graph::{all_pairs_distances, bfs_distances, DistanceMatrix, Graph, GraphError, Vertex, UNREACHABLE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Some rainbow path between every pair.
    Rvc,
    /// Some rainbow geodesic between every pair.
    Srvc,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Rvc => "rvc",
            Mode::Srvc => "srvc",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "rvc" => Ok(Mode::Rvc),
            "srvc" => Ok(Mode::Srvc),
            other => Err(format!("unknown mode {other:?} (expected rvc or srvc)")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("coloring has {coloring} entries but the graph has {order} vertices")]
    LengthMismatch { coloring: usize, order: usize },
    #[error("palette of {0} colors exceeds the supported maximum of {MAX_PALETTE}")]
    PaletteTooLarge(usize),
    #[error("oracle is limited to graphs of order at most {limit}, got {order}")]
    OracleGuard { order: usize, limit: usize },
    #[error("endpoints must be distinct vertices of the graph")]
    BadEndpoints,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Outcome of [`check_coloring`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub valid: bool,
    pub mode: Mode,
    /// Lexicographically smallest pair `(u, v)`, `u < v`, with no rainbow
    /// path (or geodesic).
    pub failing_pair: Option<(Vertex, Vertex)>,
    pub pairs_checked: usize,
}

fn validate(g: &Graph, c: &VertexColoring) -> Result<(), CheckError> {
    if c.palette_size() > MAX_PALETTE {
        return Err(CheckError::PaletteTooLarge(c.palette_size()));
    }
    if c.palette_size() > 0 && c.len() != g.order() {
        return Err(CheckError::LengthMismatch {
            coloring: c.len(),
            order: g.order(),
        });
    }
    Ok(())
}

fn validate_endpoints(g: &Graph, u: Vertex, v: Vertex) -> Result<(), CheckError> {
    if u == v || u >= g.order() || v >= g.order() {
        return Err(CheckError::BadEndpoints);
    }
    Ok(())
}

#[inline]
fn bit(c: Color) -> u64 {
    1u64 << (c - 1)
}

/// Records `mask` at `x` unless a subset is already recorded there.
fn admit(seen: &mut [Vec<u64>], x: Vertex, mask: u64) -> bool {
    let slot = &mut seen[x];
    if slot.iter().any(|&m| m & !mask == 0) {
        return false;
    }
    slot.retain(|&m| mask & !m != 0);
    slot.push(mask);
    true
}

/// State search over all walks; see the module docs.
fn rainbow_path_search(g: &Graph, colors: &[Color], u: Vertex, v: Vertex) -> bool {
    if g.has_edge(u, v) {
        return true;
    }
    if colors.is_empty() {
        return false;
    }
    let mut seen = vec![Vec::new(); g.order()];
    seen[u].push(0);
    let mut stack = vec![(u, 0u64)];
    while let Some((x, mask)) = stack.pop() {
        for &y in g.neighbors(x) {
            if y == v {
                return true;
            }
            let b = bit(colors[y]);
            if mask & b != 0 {
                continue;
            }
            let next = mask | b;
            if admit(&mut seen, y, next) {
                stack.push((y, next));
            }
        }
    }
    false
}

/// State search restricted to the shortest-path DAG from `u` to `v`.
fn rainbow_geodesic_search(g: &Graph, colors: &[Color], from_u: &[u32], to_v: &[u32], u: Vertex, v: Vertex) -> bool {
    let d = from_u[v];
    if d == UNREACHABLE {
        return false;
    }
    if d <= 1 {
        return true;
    }
    if colors.is_empty() {
        return false;
    }
    let mut seen = vec![Vec::new(); g.order()];
    let mut stack = vec![(u, 0u64)];
    while let Some((x, mask)) = stack.pop() {
        for &y in g.neighbors(x) {
            if from_u[y] != from_u[x] + 1 || to_v[y] + from_u[y] != d {
                continue;
            }
            if y == v {
                return true;
            }
            let b = bit(colors[y]);
            if mask & b != 0 {
                continue;
            }
            let next = mask | b;
            if admit(&mut seen, y, next) {
                stack.push((y, next));
            }
        }
    }
    false
}

/// Checker bound to one graph; caches the distance matrix.
pub struct RainbowChecker<'g> {
    graph: &'g Graph,
    dist: DistanceMatrix,
}

impl<'g> RainbowChecker<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self, CheckError> {
        let dist = all_pairs_distances(graph);
        if !dist.is_connected() {
            return Err(GraphError::Disconnected.into());
        }
        Ok(RainbowChecker { graph, dist })
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn rainbow_path(&self, c: &VertexColoring, u: Vertex, v: Vertex) -> Result<bool, CheckError> {
        validate(self.graph, c)?;
        validate_endpoints(self.graph, u, v)?;
        Ok(rainbow_path_search(self.graph, c.colors(), u, v))
    }

    pub fn rainbow_geodesic(&self, c: &VertexColoring, u: Vertex, v: Vertex) -> Result<bool, CheckError> {
        validate(self.graph, c)?;
        validate_endpoints(self.graph, u, v)?;
        Ok(self.geodesic_unchecked(c.colors(), u, v))
    }

    fn geodesic_unchecked(&self, colors: &[Color], u: Vertex, v: Vertex) -> bool {
        rainbow_geodesic_search(self.graph, colors, self.dist.row(u), self.dist.row(v), u, v)
    }

    fn pair_ok(&self, colors: &[Color], mode: Mode, u: Vertex, v: Vertex) -> bool {
        match mode {
            Mode::Rvc => rainbow_path_search(self.graph, colors, u, v),
            Mode::Srvc => self.geodesic_unchecked(colors, u, v),
        }
    }

    pub fn check(&self, c: &VertexColoring, mode: Mode) -> Result<CheckReport, CheckError> {
        validate(self.graph, c)?;
        let n = self.graph.order();
        let colors = c.colors();
        let mut pairs_checked = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                pairs_checked += 1;
                if !self.pair_ok(colors, mode, u, v) {
                    return Ok(CheckReport {
                        valid: false,
                        mode,
                        failing_pair: Some((u, v)),
                        pairs_checked,
                    });
                }
            }
        }
        Ok(CheckReport {
            valid: true,
            mode,
            failing_pair: None,
            pairs_checked,
        })
    }
}

/// Whether some `u - v` path has pairwise distinct internal colors.
pub fn exists_rainbow_path(g: &Graph, c: &VertexColoring, u: Vertex, v: Vertex) -> Result<bool, CheckError> {
    validate(g, c)?;
    validate_endpoints(g, u, v)?;
    Ok(rainbow_path_search(g, c.colors(), u, v))
}

/// Whether some shortest `u - v` path has pairwise distinct internal colors.
pub fn exists_rainbow_geodesic(g: &Graph, c: &VertexColoring, u: Vertex, v: Vertex) -> Result<bool, CheckError> {
    validate(g, c)?;
    validate_endpoints(g, u, v)?;
    let from_u = bfs_distances(g, u);
    let to_v = bfs_distances(g, v);
    Ok(rainbow_geodesic_search(g, c.colors(), &from_u, &to_v, u, v))
}

pub fn check_coloring(g: &Graph, c: &VertexColoring, mode: Mode) -> Result<CheckReport, CheckError> {
    RainbowChecker::new(g)?.check(c, mode)
}

/// Largest order the brute-force oracles accept.
pub const ORACLE_LIMIT: usize = 12;

fn oracle_guard(g: &Graph) -> Result<(), CheckError> {
    if g.order() > ORACLE_LIMIT {
        return Err(CheckError::OracleGuard {
            order: g.order(),
            limit: ORACLE_LIMIT,
        });
    }
    Ok(())
}

fn internal_is_rainbow(colors: &[Color], path: &[Vertex]) -> bool {
    let inner = &path[1..path.len() - 1];
    if inner.is_empty() {
        return true;
    }
    if colors.is_empty() {
        return false;
    }
    let mut used = 0u64;
    for &x in inner {
        let b = bit(colors[x]);
        if used & b != 0 {
            return false;
        }
        used |= b;
    }
    true
}

/// Visits every simple `u - v` path.
fn for_each_simple_path(g: &Graph, u: Vertex, v: Vertex, visit: &mut dyn FnMut(&[Vertex])) {
    fn go(g: &Graph, v: Vertex, on: &mut Vec<bool>, path: &mut Vec<Vertex>, visit: &mut dyn FnMut(&[Vertex])) {
        let x = *path.last().unwrap();
        for &y in g.neighbors(x) {
            if on[y] {
                continue;
            }
            path.push(y);
            if y == v {
                visit(path);
            } else {
                on[y] = true;
                go(g, v, on, path, visit);
                on[y] = false;
            }
            path.pop();
        }
    }
    let mut on = vec![false; g.order()];
    on[u] = true;
    let mut path = vec![u];
    go(g, v, &mut on, &mut path, visit);
}

/// Brute force: enumerate every simple `u - v` path and test its internal
/// colors directly.
pub fn oracle_rainbow_path(g: &Graph, c: &VertexColoring, u: Vertex, v: Vertex) -> Result<bool, CheckError> {
    oracle_guard(g)?;
    validate(g, c)?;
    validate_endpoints(g, u, v)?;
    let mut found = false;
    for_each_simple_path(g, u, v, &mut |p| found |= internal_is_rainbow(c.colors(), p));
    Ok(found)
}

/// Brute force: enumerate every simple `u - v` path, keep the shortest ones,
/// and test their internal colors directly.
pub fn oracle_rainbow_geodesic(g: &Graph, c: &VertexColoring, u: Vertex, v: Vertex) -> Result<bool, CheckError> {
    oracle_guard(g)?;
    validate(g, c)?;
    validate_endpoints(g, u, v)?;
    let mut best = usize::MAX;
    let mut found = false;
    for_each_simple_path(g, u, v, &mut |p| {
        let ok = internal_is_rainbow(c.colors(), p);
        if p.len() < best {
            best = p.len();
            found = ok;
        } else if p.len() == best {
            found |= ok;
        }
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn coloring(colors: &[Color]) -> VertexColoring {
        VertexColoring::from_colors(colors.to_vec()).unwrap()
    }

    #[test]
    fn adjacent_pairs_always_pass() {
        let p4 = generate(&FamilySpec::Path { n: 4 }).unwrap();
        let c = coloring(&[1, 1, 1, 1]);
        assert!(exists_rainbow_path(&p4, &c, 0, 1).unwrap());
        assert!(exists_rainbow_geodesic(&p4, &c, 2, 3).unwrap());
        assert!(exists_rainbow_path(&p4, &VertexColoring::uncolored(), 1, 2).unwrap());
    }

    #[test]
    fn path_with_repeated_internal_colors() {
        let p4 = generate(&FamilySpec::Path { n: 4 }).unwrap();
        let bad = coloring(&[1, 1, 1, 1]);
        assert!(!exists_rainbow_path(&p4, &bad, 0, 3).unwrap());
        assert!(!exists_rainbow_geodesic(&p4, &bad, 0, 3).unwrap());
        let good = VertexColoring::new(2, vec![2, 1, 2, 1]).unwrap();
        assert!(exists_rainbow_geodesic(&p4, &good, 0, 3).unwrap());
        let r = check_coloring(&p4, &bad, Mode::Srvc).unwrap();
        assert_eq!(r.failing_pair, Some((0, 3)));
        assert!(!r.valid);
    }

    #[test]
    fn uncolored_complete_graph() {
        let k5 = generate(&FamilySpec::Complete { n: 5 }).unwrap();
        for mode in [Mode::Rvc, Mode::Srvc] {
            let r = check_coloring(&k5, &VertexColoring::uncolored(), mode).unwrap();
            assert!(r.valid);
            assert_eq!(r.pairs_checked, 10);
        }
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let r = check_coloring(&p3, &VertexColoring::uncolored(), Mode::Rvc).unwrap();
        assert_eq!(r.failing_pair, Some((0, 2)));
    }

    #[test]
    fn rvc_accepts_detour_srvc_does_not() {
        let c6 = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
        let c = coloring(&[3, 1, 1, 3, 2, 1]);
        // 0 -> 3: geodesics 0-1-2-3 (1,1) and 0-5-4-3 (1,2).
        assert!(exists_rainbow_geodesic(&c6, &c, 0, 3).unwrap());
        let c = coloring(&[3, 1, 1, 3, 1, 1]);
        assert!(!exists_rainbow_geodesic(&c6, &c, 0, 3).unwrap());
        assert!(!exists_rainbow_path(&c6, &c, 0, 3).unwrap());
        // In C7 the rainbow side 0-6-5-4-3 is not a geodesic.
        let c7 = generate(&FamilySpec::Cycle { n: 7 }).unwrap();
        let c = coloring(&[1, 1, 1, 1, 2, 3, 4]);
        assert!(!exists_rainbow_geodesic(&c7, &c, 0, 3).unwrap());
        assert!(exists_rainbow_path(&c7, &c, 0, 3).unwrap());
    }

    #[test]
    fn errors() {
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let short = coloring(&[1, 1]);
        assert!(matches!(
            exists_rainbow_path(&p3, &short, 0, 2),
            Err(CheckError::LengthMismatch { .. })
        ));
        assert!(matches!(
            exists_rainbow_path(&p3, &coloring(&[1, 1, 1]), 1, 1),
            Err(CheckError::BadEndpoints)
        ));
        let disconnected = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            check_coloring(&disconnected, &coloring(&[1, 1, 1]), Mode::Rvc),
            Err(CheckError::Graph(GraphError::Disconnected))
        ));
        let big = generate(&FamilySpec::Path { n: 13 }).unwrap();
        assert!(matches!(
            oracle_rainbow_path(&big, &coloring(&[1; 13]), 0, 12),
            Err(CheckError::OracleGuard { .. })
        ));
        let wide = VertexColoring::new(65, vec![1, 1, 1]).unwrap();
        assert!(matches!(
            check_coloring(&p3, &wide, Mode::Rvc),
            Err(CheckError::PaletteTooLarge(65))
        ));
    }

    #[test]
    fn oracle_examples() {
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        assert!(oracle_rainbow_path(&p3, &coloring(&[1, 1, 1]), 0, 2).unwrap());
        let c5 = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        let c = coloring(&[1, 1, 1, 1, 1]);
        assert!(oracle_rainbow_path(&c5, &c, 0, 2).unwrap());
        assert!(exists_rainbow_path(&c5, &c, 0, 2).unwrap());
    }
}
