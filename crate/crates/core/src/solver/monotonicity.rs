use std::collections::HashMap;

use serde::Serialize;

use crate::check::Mode;
use crate::graph::{Graph, Vertex};

use super::{enumerate_connected_graphs, SearchBudget, SolveError, Solver, ENUMERATION_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Delete one edge, keeping every vertex (spanning subgraphs).
    Edge,
    /// Delete one vertex with its edges.
    Vertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Deleted {
    Vertex(Vertex),
    Edge(Vertex, Vertex),
}

/// A connected graph whose connected subgraph `G - x` has strictly smaller
/// srvc.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotonicityViolation {
    pub graph_edges: Vec<(Vertex, Vertex)>,
    pub order: usize,
    pub deleted: Deleted,
    pub srvc_before: usize,
    pub srvc_after: usize,
}

struct Memo<'b> {
    budget: &'b SearchBudget,
    values: HashMap<Graph, usize>,
}

impl Memo<'_> {
    fn srvc(&mut self, g: &Graph) -> Result<usize, SolveError> {
        if let Some(&v) = self.values.get(g) {
            return Ok(v);
        }
        let r = Solver::new(g)?.compute(Mode::Srvc, self.budget)?;
        if !r.is_exact() {
            return Err(SolveError::BudgetExhausted);
        }
        self.values.insert(g.clone(), r.value);
        Ok(r.value)
    }
}

/// Scans connected graphs of order `2..=max_n` in enumeration order and
/// returns the first `(G, x)` with `G - x` connected and
/// `srvc(G) > srvc(G - x)`. `budget` applies to each individual solve.
pub fn search_monotonicity_violation(
    max_n: usize,
    variant: Variant,
    budget: &SearchBudget,
) -> Result<Option<MonotonicityViolation>, SolveError> {
    if max_n > ENUMERATION_LIMIT {
        return Err(SolveError::OrderOutOfRange {
            order: max_n,
            min: 2,
            max: ENUMERATION_LIMIT,
        });
    }
    let mut memo = Memo {
        budget,
        values: HashMap::new(),
    };
    for n in 2..=max_n {
        for g in enumerate_connected_graphs(n)? {
            let subgraphs: Vec<(Deleted, Graph)> = match variant {
                Variant::Vertex => g
                    .vertices()
                    .map(|x| (Deleted::Vertex(x), g.remove_vertex(x).expect("vertex exists")))
                    .collect(),
                Variant::Edge => g
                    .edges()
                    .into_iter()
                    .map(|(u, v)| (Deleted::Edge(u, v), g.remove_edge(u, v)))
                    .collect(),
            };
            let mut before = None;
            for (deleted, h) in subgraphs {
                if !h.is_connected() {
                    continue;
                }
                let b = match before {
                    Some(b) => b,
                    None => *before.insert(memo.srvc(&g)?),
                };
                let after = memo.srvc(&h)?;
                if b > after {
                    return Ok(Some(MonotonicityViolation {
                        graph_edges: g.edges(),
                        order: n,
                        deleted,
                        srvc_before: b,
                        srvc_after: after,
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_variant_hits_a_path_endpoint_first() {
        let v = search_monotonicity_violation(4, Variant::Vertex, &SearchBudget::unlimited())
            .unwrap()
            .unwrap();
        // First connected graph on 3 vertices is the path 1-0-2.
        assert_eq!(v.graph_edges, vec![(0, 1), (0, 2)]);
        assert_eq!(v.deleted, Deleted::Vertex(1));
        assert_eq!((v.srvc_before, v.srvc_after), (1, 0));
    }

    #[test]
    fn edge_variant_has_nothing_below_order_4() {
        // Every connected graph on at most 3 vertices is a tree or K3, and
        // K3 minus an edge has larger srvc.
        assert_eq!(
            search_monotonicity_violation(3, Variant::Edge, &SearchBudget::unlimited()).unwrap(),
            None
        );
    }
}
