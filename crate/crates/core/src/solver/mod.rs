//! Exact rvc / srvc by iterative deepening over the palette size.

mod engine;
mod enumerate;
mod monotonicity;
mod oracle;

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::check::{CheckError, Mode, RainbowChecker};
use crate::coloring::{VertexColoring, MAX_PALETTE};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, GraphError};

pub use enumerate::{connected_graph_count, enumerate_connected_graphs, ConnectedGraphs, ENUMERATION_LIMIT};
pub use monotonicity::{search_monotonicity_violation, Deleted, MonotonicityViolation, Variant};
pub use oracle::{oracle_exact, rg_strings, EXACT_ORACLE_LIMIT};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error("palette of {0} colors exceeds the supported maximum of {MAX_PALETTE}")]
    PaletteTooLarge(usize),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("order {order} outside the supported range {min}..={max}")]
    OrderOutOfRange { order: usize, min: usize, max: usize },
    #[error("search budget exhausted")]
    BudgetExhausted,
}

/// Limits on one search. Both unset means unlimited.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    pub fn nodes(max: u64) -> Self {
        SearchBudget {
            max_nodes: Some(max),
            max_time: None,
        }
    }

    pub fn time(max: Duration) -> Self {
        SearchBudget {
            max_nodes: None,
            max_time: Some(max),
        }
    }

    pub fn is_limited(&self) -> bool {
        self.max_nodes.is_some() || self.max_time.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Found(VertexColoring),
    /// No coloring with this many colors exists; the search space was
    /// exhausted.
    None,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Status {
    Exact,
    /// Budget ran out. Brackets what was settled before that.
    Unknown {
        largest_none: Option<usize>,
        smallest_found: Option<usize>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub mode: Mode,
    /// The parameter when exact, otherwise the best proven lower bound.
    pub value: usize,
    pub witness: Option<VertexColoring>,
    pub status: Status,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SolveResult {
    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }
}

/// `0` for complete graphs, otherwise `max(1, diam - 1)`.
pub fn lower_bound(g: &Graph) -> Result<usize, SolveError> {
    let dist = all_pairs_distances(g);
    lower_bound_from(g, &dist)
}

fn lower_bound_from(g: &Graph, dist: &DistanceMatrix) -> Result<usize, SolveError> {
    let diam = dist.diameter().ok_or(GraphError::Disconnected)? as usize;
    Ok(if g.is_complete() { 0 } else { diam.saturating_sub(1).max(1) })
}

/// Reusable solver state for one graph.
pub struct Solver<'g> {
    graph: &'g Graph,
    checker: RainbowChecker<'g>,
    nodes: u64,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self, SolveError> {
        let checker = RainbowChecker::new(graph)?;
        Ok(Solver {
            graph,
            checker,
            nodes: 0,
        })
    }

    pub fn nodes_explored(&self) -> u64 {
        self.nodes
    }

    fn distances(&self) -> &DistanceMatrix {
        self.checker.distances()
    }

    pub fn decide(&mut self, k: usize, mode: Mode, budget: &SearchBudget) -> Result<Decision, SolveError> {
        let deadline = budget.max_time.map(|t| Instant::now() + t);
        self.decide_until(k, mode, budget, deadline)
    }

    fn decide_until(
        &mut self,
        k: usize,
        mode: Mode,
        budget: &SearchBudget,
        deadline: Option<Instant>,
    ) -> Result<Decision, SolveError> {
        if k > MAX_PALETTE {
            return Err(SolveError::PaletteTooLarge(k));
        }
        if k == 0 {
            return Ok(if self.graph.is_complete() {
                Decision::Found(VertexColoring::uncolored())
            } else {
                Decision::None
            });
        }
        let Some(mut engine) = engine::Engine::build(self.graph, self.distances(), mode, k)? else {
            return Ok(Decision::None);
        };
        let mut progress = engine::Progress {
            nodes: self.nodes,
            budget,
            deadline,
        };
        let outcome = engine.run(&mut progress);
        self.nodes = progress.nodes;
        Ok(match outcome {
            engine::Outcome::Found(colors) => {
                let witness = VertexColoring::new(k, colors).expect("engine colors lie in 1..=k");
                let report = self.checker.check(&witness, mode)?;
                assert!(report.valid, "search produced an invalid coloring: {report:?}");
                Decision::Found(witness)
            }
            engine::Outcome::Exhausted => Decision::None,
            engine::Outcome::OutOfBudget => Decision::Unknown,
        })
    }

    pub fn compute(&mut self, mode: Mode, budget: &SearchBudget) -> Result<SolveResult, SolveError> {
        let start = Instant::now();
        let deadline = budget.max_time.map(|t| start + t);
        let nodes_before = self.nodes;
        let lb = lower_bound_from(self.graph, self.distances())?;
        let n = self.graph.order();
        let mut largest_none = None;
        // Any coloring with all colors distinct works, so the loop ends by n.
        for k in lb..=n.max(1) {
            match self.decide_until(k, mode, budget, deadline)? {
                Decision::Found(witness) => {
                    return Ok(SolveResult {
                        mode,
                        value: k,
                        witness: Some(witness),
                        status: Status::Exact,
                        nodes_explored: self.nodes - nodes_before,
                        elapsed: start.elapsed(),
                    })
                }
                Decision::None => largest_none = Some(k),
                Decision::Unknown => {
                    let smallest_found = (n >= 3).then(|| n - 2);
                    return Ok(SolveResult {
                        mode,
                        value: k,
                        witness: None,
                        status: Status::Unknown {
                            largest_none,
                            smallest_found,
                        },
                        nodes_explored: self.nodes - nodes_before,
                        elapsed: start.elapsed(),
                    });
                }
            }
        }
        unreachable!("a coloring with {n} distinct colors always works")
    }
}

/// Is there a coloring with at most `k` colors for `mode`?
pub fn decide_k(g: &Graph, k: usize, mode: Mode, budget: &SearchBudget) -> Result<Decision, SolveError> {
    Solver::new(g)?.decide(k, mode, budget)
}

/// rvc(G) or srvc(G) with a witness coloring.
pub fn compute(g: &Graph, mode: Mode, budget: &SearchBudget) -> Result<SolveResult, SolveError> {
    Solver::new(g)?.compute(mode, budget)
}

/// Number of candidate paths the search would track for palette `k`; `None`
/// when the palette is refuted before search.
pub fn candidate_count(g: &Graph, k: usize, mode: Mode) -> Result<Option<usize>, SolveError> {
    let dist = all_pairs_distances(g);
    if !dist.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    Ok(engine::Engine::build(g, &dist, mode, k.max(1))?.map(|e| e.candidate_count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::check_coloring;
    use crate::families::{generate, FamilySpec};

    fn family(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound(&family(FamilySpec::Complete { n: 5 })).unwrap(), 0);
        assert_eq!(lower_bound(&family(FamilySpec::Path { n: 6 })).unwrap(), 4);
        assert_eq!(lower_bound(&family(FamilySpec::Wheel2 { n: 9 })).unwrap(), 3);
        assert_eq!(lower_bound(&family(FamilySpec::Cycle { n: 5 })).unwrap(), 1);
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(lower_bound(&g), Err(SolveError::Graph(GraphError::Disconnected))));
    }

    #[test]
    fn decide_examples() {
        let unlimited = SearchBudget::unlimited();
        let p4 = family(FamilySpec::Path { n: 4 });
        assert_eq!(decide_k(&p4, 1, Mode::Srvc, &unlimited).unwrap(), Decision::None);
        assert!(matches!(decide_k(&p4, 2, Mode::Srvc, &unlimited).unwrap(), Decision::Found(_)));
        let w7 = family(FamilySpec::Wheel2 { n: 7 });
        assert_eq!(decide_k(&w7, 2, Mode::Rvc, &unlimited).unwrap(), Decision::None);
        match decide_k(&w7, 3, Mode::Rvc, &unlimited).unwrap() {
            Decision::Found(c) => assert!(check_coloring(&w7, &c, Mode::Rvc).unwrap().valid),
            other => panic!("expected a coloring, got {other:?}"),
        }
        assert!(matches!(
            decide_k(&p4, 65, Mode::Rvc, &unlimited),
            Err(SolveError::PaletteTooLarge(65))
        ));
    }

    #[test]
    fn compute_examples() {
        let unlimited = SearchBudget::unlimited();
        let r = compute(&family(FamilySpec::Wheel2 { n: 6 }), Mode::Srvc, &unlimited).unwrap();
        assert_eq!((r.value, r.is_exact()), (2, true));
        let r = compute(&family(FamilySpec::Bipartite { s: 3, t: 3 }), Mode::Srvc, &unlimited).unwrap();
        assert_eq!(r.value, 1);
        let r = compute(&family(FamilySpec::Path { n: 5 }), Mode::Rvc, &unlimited).unwrap();
        assert_eq!(r.value, 3);
        let r = compute(&family(FamilySpec::Complete { n: 4 }), Mode::Srvc, &unlimited).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.witness, Some(VertexColoring::uncolored()));
        let r = compute(&Graph::empty(1).unwrap(), Mode::Rvc, &unlimited).unwrap();
        assert_eq!(r.value, 0);
    }

    #[test]
    fn witness_uses_exactly_value_colors() {
        let unlimited = SearchBudget::unlimited();
        for n in 3..=8 {
            let g = family(FamilySpec::Path { n });
            let r = compute(&g, Mode::Srvc, &unlimited).unwrap();
            assert_eq!(r.value, n - 2);
            let w = r.witness.unwrap();
            assert_eq!(w.distinct_colors(), n - 2);
            assert_eq!(decide_k(&g, n - 3, Mode::Srvc, &unlimited).unwrap(), Decision::None);
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = family(FamilySpec::Wheel2 { n: 7 });
        let r = compute(&g, Mode::Rvc, &SearchBudget::nodes(3)).unwrap();
        assert!(!r.is_exact());
        assert!(r.witness.is_none());
        match r.status {
            Status::Unknown { smallest_found, .. } => assert_eq!(smallest_found, Some(13)),
            Status::Exact => unreachable!(),
        }
        assert_eq!(
            decide_k(&g, 2, Mode::Rvc, &SearchBudget::nodes(1)).unwrap(),
            Decision::Unknown
        );
    }

    #[test]
    fn distance_beyond_palette_is_refuted_without_search() {
        let p8 = family(FamilySpec::Path { n: 8 });
        assert_eq!(candidate_count(&p8, 3, Mode::Rvc).unwrap(), None);
        let mut solver = Solver::new(&p8).unwrap();
        assert_eq!(solver.decide(3, Mode::Rvc, &SearchBudget::unlimited()).unwrap(), Decision::None);
        assert_eq!(solver.nodes_explored(), 0);
    }
}
