//! Backtracking search for a rainbow-connecting coloring with a fixed palette.
//!
//! A pair at distance at most 2 is served by any coloring with at least one
//! color, so only pairs at distance 3 or more constrain the search. For each
//! such pair the engine precomputes its candidates: the internal vertex sets
//! of the `u - v` paths (or geodesics) with at most `k` internal vertices,
//! since a longer path cannot be rainbow with `k` colors. Candidates whose
//! vertex set contains another candidate of the same pair are dropped; they
//! can only be rainbow when the smaller one is.
//!
//! During the search a candidate dies as soon as two of its internal vertices
//! receive the same color, and a pair with no live candidate refutes the
//! current partial coloring. Coloring is canonical: a vertex may take at most
//! one more than the largest color used so far, which removes palette
//! permutations without losing any coloring up to relabeling.

use std::time::Instant;

use crate::check::Mode;
use crate::graph::{DistanceMatrix, Graph, Vertex};

use super::{SearchBudget, SolveError};

/// Largest total number of candidates the engine will materialize.
pub(crate) const CANDIDATE_LIMIT: usize = 4_000_000;

/// Largest order the engine handles (vertex sets are `u128`).
pub(crate) const ORDER_LIMIT: usize = 128;

pub(crate) enum Outcome {
    Found(Vec<u32>),
    Exhausted,
    OutOfBudget,
}

pub(crate) struct Engine {
    k: u32,
    order: Vec<Vertex>,
    /// Internal vertices of candidate `i` are `cand_vertices[cand_start[i]..cand_start[i + 1]]`.
    cand_start: Vec<u32>,
    cand_vertices: Vec<u32>,
    cand_pair: Vec<u32>,
    vertex_cands: Vec<Vec<u32>>,
    pair_live: Vec<u32>,
    alive: Vec<bool>,
    colors: Vec<u32>,
    trail: Vec<u32>,
}

pub(crate) struct Progress<'b> {
    pub nodes: u64,
    pub budget: &'b SearchBudget,
    pub deadline: Option<Instant>,
}

impl Progress<'_> {
    fn exhausted(&self) -> bool {
        if let Some(max) = self.budget.max_nodes {
            if self.nodes >= max {
                return true;
            }
        }
        if let Some(deadline) = self.deadline {
            if self.nodes.is_multiple_of(1024) && Instant::now() >= deadline {
                return true;
            }
        }
        false
    }
}

/// Internal vertex sets of the candidate paths for one pair.
fn pair_candidates(g: &Graph, dist: &DistanceMatrix, mode: Mode, k: usize, u: Vertex, v: Vertex) -> Vec<u128> {
    let d = dist.get(u, v) as usize;
    let max_len = k + 1;
    let mut out = Vec::new();
    let mut on = vec![false; g.order()];
    on[u] = true;
    let mut stack: Vec<(Vertex, usize)> = vec![(u, 0)];
    // Explicit DFS with an iterator index per frame.
    let mut inner: u128 = 0;
    let mut len = 0usize;
    while let Some(&mut (x, ref mut next)) = stack.last_mut() {
        let nbrs = g.neighbors(x);
        if *next == nbrs.len() {
            stack.pop();
            if x != u {
                on[x] = false;
                inner &= !(1u128 << x);
                len -= 1;
            }
            continue;
        }
        let y = nbrs[*next];
        *next += 1;
        let step_ok = match mode {
            Mode::Srvc => dist.get(u, y) as usize == len + 1 && dist.get(y, v) as usize + len + 1 == d,
            Mode::Rvc => !on[y] && len + 1 + dist.get(y, v) as usize <= max_len,
        };
        if !step_ok {
            continue;
        }
        if y == v {
            out.push(inner);
            continue;
        }
        on[y] = true;
        inner |= 1u128 << y;
        len += 1;
        stack.push((y, 0));
    }
    out.sort_unstable_by_key(|s| (s.count_ones(), *s));
    out.dedup();
    let mut kept: Vec<u128> = Vec::with_capacity(out.len());
    for s in out {
        if !kept.iter().any(|&t| t & !s == 0) {
            kept.push(s);
        }
    }
    kept
}

impl Engine {
    /// `Ok(None)` when some pair has no candidate at all, which settles the
    /// palette size negatively without search.
    pub(crate) fn build(g: &Graph, dist: &DistanceMatrix, mode: Mode, k: usize) -> Result<Option<Engine>, SolveError> {
        let n = g.order();
        if n > ORDER_LIMIT {
            return Err(SolveError::TooLarge(format!("order {n} exceeds {ORDER_LIMIT}")));
        }
        debug_assert!(k >= 1);
        let mut cand_start = vec![0u32];
        let mut cand_vertices = Vec::new();
        let mut cand_pair = Vec::new();
        let mut vertex_cands = vec![Vec::new(); n];
        let mut pair_live = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                let d = dist.get(u, v) as usize;
                if d <= 2 {
                    continue;
                }
                if d > k + 1 {
                    return Ok(None);
                }
                let sets = pair_candidates(g, dist, mode, k, u, v);
                if sets.is_empty() {
                    return Ok(None);
                }
                let pair = pair_live.len() as u32;
                pair_live.push(sets.len() as u32);
                for s in sets {
                    let id = cand_pair.len() as u32;
                    cand_pair.push(pair);
                    let mut bits = s;
                    while bits != 0 {
                        let x = bits.trailing_zeros();
                        bits &= bits - 1;
                        cand_vertices.push(x);
                        vertex_cands[x as usize].push(id);
                    }
                    cand_start.push(cand_vertices.len() as u32);
                }
                if cand_pair.len() > CANDIDATE_LIMIT {
                    return Err(SolveError::TooLarge(format!(
                        "more than {CANDIDATE_LIMIT} candidate paths"
                    )));
                }
            }
        }
        // Descending degree, ties by id. Vertices on no candidate are
        // unconstrained and go last with a single choice.
        let mut order: Vec<Vertex> = g.vertices().collect();
        order.sort_by_key(|&x| (vertex_cands[x].is_empty(), std::cmp::Reverse(g.degree(x)), x));
        let cands = cand_pair.len();
        Ok(Some(Engine {
            k: k as u32,
            order,
            cand_start,
            cand_vertices,
            cand_pair,
            vertex_cands,
            pair_live,
            alive: vec![true; cands],
            colors: vec![0; n],
            trail: Vec::new(),
        }))
    }

    pub(crate) fn candidate_count(&self) -> usize {
        self.cand_pair.len()
    }

    fn members(&self, cand: u32) -> &[u32] {
        let lo = self.cand_start[cand as usize] as usize;
        let hi = self.cand_start[cand as usize + 1] as usize;
        &self.cand_vertices[lo..hi]
    }

    /// Colors `x` and kills the candidates this breaks. Returns false on a
    /// refuted pair; the caller undoes with the returned trail mark either way.
    fn assign(&mut self, x: Vertex, c: u32) -> bool {
        self.colors[x] = c;
        for i in 0..self.vertex_cands[x].len() {
            let cand = self.vertex_cands[x][i];
            if !self.alive[cand as usize] {
                continue;
            }
            let clash = self
                .members(cand)
                .iter()
                .any(|&y| y as usize != x && self.colors[y as usize] == c);
            if clash {
                self.alive[cand as usize] = false;
                self.trail.push(cand);
                let pair = self.cand_pair[cand as usize] as usize;
                self.pair_live[pair] -= 1;
                if self.pair_live[pair] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, x: Vertex, mark: usize) {
        while self.trail.len() > mark {
            let cand = self.trail.pop().unwrap();
            self.alive[cand as usize] = true;
            self.pair_live[self.cand_pair[cand as usize] as usize] += 1;
        }
        self.colors[x] = 0;
    }

    pub(crate) fn run(&mut self, progress: &mut Progress<'_>) -> Outcome {
        match self.descend(0, 0, progress) {
            Some(true) => Outcome::Found(self.colors.clone()),
            Some(false) => Outcome::Exhausted,
            None => Outcome::OutOfBudget,
        }
    }

    /// `Some(found)` or `None` when the budget ran out.
    fn descend(&mut self, depth: usize, max_used: u32, progress: &mut Progress<'_>) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        let x = self.order[depth];
        let top = if self.vertex_cands[x].is_empty() {
            1
        } else {
            (max_used + 1).min(self.k)
        };
        for c in 1..=top {
            progress.nodes += 1;
            if progress.exhausted() {
                return None;
            }
            let mark = self.trail.len();
            if self.assign(x, c) {
                match self.descend(depth + 1, max_used.max(c), progress) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => {
                        self.undo(x, mark);
                        return None;
                    }
                }
            }
            self.undo(x, mark);
        }
        Some(false)
    }
}
