use crate::check::{oracle_rainbow_geodesic, oracle_rainbow_path, Mode};
use crate::coloring::{Color, VertexColoring};
use crate::graph::{Graph, GraphError};

use super::SolveError;

pub const EXACT_ORACLE_LIMIT: usize = 8;

/// Restricted growth strings of length `n` using exactly `blocks` colors:
/// the first vertex gets color 1 and each later vertex at most one more than
/// the largest color before it.
pub fn rg_strings(n: usize, blocks: usize) -> Vec<Vec<Color>> {
    fn go(n: usize, blocks: usize, cur: &mut Vec<Color>, max: usize, out: &mut Vec<Vec<Color>>) {
        if cur.len() == n {
            if max == blocks {
                out.push(cur.clone());
            }
            return;
        }
        // Not enough vertices left to open the missing colors.
        if blocks - max > n - cur.len() {
            return;
        }
        for c in 1..=(max + 1).min(blocks) {
            cur.push(c as Color);
            go(n, blocks, cur, max.max(c), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 || blocks == 0 || blocks > n {
        return out;
    }
    go(n, blocks, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

fn all_pairs_pass(g: &Graph, c: &VertexColoring, mode: Mode) -> Result<bool, SolveError> {
    let n = g.order();
    for u in 0..n {
        for v in (u + 1)..n {
            let ok = match mode {
                Mode::Rvc => oracle_rainbow_path(g, c, u, v)?,
                Mode::Srvc => oracle_rainbow_geodesic(g, c, u, v)?,
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Plain enumeration of canonical colorings with 0, 1, 2, ... colors, each
/// checked pair by pair with the brute-force path oracles.
pub fn oracle_exact(g: &Graph, mode: Mode) -> Result<usize, SolveError> {
    let n = g.order();
    if n > EXACT_ORACLE_LIMIT {
        return Err(SolveError::OrderOutOfRange {
            order: n,
            min: 1,
            max: EXACT_ORACLE_LIMIT,
        });
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    if all_pairs_pass(g, &VertexColoring::uncolored(), mode)? {
        return Ok(0);
    }
    for k in 1..=n {
        for colors in rg_strings(n, k) {
            let c = VertexColoring::new(k, colors).expect("rg strings stay in range");
            if all_pairs_pass(g, &c, mode)? {
                return Ok(k);
            }
        }
    }
    unreachable!("n distinct colors always work")
}
