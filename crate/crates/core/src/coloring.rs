//! Vertex colorings and their text format.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Vertex;

/// Largest palette any check or search accepts. Internal color sets are
/// single `u64` bit sets.
pub const MAX_PALETTE: usize = 64;

pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("line {line}: malformed line {text:?}")]
    Malformed { line: usize, text: String },
    #[error("missing header line \"<n> <k>\"")]
    MissingHeader,
    #[error("vertex {vertex} has color {color} outside [1, {palette}]")]
    ColorOutOfRange {
        vertex: Vertex,
        color: Color,
        palette: usize,
    },
    #[error("line {line}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange {
        line: usize,
        vertex: Vertex,
        order: usize,
    },
    #[error("line {line}: vertex {vertex} colored twice")]
    Duplicate { line: usize, vertex: Vertex },
    #[error("vertex {0} has no color")]
    Missing(Vertex),
    #[error("a palette of size 0 must have no color lines")]
    NonEmptyZeroPalette,
}

/// A total map from vertices to colors `1..=palette_size`.
///
/// A palette of size 0 stands for the uncolored graph: `colors` is empty and
/// no vertex can serve as a rainbow internal vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VertexColoring {
    palette_size: usize,
    colors: Vec<Color>,
}

impl VertexColoring {
    pub fn new(palette_size: usize, colors: Vec<Color>) -> Result<Self, ColoringError> {
        if palette_size == 0 && !colors.is_empty() {
            return Err(ColoringError::NonEmptyZeroPalette);
        }
        for (vertex, &color) in colors.iter().enumerate() {
            if color == 0 || color as usize > palette_size {
                return Err(ColoringError::ColorOutOfRange {
                    vertex,
                    color,
                    palette: palette_size,
                });
            }
        }
        Ok(VertexColoring {
            palette_size,
            colors,
        })
    }

    /// Palette size taken as the largest color present.
    pub fn from_colors(colors: Vec<Color>) -> Result<Self, ColoringError> {
        let k = colors.iter().copied().max().unwrap_or(0) as usize;
        VertexColoring::new(k, colors)
    }

    pub fn uncolored() -> Self {
        VertexColoring {
            palette_size: 0,
            colors: Vec::new(),
        }
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// `None` for the uncolored graph.
    pub fn color(&self, v: Vertex) -> Option<Color> {
        self.colors.get(v).copied()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<Color> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Applies a relabeling of the palette. `perm[c - 1]` is the new color of `c`.
    pub fn permuted(&self, perm: &[Color]) -> Result<Self, ColoringError> {
        let colors = self.colors.iter().map(|&c| perm[c as usize - 1]).collect();
        VertexColoring::new(self.palette_size, colors)
    }

    /// Parses `<n> <k>` followed by `n` lines `<vertex> <color>` in any order.
    pub fn parse(text: &str) -> Result<Self, ColoringError> {
        let mut header: Option<(usize, usize)> = None;
        let mut slots: Vec<Option<Color>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let malformed = || ColoringError::Malformed {
                line,
                text: raw.to_string(),
            };
            let mut fields = trimmed.split_whitespace();
            let (a, b) = match (fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), None) => (
                    a.parse::<usize>().map_err(|_| malformed())?,
                    b.parse::<usize>().map_err(|_| malformed())?,
                ),
                _ => return Err(malformed()),
            };
            match header {
                None => {
                    header = Some((a, b));
                    slots = vec![None; a];
                }
                Some((n, k)) => {
                    if k == 0 {
                        return Err(ColoringError::NonEmptyZeroPalette);
                    }
                    if a >= n {
                        return Err(ColoringError::VertexOutOfRange {
                            line,
                            vertex: a,
                            order: n,
                        });
                    }
                    if slots[a].is_some() {
                        return Err(ColoringError::Duplicate { line, vertex: a });
                    }
                    let color = Color::try_from(b).map_err(|_| malformed())?;
                    slots[a] = Some(color);
                }
            }
        }
        let (_, k) = header.ok_or(ColoringError::MissingHeader)?;
        if k == 0 {
            return Ok(VertexColoring::uncolored());
        }
        let colors = slots
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(ColoringError::Missing(v)))
            .collect::<Result<Vec<_>, _>>()?;
        VertexColoring::new(k, colors)
    }

    /// Inverse of [`VertexColoring::parse`]; `order` is only consulted for the
    /// header of the uncolored graph.
    pub fn to_text(&self, order: usize) -> String {
        let mut out = String::new();
        let n = if self.palette_size == 0 { order } else { self.colors.len() };
        let _ = writeln!(out, "{} {}", n, self.palette_size);
        for (v, c) in self.colors.iter().enumerate() {
            let _ = writeln!(out, "{v} {c}");
        }
        out
    }
}
