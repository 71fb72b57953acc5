//! Colorings, the proper and star coloring checkers, and exact solvers for
//! `chi(G)` and `chi_s(G)`.
//!
//! A star coloring is a proper coloring in which no path on four vertices
//! (as a subgraph) alternates between two colors.

mod oracle;
mod search;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bit, Bits, Graph};
use crate::patterns::is_star_graph;

pub use oracle::{star_chromatic_number_oracle, ORACLE_MAX_VERTICES};
pub use search::{
    chromatic_number, clique_lower_bound, proper_colorable, star_chromatic_number,
    star_chromatic_number_below, star_colorable, vertex_order,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} has color 0; colors start at 1")]
    ZeroColor { vertex: usize },
    #[error("coloring is not proper: edge ({u},{v}) is monochromatic")]
    NotProper { u: usize, v: usize },
    #[error("exhaustive oracle supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// A vertex coloring with colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self, ColoringError> {
        if let Some(vertex) = colors.iter().position(|&c| c == 0) {
            return Err(ColoringError::ZeroColor { vertex });
        }
        Ok(Coloring { colors })
    }

    pub(crate) fn from_raw(colors: Vec<u32>) -> Self {
        debug_assert!(colors.iter().all(|&c| c > 0));
        Coloring { colors }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Largest color in use.
    pub fn k(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Renames colors to `1..=k` in order of first use by vertex index.
    pub fn normalized(&self) -> Coloring {
        let mut map: Vec<(u32, u32)> = Vec::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| match map.iter().find(|(old, _)| *old == c) {
                Some(&(_, new)) => new,
                None => {
                    let new = map.len() as u32 + 1;
                    map.push((c, new));
                    new
                }
            })
            .collect();
        Coloring { colors }
    }

    /// Vertices carrying color `c`.
    pub fn class_mask(&self, c: u32) -> u64 {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .fold(0, |acc, (v, _)| acc | bit(v))
    }

    /// Restriction to the listed vertices, in that order.
    pub fn restrict(&self, vertices: &[usize]) -> Coloring {
        Coloring {
            colors: vertices.iter().map(|&v| self.colors[v]).collect(),
        }
    }

    /// Space-separated colors, e.g. `1 2 1 3`.
    pub fn to_line(&self) -> String {
        self.colors
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// A path `a-b-c-d` colored `x y x y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicoloredP4Witness {
    pub path: [usize; 4],
    pub colors: (u32, u32),
}

impl fmt::Display for BicoloredP4Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.path;
        write!(
            f,
            "{a}-{b}-{c}-{d} colored {}/{}",
            self.colors.0, self.colors.1
        )
    }
}

fn check_len(g: &Graph, c: &Coloring) -> Result<(), ColoringError> {
    if c.len() != g.n() {
        Err(ColoringError::LengthMismatch {
            expected: g.n(),
            found: c.len(),
        })
    } else {
        Ok(())
    }
}

fn monochromatic_edge(g: &Graph, c: &Coloring) -> Option<(usize, usize)> {
    g.edges()
        .into_iter()
        .find(|e| c.colors[e.u] == c.colors[e.v])
        .map(|e| (e.u, e.v))
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    check_len(g, c)?;
    Ok(monochromatic_edge(g, c).is_none())
}

/// Smallest (lexicographic) 4-vertex path whose colors alternate between two
/// values. The path's vertices need not induce a `P4`.
pub fn find_bicolored_p4(
    g: &Graph,
    c: &Coloring,
) -> Result<Option<BicoloredP4Witness>, ColoringError> {
    check_len(g, c)?;
    if let Some((u, v)) = monochromatic_edge(g, c) {
        return Err(ColoringError::NotProper { u, v });
    }
    let k = c.k();
    let classes: Vec<u64> = (0..=k as u32).map(|x| c.class_mask(x)).collect();
    let col = |v: usize| c.colors[v] as usize;
    for a in 0..g.n() {
        for b in Bits(g.neighbors(a)) {
            for cc in Bits(g.neighbors(b) & classes[col(a)] & !bit(a)) {
                if let Some(d) = Bits(g.neighbors(cc) & classes[col(b)] & !bit(b)).next() {
                    return Ok(Some(BicoloredP4Witness {
                        path: [a, b, cc, d],
                        colors: (c.colors[a], c.colors[b]),
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_star_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if !is_proper(g, c)? {
        return Ok(false);
    }
    Ok(find_bicolored_p4(g, c)?.is_none())
}

/// Every component of the subgraph induced by color classes `i` and `j` is a
/// star. A single class is edgeless under a proper coloring, so `i == j` holds.
pub fn two_class_union_is_star_forest(
    g: &Graph,
    c: &Coloring,
    i: u32,
    j: u32,
) -> Result<bool, ColoringError> {
    check_len(g, c)?;
    if let Some((u, v)) = monochromatic_edge(g, c) {
        return Err(ColoringError::NotProper { u, v });
    }
    if i == j {
        return Ok(true);
    }
    let (union, _) = g.induced_subgraph(c.class_mask(i) | c.class_mask(j));
    Ok(union
        .components()
        .into_iter()
        .all(|comp| is_star_graph(&union.induced_subgraph(comp).0)))
}
