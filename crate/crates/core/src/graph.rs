//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row per vertex, so neighborhoods, class
//! intersections and induced-subgraph scans are plain bit operations. Values
//! are immutable: every edit returns a new [`Graph`].

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop ({0},{0}) is not allowed")]
    SelfLoop(usize),
    #[error("edge ({u},{v}) is not in the graph")]
    EdgeAbsent { u: usize, v: usize },
    #[error("edge ({u},{v}) is already in the graph")]
    EdgePresent { u: usize, v: usize },
}

/// An unordered vertex pair stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in ascending order.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
            m: 0,
        })
    }

    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut rows = Self::empty(n)?.rows;
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            rows[a] |= bit(b);
            rows[b] |= bit(a);
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    /// Builds a graph from adjacency rows, validating symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mask = low_bits(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & bit(v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            if row & !mask != 0 {
                let w = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v: w, n });
            }
            for w in Bits(row) {
                if rows[w] & bit(v) == 0 {
                    return Err(GraphError::EdgeAbsent { u: w, v });
                }
            }
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        let twice: u32 = rows.iter().map(|r| r.count_ones()).sum();
        Graph {
            n: rows.len(),
            m: twice as usize / 2,
            rows,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Neighborhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in Bits(self.rows[u] & !low_bits(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.n < 2 || self.m == self.n * (self.n - 1) / 2
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `self` with the edge `e` removed.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::EdgeAbsent { u: e.u, v: e.v });
        }
        let mut rows = self.rows.clone();
        rows[e.u] &= !bit(e.v);
        rows[e.v] &= !bit(e.u);
        Ok(Graph {
            n: self.n,
            rows,
            m: self.m - 1,
        })
    }

    /// `self` with the edge `e` added.
    pub fn add_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if self.has_edge(e.u, e.v) {
            return Err(GraphError::EdgePresent { u: e.u, v: e.v });
        }
        let mut rows = self.rows.clone();
        rows[e.u] |= bit(e.v);
        rows[e.v] |= bit(e.u);
        Ok(Graph {
            n: self.n,
            rows,
            m: self.m + 1,
        })
    }

    /// Removes `v` and its incident edges; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let keep = self.vertex_mask() & !bit(v);
        Ok(self.induced_subgraph(keep).0)
    }

    /// Subgraph induced by the vertex mask, relabeled order-preservingly.
    /// The second component maps new labels back to the original vertices.
    pub fn induced_subgraph(&self, mask: u64) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = Bits(mask & self.vertex_mask()).collect();
        let rows = keep
            .iter()
            .map(|&old| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.rows[old] & bit(w) != 0)
                    .fold(0u64, |acc, (new, _)| acc | bit(new))
            })
            .collect();
        (Self::from_rows_unchecked(rows), keep)
    }

    /// Same vertex set, adjacency inverted off the diagonal.
    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let rows = (0..self.n).map(|v| all & !bit(v) & !self.rows[v]).collect();
        Graph {
            n: self.n,
            rows,
            m: self.n * self.n.saturating_sub(1) / 2 - self.m,
        }
    }

    /// Vertex mask reachable from `start`.
    pub fn reachable(&self, start: usize) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// True iff a traversal from vertex 0 reaches every vertex. The null
    /// graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable(0) == self.vertex_mask()
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reachable(left.trailing_zeros() as usize);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// Shifts every label by `offset`, for 1-based `v1..vn` labels.
    pub fn edges_display(&self, offset: usize) -> String {
        self.edges()
            .iter()
            .map(|e| format!("({},{})", e.u + offset, e.v + offset))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, [{}])",
            self.n,
            self.m,
            self.edges_display(0)
        )
    }
}
