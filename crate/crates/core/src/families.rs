//! Named graph families: horn graphs, double-horn graphs, iterated cones
//! over `C5`, and the standard complete/path/cycle/star/independent graphs.
//!
//! The horn and double-horn generators transcribe the set-builder edge
//! definitions with `v_i -> i - 1`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs n >= {min}, got {n}")]
    TooSmall {
        family: Family,
        n: usize,
        min: usize,
    },
    #[error("{family} needs n <= {MAX_VERTICES}, got {n}")]
    TooLarge { family: Family, n: usize },
    #[error("unknown family `{0}`")]
    Unknown(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StandardFamily {
    Complete,
    Path,
    Cycle,
    Star,
    Independent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Horn,
    DoubleHorn,
    ConeC5,
    Standard(StandardFamily),
}

impl Family {
    pub fn min_order(self) -> usize {
        match self {
            Family::Horn | Family::DoubleHorn | Family::ConeC5 => 5,
            Family::Standard(StandardFamily::Cycle) => 3,
            Family::Standard(_) => 1,
        }
    }

    pub fn build(self, n: usize) -> Result<Graph, FamilyError> {
        if n < self.min_order() {
            return Err(FamilyError::TooSmall {
                family: self,
                n,
                min: self.min_order(),
            });
        }
        if n > MAX_VERTICES {
            return Err(FamilyError::TooLarge { family: self, n });
        }
        let edges = match self {
            Family::Horn => horn_edges(n),
            Family::DoubleHorn => double_horn_edges(n),
            Family::ConeC5 => cone_c5_edges(n),
            Family::Standard(s) => standard_edges(s, n),
        };
        Ok(Graph::from_edge_list(n, &edges).expect("family edges are in range"))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Horn => "horn",
            Family::DoubleHorn => "double-horn",
            Family::ConeC5 => "cone-c5",
            Family::Standard(StandardFamily::Complete) => "complete",
            Family::Standard(StandardFamily::Path) => "path",
            Family::Standard(StandardFamily::Cycle) => "cycle",
            Family::Standard(StandardFamily::Star) => "star",
            Family::Standard(StandardFamily::Independent) => "independent",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        Ok(match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "horn" | "h" => Family::Horn,
            "double-horn" | "doublehorn" | "d" => Family::DoubleHorn,
            "cone-c5" | "conec5" | "cone" | "g" => Family::ConeC5,
            "complete" | "k" => Family::Standard(StandardFamily::Complete),
            "path" | "p" => Family::Standard(StandardFamily::Path),
            "cycle" | "c" => Family::Standard(StandardFamily::Cycle),
            "star" => Family::Standard(StandardFamily::Star),
            "independent" | "empty" | "i" => Family::Standard(StandardFamily::Independent),
            _ => return Err(FamilyError::Unknown(s.to_string())),
        })
    }
}

/// `{v_i v_j : 1 <= i <= n-3, i+1 <= j <= n-1} ∪ {v_{n-1} v_n}`
fn horn_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 1..=n - 3 {
        for j in i + 1..=n - 1 {
            e.push((i - 1, j - 1));
        }
    }
    e.push((n - 2, n - 1));
    e
}

/// Clique on `[n-4]`, `v_{n-3} ~ v_i` for `i in [n-5]`, `v_{n-2} ~ v_i` for
/// `i in 2..=n-4`, plus `v_{n-2}v_{n-3}`, `v_{n-1}v_{n-3}`, `v_n v_{n-2}`.
fn double_horn_edges(n: usize) -> Vec<(usize, usize)> {
    let v = |i: usize| i - 1;
    let mut e = Vec::new();
    for i in 1..=n - 4 {
        for j in i + 1..=n - 4 {
            e.push((v(i), v(j)));
        }
    }
    for i in 1..=n.saturating_sub(5) {
        e.push((v(n - 3), v(i)));
    }
    for i in 2..=n - 4 {
        e.push((v(n - 2), v(i)));
    }
    e.push((v(n - 2), v(n - 3)));
    e.push((v(n - 1), v(n - 3)));
    e.push((v(n), v(n - 2)));
    e
}

/// `C5`, then each further vertex joined to everything before it.
fn cone_c5_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    for i in 5..n {
        e.extend((0..i).map(|j| (j, i)));
    }
    e
}

fn standard_edges(s: StandardFamily, n: usize) -> Vec<(usize, usize)> {
    match s {
        StandardFamily::Complete => (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect(),
        StandardFamily::Path => (1..n).map(|i| (i - 1, i)).collect(),
        StandardFamily::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        StandardFamily::Star => (1..n).map(|i| (0, i)).collect(),
        StandardFamily::Independent => Vec::new(),
    }
}

pub fn horn(n: usize) -> Result<Graph, FamilyError> {
    Family::Horn.build(n)
}

pub fn double_horn(n: usize) -> Result<Graph, FamilyError> {
    Family::DoubleHorn.build(n)
}

pub fn cone_c5(n: usize) -> Result<Graph, FamilyError> {
    Family::ConeC5.build(n)
}

/// `Star` is `K_{1,n-1}` centered at vertex 0.
pub fn standard(family: StandardFamily, n: usize) -> Result<Graph, FamilyError> {
    Family::Standard(family).build(n)
}

/// Uniform random graph: each pair is an edge independently with probability `p`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("random edges are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{low_bits, Bits};

    fn pairs(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().into_iter().map(|e| (e.u, e.v)).collect()
    }

    #[test]
    fn horn_5_expansion() {
        assert_eq!(
            pairs(&horn(5).unwrap()),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (3, 4)]
        );
    }

    #[test]
    fn horn_structure() {
        for n in 5..=12 {
            let h = horn(n).unwrap();
            assert_eq!(h.m(), (n - 1) * (n - 2) / 2, "n={n}");
            // {v1..v_{n-2}} is a clique
            let clique = low_bits(n - 2);
            for v in Bits(clique) {
                assert_eq!(h.neighbors(v) & clique, clique & !(1 << v));
            }
            assert_eq!(h.neighbors(n - 2), low_bits(n - 3) | 1 << (n - 1));
            assert_eq!(h.degree(n - 1), 1);
            assert!(h.is_connected());
        }
        assert!(matches!(horn(4), Err(FamilyError::TooSmall { .. })));
    }

    #[test]
    fn double_horn_expansion() {
        assert_eq!(
            pairs(&double_horn(6).unwrap()),
            vec![(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 5)]
        );
        let d5 = double_horn(5).unwrap();
        assert_eq!(pairs(&d5), vec![(1, 2), (1, 3), (2, 4)]);
        assert_eq!(d5.degree(0), 0);
        assert!(!d5.is_connected());
    }

    #[test]
    fn double_horn_structure() {
        for n in 6..=12 {
            let d = double_horn(n).unwrap();
            assert_eq!(d.m(), (n - 4) * (n - 5) / 2 + 2 * (n - 5) + 3, "n={n}");
            assert!(d.is_connected());
            assert_eq!(d.degree(n - 2), 1);
            assert_eq!(d.degree(n - 1), 1);
            // v1 sees the rest of the clique and v_{n-3} (when n >= 6)
            assert_eq!(d.degree(0), n - 5 + 1);
            assert_eq!(d.degree(n - 5), n - 4);
            assert_eq!(d.degree(n - 4), n - 3);
        }
    }

    #[test]
    fn cone_structure() {
        let c5 = standard(StandardFamily::Cycle, 5).unwrap();
        assert_eq!(cone_c5(5).unwrap(), c5);
        let w5 = cone_c5(6).unwrap();
        assert_eq!(w5.m(), 10);
        assert_eq!(w5.degree(5), 5);
        for n in 5..=12 {
            let m: usize = 5 + (6..=n).map(|i| i - 1).sum::<usize>();
            assert_eq!(cone_c5(n).unwrap().m(), m);
        }
    }

    #[test]
    fn standard_families() {
        assert_eq!(standard(StandardFamily::Complete, 4).unwrap().m(), 6);
        assert_eq!(standard(StandardFamily::Cycle, 5).unwrap().m(), 5);
        let star = standard(StandardFamily::Star, 5).unwrap();
        assert_eq!((star.m(), star.degree(0)), (4, 4));
        assert!(standard(StandardFamily::Cycle, 2).is_err());
        assert!(standard(StandardFamily::Path, 0).is_err());
        assert!(standard(StandardFamily::Complete, 65).is_err());
    }

    #[test]
    fn parse_family_names() {
        assert_eq!("horn".parse::<Family>().unwrap(), Family::Horn);
        assert_eq!("double_horn".parse::<Family>().unwrap(), Family::DoubleHorn);
        assert!(matches!(
            "petersen".parse::<Family>(),
            Err(FamilyError::Unknown(_))
        ));
        for f in [
            Family::Horn,
            Family::DoubleHorn,
            Family::ConeC5,
            Family::Standard(StandardFamily::Star),
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }
}
