//! Canonical forms by exhaustive relabeling and isomorphism-free generation
//! of all graphs of a given order by one-vertex augmentation.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bit, Graph};

/// Largest order handled by [`canonical_form`] and the enumerator.
pub const MAX_ENUM_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {n} outside the supported range {min}..={MAX_ENUM_ORDER}")]
    OrderOutOfRange { n: usize, min: usize },
}

/// The lexicographically smallest upper-triangle bit string over all vertex
/// relabelings. Bits run in column order `(0,1),(0,2),(1,2),(0,3),...`, with
/// the first pair as the most significant bit, so numeric order on `bits`
/// is string order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u64,
}

impl CanonicalForm {
    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.n;
        let total = n * n.saturating_sub(1) / 2;
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.bits >> (total - 1 - k)) & 1 == 1 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
                k += 1;
            }
        }
        Graph::from_rows_unchecked(rows)
    }
}

struct Minimizer<'a> {
    g: &'a Graph,
    total: usize,
    perm: Vec<usize>,
    used: u64,
    best: u64,
}

impl Minimizer<'_> {
    /// Places original vertices at positions `depth..n`, with `prefix`
    /// holding the bits of columns `1..depth`.
    fn search(&mut self, depth: usize, prefix: u64) {
        let n = self.g.n();
        if depth == n {
            self.best = self.best.min(prefix);
            return;
        }
        let prefix_len = depth * (depth + 1) / 2;
        for v in 0..n {
            if self.used & bit(v) != 0 {
                continue;
            }
            let mut p = prefix;
            for &u in &self.perm {
                p = (p << 1) | self.g.has_edge(u, v) as u64;
            }
            if p > self.best >> (self.total - prefix_len) {
                continue;
            }
            self.perm.push(v);
            self.used |= bit(v);
            self.search(depth + 1, p);
            self.used &= !bit(v);
            self.perm.pop();
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, EnumError> {
    let n = g.n();
    if n > MAX_ENUM_ORDER {
        return Err(EnumError::OrderOutOfRange { n, min: 0 });
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut m = Minimizer {
        g,
        total,
        perm: Vec::with_capacity(n),
        used: 0,
        best: u64::MAX,
    };
    m.search(0, 0);
    Ok(CanonicalForm {
        n,
        bits: if n < 2 { 0 } else { m.best },
    })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, EnumError> {
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// One canonically labeled representative per isomorphism class of graphs
/// on `n` vertices, connected or not, in canonical-form order.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>, EnumError> {
    if n > MAX_ENUM_ORDER {
        return Err(EnumError::OrderOutOfRange { n, min: 0 });
    }
    let mut level = vec![Graph::empty(0).expect("null graph")];
    for order in 1..=n {
        level = augment(&level, order);
    }
    Ok(level)
}

fn augment(prev: &[Graph], order: usize) -> Vec<Graph> {
    let new = order - 1;
    let forms: Vec<CanonicalForm> = prev
        .par_iter()
        .flat_map_iter(|g| {
            (0..1u64 << new).map(move |nbhd| {
                let mut rows: Vec<u64> = (0..new)
                    .map(|v| g.neighbors(v) | ((nbhd >> v) & 1) << new)
                    .collect();
                rows.push(nbhd);
                let h = Graph::from_rows_unchecked(rows);
                canonical_form(&h).expect("order within range")
            })
        })
        .collect();
    let unique: BTreeMap<CanonicalForm, ()> = forms.into_iter().map(|f| (f, ())).collect();
    unique.into_keys().map(|f| f.to_graph()).collect()
}

/// Connected graphs on exactly `n` vertices, `1 <= n <= 8`.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, EnumError> {
    if n == 0 {
        return Err(EnumError::OrderOutOfRange { n, min: 1 });
    }
    Ok(enumerate_all(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// Connected graphs of every order in `lo..=hi`, by order then canonical form.
pub fn enumerate_connected_range(lo: usize, hi: usize) -> Result<Vec<Graph>, EnumError> {
    if lo == 0 || hi > MAX_ENUM_ORDER {
        return Err(EnumError::OrderOutOfRange {
            n: if lo == 0 { 0 } else { hi },
            min: 1,
        });
    }
    let mut level = vec![Graph::empty(0).expect("null graph")];
    let mut out = Vec::new();
    for order in 1..=hi {
        level = augment(&level, order);
        if order >= lo {
            out.extend(level.iter().filter(|g| g.is_connected()).cloned());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{standard, StandardFamily};

    #[test]
    fn relabeled_p4_has_one_form() {
        let p4 = standard(StandardFamily::Path, 4).unwrap();
        let relabeled = Graph::from_edge_list(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(
            canonical_form(&p4).unwrap(),
            canonical_form(&relabeled).unwrap()
        );
        let c5 = standard(StandardFamily::Cycle, 5).unwrap();
        let p5 = standard(StandardFamily::Path, 5).unwrap();
        assert_ne!(canonical_form(&c5).unwrap(), canonical_form(&p5).unwrap());
    }

    #[test]
    fn canonical_graph_round_trip() {
        let g = Graph::from_edge_list(5, &[(0, 4), (4, 2), (1, 3)]).unwrap();
        let f = canonical_form(&g).unwrap();
        let h = f.to_graph();
        assert_eq!(canonical_form(&h).unwrap(), f);
        assert_eq!(h.m(), 3);
    }

    #[test]
    fn minimal_string_is_minimal_over_all_permutations() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (3, 4), (0, 3)]).unwrap();
        let f = canonical_form(&g).unwrap();
        let mut perm: Vec<usize> = (0..5).collect();
        let mut best = u64::MAX;
        permute(&mut perm, 0, &mut |p| {
            let mut bits = 0u64;
            for j in 1..5 {
                for i in 0..j {
                    bits = bits << 1 | g.has_edge(p[i], p[j]) as u64;
                }
            }
            best = best.min(bits);
        });
        assert_eq!(f.bits, best);
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            return f(p);
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn counts() {
        let all: Vec<usize> = (0..=6).map(|n| enumerate_all(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected(n).unwrap().len())
            .collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(enumerate_connected_range(1, 6).unwrap().len(), 143);
    }

    #[test]
    fn range_errors() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(9).is_err());
        assert!(canonical_form(&Graph::empty(9).unwrap()).is_err());
    }
}
