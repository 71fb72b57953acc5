//! Detection of the small forbidden induced patterns (`I3`, `2K2`, `I4`,
//! `2K2+K1`, `P3+P2`), the `P4` subgraph test and the star-graph test.
//!
//! Every detector walks candidate tuples in lexicographic order over
//! role-normalized witnesses and stops at the first hit, so the reported
//! witness is the smallest one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{bit, low_bits, Bits, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    I3,
    TwoK2,
    I4,
    TwoK2PlusK1,
    P3PlusP2,
}

impl PatternKind {
    pub const ALL: [PatternKind; 5] = [
        PatternKind::I3,
        PatternKind::TwoK2,
        PatternKind::I4,
        PatternKind::TwoK2PlusK1,
        PatternKind::P3PlusP2,
    ];

    /// Patterns whose absence characterizes `chi_s = n - 1`.
    pub const N_MINUS_1: [PatternKind; 2] = [PatternKind::I3, PatternKind::TwoK2];

    /// Patterns whose absence is claimed to characterize `chi_s = n - 2`.
    pub const N_MINUS_2: [PatternKind; 3] = [
        PatternKind::I4,
        PatternKind::TwoK2PlusK1,
        PatternKind::P3PlusP2,
    ];

    pub fn order(self) -> usize {
        match self {
            PatternKind::I3 => 3,
            PatternKind::TwoK2 | PatternKind::I4 => 4,
            PatternKind::TwoK2PlusK1 | PatternKind::P3PlusP2 => 5,
        }
    }

    /// Edges of the pattern as pairs of witness positions.
    pub fn role_edges(self) -> &'static [(usize, usize)] {
        match self {
            PatternKind::I3 | PatternKind::I4 => &[],
            PatternKind::TwoK2 | PatternKind::TwoK2PlusK1 => &[(0, 1), (2, 3)],
            PatternKind::P3PlusP2 => &[(0, 1), (1, 2), (3, 4)],
        }
    }

    pub fn edge_count(self) -> usize {
        self.role_edges().len()
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::I3 => "I3",
            PatternKind::TwoK2 => "2K2",
            PatternKind::I4 => "I4",
            PatternKind::TwoK2PlusK1 => "2K2+K1",
            PatternKind::P3PlusP2 => "P3+P2",
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let key: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_')
            .collect();
        match key.to_ascii_lowercase().as_str() {
            "i3" => Ok(PatternKind::I3),
            "2k2" | "twok2" => Ok(PatternKind::TwoK2),
            "i4" => Ok(PatternKind::I4),
            "2k2+k1" | "2k2k1" | "twok2plusk1" => Ok(PatternKind::TwoK2PlusK1),
            "p3+p2" | "p3p2" | "p3plusp2" => Ok(PatternKind::P3PlusP2),
            _ => Err(format!(
                "unknown pattern `{s}` (expected i3, 2k2, i4, 2k2+k1, p3+p2)"
            )),
        }
    }
}

/// An occurrence of a pattern as an induced subgraph.
///
/// Role conventions for `vertices`:
/// - `I3`, `I4`: ascending.
/// - `2K2`: `(a,b,c,d)` with edges `ab`, `cd`, `a<b`, `c<d`, `a<c`.
/// - `2K2+K1`: as `2K2`, followed by the isolated vertex.
/// - `P3+P2`: `(x,y,z,a,b)` with path `x-y-z`, edge `ab`, `x<z`, `a<b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub vertices: Vec<usize>,
}

impl PatternWitness {
    /// True iff the tuple follows the role convention and induces exactly the
    /// pattern's edges in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.len() != self.kind.order() || vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let set = vs.iter().fold(0u64, |acc, &v| acc | bit(v));
        if set.count_ones() as usize != vs.len() || !roles_normalized(self.kind, vs) {
            return false;
        }
        let roles = self.kind.role_edges();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let want = roles.contains(&(i, j));
                if g.has_edge(vs[i], vs[j]) != want {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for PatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, format_roles(self, 0))
    }
}

/// Renders a witness by role: `(0,1),(3,4)` for `2K2`, `(0,2,4)` for `I3`,
/// `(0,2,4)+(3,5)` for `P3+P2`. `offset` shifts labels (1 for 1-based output).
pub fn format_roles(w: &PatternWitness, offset: usize) -> String {
    let v: Vec<usize> = w.vertices.iter().map(|x| x + offset).collect();
    match w.kind {
        PatternKind::I3 | PatternKind::I4 => format!(
            "({})",
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
        PatternKind::TwoK2 => format!("({},{}),({},{})", v[0], v[1], v[2], v[3]),
        PatternKind::TwoK2PlusK1 => {
            format!("({},{}),({},{}),({})", v[0], v[1], v[2], v[3], v[4])
        }
        PatternKind::P3PlusP2 => format!("({},{},{})+({},{})", v[0], v[1], v[2], v[3], v[4]),
    }
}

fn roles_normalized(kind: PatternKind, v: &[usize]) -> bool {
    match kind {
        PatternKind::I3 | PatternKind::I4 => v.windows(2).all(|w| w[0] < w[1]),
        PatternKind::TwoK2 | PatternKind::TwoK2PlusK1 => v[0] < v[1] && v[2] < v[3] && v[0] < v[2],
        PatternKind::P3PlusP2 => v[0] < v[2] && v[3] < v[4],
    }
}

#[inline]
fn above(v: usize) -> u64 {
    !low_bits(v + 1)
}

/// Smallest ascending independent `k`-tuple extending `chosen` within `cand`.
fn independent_tuple(g: &Graph, cand: u64, k: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == k {
        return true;
    }
    for v in Bits(cand) {
        chosen.push(v);
        if independent_tuple(g, cand & above(v) & !g.neighbors(v), k, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn find_two_k2(g: &Graph, with_isolated: bool) -> Option<Vec<usize>> {
    let all = g.vertex_mask();
    for a in 0..g.n() {
        for b in Bits(g.neighbors(a) & above(a)) {
            let outside_ab = all & !g.neighbors(a) & !g.neighbors(b) & !bit(a) & !bit(b);
            for c in Bits(outside_ab & above(a)) {
                for d in Bits(outside_ab & g.neighbors(c) & above(c)) {
                    if !with_isolated {
                        return Some(vec![a, b, c, d]);
                    }
                    let free = outside_ab & !g.neighbors(c) & !g.neighbors(d) & !bit(c) & !bit(d);
                    if free != 0 {
                        return Some(vec![a, b, c, d, free.trailing_zeros() as usize]);
                    }
                }
            }
        }
    }
    None
}

fn find_p3_plus_p2(g: &Graph) -> Option<Vec<usize>> {
    let all = g.vertex_mask();
    for x in 0..g.n() {
        for y in Bits(g.neighbors(x)) {
            for z in Bits(g.neighbors(y) & !g.neighbors(x) & above(x)) {
                let outside = all
                    & !(g.neighbors(x) | g.neighbors(y) | g.neighbors(z))
                    & !(bit(x) | bit(y) | bit(z));
                for a in Bits(outside) {
                    let b = outside & g.neighbors(a) & above(a);
                    if b != 0 {
                        return Some(vec![x, y, z, a, b.trailing_zeros() as usize]);
                    }
                }
            }
        }
    }
    None
}

/// Smallest role-normalized induced occurrence of `kind` in `g`.
pub fn find_induced(g: &Graph, kind: PatternKind) -> Option<PatternWitness> {
    let vertices = match kind {
        PatternKind::I3 | PatternKind::I4 => {
            let mut chosen = Vec::with_capacity(kind.order());
            independent_tuple(g, g.vertex_mask(), kind.order(), &mut chosen).then_some(chosen)
        }
        PatternKind::TwoK2 => find_two_k2(g, false),
        PatternKind::TwoK2PlusK1 => find_two_k2(g, true),
        PatternKind::P3PlusP2 => find_p3_plus_p2(g),
    }?;
    Some(PatternWitness { kind, vertices })
}

/// First witness among `kinds`, tried in the given order.
pub fn find_any(g: &Graph, kinds: &[PatternKind]) -> Option<PatternWitness> {
    kinds.iter().find_map(|&k| find_induced(g, k))
}

pub fn is_free(g: &Graph, kinds: &[PatternKind]) -> bool {
    find_any(g, kinds).is_none()
}

/// Does some sequence of four distinct vertices carry three consecutive edges?
/// Scans middle edges `b-c` for distinct outer neighbors `a` and `d`.
pub fn contains_p4_subgraph(g: &Graph) -> bool {
    for b in 0..g.n() {
        for c in Bits(g.neighbors(b)) {
            let outer_b = g.neighbors(b) & !bit(c);
            let outer_c = g.neighbors(c) & !bit(b);
            if outer_b != 0 && outer_c != 0 && (outer_b | outer_c).count_ones() >= 2 {
                return true;
            }
        }
    }
    false
}

/// P4 detection through the star characterization: a component contains a
/// 4-vertex path iff it has at least four vertices and is not a star.
pub fn contains_p4_subgraph_via_stars(g: &Graph) -> bool {
    g.components()
        .into_iter()
        .filter(|c| c.count_ones() >= 4)
        .any(|c| !is_star_graph(&g.induced_subgraph(c).0))
}

/// A tree with at most one vertex of degree two or more. `K1` qualifies.
pub fn is_star_graph(g: &Graph) -> bool {
    g.n() >= 1
        && g.is_connected()
        && g.m() == g.n() - 1
        && (0..g.n()).filter(|&v| g.degree(v) >= 2).count() <= 1
}

/// Some pair of adjacent vertices shares a neighbor.
pub fn has_triangle(g: &Graph) -> bool {
    g.edges()
        .iter()
        .any(|e| g.neighbors(e.u) & g.neighbors(e.v) != 0)
}

/// A 4-cycle as a subgraph: some pair of vertices has two common neighbors.
pub fn has_c4_subgraph(g: &Graph) -> bool {
    (0..g.n()).any(|u| (u + 1..g.n()).any(|v| (g.neighbors(u) & g.neighbors(v)).count_ones() >= 2))
}

pub fn has_k4_subgraph(g: &Graph) -> bool {
    (0..g.n()).any(|a| {
        Bits(g.neighbors(a) & above(a)).any(|b| {
            let common = g.neighbors(a) & g.neighbors(b) & above(b);
            Bits(common).any(|c| common & g.neighbors(c) & above(c) != 0)
        })
    })
}

/// Complement has neither a 3-cycle nor a 4-cycle, decided through the
/// pattern detectors on `g`: no `I3` and no induced `2K2`.
pub fn complement_is_c3c4_free(g: &Graph) -> bool {
    let via_patterns = is_free(g, &PatternKind::N_MINUS_1);
    debug_assert_eq!(via_patterns, complement_is_c3c4_free_direct(g));
    via_patterns
}

/// Same predicate, checked on the complement's cycles directly.
pub fn complement_is_c3c4_free_direct(g: &Graph) -> bool {
    let h = g.complement();
    !has_triangle(&h) && !has_c4_subgraph(&h)
}

/// Complement is `K4`-free, i.e. `g` has no independent set of size four.
pub fn complement_is_k4_free(g: &Graph) -> bool {
    let via_patterns = find_induced(g, PatternKind::I4).is_none();
    debug_assert_eq!(via_patterns, !has_k4_subgraph(&g.complement()));
    via_patterns
}
