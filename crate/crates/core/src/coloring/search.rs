//! Exact branch-and-bound search for proper and star colorings.
//!
//! For each candidate `k` (rising from a greedy clique bound) a depth-first
//! search colors vertices in static order: descending degree, ties by index.
//! A vertex may take any used color or exactly one fresh color. A branch is
//! cut as soon as the new vertex closes a monochromatic edge or, for star
//! colorings, a two-colored 4-path through itself.

use crate::coloring::Coloring;
use crate::graph::{bit, Bits, Graph};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rule {
    Proper,
    Star,
}

/// Static search order: descending degree, then ascending index.
pub fn vertex_order(g: &Graph, mask: u64) -> Vec<usize> {
    let mut order: Vec<usize> = Bits(mask).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Size of the largest clique found by growing greedily from every vertex of
/// `mask` in search order.
pub fn clique_lower_bound(g: &Graph, mask: u64) -> usize {
    let order = vertex_order(g, mask);
    order
        .iter()
        .map(|&start| {
            let mut clique = bit(start);
            let mut cand = g.neighbors(start) & mask;
            for &v in &order {
                if cand & bit(v) != 0 {
                    clique |= bit(v);
                    cand &= g.neighbors(v);
                }
            }
            clique.count_ones() as usize
        })
        .max()
        .unwrap_or(0)
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    k: u32,
    rule: Rule,
    color: Vec<u32>,
    class: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, mask: u64, k: u32, rule: Rule) -> Self {
        Search {
            g,
            order: vertex_order(g, mask),
            k,
            rule,
            color: vec![0; g.n()],
            class: vec![0; k as usize + 1],
        }
    }

    /// Would coloring `v` with `c` break the rule, given the colored vertices?
    fn conflicts(&self, v: usize, c: u32) -> bool {
        let g = self.g;
        let nv = g.neighbors(v);
        if nv & self.class[c as usize] != 0 {
            return true;
        }
        if self.rule == Rule::Proper {
            return false;
        }
        let same = self.class[c as usize];
        for b in Bits(nv) {
            let y = self.color[b];
            if y == 0 {
                continue;
            }
            let other = self.class[y as usize];
            // v internal: a-v-b-d with col(a) = col(b) = y, col(d) = c
            if nv & other & !bit(b) != 0 && g.neighbors(b) & same != 0 {
                return true;
            }
            // v endpoint: v-b-x-d with col(x) = c, col(d) = y
            for x in Bits(g.neighbors(b) & same) {
                if g.neighbors(x) & other & !bit(b) != 0 {
                    return true;
                }
            }
        }
        false
    }

    fn run(&mut self, pos: usize, used: u32) -> bool {
        let Some(&v) = self.order.get(pos) else {
            return true;
        };
        for c in 1..=self.k.min(used + 1) {
            if self.conflicts(v, c) {
                continue;
            }
            self.color[v] = c;
            self.class[c as usize] |= bit(v);
            if self.run(pos + 1, used.max(c)) {
                return true;
            }
            self.class[c as usize] &= !bit(v);
            self.color[v] = 0;
        }
        false
    }
}

/// A coloring of the vertices in `mask` with at most `k` colors, if one exists.
/// Vertices outside `mask` are left at 0.
fn colorable_on(g: &Graph, mask: u64, k: usize, rule: Rule) -> Option<Vec<u32>> {
    if mask == 0 {
        return Some(vec![0; g.n()]);
    }
    if k == 0 {
        return None;
    }
    let mut s = Search::new(g, mask, k as u32, rule);
    s.run(0, 0).then_some(s.color)
}

fn colorable(g: &Graph, k: usize, rule: Rule) -> Option<Coloring> {
    let mut colors = vec![0u32; g.n()];
    for comp in g.components() {
        let part = colorable_on(g, comp, k, rule)?;
        for v in Bits(comp) {
            colors[v] = part[v];
        }
    }
    Some(Coloring::from_raw(colors).normalized())
}

pub fn star_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    colorable(g, k, Rule::Star)
}

pub fn proper_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    colorable(g, k, Rule::Proper)
}

/// Minimum over `k >= lower` on one component.
fn minimum_on(g: &Graph, comp: u64, rule: Rule) -> (usize, Vec<u32>) {
    let mut k = clique_lower_bound(g, comp).max(1);
    loop {
        if let Some(colors) = colorable_on(g, comp, k, rule) {
            return (k, colors);
        }
        k += 1;
    }
}

fn minimum(g: &Graph, rule: Rule) -> (usize, Coloring) {
    let mut colors = vec![0u32; g.n()];
    let mut best = 0;
    for comp in g.components() {
        let (k, part) = minimum_on(g, comp, rule);
        best = best.max(k);
        for v in Bits(comp) {
            colors[v] = part[v];
        }
    }
    (best, Coloring::from_raw(colors).normalized())
}

/// `chi(G)` with a proper coloring certificate.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    minimum(g, Rule::Proper)
}

/// `chi_s(G)` with a star coloring certificate. Disconnected graphs take the
/// maximum over components, whose colorings share colors freely.
pub fn star_chromatic_number(g: &Graph) -> (usize, Coloring) {
    minimum(g, Rule::Star)
}

/// `chi_s(G)` given that it is at most `cap`: searches only `k < cap` and
/// returns `None` when every such `k` is infeasible, i.e. when `chi_s(G) = cap`.
pub fn star_chromatic_number_below(g: &Graph, cap: usize) -> Option<(usize, Coloring)> {
    let mut colors = vec![0u32; g.n()];
    let mut best = 0;
    for comp in g.components() {
        let lower = clique_lower_bound(g, comp).max(1);
        let (k, part) = (lower.max(best)..cap)
            .find_map(|k| colorable_on(g, comp, k, Rule::Star).map(|c| (k, c)))?;
        best = best.max(k);
        for v in Bits(comp) {
            colors[v] = part[v];
        }
    }
    Some((best, Coloring::from_raw(colors).normalized()))
}
