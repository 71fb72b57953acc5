#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use starcrit::coloring::Coloring;
use starcrit::enumerate::enumerate_connected_range;
use starcrit::families::gnp;
use starcrit::{Graph, PatternKind};

pub fn connected_up_to(n: usize) -> Vec<Graph> {
    enumerate_connected_range(1, n).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` graphs with orders in `lo..=hi` and edge densities spread over (0, 1).
pub fn random_graphs(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(lo..=hi);
            let p = r.gen_range(0.1..0.9);
            gnp(n, p, &mut r)
        })
        .collect()
}

/// Greedy proper coloring in a random vertex order, each vertex taking a
/// random allowed color from a palette of `max_degree + 1 + extra` colors.
pub fn random_proper_coloring<R: Rng>(g: &Graph, extra: u32, r: &mut R) -> Coloring {
    let palette = g.max_degree() as u32 + 1 + extra;
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(r);
    let mut colors = vec![0u32; g.n()];
    for v in order {
        let allowed: Vec<u32> = (1..=palette)
            .filter(|&c| (0..g.n()).all(|u| !g.has_edge(u, v) || colors[u] != c))
            .collect();
        colors[v] = *allowed.choose(r).unwrap();
    }
    Coloring::new(colors).unwrap()
}

/// Does some injective map of the pattern's vertices induce exactly its edges?
pub fn naive_contains(g: &Graph, kind: PatternKind) -> bool {
    let k = kind.order();
    let mut chosen = Vec::with_capacity(k);
    search(g, kind, &mut chosen)
}

fn search(g: &Graph, kind: PatternKind, chosen: &mut Vec<usize>) -> bool {
    let k = kind.order();
    if chosen.len() == k {
        return (0..k).all(|a| {
            (a + 1..k).all(|b| {
                let want = kind
                    .role_edges()
                    .iter()
                    .any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b));
                g.has_edge(chosen[a], chosen[b]) == want
            })
        });
    }
    for v in 0..g.n() {
        if chosen.contains(&v) {
            continue;
        }
        chosen.push(v);
        let found = search(g, kind, chosen);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

/// Random relabeling of `g`.
pub fn shuffled<R: Rng>(g: &Graph, r: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(r);
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (perm[e.u], perm[e.v])).collect();
    Graph::from_edge_list(g.n(), &edges).unwrap()
}
