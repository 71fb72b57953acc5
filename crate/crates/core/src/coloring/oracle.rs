//! Exhaustive reference for `chi_s`: every coloring in restricted-growth
//! order (one representative per set partition), checked with the full
//! star-coloring test. Shares nothing with the branch-and-bound search.

use crate::coloring::{is_star_coloring, Coloring, ColoringError};
use crate::graph::Graph;

pub const ORACLE_MAX_VERTICES: usize = 9;

/// Calls `visit` on each restricted-growth string of length `n` with at most
/// `k` blocks, stopping early when it returns true.
fn any_rgs(n: usize, k: u32, visit: &mut impl FnMut(&[u32]) -> bool) -> bool {
    fn rec(
        buf: &mut Vec<u32>,
        n: usize,
        k: u32,
        max: u32,
        visit: &mut impl FnMut(&[u32]) -> bool,
    ) -> bool {
        if buf.len() == n {
            return visit(buf);
        }
        for c in 1..=k.min(max + 1) {
            buf.push(c);
            if rec(buf, n, k, max.max(c), visit) {
                return true;
            }
            buf.pop();
        }
        false
    }
    rec(&mut Vec::with_capacity(n), n, k, 0, visit)
}

pub fn star_chromatic_number_oracle(g: &Graph) -> Result<usize, ColoringError> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(ColoringError::TooLarge {
            n,
            max: ORACLE_MAX_VERTICES,
        });
    }
    for k in 1..=n as u32 {
        let found = any_rgs(n, k, &mut |rgs| {
            is_star_coloring(g, &Coloring::from_raw(rgs.to_vec())).expect("lengths match")
        });
        if found {
            return Ok(k as usize);
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{standard, StandardFamily};

    #[test]
    fn oracle_values() {
        assert_eq!(
            star_chromatic_number_oracle(&standard(StandardFamily::Path, 4).unwrap()),
            Ok(3)
        );
        assert_eq!(
            star_chromatic_number_oracle(&standard(StandardFamily::Complete, 4).unwrap()),
            Ok(4)
        );
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(star_chromatic_number_oracle(&two_k2), Ok(2));
        assert_eq!(
            star_chromatic_number_oracle(&standard(StandardFamily::Cycle, 5).unwrap()),
            Ok(4)
        );
        assert_eq!(
            star_chromatic_number_oracle(&Graph::empty(10).unwrap()),
            Err(ColoringError::TooLarge { n: 10, max: 9 })
        );
    }

    #[test]
    fn rgs_counts_are_bell_numbers() {
        for (n, bell) in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)] {
            let mut count = 0;
            any_rgs(n, n as u32, &mut |_| {
                count += 1;
                false
            });
            assert_eq!(count, bell);
        }
    }
}
