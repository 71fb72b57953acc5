//! Exhaustive checks of the structural claims over every connected graph of
//! a given order, or over a caller-supplied list of graphs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{audit_bounds, audit_complement_conditions, BoundKind};
use crate::coloring::{chromatic_number, star_chromatic_number};
use crate::criticality::{
    characterize, direct_answer, is_proper_critical, star_criticality, Characterization,
};
use crate::enumerate::{canonical_form, enumerate_connected, enumerate_connected_range, EnumError};
use crate::families::{standard, StandardFamily};
use crate::graph::Graph;
use crate::graph6;
use crate::patterns::{contains_p4_subgraph, find_any, is_star_graph, PatternKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Claim {
    /// The only 3-critical connected graphs are `K3` and `P4`.
    ThreeCritical,
    /// `chi_s = n-1` iff `(I3, 2K2)`-free, for non-complete graphs.
    LemFree,
    /// Pattern characterization of `(n-1)`-criticality matches the direct test.
    N1Critical,
    /// `chi_s = n-2` iff `(I4, 2K2+K1, P3+P2)`-free, given `I3` or `2K2`.
    LemFreeN2,
    N2Critical,
    /// No graph with `chi = n-1` is `(n-1)`-critical for proper coloring.
    NoProperN1,
    /// Star graph iff no `P4` subgraph.
    LemP4,
    EdgeBoundsN1,
    EdgeBoundsN2,
    /// Complement conditions for `chi_s = n-1` and `chi_s = n-2`.
    Complement,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::ThreeCritical,
        Claim::LemFree,
        Claim::N1Critical,
        Claim::LemFreeN2,
        Claim::N2Critical,
        Claim::NoProperN1,
        Claim::LemP4,
        Claim::EdgeBoundsN1,
        Claim::EdgeBoundsN2,
        Claim::Complement,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::ThreeCritical => "3critical",
            Claim::LemFree => "lem-free",
            Claim::N1Critical => "n1-critical",
            Claim::LemFreeN2 => "lem-free-n2",
            Claim::N2Critical => "n2-critical",
            Claim::NoProperN1 => "no-proper-n1",
            Claim::LemP4 => "lem-p4",
            Claim::EdgeBoundsN1 => "edge-bounds-n1",
            Claim::EdgeBoundsN2 => "edge-bounds-n2",
            Claim::Complement => "complement",
        }
    }

    /// Smallest order the claim speaks about; smaller graphs are skipped.
    pub fn min_order(self) -> usize {
        match self {
            Claim::ThreeCritical | Claim::NoProperN1 => 2,
            Claim::LemP4 => 4,
            _ => 5,
        }
    }

    /// Whether `verify_claim(_, n)` covers every order up to `n` rather than
    /// `n` alone.
    pub fn cumulative(self) -> bool {
        self == Claim::ThreeCritical
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
}

impl FromStr for Claim {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let key = match key.as_str() {
            "lem-free-n-2" => "lem-free-n2",
            "n-1-critical" => "n1-critical",
            "n-2-critical" => "n2-critical",
            other => other,
        };
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == key)
            .ok_or_else(|| VerifyError::UnknownClaim(s.to_string()))
    }
}

/// Per-graph outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// Outside the claim's hypothesis.
    Skipped,
    Holds,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRun {
    pub claim: Claim,
    pub n: usize,
    /// Graphs inspected, whether or not the hypothesis applied.
    pub examined: usize,
    /// Graphs meeting the hypothesis.
    pub applicable: usize,
    /// graph6 strings, in the order the graphs were supplied.
    pub counterexamples: Vec<String>,
}

impl VerificationRun {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn is_k3_or_p4(g: &Graph) -> bool {
    let target = match g.n() {
        3 => standard(StandardFamily::Complete, 3),
        4 => standard(StandardFamily::Path, 4),
        _ => return false,
    };
    let target = target.expect("small standard graph");
    g.m() == target.m() && canonical_form(g).ok() == canonical_form(&target).ok()
}

fn verdict(holds: bool) -> Check {
    if holds {
        Check::Holds
    } else {
        Check::Counterexample
    }
}

fn characterization_agrees(g: &Graph, claim: Characterization) -> Check {
    let v = characterize(g, claim);
    if !v.is_applicable() {
        return Check::Skipped;
    }
    verdict(v.holds() == direct_answer(&star_criticality(g), g.n(), claim))
}

/// Checks one graph against a claim. Disconnected graphs and graphs below
/// the claim's minimum order are skipped.
pub fn check_graph(claim: Claim, g: &Graph) -> Check {
    let n = g.n();
    if n < claim.min_order() || !g.is_connected() {
        return Check::Skipped;
    }
    match claim {
        Claim::ThreeCritical => {
            let r = star_criticality(g);
            verdict((r.chi_s == 3 && r.is_critical) == is_k3_or_p4(g))
        }
        Claim::LemFree | Claim::N1Critical if g.is_complete() => Check::Skipped,
        Claim::LemFree => {
            let (chi_s, _) = star_chromatic_number(g);
            verdict((chi_s == n - 1) == find_any(g, &PatternKind::N_MINUS_1).is_none())
        }
        Claim::N1Critical => characterization_agrees(g, Characterization::NMinus1Critical),
        Claim::LemFreeN2 => characterization_agrees(g, Characterization::ChiSNMinus2),
        Claim::N2Critical => characterization_agrees(g, Characterization::NMinus2Critical),
        Claim::NoProperN1 => {
            if chromatic_number(g).0 != n - 1 {
                return Check::Skipped;
            }
            verdict(!is_proper_critical(g))
        }
        Claim::LemP4 => verdict(is_star_graph(g) != contains_p4_subgraph(g)),
        Claim::EdgeBoundsN1 | Claim::EdgeBoundsN2 => {
            let (offset, kind) = match claim {
                Claim::EdgeBoundsN1 => (1, BoundKind::N1Critical),
                _ => (2, BoundKind::N2Critical),
            };
            let r = star_criticality(g);
            if r.chi_s != n - offset || !r.is_critical {
                return Check::Skipped;
            }
            verdict(audit_bounds(g, kind).satisfied())
        }
        Claim::Complement => {
            let (chi_s, _) = star_chromatic_number(g);
            let report = audit_complement_conditions(g);
            if chi_s == n - 1 {
                verdict(report.n1_conditions())
            } else if chi_s == n - 2 {
                verdict(report.n2_conditions())
            } else {
                Check::Skipped
            }
        }
    }
}

/// Runs `claim` over `graphs`, keeping counterexamples in input order.
pub fn verify_claim_on(claim: Claim, n: usize, graphs: &[Graph]) -> VerificationRun {
    let checks: Vec<Check> = graphs.par_iter().map(|g| check_graph(claim, g)).collect();
    let counterexamples = graphs
        .iter()
        .zip(&checks)
        .filter(|(_, c)| **c == Check::Counterexample)
        .map(|(g, _)| graph6::encode(g).expect("enumerated order fits graph6"))
        .collect();
    VerificationRun {
        claim,
        n,
        examined: graphs.len(),
        applicable: checks.iter().filter(|c| **c != Check::Skipped).count(),
        counterexamples,
    }
}

/// Runs `claim` over every connected graph on `n` vertices (every order
/// `2..=n` for the 3-critical claim, as `K1` has no edge to delete).
/// Orders below the claim's minimum yield an empty run.
pub fn verify_claim(claim: Claim, n: usize) -> Result<VerificationRun, VerifyError> {
    let graphs = if claim.cumulative() {
        if n < 2 {
            Vec::new()
        } else {
            enumerate_connected_range(2, n)?
        }
    } else if n < claim.min_order() {
        enumerate_connected(n.max(1))?;
        Vec::new()
    } else {
        enumerate_connected(n)?
    };
    Ok(verify_claim_on(claim, n, &graphs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
        }
        assert_eq!("lem-free-n-2".parse::<Claim>().unwrap(), Claim::LemFreeN2);
        assert!("bogus".parse::<Claim>().is_err());
    }

    #[test]
    fn three_critical_at_six() {
        let run = verify_claim(Claim::ThreeCritical, 6).unwrap();
        assert_eq!(run.examined, 142);
        assert!(run.holds());
    }

    #[test]
    fn small_runs_hold() {
        for (claim, n, examined) in [
            (Claim::LemFree, 5, 21),
            (Claim::NoProperN1, 6, 112),
            (Claim::LemP4, 5, 21),
            (Claim::EdgeBoundsN1, 5, 21),
        ] {
            let run = verify_claim(claim, n).unwrap();
            assert_eq!(run.examined, examined, "{claim}");
            assert!(run.holds(), "{claim}: {:?}", run.counterexamples);
        }
        assert_eq!(verify_claim(Claim::LemFree, 5).unwrap().applicable, 20);
    }

    #[test]
    fn below_minimum_order_is_empty() {
        let run = verify_claim(Claim::LemFree, 4).unwrap();
        assert_eq!((run.examined, run.applicable), (0, 0));
        assert!(verify_claim(Claim::LemFree, 9).is_err());
    }

    #[test]
    fn c6_is_a_counterexample_to_lem_free_n2() {
        let c6 = standard(StandardFamily::Cycle, 6).unwrap();
        let canonical = graph6::encode(&canonical_form(&c6).unwrap().to_graph()).unwrap();
        let run = verify_claim(Claim::LemFreeN2, 6).unwrap();
        assert_eq!(run.counterexamples.len(), 2);
        assert!(run.counterexamples.contains(&canonical));
        assert_eq!(check_graph(Claim::LemFreeN2, &c6), Check::Counterexample);
    }

    #[test]
    fn external_input_skips_disconnected() {
        let g = Graph::from_edge_list(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let run = verify_claim_on(Claim::LemFree, 6, &[g]);
        assert_eq!((run.examined, run.applicable), (1, 0));
    }
}
