//! Star-criticality: the direct definition (solve `G` and every `G - e`) and
//! the forbidden-pattern characterizations for `chi_s = n - 1` and
//! `chi_s = n - 2`.
//!
//! The direct method is ground truth. The characterizations are fast paths;
//! [`classify_critical`] refuses to answer when one of them disagrees.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{
    chromatic_number, star_chromatic_number, star_chromatic_number_below, Coloring,
};
use crate::graph::{Edge, Graph};
use crate::patterns::{find_any, PatternKind, PatternWitness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeValue {
    pub edge: Edge,
    pub chi_s: usize,
}

/// Outcome of the direct criticality test at a claimed `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub k: usize,
    pub chi_s: usize,
    /// False when `k != chi_s`; `is_critical` is then false as well.
    pub premise_holds: bool,
    pub is_critical: bool,
    /// First edge whose deletion leaves `chi_s` unchanged.
    pub failing_edge: Option<Edge>,
    pub per_edge: Vec<EdgeValue>,
    pub certificate: Coloring,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Characterization {
    /// `chi_s = n-1` iff `(I3, 2K2)`-free.
    ChiSNMinus1,
    /// `(n-1)`-critical iff `(I3, 2K2)`-free and every `G-e` has `I3` or `2K2`.
    NMinus1Critical,
    /// `chi_s = n-2` iff `(I4, 2K2+K1, P3+P2)`-free, given `I3` or `2K2`.
    ChiSNMinus2,
    /// `(n-2)`-critical iff the above freeness holds and every `G-e` has one
    /// of the three patterns.
    NMinus2Critical,
}

impl Characterization {
    fn kinds(self) -> (&'static [PatternKind], &'static [PatternKind]) {
        match self {
            Characterization::ChiSNMinus1 | Characterization::NMinus1Critical => {
                (&PatternKind::N_MINUS_1, &PatternKind::N_MINUS_1)
            }
            Characterization::ChiSNMinus2 | Characterization::NMinus2Critical => {
                (&PatternKind::N_MINUS_2, &PatternKind::N_MINUS_2)
            }
        }
    }

    fn per_edge(self) -> bool {
        matches!(
            self,
            Characterization::NMinus1Critical | Characterization::NMinus2Critical
        )
    }

    /// The `chi_s` target, `n - 1` or `n - 2`.
    pub fn target(self, n: usize) -> usize {
        match self {
            Characterization::ChiSNMinus1 | Characterization::NMinus1Critical => n - 1,
            Characterization::ChiSNMinus2 | Characterization::NMinus2Critical => n - 2,
        }
    }
}

impl fmt::Display for Characterization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Characterization::ChiSNMinus1 => "chi_s = n-1 <=> (I3,2K2)-free",
            Characterization::NMinus1Critical => "(n-1)-critical characterization",
            Characterization::ChiSNMinus2 => "chi_s = n-2 <=> (I4,2K2+K1,P3+P2)-free",
            Characterization::NMinus2Critical => "(n-2)-critical characterization",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Inapplicable {
    TooFewVertices {
        n: usize,
    },
    Complete,
    /// Neither an `I3` nor an induced `2K2`.
    NoI3Or2K2,
}

impl fmt::Display for Inapplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inapplicable::TooFewVertices { n } => write!(f, "needs n >= 5, got n = {n}"),
            Inapplicable::Complete => f.write_str("graph is complete"),
            Inapplicable::NoI3Or2K2 => f.write_str("graph contains neither I3 nor an induced 2K2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictStatus {
    Holds,
    Fails,
    Inapplicable(Inapplicable),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWitness {
    pub edge: Edge,
    /// A forbidden pattern in `G - e`, if any.
    pub witness: Option<PatternWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationVerdict {
    pub claim: Characterization,
    pub status: VerdictStatus,
    /// A forbidden pattern in `G` itself; present iff freeness fails.
    pub graph_witness: Option<PatternWitness>,
    /// One entry per edge for the criticality characterizations.
    pub edge_witnesses: Vec<EdgeWitness>,
}

impl CharacterizationVerdict {
    pub fn holds(&self) -> bool {
        self.status == VerdictStatus::Holds
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self.status, VerdictStatus::Inapplicable(_))
    }

    /// Re-checks every recorded witness against `g` and its edge deletions.
    pub fn revalidate(&self, g: &Graph) -> bool {
        let graph_ok = self.graph_witness.as_ref().is_none_or(|w| w.is_valid_in(g));
        let edges_ok = self.edge_witnesses.iter().all(|ew| match &ew.witness {
            Some(w) => g.delete_edge(ew.edge).is_ok_and(|h| w.is_valid_in(&h)),
            None => true,
        });
        graph_ok && edges_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CriticalLabel {
    ThreeCritical,
    NMinus1Critical,
    NMinus2Critical,
    KCritical(usize),
    NotCritical,
}

impl fmt::Display for CriticalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriticalLabel::ThreeCritical => f.write_str("3-critical"),
            CriticalLabel::NMinus1Critical => f.write_str("(n-1)-critical"),
            CriticalLabel::NMinus2Critical => f.write_str("(n-2)-critical"),
            CriticalLabel::KCritical(k) => write!(f, "{k}-critical"),
            CriticalLabel::NotCritical => f.write_str("not-critical"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub label: CriticalLabel,
    pub report: CriticalityReport,
    /// Characterizations that applied, each checked against the report.
    pub fast_paths: Vec<CharacterizationVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    /// The label the direct method assigns.
    pub label: CriticalLabel,
    pub verdict: CharacterizationVerdict,
    pub direct_holds: bool,
    pub report: CriticalityReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalityError {
    #[error("criticality needs at least one edge")]
    NoEdges,
    #[error(
        "{} says {} but the direct method says {}",
        .0.verdict.claim,
        .0.verdict.holds(),
        .0.direct_holds
    )]
    Disagreement(Box<Disagreement>),
}

/// `chi_s(G)` plus `chi_s(G - e)` for every edge, reusing the bound
/// `chi_s(G - e) <= chi_s(G)`. `k = None` tests at `k = chi_s(G)`.
fn direct_report(g: &Graph, k: Option<usize>) -> CriticalityReport {
    let (chi_s, certificate) = star_chromatic_number(g);
    let k = k.unwrap_or(chi_s);
    let per_edge: Vec<EdgeValue> = g
        .edges()
        .into_par_iter()
        .map(|edge| {
            let h = g.delete_edge(edge).expect("edge of g");
            let value = star_chromatic_number_below(&h, chi_s).map_or(chi_s, |r| r.0);
            EdgeValue { edge, chi_s: value }
        })
        .collect();
    let failing_edge = per_edge
        .iter()
        .find(|ev| ev.chi_s >= chi_s)
        .map(|ev| ev.edge);
    let premise_holds = k == chi_s;
    CriticalityReport {
        k,
        chi_s,
        premise_holds,
        is_critical: premise_holds && failing_edge.is_none(),
        failing_edge,
        per_edge,
        certificate,
    }
}

/// Is `G` `k`-critical: `chi_s(G) = k` and every edge deletion lowers it?
pub fn is_k_critical_direct(g: &Graph, k: usize) -> Result<CriticalityReport, CriticalityError> {
    if g.m() == 0 {
        return Err(CriticalityError::NoEdges);
    }
    Ok(direct_report(g, Some(k)))
}

fn hypothesis(g: &Graph, claim: Characterization) -> Option<Inapplicable> {
    if g.n() < 5 {
        return Some(Inapplicable::TooFewVertices { n: g.n() });
    }
    match claim {
        Characterization::ChiSNMinus1 | Characterization::NMinus1Critical => {
            g.is_complete().then_some(Inapplicable::Complete)
        }
        Characterization::ChiSNMinus2 | Characterization::NMinus2Critical => {
            find_any(g, &PatternKind::N_MINUS_1)
                .is_none()
                .then_some(Inapplicable::NoI3Or2K2)
        }
    }
}

/// Evaluates one characterization, recording its pattern evidence.
pub fn characterize(g: &Graph, claim: Characterization) -> CharacterizationVerdict {
    if let Some(why) = hypothesis(g, claim) {
        return CharacterizationVerdict {
            claim,
            status: VerdictStatus::Inapplicable(why),
            graph_witness: None,
            edge_witnesses: Vec::new(),
        };
    }
    let (in_graph, in_deletions) = claim.kinds();
    let graph_witness = find_any(g, in_graph);
    let edge_witnesses: Vec<EdgeWitness> = if claim.per_edge() {
        g.edges()
            .into_iter()
            .map(|edge| {
                let h = g.delete_edge(edge).expect("edge of g");
                EdgeWitness {
                    edge,
                    witness: find_any(&h, in_deletions),
                }
            })
            .collect()
    } else {
        Vec::new()
    };
    let holds = graph_witness.is_none() && edge_witnesses.iter().all(|ew| ew.witness.is_some());
    CharacterizationVerdict {
        claim,
        status: if holds {
            VerdictStatus::Holds
        } else {
            VerdictStatus::Fails
        },
        graph_witness,
        edge_witnesses,
    }
}

pub fn chi_s_equals_n_minus_1(g: &Graph) -> CharacterizationVerdict {
    characterize(g, Characterization::ChiSNMinus1)
}

pub fn is_n_minus_1_critical(g: &Graph) -> CharacterizationVerdict {
    characterize(g, Characterization::NMinus1Critical)
}

pub fn chi_s_equals_n_minus_2(g: &Graph) -> CharacterizationVerdict {
    characterize(g, Characterization::ChiSNMinus2)
}

pub fn is_n_minus_2_critical(g: &Graph) -> CharacterizationVerdict {
    characterize(g, Characterization::NMinus2Critical)
}

/// What the direct report says about a characterization's conclusion.
pub fn direct_answer(report: &CriticalityReport, n: usize, claim: Characterization) -> bool {
    let at_target = n >= 2 && report.chi_s == claim.target(n);
    match claim {
        Characterization::ChiSNMinus1 | Characterization::ChiSNMinus2 => at_target,
        Characterization::NMinus1Critical | Characterization::NMinus2Critical => {
            at_target && report.failing_edge.is_none()
        }
    }
}

/// The direct report at `k = chi_s(G)`. Edgeless graphs come out critical.
pub fn star_criticality(g: &Graph) -> CriticalityReport {
    direct_report(g, None)
}

/// Proper-coloring criticality: every edge deletion lowers `chi(G)`.
pub fn is_proper_critical(g: &Graph) -> bool {
    let (chi, _) = chromatic_number(g);
    g.edges()
        .into_par_iter()
        .all(|e| chromatic_number(&g.delete_edge(e).expect("edge of g")).0 < chi)
}

/// Labels `G` by its criticality at `k = chi_s(G)`. Applicable
/// characterizations must agree with the direct method. Edgeless graphs are
/// vacuously `chi_s`-critical.
pub fn classify_critical(g: &Graph) -> Result<Classification, CriticalityError> {
    let n = g.n();
    let report = direct_report(g, None);
    let label = match report.chi_s {
        k if g.m() == 0 => CriticalLabel::KCritical(k),
        _ if !report.is_critical => CriticalLabel::NotCritical,
        3 => CriticalLabel::ThreeCritical,
        k if n >= 1 && k == n - 1 => CriticalLabel::NMinus1Critical,
        k if n >= 2 && k == n - 2 => CriticalLabel::NMinus2Critical,
        k => CriticalLabel::KCritical(k),
    };
    let mut fast_paths = Vec::new();
    for claim in [
        Characterization::ChiSNMinus1,
        Characterization::NMinus1Critical,
        Characterization::ChiSNMinus2,
        Characterization::NMinus2Critical,
    ] {
        let verdict = characterize(g, claim);
        if !verdict.is_applicable() {
            continue;
        }
        let direct_holds = direct_answer(&report, n, claim);
        if verdict.holds() != direct_holds {
            return Err(CriticalityError::Disagreement(Box::new(Disagreement {
                label,
                verdict,
                direct_holds,
                report,
            })));
        }
        fast_paths.push(verdict);
    }
    Ok(Classification {
        label,
        report,
        fast_paths,
    })
}
