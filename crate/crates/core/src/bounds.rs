//! Edge-count bounds for `(n-1)`- and `(n-2)`-critical graphs, and the
//! complement conditions behind them. All verdicts use integer arithmetic;
//! irrational bounds are compared after squaring.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::patterns::{complement_is_c3c4_free, complement_is_k4_free};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundKind {
    N1Critical,
    N2Critical,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::N1Critical => "(n-1)-critical",
            BoundKind::N2Critical => "(n-2)-critical",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub relation: &'static str,
    /// The bound's exact value, e.g. `10` or `14/3`; irrational bounds are
    /// shown symbolically with a decimal approximation for reading only.
    pub bound: String,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub kind: BoundKind,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn satisfied(&self) -> bool {
        self.checks.iter().all(|c| c.satisfied)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn fraction(num: i64, den: i64) -> String {
    let g = gcd(num, den).max(1);
    match (num / g, den / g) {
        (p, 1) => p.to_string(),
        (p, q) => format!("{p}/{q}"),
    }
}

/// `m > (n^2 - n - n sqrt(n)) / 2`, decided exactly. With
/// `t = n^2 - n - 2m` the inequality reads `t < n sqrt(n)`.
pub fn n1_lower_bound_holds(n: usize, m: usize) -> bool {
    let (n, m) = (n as i128, m as i128);
    let t = n * n - n - 2 * m;
    t < 0 || t * t < n * n * n
}

pub fn audit_bounds(g: &Graph, kind: BoundKind) -> BoundsReport {
    let (n, m) = (g.n(), g.m());
    let (ni, mi) = (n as i64, m as i64);
    let checks = match kind {
        BoundKind::N1Critical => vec![
            BoundCheck {
                name: "lower",
                relation: "m > (n^2 - n - n*sqrt(n))/2",
                bound: format!(
                    "({} - {}*sqrt({}))/2 ~ {:.4}",
                    ni * ni - ni,
                    ni,
                    ni,
                    ((ni * ni - ni) as f64 - ni as f64 * (ni as f64).sqrt()) / 2.0
                ),
                satisfied: n1_lower_bound_holds(n, m),
            },
            BoundCheck {
                name: "upper",
                relation: "m <= (n-1)(n-2)/2",
                bound: fraction((ni - 1) * (ni - 2), 2),
                satisfied: 2 * mi <= (ni - 1) * (ni - 2),
            },
        ],
        BoundKind::N2Critical => vec![
            BoundCheck {
                name: "lower",
                relation: "m >= n(n-3)/6",
                bound: fraction(ni * (ni - 3), 6),
                satisfied: 6 * mi >= ni * (ni - 3),
            },
            BoundCheck {
                name: "upper",
                relation: "m <= n(n-3)/2",
                bound: fraction(ni * (ni - 3), 2),
                satisfied: 2 * mi <= ni * (ni - 3),
            },
        ],
    };
    BoundsReport { n, m, kind, checks }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementReport {
    pub n: usize,
    pub m: usize,
    pub complement_m: usize,
    /// Complement has no 3-cycle and no 4-cycle.
    pub complement_c3c4_free: bool,
    /// `complement_m <= n sqrt(n-1) / 2`, via `4 c^2 <= n^2 (n-1)`.
    pub c3c4_edge_bound: bool,
    pub complement_k4_free: bool,
    /// `complement_m <= n^2 / 3`.
    pub turan_bound: bool,
}

impl ComplementReport {
    /// The pair required when `chi_s = n - 1`.
    pub fn n1_conditions(&self) -> bool {
        self.complement_c3c4_free && self.c3c4_edge_bound
    }

    /// The pair required when `chi_s = n - 2`.
    pub fn n2_conditions(&self) -> bool {
        self.complement_k4_free && self.turan_bound
    }
}

pub fn audit_complement_conditions(g: &Graph) -> ComplementReport {
    let n = g.n() as i128;
    let c = g.complement().m();
    let ci = c as i128;
    ComplementReport {
        n: g.n(),
        m: g.m(),
        complement_m: c,
        complement_c3c4_free: complement_is_c3c4_free(g),
        c3c4_edge_bound: 4 * ci * ci <= n * n * (n - 1).max(0),
        complement_k4_free: complement_is_k4_free(g),
        turan_bound: 3 * ci <= n * n,
    }
}
