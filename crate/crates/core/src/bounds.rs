//! Degree-sequence bounds on the MinLA cost.
//!
//! For a vertex of degree `d`, its incident edges cost at least
//! `(d/2)(d/2 + 1)` when the neighbors are split evenly on both sides, and at
//! most `d(d + 1)/2` when all of them sit to one side at distances `1..=d`.
//! Summing over vertices gives
//!
//! ```text
//! A = [ sum_v (d_v/2)(d_v/2 + 1) ] / 2   <=  OPT
//! B =   sum_v d_v(d_v + 1)/2
//! ```
//!
//! and `B <= 4A` holds term by term since `d(d+1) <= d(d+2)`.

use num_rational::Ratio;
use serde::Serialize;

use crate::graph::Graph;

/// Exact non-negative rational used for the lower bound and ratios.
pub type Rational = Ratio<u128>;

/// Lower bound `A` (exact) and upper bound `B`.
pub fn degree_bounds(g: &Graph) -> (Rational, u128) {
    // (d/2)(d/2 + 1) / 2 == d(d + 2) / 8
    let mut eighths: u128 = 0;
    let mut upper: u128 = 0;
    for v in g.vertices() {
        let d = g.degree(v) as u128;
        eighths += d * (d + 2);
        upper += d * (d + 1) / 2;
    }
    (Ratio::new(eighths, 8), upper)
}

/// Cost of an arrangement together with the degree bounds and the ratio
/// `cost / A` certifying how far the arrangement can be from optimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostReport {
    pub n: usize,
    pub m: usize,
    pub cost: u64,
    pub lower_bound_a: Rational,
    pub upper_bound_b: u128,
    /// `cost / A`; `None` when `A = 0` (edgeless graphs).
    pub ratio_certificate: Option<Rational>,
}

impl CostReport {
    pub fn new(g: &Graph, cost: u64) -> Self {
        let (lower_bound_a, upper_bound_b) = degree_bounds(g);
        let ratio_certificate = (*lower_bound_a.numer() != 0)
            .then(|| Rational::from_integer(cost as u128) / lower_bound_a);
        Self {
            n: g.n(),
            m: g.m(),
            cost,
            lower_bound_a,
            upper_bound_b,
            ratio_certificate,
        }
    }

    /// `A <= cost <= B`, the sandwich every pi-order satisfies.
    pub fn within_bounds(&self) -> bool {
        let cost = Rational::from_integer(self.cost as u128);
        self.lower_bound_a <= cost && (self.cost as u128) <= self.upper_bound_b
    }

    /// `B <= 4A`.
    pub fn factor_four_holds(&self) -> bool {
        Rational::from_integer(self.upper_bound_b) <= self.lower_bound_a * 4
    }

    /// Stable machine-readable form. Rationals are written as `p/q`.
    pub fn to_serializable(&self) -> CostReportRecord {
        CostReportRecord {
            n: self.n,
            m: self.m,
            cost: self.cost,
            lower_bound_a: format_ratio(&self.lower_bound_a),
            upper_bound_b: self.upper_bound_b,
            ratio: self.ratio_certificate.as_ref().map(format_ratio),
        }
    }
}

/// Field layout of the JSON report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CostReportRecord {
    pub n: usize,
    pub m: usize,
    pub cost: u64,
    #[serde(rename = "lower_bound_A")]
    pub lower_bound_a: String,
    #[serde(rename = "upper_bound_B")]
    pub upper_bound_b: u128,
    pub ratio: Option<String>,
}

/// `p/q` with the denominator always present.
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
