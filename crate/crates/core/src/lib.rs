//! Minimum linear arrangement on proper interval and interval graphs.
//!
//! * [`exact`] solves proper interval graphs optimally: the clique-chain
//!   layout produced by [`recognition`] is a minimum arrangement.
//! * [`interval`] orders an interval model by clique start index (the
//!   pi-order), which costs at most four times the optimum, and reports the
//!   degree bounds that certify it.
//! * [`oracle`] is an exhaustive solver for small graphs used to check both.

pub mod arrangement;
pub mod bench;
pub mod bounds;
pub mod error;
pub mod exact;
pub mod format;
pub mod generators;
pub mod graph;
pub mod interval;
mod lexbfs;
pub mod oracle;
pub mod recognition;

pub use arrangement::{cost, Arrangement};
pub use bounds::{degree_bounds, CostReport, Rational};
pub use error::{Error, Result};
pub use exact::{is_n_order, solve_proper_interval, Solution};
pub use graph::{connected_components, Graph, Vertex};
pub use interval::{
    approximate, clique_order_from_intervals, graph_from_intervals, pi_order,
    right_oriented_cost, Approximation, CliqueOrder, Interval, IntervalSet,
};
pub use oracle::{brute_force_minla, enumerate_optimal, find_pi_suboptimal};
pub use recognition::{
    clique_chain_from_order, recognize_proper_interval, verify_umbrella, CliqueChain, CliqueRange,
};
