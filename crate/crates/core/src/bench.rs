//! Timing harness for recognition plus exact solving on chain graphs.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::exact::solve_proper_interval;
use crate::generators::{generate_chain_graph, random_chain_ranges, random_proper_interval, Density};
use crate::graph::Graph;
use crate::recognition::recognize_proper_interval;

/// Benchmark instance families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `generate_chain_graph` on random clique ranges, so vertices are
    /// labelled in layout order `1..=n`.
    Chain,
    /// The same random chains with vertex labels shuffled.
    Shuffled,
}

impl Family {
    pub fn instance(self, n: usize, seed: u64) -> Result<Graph> {
        match self {
            Family::Chain => generate_chain_graph(n, &random_chain_ranges(n, bench_density(), seed)?),
            Family::Shuffled => random_proper_interval(n, bench_density(), seed),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub recognize: Duration,
    pub solve: Duration,
    pub cost: u64,
}

impl BenchRow {
    pub fn total(&self) -> Duration {
        self.recognize + self.solve
    }

    /// Total time per vertex-plus-edge, in nanoseconds.
    pub fn ns_per_unit(&self) -> f64 {
        self.total().as_nanos() as f64 / (self.n + self.m).max(1) as f64
    }
}

/// Density used for benchmark instances; it keeps the expected degree
/// bounded, so `m = O(n)`.
pub fn bench_density() -> Density {
    Density::new(1, 2)
}

/// Times `recognize` followed by `solve` on one instance of each size. Each
/// measurement is the fastest of `repeats` runs.
pub fn run_bench(family: Family, sizes: &[usize], seed: u64, repeats: usize) -> Result<Vec<BenchRow>> {
    let repeats = repeats.max(1);
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let g = family.instance(n, seed)?;
        let mut recognize = Duration::MAX;
        let mut solve = Duration::MAX;
        let mut cost = 0;
        for _ in 0..repeats {
            let start = Instant::now();
            let chain = recognize_proper_interval(&g);
            recognize = recognize.min(start.elapsed());
            if chain.is_none() {
                return Err(Error::PreconditionViolated(format!(
                    "generated chain graph with n = {n} was not recognized"
                )));
            }
            let start = Instant::now();
            let solution = solve_proper_interval(&g)?.expect("recognized above");
            solve = solve.min(start.elapsed());
            cost = solution.cost;
        }
        rows.push(BenchRow {
            n,
            m: g.m(),
            recognize,
            solve,
            cost,
        });
    }
    Ok(rows)
}
