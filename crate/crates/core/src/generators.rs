//! Instance generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, whose output
//! stream is fixed by its algorithm, so a seed reproduces the same instance
//! on every platform.

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::interval::{Interval, IntervalSet};

/// Probability of extending a clique by one more vertex.
pub type Density = Ratio<u64>;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Deduplicates `ranges` and drops every range strictly contained in
/// another. The result is sorted with strictly increasing `lo` and `hi`.
pub fn normalize_ranges(ranges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut sorted = ranges.to_vec();
    // lo ascending, longer first among equal lo
    sorted.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    sorted.dedup();
    let mut kept: Vec<(usize, usize)> = Vec::with_capacity(sorted.len());
    for (lo, hi) in sorted {
        // any container starts at or before lo, so it has been seen already
        match kept.last() {
            Some(&(_, top)) if top >= hi => continue,
            _ => kept.push((lo, hi)),
        }
    }
    kept
}

/// Chain of cliques on vertices `1..=n`: each range `[a, b]` becomes a
/// clique on the consecutive vertices `a..=b`.
pub fn generate_chain_graph(n: usize, ranges: &[(usize, usize)]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::PreconditionViolated("chain graph needs n >= 1".into()));
    }
    let mut reach: Vec<Vertex> = (0..=n).collect();
    for &(lo, hi) in ranges {
        if lo == 0 || lo > hi || hi > n {
            return Err(Error::RangeOutOfBounds { lo, hi, n });
        }
        reach[lo] = reach[lo].max(hi);
    }
    let mut furthest = 0;
    for (v, r) in reach.iter_mut().enumerate().skip(1) {
        furthest = furthest.max(*r);
        *r = furthest.max(v);
    }
    Ok(graph_from_reach(&reach))
}

/// `reach[v]` is the last vertex adjacent to `v` (or `v` itself); it must be
/// non-decreasing. Index 0 is unused.
fn graph_from_reach(reach: &[Vertex]) -> Graph {
    let n = reach.len() - 1;
    let mut lists: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in 1..=n {
        for u in v + 1..=reach[v] {
            lists[v - 1].push(u);
            lists[u - 1].push(v);
        }
    }
    Graph::from_sorted_lists(lists)
}

/// Random non-decreasing reach array: vertex `v` extends `X_v` vertices
/// past itself, where `X_v` counts successes with probability `density`
/// before the first failure.
fn random_reach(n: usize, density: Density, rng: &mut ChaCha8Rng) -> Result<Vec<Vertex>> {
    if n == 0 {
        return Err(Error::PreconditionViolated("generator needs n >= 1".into()));
    }
    let (num, den) = (*density.numer(), *density.denom());
    if num > den {
        return Err(Error::PreconditionViolated(format!(
            "density {num}/{den} exceeds 1"
        )));
    }
    let mut reach = vec![0usize; n + 1];
    for v in 1..=n {
        let mut r = v;
        while r < n && rng.random_range(0..den) < num {
            r += 1;
        }
        reach[v] = r.max(reach[v - 1]);
    }
    Ok(reach)
}

/// Random clique ranges for `generate_chain_graph`: vertex `v` starts the
/// range `[v, reach(v)]`, normalized so no range contains another.
pub fn random_chain_ranges(n: usize, density: Density, seed: u64) -> Result<Vec<(usize, usize)>> {
    let mut rng = rng_from_seed(seed);
    let reach = random_reach(n, density, &mut rng)?;
    let ranges: Vec<(usize, usize)> = (1..=n).map(|v| (v, reach[v])).collect();
    Ok(normalize_ranges(&ranges))
}

/// Random proper interval graph with vertex labels shuffled.
pub fn random_proper_interval(n: usize, density: Density, seed: u64) -> Result<Graph> {
    let mut rng = rng_from_seed(seed);
    let reach = random_reach(n, density, &mut rng)?;
    let layout = graph_from_reach(&reach);
    let mut labels: Vec<Vertex> = (1..=n).collect();
    labels.shuffle(&mut rng);
    layout.relabel(&labels)
}

/// Random proper interval model with integer endpoints: vertex `v` gets
/// `[v (n+1), reach(v) (n+1) + v]`, so starts and ends both strictly
/// increase and no interval contains another.
pub fn random_proper_intervals(n: usize, density: Density, seed: u64) -> Result<IntervalSet> {
    let mut rng = rng_from_seed(seed);
    let reach = random_reach(n, density, &mut rng)?;
    let scale = (n + 1) as i64;
    IntervalSet::new(
        (1..=n)
            .map(|v| Interval::from_ints(v as i64 * scale, reach[v] as i64 * scale + v as i64))
            .collect(),
    )
}

/// `n` intervals with endpoints uniform in `[1, span]`, swapped if needed.
pub fn random_intervals(n: usize, span: u64, seed: u64) -> Result<IntervalSet> {
    if n == 0 || span == 0 {
        return Err(Error::PreconditionViolated(
            "random intervals need n >= 1 and span >= 1".into(),
        ));
    }
    let mut rng = rng_from_seed(seed);
    let intervals = (0..n)
        .map(|_| {
            let a = rng.random_range(1..=span) as i64;
            let b = rng.random_range(1..=span) as i64;
            Interval::from_ints(a.min(b), a.max(b))
        })
        .collect();
    IntervalSet::new(intervals)
}
