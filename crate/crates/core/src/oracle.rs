//! Exhaustive ground truth for small instances.
//!
//! The search fills positions left to right and prunes with a lower bound
//! on the edges not yet fully placed. Results are independent of the
//! pruning, the symmetry breaking and the thread count: the reported
//! arrangement is always the lexicographically smallest optimum by the
//! position sequence of vertices `1..=n`.

use rand::Rng;

use crate::arrangement::{cost, Arrangement};
use crate::error::{Error, Result};
use crate::generators::{random_intervals, random_proper_intervals, rng_from_seed, Density};
use crate::graph::Graph;
use crate::interval::{approximate, Interval, IntervalSet};

pub const DEFAULT_LIMIT: usize = 10;
pub const DEFAULT_ENUMERATION_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub limit_n: usize,
    /// Only search arrangements with `pos(1) < pos(2)`; each one stands for
    /// itself and its mirror image.
    pub symmetry_breaking: bool,
    pub branch_and_bound: bool,
    pub threads: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            limit_n: DEFAULT_LIMIT,
            symmetry_breaking: true,
            branch_and_bound: true,
            threads: 1,
        }
    }
}

impl OracleOptions {
    /// Plain enumeration of all `n!` arrangements.
    pub fn exhaustive(limit_n: usize) -> Self {
        Self {
            limit_n,
            symmetry_breaking: false,
            branch_and_bound: false,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimum {
    pub arrangement: Arrangement,
    pub cost: u64,
}

pub fn brute_force_minla(g: &Graph, limit_n: usize) -> Result<Optimum> {
    brute_force_minla_with(
        g,
        &OracleOptions {
            limit_n,
            ..OracleOptions::default()
        },
    )
}

pub fn brute_force_minla_with(g: &Graph, opts: &OracleOptions) -> Result<Optimum> {
    check_size(g, opts.limit_n)?;
    let n = g.n();
    if n == 0 {
        return Ok(Optimum {
            arrangement: Arrangement::identity(0),
            cost: 0,
        });
    }
    // The identity layout caps the optimum; it is not recorded as a
    // candidate so the lexicographic minimum is still found.
    let cap = cost(g, &Arrangement::identity(n))?;
    let adj = adjacency(g);
    let symmetry = opts.symmetry_breaking && n >= 2;

    let run = |firsts: &[usize]| -> Option<(u64, Vec<usize>)> {
        let mut search = Search::new(&adj, Goal::minimize(cap), symmetry, opts.branch_and_bound);
        for &v in firsts {
            search.branch(v);
        }
        match search.goal {
            Goal::Minimize { best_cost, best } => best.map(|b| (best_cost, b)),
            Goal::Collect { .. } => unreachable!(),
        }
    };

    let threads = opts.threads.clamp(1, n);
    let buckets: Vec<Vec<usize>> = (0..threads)
        .map(|t| (0..n).skip(t).step_by(threads).collect())
        .collect();
    let results: Vec<Option<(u64, Vec<usize>)>> = if threads == 1 {
        vec![run(&buckets[0])]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = buckets
                .iter()
                .map(|bucket| scope.spawn(|| run(bucket)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("oracle worker panicked"))
                .collect()
        })
    };
    let (best_cost, positions) = results
        .into_iter()
        .flatten()
        .min()
        .expect("the identity layout bounds the search");
    Ok(Optimum {
        arrangement: Arrangement::from_positions(positions)?,
        cost: best_cost,
    })
}

/// All optimal arrangements in lexicographic order.
pub fn enumerate_optimal(g: &Graph, limit_n: usize) -> Result<Vec<Arrangement>> {
    check_size(g, limit_n)?;
    let n = g.n();
    if n == 0 {
        return Ok(vec![Arrangement::identity(0)]);
    }
    let optimum = brute_force_minla(g, limit_n)?.cost;
    let adj = adjacency(g);
    let mut search = Search::new(&adj, Goal::Collect { target: optimum, found: Vec::new() }, false, true);
    for v in 0..n {
        search.branch(v);
    }
    let Goal::Collect { mut found, .. } = search.goal else {
        unreachable!()
    };
    found.sort_unstable();
    found
        .into_iter()
        .map(Arrangement::from_positions)
        .collect()
}

fn check_size(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::TooLarge { n: g.n(), limit });
    }
    Ok(())
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().map(|&u| u - 1).collect())
        .collect()
}

enum Goal {
    Minimize {
        best_cost: u64,
        best: Option<Vec<usize>>,
    },
    Collect {
        target: u64,
        found: Vec<Vec<usize>>,
    },
}

impl Goal {
    fn minimize(cap: u64) -> Self {
        Goal::Minimize {
            best_cost: cap,
            best: None,
        }
    }

    fn bound(&self) -> u64 {
        match self {
            Goal::Minimize { best_cost, .. } => *best_cost,
            Goal::Collect { target, .. } => *target,
        }
    }
}

/// Depth-first search over arrangements; vertices are 0-based internally,
/// positions 1-based with 0 meaning unplaced.
struct Search<'a> {
    adj: &'a [Vec<usize>],
    pos: Vec<usize>,
    placed: usize,
    partial: u64,
    /// Unplaced neighbors of each placed vertex.
    open: Vec<usize>,
    /// Edges with both ends unplaced.
    loose_edges: usize,
    symmetry: bool,
    prune: bool,
    goal: Goal,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>], goal: Goal, symmetry: bool, prune: bool) -> Self {
        let n = adj.len();
        let loose_edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Self {
            adj,
            pos: vec![0; n],
            placed: 0,
            partial: 0,
            open: vec![0; n],
            loose_edges,
            symmetry,
            prune,
            goal,
        }
    }

    /// Place `v` at the next position and search below it.
    fn branch(&mut self, v: usize) {
        if self.symmetry && v == 1 && self.pos[0] == 0 {
            return;
        }
        let q = self.placed + 1;
        let mut added = 0u64;
        let mut open = 0usize;
        for &u in &self.adj[v] {
            if self.pos[u] != 0 {
                added += (q - self.pos[u]) as u64;
                self.open[u] -= 1;
            } else {
                open += 1;
            }
        }
        self.pos[v] = q;
        self.placed = q;
        self.open[v] = open;
        self.loose_edges -= open;
        self.partial += added;

        if self.placed == self.adj.len() {
            self.leaf();
        } else if !self.prune || self.lower_bound() <= self.goal.bound() {
            for u in 0..self.adj.len() {
                if self.pos[u] == 0 {
                    self.branch(u);
                }
            }
        }

        self.partial -= added;
        self.loose_edges += open;
        self.open[v] = 0;
        self.placed = q - 1;
        self.pos[v] = 0;
        for &u in &self.adj[v] {
            if self.pos[u] != 0 {
                self.open[u] += 1;
            }
        }
    }

    /// Placed cost plus the cheapest completion of every unfinished edge.
    fn lower_bound(&self) -> u64 {
        let q = self.placed;
        let mut lb = self.partial + self.loose_edges as u64;
        for (u, &k) in self.open.iter().enumerate() {
            if k > 0 {
                let k = k as u64;
                lb += k * (q - self.pos[u]) as u64 + k * (k + 1) / 2;
            }
        }
        lb
    }

    fn leaf(&mut self) {
        let total = self.partial;
        match &mut self.goal {
            Goal::Minimize { best_cost, best } => {
                if total > *best_cost {
                    return;
                }
                let mut candidate = self.pos.clone();
                if self.symmetry {
                    let n = candidate.len();
                    let mirror: Vec<usize> = candidate.iter().map(|&p| n + 1 - p).collect();
                    candidate = candidate.min(mirror);
                }
                let better = total < *best_cost
                    || best.as_ref().is_none_or(|b| candidate < *b);
                if better {
                    *best_cost = total;
                    *best = Some(candidate);
                }
            }
            Goal::Collect { target, found } => {
                if total == *target {
                    found.push(self.pos.clone());
                }
            }
        }
    }
}

/// How a counterexample instance was produced; enough to regenerate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// `random_intervals(n, span, seed)`.
    RandomIntervals { n: usize, span: u64, seed: u64 },
    /// `random_proper_intervals(n, density, seed)`.
    ProperIntervals { n: usize, density: Density, seed: u64 },
    /// One long interval holding `leaves` pairwise disjoint short ones.
    Star { leaves: usize },
}

impl Provenance {
    pub fn seed(&self) -> Option<u64> {
        match *self {
            Provenance::RandomIntervals { seed, .. } | Provenance::ProperIntervals { seed, .. } => {
                Some(seed)
            }
            Provenance::Star { .. } => None,
        }
    }

    pub fn instance(&self) -> Result<IntervalSet> {
        match *self {
            Provenance::RandomIntervals { n, span, seed } => random_intervals(n, span, seed),
            Provenance::ProperIntervals { n, density, seed } => {
                random_proper_intervals(n, density, seed)
            }
            Provenance::Star { leaves } => star_model(leaves),
        }
    }
}

/// Instance families searched by `find_pi_suboptimal`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchFamily {
    /// Random interval sets, then the star family.
    Intervals,
    /// Random proper interval models only.
    ProperChains,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub intervals: IntervalSet,
    pub provenance: Provenance,
    pub pi_cost: u64,
    pub optimum: u64,
}

/// Whether the pi-order of `iv` costs strictly more than the optimum;
/// returns both costs.
pub fn pi_gap(iv: &IntervalSet) -> Result<(u64, u64)> {
    let approx = approximate(iv)?;
    let optimum = brute_force_minla(&approx.graph, DEFAULT_LIMIT)?.cost;
    Ok((approx.report.cost, optimum))
}

/// Searches for an interval set whose pi-order is not optimal.
///
/// Trial `t` uses seed `seed + t` (wrapping). Its size `n` is drawn from
/// `2..=max_n` and, for random intervals, the endpoint span from `1..=2n`,
/// both with the trial's own generator; the instance itself comes from the
/// matching generator called with the trial seed, so `Provenance::instance`
/// replays it exactly.
pub fn find_pi_suboptimal(
    max_n: usize,
    seed: u64,
    trials: u64,
    family: SearchFamily,
) -> Result<Option<Counterexample>> {
    if max_n > DEFAULT_LIMIT {
        return Err(Error::TooLarge {
            n: max_n,
            limit: DEFAULT_LIMIT,
        });
    }
    if max_n < 2 {
        return Ok(None);
    }
    for t in 0..trials {
        let trial_seed = seed.wrapping_add(t);
        let mut params = rng_from_seed(trial_seed ^ 0x9e37_79b9_7f4a_7c15);
        let n = params.random_range(2..=max_n);
        let provenance = match family {
            SearchFamily::Intervals => Provenance::RandomIntervals {
                n,
                span: params.random_range(1..=2 * n as u64),
                seed: trial_seed,
            },
            SearchFamily::ProperChains => Provenance::ProperIntervals {
                n,
                density: Density::new(params.random_range(1..=3), 4),
                seed: trial_seed,
            },
        };
        if let Some(found) = check_candidate(provenance)? {
            return Ok(Some(found));
        }
    }
    if family == SearchFamily::Intervals {
        for leaves in 1..max_n {
            if let Some(found) = check_candidate(Provenance::Star { leaves })? {
                return Ok(Some(found));
            }
        }
    }
    Ok(None)
}

fn check_candidate(provenance: Provenance) -> Result<Option<Counterexample>> {
    let intervals = provenance.instance()?;
    let (pi_cost, optimum) = pi_gap(&intervals)?;
    Ok((pi_cost > optimum).then_some(Counterexample {
        intervals,
        provenance,
        pi_cost,
        optimum,
    }))
}

fn star_model(leaves: usize) -> Result<IntervalSet> {
    let span = 3 * leaves as i64 + 1;
    let mut intervals = vec![Interval::from_ints(0, span)];
    intervals.extend((0..leaves as i64).map(|i| Interval::from_ints(3 * i + 1, 3 * i + 2)));
    IntervalSet::new(intervals)
}
