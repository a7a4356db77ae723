//! Exact minimum linear arrangement for proper interval graphs.
//!
//! Every minimum arrangement of a chain of cliques keeps the cliques in
//! chain order (or its full reversal), so the recognition layout is itself
//! optimal. Components are independent and are laid out as consecutive
//! blocks in order of their smallest vertex.

use crate::arrangement::{cost, Arrangement};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{recognize_proper_interval, CliqueChain};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub arrangement: Arrangement,
    pub cost: u64,
    pub chain: CliqueChain,
}

/// Optimal arrangement of a proper interval graph, or `Ok(None)` if `g` is
/// not one. The returned arrangement is the canonical recognition layout.
pub fn solve_proper_interval(g: &Graph) -> Result<Option<Solution>> {
    let Some(chain) = recognize_proper_interval(g) else {
        return Ok(None);
    };
    let arrangement = chain.arrangement().clone();
    let cost = cost(g, &arrangement)?;
    Ok(Some(Solution {
        arrangement,
        cost,
        chain,
    }))
}

/// Whether `a` is a natural order of `chain`: every clique occupies
/// consecutive positions and the cliques appear in chain order or in its
/// exact reverse.
pub fn is_n_order(chain: &CliqueChain, a: &Arrangement, g: &Graph) -> Result<bool> {
    check_chain_covers(chain, g)?;
    a.check_matches(g)?;

    let mut leftmost = Vec::with_capacity(chain.len());
    for i in 0..chain.len() {
        let members = chain.clique_vertices(i);
        let (lo, hi) = members
            .iter()
            .map(|&v| a.position(v))
            .fold((usize::MAX, 0), |(lo, hi), p| (lo.min(p), hi.max(p)));
        if hi - lo + 1 != members.len() {
            return Ok(false);
        }
        leftmost.push(lo);
    }
    let forward = leftmost.windows(2).all(|w| w[0] < w[1]);
    let backward = leftmost.windows(2).all(|w| w[0] > w[1]);
    Ok(forward || backward)
}

fn check_chain_covers(chain: &CliqueChain, g: &Graph) -> Result<()> {
    let layout = chain.arrangement();
    if layout.len() != g.n() {
        return Err(Error::PreconditionViolated(format!(
            "chain lays out {} vertices, graph has {}",
            layout.len(),
            g.n()
        )));
    }
    let cliques = chain.cliques();
    for (u, v) in g.edges() {
        let (p, q) = {
            let (a, b) = (layout.position(u), layout.position(v));
            (a.min(b), a.max(b))
        };
        // last clique starting at or before p has the furthest reach
        let idx = cliques.partition_point(|r| r.lo <= p);
        let covered = idx > 0 && cliques[idx - 1].hi >= q;
        if !covered {
            return Err(Error::PreconditionViolated(format!(
                "edge ({u}, {v}) lies in no clique of the chain"
            )));
        }
    }
    Ok(())
}
