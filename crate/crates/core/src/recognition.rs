//! Proper interval graph recognition.
//!
//! A graph is a proper interval graph iff its vertices admit an *umbrella*
//! order: every closed neighborhood occupies consecutive positions. Such an
//! order is found with three Lex-BFS sweeps (an LBFS followed by two LBFS+
//! sweeps) and then checked directly, so an accepted result is always
//! self-certified. In an umbrella order the maximal cliques are runs of
//! consecutive positions, which is the chain-of-cliques form the exact
//! solver consumes.

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::lexbfs::{lexbfs, Csr};

/// Inclusive range of positions `[lo, hi]` in a `CliqueChain` layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliqueRange {
    pub lo: usize,
    pub hi: usize,
}

/// A linear layout of the vertices together with its maximal cliques as
/// position ranges, sorted with strictly increasing `lo` and `hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueChain {
    order: Arrangement,
    cliques: Vec<CliqueRange>,
}

impl CliqueChain {
    /// The layout as an arrangement of the graph's vertices.
    pub fn arrangement(&self) -> &Arrangement {
        &self.order
    }

    /// Vertices in layout order.
    pub fn order(&self) -> &[Vertex] {
        self.order.order()
    }

    pub fn cliques(&self) -> &[CliqueRange] {
        &self.cliques
    }

    /// Number of maximal cliques `k`.
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Vertices of the `i`-th clique (0-based) in layout order.
    pub fn clique_vertices(&self, i: usize) -> &[Vertex] {
        let r = self.cliques[i];
        &self.order.order()[r.lo - 1..r.hi]
    }

    /// Union of the clique edge sets.
    pub fn to_graph(&self) -> Graph {
        let n = self.order.len();
        let mut edges = Vec::new();
        for i in 0..self.cliques.len() {
            let members = self.clique_vertices(i);
            for (j, &u) in members.iter().enumerate() {
                for &v in &members[j + 1..] {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).expect("clique members are distinct vertices in range")
    }
}

/// True iff every closed neighborhood occupies consecutive positions.
pub fn verify_umbrella(g: &Graph, order: &Arrangement) -> Result<bool> {
    order.check_matches(g)?;
    Ok(g.vertices().all(|v| {
        let p = order.position(v);
        let (lo, hi) = g
            .neighbors(v)
            .iter()
            .map(|&u| order.position(u))
            .fold((p, p), |(lo, hi), q| (lo.min(q), hi.max(q)));
        hi - lo == g.degree(v)
    }))
}

/// Maximal cliques of an umbrella order as consecutive position ranges.
///
/// With `reach(p)` the largest position adjacent to (or equal to) position
/// `p`, every `[p, reach(p)]` is a clique and `reach` is non-decreasing; the
/// maximal ones are those where `reach` strictly increases. Ranges nested in
/// another are dropped.
pub fn clique_chain_from_order(g: &Graph, order: &Arrangement) -> Result<CliqueChain> {
    if !verify_umbrella(g, order)? {
        return Err(Error::PreconditionViolated(
            "order does not have consecutive closed neighborhoods".into(),
        ));
    }
    Ok(chain_from_umbrella(g, order.clone()))
}

fn chain_from_umbrella(g: &Graph, order: Arrangement) -> CliqueChain {
    let mut cliques = Vec::new();
    let mut last_reach = 0usize;
    for p in 1..=order.len() {
        let v = order.vertex_at(p);
        let reach = g
            .neighbors(v)
            .iter()
            .map(|&u| order.position(u))
            .fold(p, usize::max);
        if reach > last_reach {
            cliques.push(CliqueRange { lo: p, hi: reach });
            last_reach = reach;
        }
    }
    CliqueChain { order, cliques }
}

/// Recognize a proper interval graph. Returns `None` when the graph is not
/// one; otherwise a chain whose layout has the umbrella property, with
/// connected components laid out in order of their smallest vertex.
pub fn recognize_proper_interval(g: &Graph) -> Option<CliqueChain> {
    let order = umbrella_candidate(g);
    let arrangement = Arrangement::from_order(order).expect("Lex-BFS visits every vertex once");
    if verify_umbrella(g, &arrangement).expect("arrangement built for this graph") {
        Some(chain_from_umbrella(g, arrangement))
    } else {
        None
    }
}

/// LBFS, LBFS+, LBFS+.
///
/// After the first sweep the graph is relabelled into sweep order, which
/// keeps the later sweeps cache-local. The first sweep visits components in
/// order of their smallest vertex; each LBFS+ reverses the component order,
/// so after two of them the components are back in that order.
fn umbrella_candidate(g: &Graph) -> Vec<Vertex> {
    let n = g.n() as u32;
    let ids: Vec<u32> = (0..n).collect();
    let original = |v: u32| g.neighbors(v as usize + 1).iter().map(|&u| u as u32 - 1);
    let first = lexbfs(&ids, original);

    let h = Csr::relabelled(&first, |v| g.degree(v as usize + 1), original);
    let descending: Vec<u32> = (0..n).rev().collect();
    let mut second = lexbfs(&descending, |v| h.neighbors(v).iter().rev().copied());

    second.reverse();
    let by_second = h.sorted_by(&second);
    let third = lexbfs(&second, |v| by_second.neighbors(v).iter().copied());

    third.into_iter().map(|v| first[v as usize] as Vertex + 1).collect()
}
