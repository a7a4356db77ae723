//! Interval models, Gilmore–Hoffman clique orders and the pi-order
//! 4-approximation.
//!
//! Intervals are closed: two intervals sharing only an endpoint intersect.
//! Endpoints are exact rationals, so every intersection decision is exact.

use std::cmp::Ordering;

use num_rational::Ratio;

use crate::arrangement::{cost, Arrangement};
use crate::bounds::CostReport;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Exact interval endpoint.
pub type Coord = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub start: Coord,
    pub end: Coord,
}

impl Interval {
    pub fn new(start: Coord, end: Coord) -> Self {
        Self { start, end }
    }

    pub fn from_ints(start: i64, end: i64) -> Self {
        Self::new(Coord::from_integer(start), Coord::from_integer(end))
    }
}

/// Interval of vertex `v` is `intervals[v - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        let set = Self { intervals };
        set.validate()?;
        Ok(set)
    }

    pub fn from_ints(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(s, e)| Interval::from_ints(s, e)).collect())
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn get(&self, v: Vertex) -> Interval {
        self.intervals[v - 1]
    }

    fn validate(&self) -> Result<()> {
        for (i, iv) in self.intervals.iter().enumerate() {
            if iv.start > iv.end {
                return Err(Error::MalformedInterval {
                    vertex: i + 1,
                    start: iv.start.to_string(),
                    end: iv.end.to_string(),
                });
            }
        }
        Ok(())
    }
}

/// Intersection graph of the intervals.
pub fn graph_from_intervals(iv: &IntervalSet) -> Result<Graph> {
    iv.validate()?;
    let n = iv.len();
    let mut by_start: Vec<Vertex> = (1..=n).collect();
    by_start.sort_by(|&a, &b| iv.get(a).start.cmp(&iv.get(b).start).then(a.cmp(&b)));

    let mut lists: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for (i, &u) in by_start.iter().enumerate() {
        let end = iv.get(u).end;
        for &v in &by_start[i + 1..] {
            if iv.get(v).start > end {
                break;
            }
            lists[u - 1].push(v);
            lists[v - 1].push(u);
        }
    }
    for list in &mut lists {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_lists(lists))
}

/// Maximal cliques `C_1..C_k` in an order where the cliques containing any
/// vertex are consecutive, with each vertex's first (`s_v`) and last (`f_v`)
/// clique index, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueOrder {
    cliques: Vec<Vec<Vertex>>,
    first: Vec<usize>,
    last: Vec<usize>,
}

impl CliqueOrder {
    /// Checks the consecutiveness and antichain invariants.
    pub fn new(n: usize, cliques: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut first = vec![0usize; n];
        let mut last = vec![0usize; n];
        let mut count = vec![0usize; n];
        for (i, clique) in cliques.iter().enumerate() {
            for &v in clique {
                if v == 0 || v > n {
                    return Err(Error::PreconditionViolated(format!(
                        "clique {} holds vertex {v} outside 1..={n}",
                        i + 1
                    )));
                }
                if first[v - 1] == 0 {
                    first[v - 1] = i + 1;
                }
                last[v - 1] = i + 1;
                count[v - 1] += 1;
            }
        }
        for v in 0..n {
            if first[v] == 0 {
                return Err(Error::PreconditionViolated(format!(
                    "vertex {} lies in no clique",
                    v + 1
                )));
            }
            if last[v] - first[v] + 1 != count[v] {
                return Err(Error::PreconditionViolated(format!(
                    "cliques of vertex {} are not consecutive",
                    v + 1
                )));
            }
        }
        let sorted: Vec<Vec<Vertex>> = cliques
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c
            })
            .collect();
        for (i, a) in sorted.iter().enumerate() {
            for (j, b) in sorted.iter().enumerate() {
                if i != j && a.iter().all(|v| b.binary_search(v).is_ok()) {
                    return Err(Error::PreconditionViolated(format!(
                        "clique {} is contained in clique {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self {
            cliques: sorted,
            first,
            last,
        })
    }

    pub fn cliques(&self) -> &[Vec<Vertex>] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.first.len()
    }

    /// Index of the first clique containing `v`.
    pub fn start(&self, v: Vertex) -> usize {
        self.first[v - 1]
    }

    /// Index of the last clique containing `v`.
    pub fn finish(&self, v: Vertex) -> usize {
        self.last[v - 1]
    }
}

/// Maximal cliques by a left-to-right endpoint sweep.
///
/// Events are ordered by coordinate with starts before ends, so touching
/// intervals overlap. The active set is recorded at a right endpoint
/// whenever some interval has started since the previous record; those
/// records are exactly the maximal cliques, in sweep order.
pub fn clique_order_from_intervals(iv: &IntervalSet) -> Result<CliqueOrder> {
    iv.validate()?;
    let n = iv.len();
    let mut events: Vec<(Coord, bool, Vertex)> = Vec::with_capacity(2 * n);
    for v in 1..=n {
        let Interval { start, end } = iv.get(v);
        events.push((start, false, v));
        events.push((end, true, v));
    }
    events.sort_by(|a, b| match a.0.cmp(&b.0) {
        Ordering::Equal => a.1.cmp(&b.1).then(a.2.cmp(&b.2)),
        other => other,
    });

    // Active set as an indexed bag for O(1) insert and remove.
    let mut active: Vec<Vertex> = Vec::new();
    let mut slot = vec![usize::MAX; n + 1];
    let mut grown = false;
    let mut cliques = Vec::new();
    let mut first = vec![0usize; n];
    let mut last = vec![0usize; n];
    for (_, is_end, v) in events {
        if !is_end {
            slot[v] = active.len();
            active.push(v);
            grown = true;
            continue;
        }
        if grown {
            let mut clique = active.clone();
            clique.sort_unstable();
            let index = cliques.len() + 1;
            for &u in &clique {
                if first[u - 1] == 0 {
                    first[u - 1] = index;
                }
                last[u - 1] = index;
            }
            cliques.push(clique);
            grown = false;
        }
        let i = slot[v];
        let moved = *active.last().expect("ending interval is active");
        active.swap_remove(i);
        if moved != v {
            slot[moved] = i;
        }
    }
    Ok(CliqueOrder {
        cliques,
        first,
        last,
    })
}

/// Vertices sorted by `s_v`, ties by `f_v`, then by id.
pub fn pi_order(co: &CliqueOrder) -> Arrangement {
    let mut order: Vec<Vertex> = (1..=co.n()).collect();
    order.sort_by_key(|&v| (co.start(v), co.finish(v), v));
    Arrangement::from_order(order).expect("sorted permutation of 1..=n")
}

/// Sum of edge lengths from `v` to neighbors placed after it.
pub fn right_oriented_cost(g: &Graph, a: &Arrangement, v: Vertex) -> Result<u64> {
    a.check_matches(g)?;
    if v == 0 || v > g.n() {
        return Err(Error::InvalidArrangement(format!(
            "vertex {v} outside 1..={}",
            g.n()
        )));
    }
    let p = a.position(v);
    Ok(g.neighbors(v)
        .iter()
        .map(|&u| a.position(u))
        .filter(|&q| q > p)
        .map(|q| (q - p) as u64)
        .sum())
}

/// Output of the interval pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approximation {
    pub graph: Graph,
    pub clique_order: CliqueOrder,
    pub arrangement: Arrangement,
    pub report: CostReport,
}

/// Interval model to pi-order with its cost report. The report satisfies
/// `A <= OPT <= cost <= B <= 4A`.
pub fn approximate(iv: &IntervalSet) -> Result<Approximation> {
    let graph = graph_from_intervals(iv)?;
    let clique_order = clique_order_from_intervals(iv)?;
    let arrangement = pi_order(&clique_order);
    let c = cost(&graph, &arrangement)?;
    let report = CostReport::new(&graph, c);
    Ok(Approximation {
        graph,
        clique_order,
        arrangement,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Rational;

    fn path_model() -> IntervalSet {
        IntervalSet::from_ints(&[(1, 3), (2, 5), (4, 7), (6, 8)]).unwrap()
    }

    #[test]
    fn intersection_graph_examples() {
        assert_eq!(graph_from_intervals(&path_model()).unwrap(), Graph::path(4));
        let apart = IntervalSet::from_ints(&[(1, 2), (3, 4)]).unwrap();
        assert_eq!(graph_from_intervals(&apart).unwrap(), Graph::empty(2));
        let star = IntervalSet::from_ints(&[(1, 10), (2, 3), (4, 5)]).unwrap();
        assert_eq!(
            graph_from_intervals(&star).unwrap().edges().collect::<Vec<_>>(),
            vec![(1, 2), (1, 3)]
        );
    }

    #[test]
    fn shared_endpoint_intersects() {
        let touching = IntervalSet::from_ints(&[(1, 2), (2, 3)]).unwrap();
        assert_eq!(graph_from_intervals(&touching).unwrap(), Graph::path(2));
        let co = clique_order_from_intervals(&touching).unwrap();
        assert_eq!(co.cliques(), &[vec![1, 2]]);
    }

    #[test]
    fn malformed_interval_rejected() {
        let err = IntervalSet::from_ints(&[(1, 2), (5, 4)]).unwrap_err();
        assert!(matches!(err, Error::MalformedInterval { vertex: 2, .. }));
    }

    #[test]
    fn rational_endpoints_are_exact() {
        let a = Interval::new(Coord::new(1, 3), Coord::new(2, 3));
        let b = Interval::new(Coord::new(2, 3), Coord::from_integer(1));
        let c = Interval::new(Coord::new(7, 10), Coord::from_integer(1));
        let set = IntervalSet::new(vec![a, b, c]).unwrap();
        let g = graph_from_intervals(&set).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn clique_order_examples() {
        let co = clique_order_from_intervals(&path_model()).unwrap();
        assert_eq!(co.cliques(), &[vec![1, 2], vec![2, 3], vec![3, 4]]);
        let s: Vec<usize> = (1..=4).map(|v| co.start(v)).collect();
        let f: Vec<usize> = (1..=4).map(|v| co.finish(v)).collect();
        assert_eq!(s, vec![1, 1, 2, 3]);
        assert_eq!(f, vec![1, 2, 3, 3]);

        let single = clique_order_from_intervals(&IntervalSet::from_ints(&[(0, 5)]).unwrap()).unwrap();
        assert_eq!(single.cliques(), &[vec![1]]);
        assert_eq!((single.start(1), single.finish(1)), (1, 1));

        let nested = clique_order_from_intervals(&IntervalSet::from_ints(&[(1, 4), (2, 3)]).unwrap()).unwrap();
        assert_eq!(nested.cliques(), &[vec![1, 2]]);
        assert_eq!((nested.start(2), nested.finish(2)), (1, 1));
    }

    #[test]
    fn clique_order_validation() {
        assert!(CliqueOrder::new(2, vec![vec![1], vec![2]]).is_ok());
        assert!(CliqueOrder::new(2, vec![vec![1, 2], vec![2]]).is_err());
        assert!(CliqueOrder::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).is_err());
        assert!(CliqueOrder::new(3, vec![vec![1, 2]]).is_err());
    }

    #[test]
    fn pi_order_examples() {
        let co = clique_order_from_intervals(&path_model()).unwrap();
        assert_eq!(pi_order(&co).order(), &[1, 2, 3, 4]);
        let k = CliqueOrder::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(pi_order(&k).order(), &[1, 2, 3, 4]);
        let swapped = CliqueOrder::new(2, vec![vec![2], vec![1]]).unwrap();
        assert_eq!(pi_order(&swapped).order(), &[2, 1]);
    }

    #[test]
    fn approximate_examples() {
        let r = approximate(&path_model()).unwrap().report;
        assert_eq!(r.cost, 3);
        assert_eq!(r.lower_bound_a, Rational::new(11, 4));
        assert_eq!(r.upper_bound_b, 8);

        let k3 = approximate(&IntervalSet::from_ints(&[(1, 2), (1, 2), (1, 2)]).unwrap()).unwrap().report;
        assert_eq!((k3.cost, k3.lower_bound_a, k3.upper_bound_b), (4, Rational::from_integer(3), 9));

        let apart = approximate(&IntervalSet::from_ints(&[(1, 2), (3, 4)]).unwrap()).unwrap().report;
        assert_eq!((apart.cost, apart.upper_bound_b), (0, 0));
        assert_eq!(apart.lower_bound_a, Rational::from_integer(0));
    }

    #[test]
    fn right_oriented_examples() {
        let p3 = Graph::path(3);
        let id = Arrangement::identity(3);
        assert_eq!(right_oriented_cost(&p3, &id, 1).unwrap(), 1);
        assert_eq!(right_oriented_cost(&p3, &id, 3).unwrap(), 0);
        assert_eq!(right_oriented_cost(&Graph::complete(3), &id, 1).unwrap(), 3);
        assert!(right_oriented_cost(&p3, &id, 4).is_err());
    }
}
