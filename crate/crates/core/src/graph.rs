//! Immutable undirected simple graphs.
//!
//! Vertices are the integers `1..=n`. Adjacency is stored in compressed
//! sparse row form with every neighbor list strictly ascending, so the
//! structure can be shared freely between threads once built.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Vertex identifier, `1..=n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// `offsets[v - 1]..offsets[v]` indexes the neighbors of `v` in `targets`.
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation and may repeat; duplicates are merged. Self-loops and
    /// endpoints outside `1..=n` are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut lists: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            lists[u - 1].push(v);
            lists[v - 1].push(u);
        }
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_lists(lists))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let lists = (1..=n)
            .map(|v| (1..=n).filter(|&u| u != v).collect())
            .collect();
        Self::from_sorted_lists(lists)
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v, v + 1))).expect("path edges are valid")
    }

    /// Caller guarantees symmetric, strictly ascending, loop-free lists.
    pub(crate) fn from_sorted_lists(lists: Vec<Vec<Vertex>>) -> Self {
        let n = lists.len();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let total = lists.iter().map(Vec::len).sum();
        let mut targets = Vec::with_capacity(total);
        for list in lists {
            targets.extend(list);
            offsets.push(targets.len());
        }
        Self {
            n,
            offsets,
            targets,
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.n
    }

    /// Sorted neighbor list of `v`. Panics if `v` is not in `1..=n`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v - 1]..self.offsets[v]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v] - self.offsets[v - 1]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && u >= 1 && u <= self.n && v >= 1 && v <= self.n
            && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `vertices`, relabelled `1..=k` in the order given.
    /// Returns the subgraph and the map from new labels back to old ones.
    pub fn induced(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut relabel = vec![0usize; self.n + 1];
        for (i, &v) in vertices.iter().enumerate() {
            relabel[v] = i + 1;
        }
        let lists = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<Vertex> = self
                    .neighbors(v)
                    .iter()
                    .filter_map(|&u| (relabel[u] != 0).then_some(relabel[u]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        (Self::from_sorted_lists(lists), vertices.to_vec())
    }

    /// Graph with vertex `v` renamed to `perm[v - 1]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "relabelling has {} entries, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u - 1], perm[v - 1])))
    }
}

/// Partition of the vertices into connected components. Each component is
/// sorted ascending; components are ordered by their smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n() + 1];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for start in g.vertices() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut component = Vec::new();
        while let Some(v) = queue.pop_front() {
            component.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_sorts_and_dedups() {
        let g = Graph::from_edges(4, [(3, 1), (1, 2), (2, 1), (4, 3)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.neighbors(1), &[2, 3]);
        assert_eq!(g.neighbors(3), &[1, 4]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (3, 4)]);
        let total: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn builder_rejects_loops_and_out_of_range() {
        assert!(matches!(
            Graph::from_edges(3, [(2, 2)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(1, 4)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1)]),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn components_examples() {
        assert_eq!(connected_components(&Graph::complete(3)), vec![vec![1, 2, 3]]);
        let two = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(connected_components(&two), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(
            connected_components(&Graph::empty(3)),
            vec![vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn components_ordered_by_smallest_member() {
        let g = Graph::from_edges(5, [(2, 5), (1, 4)]).unwrap();
        assert_eq!(
            connected_components(&g),
            vec![vec![1, 4], vec![2, 5], vec![3]]
        );
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::from_edges(5, [(2, 5), (5, 4), (1, 3)]).unwrap();
        let (sub, back) = g.induced(&[2, 4, 5]);
        assert_eq!(back, vec![2, 4, 5]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(1, 3), (2, 3)]);
    }
}
