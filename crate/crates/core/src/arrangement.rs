//! Linear arrangements and the MinLA objective.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A bijection from vertices `1..=n` onto positions `1..=n`.
///
/// Ordering compares the position sequence of vertex 1, vertex 2, ... so
/// `min` over a set of arrangements is the lexicographically smallest one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrangement {
    positions: Vec<usize>,
    order: Vec<Vertex>,
}

impl Arrangement {
    pub fn identity(n: usize) -> Self {
        let ids: Vec<usize> = (1..=n).collect();
        Self {
            positions: ids.clone(),
            order: ids,
        }
    }

    /// `positions[v - 1]` is the position of vertex `v`.
    pub fn from_positions(positions: Vec<usize>) -> Result<Self> {
        let order = invert(&positions, "position")?;
        Ok(Self { positions, order })
    }

    /// `order[p - 1]` is the vertex placed at position `p`.
    pub fn from_order(order: Vec<Vertex>) -> Result<Self> {
        let positions = invert(&order, "vertex")?;
        Ok(Self { positions, order })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.positions[v - 1]
    }

    pub fn vertex_at(&self, p: usize) -> Vertex {
        self.order[p - 1]
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// Vertices in position order.
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// The mirrored arrangement, `p -> n + 1 - p`.
    pub fn reversed(&self) -> Self {
        let n = self.len();
        let positions = self.positions.iter().map(|&p| n + 1 - p).collect();
        let order = self.order.iter().rev().copied().collect();
        Self { positions, order }
    }

    pub(crate) fn check_matches(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::InvalidArrangement(format!(
                "arrangement covers {} vertices, graph has {}",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

fn invert(map: &[usize], what: &str) -> Result<Vec<usize>> {
    let n = map.len();
    let mut inverse = vec![0usize; n];
    for (i, &x) in map.iter().enumerate() {
        if x == 0 || x > n {
            return Err(Error::InvalidArrangement(format!(
                "{what} {x} outside 1..={n}"
            )));
        }
        if inverse[x - 1] != 0 {
            return Err(Error::InvalidArrangement(format!(
                "{what} {x} occurs more than once"
            )));
        }
        inverse[x - 1] = i + 1;
    }
    Ok(inverse)
}

/// Sum over edges of `|pos(u) - pos(v)|`.
pub fn cost(g: &Graph, a: &Arrangement) -> Result<u64> {
    a.check_matches(g)?;
    let mut total: u64 = 0;
    for (u, v) in g.edges() {
        let d = a.position(u).abs_diff(a.position(v)) as u64;
        total = total.checked_add(d).ok_or(Error::Overflow("arrangement cost"))?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cost_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(cost(&k3, &Arrangement::identity(3)).unwrap(), 4);
        let p3 = Graph::path(3);
        assert_eq!(cost(&p3, &Arrangement::identity(3)).unwrap(), 2);
        let swapped = Arrangement::from_positions(vec![2, 1, 3]).unwrap();
        assert_eq!(cost(&p3, &swapped).unwrap(), 3);
    }

    #[test]
    fn complete_graph_cost_is_permutation_invariant() {
        for n in 1..=6usize {
            let g = Graph::complete(n);
            let expected = (n * (n * n - 1) / 6) as u64;
            let a = Arrangement::from_order((1..=n).rev().collect()).unwrap();
            assert_eq!(cost(&g, &a).unwrap(), expected);
            assert_eq!(cost(&g, &Arrangement::identity(n)).unwrap(), expected);
        }
    }

    #[test]
    fn non_bijective_arrangements_rejected() {
        assert!(matches!(
            Arrangement::from_positions(vec![1, 1, 3]),
            Err(Error::InvalidArrangement(_))
        ));
        assert!(matches!(
            Arrangement::from_positions(vec![1, 4, 2]),
            Err(Error::InvalidArrangement(_))
        ));
        assert!(matches!(
            Arrangement::from_order(vec![0, 1]),
            Err(Error::InvalidArrangement(_))
        ));
    }

    #[test]
    fn size_mismatch_rejected() {
        let g = Graph::path(3);
        assert!(matches!(
            cost(&g, &Arrangement::identity(4)),
            Err(Error::InvalidArrangement(_))
        ));
    }

    #[test]
    fn order_and_positions_agree() {
        let a = Arrangement::from_order(vec![3, 1, 2]).unwrap();
        assert_eq!(a.positions(), &[2, 3, 1]);
        assert_eq!(a.vertex_at(1), 3);
        let r = a.reversed();
        assert_eq!(r.order(), &[2, 1, 3]);
        assert_eq!(r.positions(), &[2, 1, 3]);
        assert_eq!(r.reversed(), a);
    }

    #[test]
    fn lexicographic_ordering_by_positions() {
        let a = Arrangement::from_positions(vec![1, 3, 2]).unwrap();
        let b = Arrangement::from_positions(vec![2, 1, 3]).unwrap();
        assert!(a < b);
    }
}
