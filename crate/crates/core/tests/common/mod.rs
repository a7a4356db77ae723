//! Test-only oracles and instance enumerators. Nothing here calls into the
//! solver paths it is used to check.

#![allow(dead_code)]

use minla_core::Graph;

/// Every permutation of `0..n` (Heap's algorithm), as position-ordered
/// vertex lists with 1-based vertex ids.
pub fn for_each_order(n: usize, mut f: impl FnMut(&[usize])) {
    let mut items: Vec<usize> = (1..=n).collect();
    let mut c = vec![0usize; n];
    f(&items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(&items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Cost of the layout `order` (vertex at position `i + 1` is `order[i]`).
pub fn naive_cost(g: &Graph, order: &[usize]) -> u64 {
    let mut pos = vec![0i64; g.n() + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i as i64;
    }
    g.edges().map(|(u, v)| (pos[u] - pos[v]).unsigned_abs()).sum()
}

/// Minimum cost over all `n!` layouts.
pub fn naive_minla(g: &Graph) -> u64 {
    let mut best = u64::MAX;
    for_each_order(g.n(), |order| best = best.min(naive_cost(g, order)));
    best
}

/// Closed neighborhoods consecutive, by direct pairwise check: for every
/// pair `i < k` of adjacent positions, everything between is adjacent to
/// both ends.
pub fn naive_umbrella(g: &Graph, order: &[usize]) -> bool {
    let n = order.len();
    for i in 0..n {
        for k in i + 1..n {
            if g.has_edge(order[i], order[k]) {
                for &w in &order[i + 1..k] {
                    if !g.has_edge(order[i], w) || !g.has_edge(w, order[k]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Whether some ordering of the vertices is an umbrella ordering.
pub fn exists_umbrella_order(g: &Graph) -> bool {
    let mut found = false;
    for_each_order(g.n(), |order| {
        if !found && naive_umbrella(g, order) {
            found = true;
        }
    });
    found
}

/// All labelled simple graphs on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// All sets of ranges over `1..=n` in which no range contains another,
/// as sequences with strictly increasing `lo` and `hi`.
pub fn antichain_range_sets(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn extend(
        n: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        let (min_lo, min_hi) = current.last().map_or((1, 1), |&(lo, hi)| (lo + 1, hi + 1));
        for lo in min_lo..=n {
            for hi in min_hi.max(lo)..=n {
                current.push((lo, hi));
                extend(n, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out
}

/// Antichain range sets whose chain graph is connected and spans `1..=n`.
pub fn connected_chain_range_sets(n: usize) -> Vec<Vec<(usize, usize)>> {
    antichain_range_sets(n)
        .into_iter()
        .filter(|ranges| {
            let first = ranges[0];
            let last = ranges[ranges.len() - 1];
            let linked = ranges.windows(2).all(|w| w[1].0 <= w[0].1);
            let spans = first.0 == 1 && last.1 == n;
            let no_singletons = n == 1 || ranges.iter().all(|&(lo, hi)| lo < hi);
            linked && spans && no_singletons
        })
        .collect()
}

/// Union of the clique edge sets of `ranges` over vertices `1..=n`.
pub fn naive_chain_graph(n: usize, ranges: &[(usize, usize)]) -> Graph {
    let mut edges = Vec::new();
    for &(lo, hi) in ranges {
        for u in lo..=hi {
            for v in u + 1..=hi {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Number of degree-bound terms, as eighths: `A = sum d (d + 2) / 8`.
pub fn lower_bound_eighths(g: &Graph) -> u128 {
    g.vertices()
        .map(|v| {
            let d = g.degree(v) as u128;
            d * d + 2 * d
        })
        .sum()
}
