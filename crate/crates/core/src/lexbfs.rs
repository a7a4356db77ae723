//! Lexicographic breadth-first search by partition refinement, O(n + m).
//!
//! Vertices are 0-based `u32` here. Ties between vertices with equal labels
//! are resolved by a priority sequence: among tied vertices the one earliest
//! in `priority` is visited first. The neighbor callback must yield each
//! neighbor list in priority order; refinement then appends vertices to new
//! classes in priority order and every class stays priority-sorted. Passing
//! the reverse of a previous sweep as `priority` gives LBFS+.

const NIL: u32 = u32::MAX;

#[derive(Clone, Copy)]
struct Class {
    head: u32,
    tail: u32,
    prev: u32,
    next: u32,
    /// Class split off from this one during the current refinement step.
    split: u32,
}

const EMPTY: Class = Class {
    head: NIL,
    tail: NIL,
    prev: NIL,
    next: NIL,
    split: NIL,
};

/// Compressed adjacency over 0-based vertices.
pub(crate) struct Csr {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Csr {
    pub(crate) fn neighbors(&self, v: u32) -> &[u32] {
        &self.targets[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Same graph with every neighbor list ordered by position in `priority`.
    pub(crate) fn sorted_by(&self, priority: &[u32]) -> Csr {
        let mut fill = self.offsets.clone();
        let mut targets = vec![0u32; self.targets.len()];
        for &v in priority {
            for &w in self.neighbors(v) {
                targets[fill[w as usize]] = v;
                fill[w as usize] += 1;
            }
        }
        Csr {
            offsets: self.offsets.clone(),
            targets,
        }
    }

    /// Graph relabelled so that `order[i]` becomes vertex `i`; neighbor lists
    /// come out ascending. `neighbors(v)` yields the old 0-based neighbors.
    pub(crate) fn relabelled<F, I>(order: &[u32], degree: impl Fn(u32) -> usize, neighbors: F) -> Csr
    where
        F: Fn(u32) -> I,
        I: Iterator<Item = u32>,
    {
        let n = order.len();
        let mut rank = vec![0u32; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v as usize] = i as u32;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0usize);
        for &v in order {
            offsets.push(offsets.last().unwrap() + degree(v));
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; *offsets.last().unwrap()];
        for (i, &v) in order.iter().enumerate() {
            for u in neighbors(v) {
                let j = rank[u as usize] as usize;
                targets[fill[j]] = i as u32;
                fill[j] += 1;
            }
        }
        Csr { offsets, targets }
    }
}

/// Lex-BFS visiting order. `priority` is a permutation of `0..n`;
/// `neighbors(v)` yields the neighbors of `v` in priority order.
pub(crate) fn lexbfs<F, I>(priority: &[u32], neighbors: F) -> Vec<u32>
where
    F: Fn(u32) -> I,
    I: Iterator<Item = u32>,
{
    let n = priority.len();
    if n == 0 {
        return Vec::new();
    }

    // Per-vertex links within a class; class_of is NIL once visited.
    let mut next = vec![NIL; n];
    let mut prev = vec![NIL; n];
    let mut class_of = vec![0u32; n];
    for pair in priority.windows(2) {
        next[pair[0] as usize] = pair[1];
        prev[pair[1] as usize] = pair[0];
    }
    let mut classes = vec![Class {
        head: priority[0],
        tail: priority[n - 1],
        ..EMPTY
    }];
    let mut free: Vec<u32> = Vec::new();
    let mut first = 0u32;

    let mut order = Vec::with_capacity(n);
    let mut touched: Vec<u32> = Vec::new();
    for _ in 0..n {
        let c = first;
        let v = classes[c as usize].head;
        unlink_vertex(&mut classes, &mut next, &mut prev, c, v);
        if classes[c as usize].head == NIL {
            unlink_class(&mut classes, &mut first, c);
            free.push(c);
        }
        class_of[v as usize] = NIL;
        order.push(v);

        for w in neighbors(v) {
            let cw = class_of[w as usize];
            if cw == NIL {
                continue;
            }
            let mut nc = classes[cw as usize].split;
            if nc == NIL {
                let before = classes[cw as usize].prev;
                let fresh = Class {
                    prev: before,
                    next: cw,
                    ..EMPTY
                };
                nc = match free.pop() {
                    Some(slot) => {
                        classes[slot as usize] = fresh;
                        slot
                    }
                    None => {
                        classes.push(fresh);
                        (classes.len() - 1) as u32
                    }
                };
                if before == NIL {
                    first = nc;
                } else {
                    classes[before as usize].next = nc;
                }
                classes[cw as usize].prev = nc;
                classes[cw as usize].split = nc;
                touched.push(cw);
            }
            unlink_vertex(&mut classes, &mut next, &mut prev, cw, w);
            let tail = classes[nc as usize].tail;
            prev[w as usize] = tail;
            next[w as usize] = NIL;
            if tail == NIL {
                classes[nc as usize].head = w;
            } else {
                next[tail as usize] = w;
            }
            classes[nc as usize].tail = w;
            class_of[w as usize] = nc;
        }
        for cw in touched.drain(..) {
            classes[cw as usize].split = NIL;
            if classes[cw as usize].head == NIL {
                unlink_class(&mut classes, &mut first, cw);
                free.push(cw);
            }
        }
    }
    order
}

fn unlink_vertex(classes: &mut [Class], next: &mut [u32], prev: &mut [u32], c: u32, v: u32) {
    let (p, nx) = (prev[v as usize], next[v as usize]);
    if p == NIL {
        classes[c as usize].head = nx;
    } else {
        next[p as usize] = nx;
    }
    if nx == NIL {
        classes[c as usize].tail = p;
    } else {
        prev[nx as usize] = p;
    }
}

fn unlink_class(classes: &mut [Class], first: &mut u32, c: u32) {
    let Class { prev, next, .. } = classes[c as usize];
    if prev == NIL {
        *first = next;
    } else {
        classes[prev as usize].next = next;
    }
    if next != NIL {
        classes[next as usize].prev = prev;
    }
}
