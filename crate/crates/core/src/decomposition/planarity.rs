//! Left-right planarity test with embedding extraction.

use crate::embedding::Embedding;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    id: usize,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr<'a> {
    g: &'a Graph,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    // Orientation of each edge: tail and head.
    tail: Vec<usize>,
    head: Vec<usize>,
    oriented: Vec<bool>,
    out: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    refe: Vec<usize>,
    side: Vec<i64>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    next_id: usize,
}

/// Computes a planar embedding of a simple graph, or `None` if the graph is
/// not planar.
pub fn planar_embed(g: &Graph) -> Option<Embedding> {
    let n = g.n();
    let m = g.m();
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut lr = Lr {
        g,
        height: vec![NONE; n],
        parent_edge: vec![NONE; n],
        tail: vec![NONE; m],
        head: vec![NONE; m],
        oriented: vec![false; m],
        out: vec![Vec::new(); n],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting: vec![0; m],
        refe: vec![NONE; m],
        side: vec![1; m],
        lowpt_edge: vec![NONE; m],
        stack_bottom: vec![NONE; m],
        stack: Vec::new(),
        next_id: 0,
    };
    let mut roots = Vec::new();
    for v in 0..n {
        if lr.height[v] == NONE {
            lr.height[v] = 0;
            roots.push(v);
            lr.orient(v);
        }
    }
    for v in 0..n {
        let mut out = std::mem::take(&mut lr.out[v]);
        out.sort_by_key(|&e| lr.nesting[e]);
        lr.out[v] = out;
    }
    for &r in &roots {
        if !lr.test(r) {
            return None;
        }
    }
    for e in 0..m {
        let s = lr.sign(e);
        lr.nesting[e] *= s;
    }
    for v in 0..n {
        let mut out = std::mem::take(&mut lr.out[v]);
        out.sort_by_key(|&e| lr.nesting[e]);
        lr.out[v] = out;
    }
    let mut rot = Rotations::new(n);
    for v in 0..n {
        let mut prev = NONE;
        for &e in &lr.out[v] {
            rot.insert_after(v, e, prev);
            prev = e;
        }
    }
    let mut left_ref = vec![NONE; n];
    let mut right_ref = vec![NONE; n];
    for &r in &roots {
        lr.embed(r, &mut rot, &mut left_ref, &mut right_ref);
    }
    let emb = rot.into_embedding(g);
    debug_assert!(emb.is_planar(g));
    Some(emb)
}

impl<'a> Lr<'a> {
    fn orient(&mut self, v: usize) {
        // Iterative DFS: frame = (vertex, next incident index).
        let mut frames: Vec<(usize, usize)> = vec![(v, 0)];
        while let Some(&mut (x, ref mut i)) = frames.last_mut() {
            let inc = self.g.incident(x);
            if *i < inc.len() {
                let e = inc[*i];
                *i += 1;
                if self.oriented[e] {
                    continue;
                }
                self.oriented[e] = true;
                let w = self.g.other(e, x);
                self.tail[e] = x;
                self.head[e] = w;
                self.out[x].push(e);
                self.lowpt[e] = self.height[x];
                self.lowpt2[e] = self.height[x];
                if self.height[w] == NONE {
                    self.parent_edge[w] = e;
                    self.height[w] = self.height[x] + 1;
                    frames.push((w, 0));
                } else {
                    self.lowpt[e] = self.height[w];
                    self.finish_edge(x, e);
                }
            } else {
                frames.pop();
                let pe = self.parent_edge[x];
                if pe != NONE && !frames.is_empty() {
                    let u = self.tail[pe];
                    self.finish_edge(u, pe);
                }
            }
        }
    }

    /// Nesting depth of `e` leaving `x` and lowpoint update of the parent edge of `x`.
    fn finish_edge(&mut self, x: usize, e: usize) {
        self.nesting[e] = 2 * self.lowpt[e] as i64;
        if self.lowpt2[e] < self.height[x] {
            self.nesting[e] += 1;
        }
        let pe = self.parent_edge[x];
        if pe != NONE {
            if self.lowpt[e] < self.lowpt[pe] {
                self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                self.lowpt[pe] = self.lowpt[e];
            } else if self.lowpt[e] > self.lowpt[pe] {
                self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
            } else {
                self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
            }
        }
    }

    fn top_id(&self) -> usize {
        self.stack.last().map_or(NONE, |p| p.id)
    }

    fn push(&mut self, left: Interval, right: Interval) {
        let id = self.next_id;
        self.next_id += 1;
        self.stack.push(ConflictPair { id, left, right });
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn test(&mut self, root: usize) -> bool {
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&(v, i)) = frames.last() {
            if i > 0 {
                // Returning from or past the edge out[v][i-1].
                let ei = self.out[v][i - 1];
                if !self.integrate(v, ei, i - 1) {
                    return false;
                }
            }
            if i < self.out[v].len() {
                let ei = self.out[v][i];
                frames.last_mut().unwrap().1 += 1;
                self.stack_bottom[ei] = self.top_id();
                let w = self.head[ei];
                if ei == self.parent_edge[w] {
                    frames.push((w, 0));
                } else {
                    self.lowpt_edge[ei] = ei;
                    self.push(Interval::EMPTY, Interval { low: ei, high: ei });
                    // integration happens when the frame advances
                }
                continue;
            }
            frames.pop();
            let e = self.parent_edge[v];
            if e != NONE {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn integrate(&mut self, v: usize, ei: usize, index: usize) -> bool {
        let e = self.parent_edge[v];
        if self.lowpt[ei] < self.height[v] {
            if index == 0 {
                if e != NONE {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                }
            } else if !self.add_constraints(ei, e) {
                return false;
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p_left = Interval::EMPTY;
        let mut p_right = Interval::EMPTY;
        loop {
            let mut q = self.stack.pop().expect("conflict stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p_right.is_empty() {
                    p_right = q.right;
                } else {
                    self.refe[p_right.low] = q.right.high;
                }
                p_right.low = q.right.low;
            } else {
                self.refe[q.right.low] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.refe[p_right.low] = q.right.high;
            if q.right.low != NONE {
                p_right.low = q.right.low;
            }
            if p_left.is_empty() {
                p_left = q.left;
            } else {
                self.refe[p_left.low] = q.left.high;
            }
            p_left.low = q.left.low;
        }
        if !(p_left.is_empty() && p_right.is_empty()) {
            self.push(p_left, p_right);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if p.left.low != NONE {
                self.side[p.left.low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.head[p.left.high] == u {
                p.left.high = self.refe[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.refe[p.left.low] = p.right.low;
                self.side[p.left.low] = -1;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.head[p.right.high] == u {
                p.right.high = self.refe[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.refe[p.right.low] = p.left.low;
                self.side[p.right.low] = -1;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("return edge without conflict pair");
            let hl = top.left.high;
            let hr = top.right.high;
            self.refe[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                hl
            } else {
                hr
            };
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = vec![e];
        while self.refe[*chain.last().unwrap()] != NONE {
            let r = self.refe[*chain.last().unwrap()];
            chain.push(r);
        }
        // Resolve from the end of the reference chain backwards.
        for i in (0..chain.len() - 1).rev() {
            let x = chain[i];
            let r = chain[i + 1];
            self.side[x] *= self.side[r];
            self.refe[x] = NONE;
        }
        self.side[e]
    }

    fn embed(
        &self,
        root: usize,
        rot: &mut Rotations,
        left_ref: &mut [usize],
        right_ref: &mut [usize],
    ) {
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&mut (v, ref mut i)) = frames.last_mut() {
            if *i == self.out[v].len() {
                frames.pop();
                continue;
            }
            let ei = self.out[v][*i];
            *i += 1;
            let w = self.head[ei];
            if ei == self.parent_edge[w] {
                rot.insert_first(w, ei);
                left_ref[v] = ei;
                right_ref[v] = ei;
                frames.push((w, 0));
            } else if self.side[ei] == 1 {
                rot.insert_after(w, ei, right_ref[w]);
            } else {
                rot.insert_before(w, ei, left_ref[w]);
                left_ref[w] = ei;
            }
        }
    }
}

/// Cyclic doubly linked lists of edges around each vertex.
struct Rotations {
    // Per edge and endpoint side: (clockwise next, counter-clockwise next).
    cw: std::collections::HashMap<(usize, usize), (usize, usize)>,
    first: Vec<usize>,
}

impl Rotations {
    fn new(n: usize) -> Self {
        Rotations { cw: std::collections::HashMap::new(), first: vec![NONE; n] }
    }

    /// Inserts `e` clockwise right after `reference` at `v`; `NONE` means the
    /// rotation at `v` is empty.
    fn insert_after(&mut self, v: usize, e: usize, reference: usize) {
        if reference == NONE {
            self.cw.insert((v, e), (e, e));
            self.first[v] = e;
            return;
        }
        let (next, _) = self.cw[&(v, reference)];
        self.cw.get_mut(&(v, reference)).unwrap().0 = e;
        self.cw.get_mut(&(v, next)).unwrap().1 = e;
        self.cw.insert((v, e), (next, reference));
    }

    fn insert_before(&mut self, v: usize, e: usize, reference: usize) {
        if reference == NONE {
            self.insert_after(v, e, NONE);
            return;
        }
        let (_, prev) = self.cw[&(v, reference)];
        self.insert_after(v, e, prev);
        if self.first[v] == reference {
            self.first[v] = e;
        }
    }

    fn insert_first(&mut self, v: usize, e: usize) {
        let f = self.first[v];
        self.insert_before(v, e, f);
        self.first[v] = e;
    }

    fn into_embedding(self, g: &Graph) -> Embedding {
        let mut rotation = vec![Vec::new(); g.n()];
        for v in 0..g.n() {
            let start = self.first[v];
            if start == NONE {
                continue;
            }
            let mut e = start;
            loop {
                rotation[v].push(e);
                e = self.cw[&(v, e)].0;
                if e == start {
                    break;
                }
            }
        }
        Embedding::new(rotation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    #[test]
    fn k4_has_four_faces() {
        let g = complete(4);
        let emb = planar_embed(&g).unwrap();
        assert!(emb.is_planar(&g));
        assert_eq!(emb.faces(&g).len(), 4);
    }

    #[test]
    fn k5_and_k33_are_not_planar() {
        assert!(planar_embed(&complete(5)).is_none());
        let mut k33 = Graph::new(6);
        for a in 0..3 {
            for b in 3..6 {
                k33.add_edge(a, b);
            }
        }
        assert!(planar_embed(&k33).is_none());
    }

    #[test]
    fn forests_and_empty_graphs_embed() {
        assert!(planar_embed(&Graph::new(0)).is_some());
        let g = Graph::from_edges(5, &[[0, 1], [1, 2], [1, 3]]);
        assert!(planar_embed(&g).unwrap().is_planar(&g));
    }
}
