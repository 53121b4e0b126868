//! Wheels, wheel reductions, labels and complete sequences.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::model::{ClusteredGraph, PermutationAssignment, Side};

/// Cycle position of the copy at side `side` of the vertex at index `j` of a
/// permutation of size `k`.
///
/// The cycle reads the top copies left to right, the right copies top to
/// bottom, the bottom copies right to left and the left copies bottom to top.
pub fn cycle_position(k: usize, j: usize, side: Side) -> usize {
    match side {
        Side::Top => j,
        Side::Right => k + j,
        Side::Bottom => 2 * k + (k - 1 - j),
        Side::Left => 3 * k + (k - 1 - j),
    }
}

/// Inverse of [`cycle_position`].
pub fn position_slot(k: usize, p: usize) -> (usize, Side) {
    let (q, r) = (p / k, p % k);
    match q {
        0 => (r, Side::Top),
        1 => (r, Side::Right),
        2 => (k - 1 - r, Side::Bottom),
        3 => (k - 1 - r, Side::Left),
        _ => panic!("cycle position {p} out of range for k={k}"),
    }
}

/// A wheel inside some host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wheel {
    pub cluster: usize,
    /// Cluster vertices in permutation order.
    pub perm: Vec<usize>,
    pub hub: usize,
    /// Host vertices of the cycle, in cycle order.
    pub cycle: Vec<usize>,
    /// Inter-cluster edge to the cycle position it attaches to.
    pub attachment: BTreeMap<usize, usize>,
}

impl Wheel {
    pub fn k(&self) -> usize {
        self.perm.len()
    }

    /// Cycle position of vertex index `j` at `side`.
    pub fn position(&self, j: usize, side: Side) -> usize {
        cycle_position(self.k(), j, side)
    }

    /// Position within the permutation of cluster vertex `v`.
    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.perm.iter().position(|&x| x == v)
    }
}

/// Builds a standalone wheel for cluster `c` of `g` under permutation `perm`.
///
/// The hub is vertex 0 and the cycle vertex at position `p` is vertex `p + 1`.
/// Cycle edges come first (edge `p` joins positions `p` and `p + 1`), then the
/// spokes (edge `4k + p` joins the hub to position `p`).
pub fn build_wheel(g: &ClusteredGraph, c: usize, perm: &[usize]) -> (Graph, Wheel) {
    let k = perm.len();
    let mut graph = Graph::new(4 * k + 1);
    let hub = 0;
    let cycle: Vec<usize> = (1..=4 * k).collect();
    add_wheel_edges(&mut graph, hub, &cycle);
    let attachment = attachments(g, c, perm);
    (graph, Wheel { cluster: c, perm: perm.to_vec(), hub, cycle, attachment })
}

fn add_wheel_edges(graph: &mut Graph, hub: usize, cycle: &[usize]) {
    let n = cycle.len();
    for p in 0..n {
        graph.add_edge(cycle[p], cycle[(p + 1) % n]);
    }
    for &v in cycle {
        graph.add_edge(hub, v);
    }
}

fn attachments(g: &ClusteredGraph, c: usize, perm: &[usize]) -> BTreeMap<usize, usize> {
    let k = perm.len();
    let mut out = BTreeMap::new();
    for e in g.cluster_edges(c) {
        let v = g.endpoint_in(e, c).expect("edge incident to cluster");
        let j = perm.iter().position(|&x| x == v).expect("permutation covers cluster");
        let side = g.side(e, c).expect("side assigned");
        out.insert(e, cycle_position(k, j, side));
    }
    out
}

/// The graph obtained by replacing every non-trivial cluster with its wheel.
#[derive(Clone, Debug)]
pub struct WheelReduction {
    pub graph: Graph,
    /// Wheel of each cluster, `None` for trivial clusters.
    pub wheels: Vec<Option<Wheel>>,
    /// Host vertex of each vertex in a trivial cluster.
    pub vertex_image: Vec<Option<usize>>,
    /// Image edge of each inter-cluster edge.
    pub image: BTreeMap<usize, usize>,
    /// Source inter-cluster edge of each host edge, `None` for wheel edges.
    pub source: Vec<Option<usize>>,
}

impl WheelReduction {
    /// Host vertex where inter-cluster edge `e` meets cluster `c`.
    pub fn endpoint(&self, g: &ClusteredGraph, e: usize, c: usize) -> usize {
        match &self.wheels[c] {
            Some(w) => w.cycle[w.attachment[&e]],
            None => self.vertex_image[g.endpoint_in(e, c).unwrap()].unwrap(),
        }
    }
}

/// Replaces each non-trivial cluster by the wheel consistent with its
/// permutation. Intra-cluster edges are dropped.
///
/// Host vertices: trivial-cluster vertices in cluster order, then each wheel's
/// hub followed by its cycle. Edges between two wheels are allowed, so the
/// input need not be light.
pub fn wheel_reduction(g: &ClusteredGraph, pi: &PermutationAssignment) -> WheelReduction {
    let mut graph = Graph::new(0);
    let mut source = Vec::new();
    let mut vertex_image = vec![None; g.n()];
    let mut wheels = vec![None; g.clusters.len()];
    for (c, cl) in g.clusters.iter().enumerate() {
        if g.is_trivial(c) {
            vertex_image[cl.vertices[0]] = Some(graph.add_vertex());
        }
    }
    for c in 0..g.clusters.len() {
        if g.is_trivial(c) {
            continue;
        }
        let perm = &pi.0[c];
        let hub = graph.add_vertex();
        let cycle: Vec<usize> = (0..4 * perm.len()).map(|_| graph.add_vertex()).collect();
        add_wheel_edges(&mut graph, hub, &cycle);
        source.resize(graph.m(), None);
        wheels[c] = Some(Wheel {
            cluster: c,
            perm: perm.clone(),
            hub,
            cycle,
            attachment: attachments(g, c, perm),
        });
    }
    let mut red = WheelReduction { graph, wheels, vertex_image, image: BTreeMap::new(), source };
    for e in g.inter_edges() {
        let [u, v] = g.edges[e];
        let a = red.endpoint(g, e, g.cluster_of(u));
        let b = red.endpoint(g, e, g.cluster_of(v));
        let id = red.graph.add_edge(a, b);
        red.source.push(Some(e));
        red.image.insert(e, id);
    }
    red
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Void,
    Int,
    Ext,
    IntExt,
}

impl Label {
    fn add(self, internal: bool) -> Label {
        match (self, internal) {
            (Label::Void, true) | (Label::Int, true) => Label::Int,
            (Label::Void, false) | (Label::Ext, false) => Label::Ext,
            _ => Label::IntExt,
        }
    }

    pub fn has(self, kind: SeqKind) -> bool {
        matches!(
            (self, kind),
            (Label::IntExt, _) | (Label::Int, SeqKind::Internal) | (Label::Ext, SeqKind::External)
        )
    }
}

/// Labels of the `n` cycle positions, given the positions of internal and
/// external image edges (with repetition allowed).
pub fn label_positions(
    n: usize,
    internal: impl IntoIterator<Item = usize>,
    external: impl IntoIterator<Item = usize>,
) -> Vec<Label> {
    let mut labels = vec![Label::Void; n];
    for p in internal {
        labels[p] = labels[p].add(true);
    }
    for p in external {
        labels[p] = labels[p].add(false);
    }
    labels
}

/// Labels the cycle of `w` where `internal` decides, for each inter-cluster
/// edge attached to the wheel, whether it counts as internal.
pub fn label_wheel(w: &Wheel, internal: impl Fn(usize) -> bool) -> Vec<Label> {
    let (mut int, mut ext) = (Vec::new(), Vec::new());
    for (&e, &p) in &w.attachment {
        if internal(e) {
            int.push(p);
        } else {
            ext.push(p);
        }
    }
    label_positions(w.cycle.len(), int, ext)
}

/// A clockwise arc of `len` consecutive positions on a cycle of length `n`,
/// starting at `start`. `1 <= len <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub n: usize,
    pub start: usize,
    pub len: usize,
}

impl Arc {
    pub fn new(n: usize, start: usize, len: usize) -> Arc {
        debug_assert!(start < n && len >= 1 && len <= n);
        Arc { n, start, len }
    }

    /// Arc from `first` clockwise to `last`, both included.
    pub fn between(n: usize, first: usize, last: usize) -> Arc {
        Arc::new(n, first, dist(n, first, last) + 1)
    }

    pub fn point(n: usize, p: usize) -> Arc {
        Arc::new(n, p, 1)
    }

    pub fn end(&self) -> usize {
        (self.start + self.len - 1) % self.n
    }

    /// Clockwise offset of `p` from the start.
    pub fn offset(&self, p: usize) -> usize {
        dist(self.n, self.start, p)
    }

    pub fn contains(&self, p: usize) -> bool {
        self.offset(p) < self.len
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).map(move |i| (self.start + i) % self.n)
    }

    /// Positions shared with `other`, as maximal arcs in clockwise order
    /// starting from this arc's start.
    pub fn intersect(&self, other: &Arc) -> Vec<Arc> {
        let mut out: Vec<Arc> = Vec::new();
        let mut run: Option<(usize, usize)> = None;
        for i in 0..self.len {
            let p = (self.start + i) % self.n;
            if other.contains(p) {
                run = Some(match run {
                    Some((s, l)) => (s, l + 1),
                    None => (p, 1),
                });
            } else if let Some((s, l)) = run.take() {
                out.push(Arc::new(self.n, s, l));
            }
        }
        if let Some((s, l)) = run {
            out.push(Arc::new(self.n, s, l));
        }
        out
    }

    /// Whether the arcs share no position.
    pub fn is_disjoint(&self, other: &Arc) -> bool {
        !self.contains(other.start) && !other.contains(self.start)
    }

    /// Whether the arcs together cover the cycle exactly once, meeting only
    /// through the cycle edges `self.end -> other.start` and
    /// `other.end -> self.start`.
    pub fn complements(&self, other: &Arc) -> bool {
        self.len + other.len == self.n
            && other.start == (self.end() + 1) % self.n
            && self.start == (other.end() + 1) % self.n
    }
}

/// Clockwise distance from `a` to `b` on a cycle of length `n`.
pub fn dist(n: usize, a: usize, b: usize) -> usize {
    (b + n - a) % n
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqKind {
    Internal,
    External,
}

/// Complete sequences of one kind on a labeled cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompleteSequence {
    /// No position carries the kind; the sequence constrains nothing.
    Empty,
    /// Every complete arc, in increasing order of start position.
    Arcs(Vec<Arc>),
}

impl CompleteSequence {
    pub fn exists(&self) -> bool {
        !matches!(self, CompleteSequence::Arcs(a) if a.is_empty())
    }
}

/// All complete sequences of `kind`.
///
/// An arc qualifies when both its ends carry the kind, its inner positions are
/// void or purely of the kind, and it contains every position carrying the
/// kind. Arcs are at most one full turn, so for a single marked position the
/// only arc is that position. With exactly two `IntExt` positions and the rest
/// void, both arcs between them qualify for either kind.
pub fn complete_sequences(labels: &[Label], kind: SeqKind) -> CompleteSequence {
    let n = labels.len();
    let marked: Vec<usize> = (0..n).filter(|&p| labels[p].has(kind)).collect();
    if marked.is_empty() {
        return CompleteSequence::Empty;
    }
    let pure = match kind {
        SeqKind::Internal => Label::Int,
        SeqKind::External => Label::Ext,
    };
    let mut arcs = Vec::new();
    for i in 0..marked.len() {
        let first = marked[i];
        let last = marked[(i + marked.len() - 1) % marked.len()];
        let arc = Arc::between(n, first, last);
        let inner_ok = arc
            .positions()
            .skip(1)
            .take(arc.len.saturating_sub(2))
            .all(|p| labels[p] == Label::Void || labels[p] == pure);
        if inner_ok {
            arcs.push(arc);
        }
    }
    arcs.sort();
    CompleteSequence::Arcs(arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::planar_embed;
    use crate::model::ClusteredGraph;

    fn brute(labels: &[Label], kind: SeqKind) -> CompleteSequence {
        let n = labels.len();
        if !labels.iter().any(|l| l.has(kind)) {
            return CompleteSequence::Empty;
        }
        let pure = if kind == SeqKind::Internal { Label::Int } else { Label::Ext };
        let mut arcs = Vec::new();
        for start in 0..n {
            for len in 1..=n {
                let a = Arc::new(n, start, len);
                let ps: Vec<usize> = a.positions().collect();
                let ends = labels[ps[0]].has(kind) && labels[ps[len - 1]].has(kind);
                let inner = ps[1..len.max(2) - 1].iter().all(|&p| labels[p] == Label::Void || labels[p] == pure);
                let all = (0..n).filter(|&p| labels[p].has(kind)).all(|p| ps.contains(&p));
                if ends && inner && all {
                    arcs.push(a);
                }
            }
        }
        CompleteSequence::Arcs(arcs)
    }

    fn all_labelings(n: usize) -> impl Iterator<Item = Vec<Label>> {
        const L: [Label; 4] = [Label::Void, Label::Int, Label::Ext, Label::IntExt];
        (0..4usize.pow(n as u32)).map(move |mut code| {
            (0..n)
                .map(|_| {
                    let l = L[code % 4];
                    code /= 4;
                    l
                })
                .collect()
        })
    }

    #[test]
    fn positions_follow_cycle_order() {
        let k = 2;
        let order: Vec<(usize, Side)> = (0..4 * k).map(|p| position_slot(k, p)).collect();
        use Side::*;
        assert_eq!(
            order,
            vec![(0, Top), (1, Top), (0, Right), (1, Right), (1, Bottom), (0, Bottom), (1, Left), (0, Left)]
        );
        for k in 1..6 {
            for p in 0..4 * k {
                let (j, s) = position_slot(k, p);
                assert_eq!(cycle_position(k, j, s), p);
            }
        }
    }

    #[test]
    fn wheel_sizes() {
        for k in 2..6 {
            let names: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let g = ClusteredGraph::builder().cluster("C", &refs).build();
            let (w, _) = build_wheel(&g, 0, &(0..k).collect::<Vec<_>>());
            assert_eq!((w.n(), w.m()), (4 * k + 1, 8 * k));
            assert_eq!(w.degree(0), 4 * k);
            assert!(planar_embed(&w).is_some());
        }
    }

    #[test]
    fn left_edge_at_second_vertex() {
        let g = ClusteredGraph::builder()
            .cluster("C", &["a", "b"])
            .point("x")
            .edge_at("b", Side::Left, "x")
            .build();
        let (_, w) = build_wheel(&g, 0, &[0, 1]);
        assert_eq!(w.attachment[&0], cycle_position(2, 1, Side::Left));
        assert_eq!(w.attachment[&0], 6);
    }

    #[test]
    fn reduction_of_one_small_cluster() {
        let g = ClusteredGraph::builder()
            .cluster("C", &["a", "b"])
            .point("x")
            .point("y")
            .edge("a", "b")
            .edge_at("a", Side::Top, "x")
            .edge_at("b", Side::Right, "y")
            .build();
        let r = wheel_reduction(&g, &PermutationAssignment::identity(&g));
        assert_eq!((r.graph.n(), r.graph.m()), (2 + 9, 16 + 2));
        assert_eq!(r.image.len(), 2);
        let sources = r.source.iter().filter(|s| s.is_some()).count();
        assert_eq!(sources, 2);
    }

    #[test]
    fn reduction_without_clusters_is_a_copy() {
        let g = ClusteredGraph::builder()
            .point("a")
            .point("b")
            .point("c")
            .edge("a", "b")
            .edge("b", "c")
            .build();
        let r = wheel_reduction(&g, &PermutationAssignment::identity(&g));
        assert_eq!((r.graph.n(), r.graph.m()), (3, 2));
    }

    #[test]
    fn labels_combine() {
        let l = label_positions(4, [0, 1, 1], [1, 2]);
        assert_eq!(l, vec![Label::Int, Label::IntExt, Label::Ext, Label::Void]);
    }

    #[test]
    fn sequence_examples() {
        use Label::*;
        let l = [Int, Void, Ext, Void];
        assert_eq!(complete_sequences(&l, SeqKind::Internal), CompleteSequence::Arcs(vec![Arc::point(4, 0)]));
        assert_eq!(complete_sequences(&l, SeqKind::External), CompleteSequence::Arcs(vec![Arc::point(4, 2)]));
        let l = [Int, Ext, Int, Ext];
        assert!(!complete_sequences(&l, SeqKind::Internal).exists());
        assert!(!complete_sequences(&l, SeqKind::External).exists());
        let l = [IntExt, Void, IntExt, Void, Void];
        let both = CompleteSequence::Arcs(vec![Arc::between(5, 0, 2), Arc::between(5, 2, 0)]);
        assert_eq!(complete_sequences(&l, SeqKind::Internal), both);
        assert_eq!(complete_sequences(&l, SeqKind::External), both);
        let l = [IntExt, IntExt, IntExt, Void];
        assert!(!complete_sequences(&l, SeqKind::Internal).exists());
        assert_eq!(complete_sequences(&[Void; 4], SeqKind::External), CompleteSequence::Empty);
    }

    #[test]
    fn sequences_match_brute_force() {
        for n in 1..=7 {
            for l in all_labelings(n) {
                for kind in [SeqKind::Internal, SeqKind::External] {
                    let mut fast = complete_sequences(&l, kind);
                    let mut slow = brute(&l, kind);
                    for s in [&mut fast, &mut slow] {
                        if let CompleteSequence::Arcs(a) = s {
                            a.sort();
                        }
                    }
                    assert_eq!(fast, slow, "{l:?} {kind:?}");
                }
            }
        }
    }

    #[test]
    fn arc_operations_match_sets() {
        for n in 1..=16 {
            for s1 in 0..n {
                for l1 in 1..=n {
                    let a = Arc::new(n, s1, l1);
                    let sa: Vec<usize> = a.positions().collect();
                    assert_eq!(a.end(), *sa.last().unwrap());
                    for s2 in 0..n {
                        for l2 in 1..=n {
                            let b = Arc::new(n, s2, l2);
                            let sb: Vec<usize> = b.positions().collect();
                            let common: Vec<usize> = sa.iter().copied().filter(|p| sb.contains(p)).collect();
                            let got: Vec<usize> = a.intersect(&b).iter().flat_map(|x| x.positions().collect::<Vec<_>>()).collect();
                            assert_eq!(got, common);
                            assert_eq!(a.is_disjoint(&b), common.is_empty());
                            let comp = l1 + l2 == n && common.is_empty() && b.start == (a.end() + 1) % n;
                            assert_eq!(a.complements(&b), comp);
                        }
                    }
                }
            }
        }
    }
}
