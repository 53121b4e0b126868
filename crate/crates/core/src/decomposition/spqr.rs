//! SPQR trees of biconnected graphs.
//!
//! Construction splits the block into split components by repeated series
//! and parallel reductions, falling back to an explicit separation-pair search
//! on reduced pieces, then merges adjacent polygons and adjacent bonds. The
//! result is the unique decomposition into triconnected components.

use std::collections::{HashMap, VecDeque};

use crate::embedding::Embedding;
use crate::graph::Graph;

use super::planarity::planar_embed;
use super::DecompositionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    S,
    P,
    Q,
    R,
}

/// What a skeleton edge stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkeletonLink {
    /// A real graph edge.
    Real(usize),
    /// A virtual edge; `node` is the neighbouring tree node and `twin` the
    /// index of the twin edge in that node's skeleton.
    Virtual { node: usize, twin: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkeletonEdge {
    pub ends: [usize; 2],
    pub link: SkeletonLink,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpqrNode {
    pub kind: NodeKind,
    /// Skeleton edges over graph vertex ids. A Q-node's skeleton is its edge.
    pub skeleton: Vec<SkeletonEdge>,
    pub parent: Option<usize>,
    /// Index into `skeleton` of the edge standing for the rest of the graph.
    pub parent_edge: Option<usize>,
    pub children: Vec<usize>,
    /// Child node of each skeleton edge (Q-nodes for real edges); `None` for
    /// the parent edge.
    pub child_of_edge: Vec<Option<usize>>,
    pub poles: [usize; 2],
}

/// Rooted SPQR tree. The root is the Q-node of the chosen root edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpqrTree {
    pub nodes: Vec<SpqrNode>,
    pub root: usize,
}

#[derive(Clone, Copy, Debug)]
enum Label {
    Real(usize),
    Virtual(usize),
}

#[derive(Clone, Copy, Debug)]
struct Slot {
    ends: [usize; 2],
    label: Label,
}

/// Unrooted triconnected components: component kinds and the slots they own.
struct Split {
    slots: Vec<Slot>,
    pair_slots: Vec<[usize; 2]>,
    comps: Vec<(NodeKind, Vec<usize>)>,
}

impl Split {
    fn new_pair(&mut self, a: usize, b: usize) -> (usize, usize) {
        let p = self.pair_slots.len();
        let x = self.slots.len();
        self.slots.push(Slot { ends: [a, b], label: Label::Virtual(p) });
        self.slots.push(Slot { ends: [a, b], label: Label::Virtual(p) });
        self.pair_slots.push([x, x + 1]);
        (x, x + 1)
    }

    fn run(g: &Graph, edges: &[usize]) -> Split {
        let mut split = Split {
            slots: edges
                .iter()
                .map(|&e| Slot { ends: g.ends(e), label: Label::Real(e) })
                .collect(),
            pair_slots: Vec::new(),
            comps: Vec::new(),
        };
        let mut work = vec![(0..edges.len()).collect::<Vec<_>>()];
        while let Some(piece) = work.pop() {
            split.reduce_piece(piece, &mut work);
        }
        split.merge();
        split
    }

    fn reduce_piece(&mut self, piece: Vec<usize>, work: &mut Vec<Vec<usize>>) {
        let mut alive: HashMap<usize, bool> = piece.iter().map(|&s| (s, true)).collect();
        let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
        let mut deg: HashMap<usize, usize> = HashMap::new();
        let mut pairs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let key = |[a, b]: [usize; 2]| (a.min(b), a.max(b));
        for &s in &piece {
            let [a, b] = self.slots[s].ends;
            adj.entry(a).or_default().push(s);
            adj.entry(b).or_default().push(s);
            *deg.entry(a).or_default() += 1;
            *deg.entry(b).or_default() += 1;
            pairs.entry(key(self.slots[s].ends)).or_default().push(s);
        }
        let mut n_alive = deg.len();
        let mut m_alive = piece.len();
        let mut par_q: VecDeque<(usize, usize)> =
            pairs.iter().filter(|(_, v)| v.len() >= 2).map(|(&k, _)| k).collect();
        let mut ser_q: VecDeque<usize> =
            deg.iter().filter(|(_, &d)| d == 2).map(|(&v, _)| v).collect();
        // Deterministic processing order.
        par_q.make_contiguous().sort_unstable();
        ser_q.make_contiguous().sort_unstable();
        let alive_slots = |alive: &HashMap<usize, bool>, list: &[usize]| -> Vec<usize> {
            list.iter().copied().filter(|s| alive[s]).collect()
        };
        loop {
            if n_alive == 2 || m_alive == n_alive {
                let kind = if n_alive == 2 { NodeKind::P } else { NodeKind::S };
                let mut slots: Vec<usize> =
                    alive.iter().filter(|(_, &a)| a).map(|(&s, _)| s).collect();
                slots.sort_unstable();
                self.comps.push((kind, slots));
                return;
            }
            if let Some((u, v)) = par_q.pop_front() {
                let list = alive_slots(&alive, &pairs[&(u, v)]);
                if list.len() < 2 {
                    continue;
                }
                let (x, y) = self.new_pair(u, v);
                let mut comp = list.clone();
                comp.push(x);
                for s in &list {
                    alive.insert(*s, false);
                }
                alive.insert(y, true);
                adj.get_mut(&u).unwrap().push(y);
                adj.get_mut(&v).unwrap().push(y);
                pairs.insert((u, v), vec![y]);
                m_alive = m_alive + 1 - list.len();
                for w in [u, v] {
                    let d = deg.get_mut(&w).unwrap();
                    *d = *d + 1 - list.len();
                    if *d == 2 {
                        ser_q.push_back(w);
                    }
                }
                self.comps.push((NodeKind::P, comp));
                continue;
            }
            if let Some(v) = ser_q.pop_front() {
                if deg.get(&v) != Some(&2) {
                    continue;
                }
                let list = alive_slots(&alive, &adj[&v]);
                debug_assert_eq!(list.len(), 2);
                let (e1, e2) = (list[0], list[1]);
                let u = other(self.slots[e1].ends, v);
                let w = other(self.slots[e2].ends, v);
                if u == w {
                    par_q.push_back((u.min(v), u.max(v)));
                    ser_q.push_back(v);
                    continue;
                }
                let (x, y) = self.new_pair(u, w);
                alive.insert(e1, false);
                alive.insert(e2, false);
                alive.insert(y, true);
                deg.insert(v, 0);
                n_alive -= 1;
                m_alive -= 1;
                adj.get_mut(&u).unwrap().push(y);
                adj.get_mut(&w).unwrap().push(y);
                let entry = pairs.entry((u.min(w), u.max(w))).or_default();
                entry.push(y);
                if entry.iter().filter(|s| alive[*s]).count() >= 2 {
                    par_q.push_back((u.min(w), u.max(w)));
                }
                self.comps.push((NodeKind::S, vec![e1, e2, x]));
                continue;
            }
            break;
        }
        // Reduced piece: simple, minimum degree three.
        let mut verts: Vec<usize> = deg.iter().filter(|(_, &d)| d > 0).map(|(&v, _)| v).collect();
        verts.sort_unstable();
        let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut slots: Vec<usize> = alive.iter().filter(|(_, &a)| a).map(|(&s, _)| s).collect();
        slots.sort_unstable();
        let mut h = Graph::new(verts.len());
        for &s in &slots {
            let [a, b] = self.slots[s].ends;
            h.add_edge(local[&a], local[&b]);
        }
        match find_separation_pair(&h) {
            None => self.comps.push((NodeKind::R, slots)),
            Some((a, b)) => {
                let class = separation_class(&h, a, b);
                let (x, y) = self.new_pair(verts[a], verts[b]);
                let mut one = vec![x];
                let mut two = vec![y];
                for (i, &s) in slots.iter().enumerate() {
                    let [p, q] = h.ends(i);
                    if class[p] || class[q] {
                        one.push(s);
                    } else {
                        two.push(s);
                    }
                }
                work.push(one);
                work.push(two);
            }
        }
    }

    /// Merges adjacent polygons and adjacent bonds.
    fn merge(&mut self) {
        let mut owner = vec![usize::MAX; self.slots.len()];
        for (c, (_, slots)) in self.comps.iter().enumerate() {
            for &s in slots {
                owner[s] = c;
            }
        }
        let mut uf: Vec<usize> = (0..self.comps.len()).collect();
        fn find(uf: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while uf[r] != r {
                r = uf[r];
            }
            let mut y = x;
            while uf[y] != r {
                let nx = uf[y];
                uf[y] = r;
                y = nx;
            }
            r
        }
        let mut dead = vec![false; self.slots.len()];
        for p in 0..self.pair_slots.len() {
            let [x, y] = self.pair_slots[p];
            let (cx, cy) = (find(&mut uf, owner[x]), find(&mut uf, owner[y]));
            let (kx, ky) = (self.comps[cx].0, self.comps[cy].0);
            if kx == ky && matches!(kx, NodeKind::S | NodeKind::P) && cx != cy {
                uf[cy] = cx;
                dead[x] = true;
                dead[y] = true;
            }
        }
        let mut merged: HashMap<usize, (NodeKind, Vec<usize>)> = HashMap::new();
        for c in 0..self.comps.len() {
            let r = find(&mut uf, c);
            let kind = self.comps[r].0;
            let entry = merged.entry(r).or_insert_with(|| (kind, Vec::new()));
            entry.1.extend(self.comps[c].1.iter().copied().filter(|&s| !dead[s]));
        }
        let mut roots: Vec<usize> = merged.keys().copied().collect();
        roots.sort_unstable();
        self.comps = roots
            .into_iter()
            .map(|r| {
                let (k, mut s) = merged.remove(&r).unwrap();
                s.sort_unstable();
                (k, s)
            })
            .collect();
    }
}

fn other([a, b]: [usize; 2], v: usize) -> usize {
    if a == v {
        b
    } else {
        a
    }
}

/// Finds `{a, b}` whose removal disconnects `h`, if any. `h` must be
/// biconnected.
pub(crate) fn find_separation_pair(h: &Graph) -> Option<(usize, usize)> {
    let n = h.n();
    if n < 4 {
        return None;
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    for a in 0..n {
        disc.iter_mut().for_each(|d| *d = usize::MAX);
        let root = if a == 0 { 1 } else { 0 };
        if let Some(b) = articulation_point(h, a, root, &mut disc, &mut low) {
            return Some((a.min(b), a.max(b)));
        }
    }
    None
}

/// An articulation point of `h - skip`, searching from `root`.
fn articulation_point(
    h: &Graph,
    skip: usize,
    root: usize,
    disc: &mut [usize],
    low: &mut [usize],
) -> Option<usize> {
    let mut time = 0;
    disc[root] = 0;
    low[root] = 0;
    time += 1;
    let mut root_children = 0;
    let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    while let Some(&mut (v, pe, ref mut i)) = frames.last_mut() {
        if *i < h.degree(v) {
            let e = h.incident(v)[*i];
            *i += 1;
            let w = h.other(e, v);
            if w == skip || e == pe {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == root {
                    root_children += 1;
                }
                frames.push((w, e, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            frames.pop();
            if let Some(&(u, _, _)) = frames.last() {
                low[u] = low[u].min(low[v]);
                if u != root && low[v] >= disc[u] {
                    return Some(u);
                }
            }
        }
    }
    if root_children >= 2 {
        return Some(root);
    }
    None
}

/// Marks the vertices of one connected component of `h - {a, b}`.
fn separation_class(h: &Graph, a: usize, b: usize) -> Vec<bool> {
    let n = h.n();
    let mut comp = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if s == a || s == b || comp[s] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let mut size = 0;
        let mut stack = vec![s];
        comp[s] = id;
        while let Some(v) = stack.pop() {
            size += 1;
            for w in h.neighbors(v) {
                if w != a && w != b && comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
    }
    debug_assert!(sizes.len() >= 2);
    let pick = (0..sizes.len()).min_by_key(|&i| (sizes[i], i)).unwrap();
    comp.iter().map(|&c| c == pick).collect()
}

impl SpqrTree {
    /// SPQR tree of the biconnected graph formed by `edges` of `g`, rooted at
    /// the Q-node of `root_edge`.
    pub fn build(g: &Graph, edges: &[usize], root_edge: usize) -> Result<SpqrTree, DecompositionError> {
        if !edges.contains(&root_edge) {
            return Err(DecompositionError::RootEdgeMissing);
        }
        if edges.len() == 1 {
            let e = edges[0];
            let node = SpqrNode {
                kind: NodeKind::Q,
                skeleton: vec![SkeletonEdge { ends: g.ends(e), link: SkeletonLink::Real(e) }],
                parent: None,
                parent_edge: None,
                children: Vec::new(),
                child_of_edge: vec![None],
                poles: g.ends(e),
            };
            return Ok(SpqrTree { nodes: vec![node], root: 0 });
        }
        let (sub, _, _) = g.edge_subgraph(edges);
        if !is_biconnected(&sub) {
            return Err(DecompositionError::NotBiconnected);
        }
        let split = Split::run(g, edges);
        Ok(Self::assemble(g, &split, root_edge))
    }

    fn assemble(g: &Graph, split: &Split, root_edge: usize) -> SpqrTree {
        let comps = &split.comps;
        let mut owner = vec![(usize::MAX, usize::MAX); split.slots.len()];
        for (c, (_, slots)) in comps.iter().enumerate() {
            for (i, &s) in slots.iter().enumerate() {
                owner[s] = (c, i);
            }
        }
        let twin_of = |s: usize| -> usize {
            match split.slots[s].label {
                Label::Virtual(p) => {
                    let [x, y] = split.pair_slots[p];
                    if x == s {
                        y
                    } else {
                        x
                    }
                }
                Label::Real(_) => unreachable!(),
            }
        };
        // Tree nodes: components first, then Q-nodes created on demand.
        let mut nodes: Vec<SpqrNode> = comps
            .iter()
            .map(|(kind, slots)| SpqrNode {
                kind: *kind,
                skeleton: slots
                    .iter()
                    .map(|&s| {
                        let slot = split.slots[s];
                        let link = match slot.label {
                            Label::Real(e) => SkeletonLink::Real(e),
                            Label::Virtual(_) => {
                                let (c, i) = owner[twin_of(s)];
                                SkeletonLink::Virtual { node: c, twin: i }
                            }
                        };
                        SkeletonEdge { ends: slot.ends, link }
                    })
                    .collect(),
                parent: None,
                parent_edge: None,
                children: Vec::new(),
                child_of_edge: vec![None; slots.len()],
                poles: [0, 0],
            })
            .collect();
        let root = nodes.len();
        nodes.push(SpqrNode {
            kind: NodeKind::Q,
            skeleton: vec![SkeletonEdge { ends: g.ends(root_edge), link: SkeletonLink::Real(root_edge) }],
            parent: None,
            parent_edge: None,
            children: Vec::new(),
            child_of_edge: vec![None],
            poles: g.ends(root_edge),
        });
        let (top, top_idx) = (0..comps.len())
            .find_map(|c| {
                nodes[c]
                    .skeleton
                    .iter()
                    .position(|se| se.link == SkeletonLink::Real(root_edge))
                    .map(|i| (c, i))
            })
            .expect("root edge in some component");
        nodes[root].children.push(top);
        nodes[root].child_of_edge[0] = Some(top);
        let mut queue = VecDeque::new();
        nodes[top].parent = Some(root);
        nodes[top].parent_edge = Some(top_idx);
        nodes[top].poles = g.ends(root_edge);
        queue.push_back(top);
        while let Some(c) = queue.pop_front() {
            let pe = nodes[c].parent_edge;
            for i in 0..nodes[c].skeleton.len() {
                if Some(i) == pe {
                    continue;
                }
                let se = nodes[c].skeleton[i];
                let child = match se.link {
                    SkeletonLink::Real(e) => {
                        let q = nodes.len();
                        nodes.push(SpqrNode {
                            kind: NodeKind::Q,
                            skeleton: vec![SkeletonEdge { ends: se.ends, link: SkeletonLink::Real(e) }],
                            parent: Some(c),
                            parent_edge: None,
                            children: Vec::new(),
                            child_of_edge: vec![None],
                            poles: se.ends,
                        });
                        q
                    }
                    SkeletonLink::Virtual { node, twin } => {
                        nodes[node].parent = Some(c);
                        nodes[node].parent_edge = Some(twin);
                        nodes[node].poles = se.ends;
                        queue.push_back(node);
                        node
                    }
                };
                nodes[c].children.push(child);
                nodes[c].child_of_edge[i] = Some(child);
            }
        }
        SpqrTree { nodes, root }
    }

    pub fn count(&self, kind: NodeKind) -> usize {
        self.nodes.iter().filter(|n| n.kind == kind).count()
    }

    /// Distinct vertices of a node's skeleton, sorted.
    pub fn skeleton_vertices(&self, node: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = self.nodes[node].skeleton.iter().flat_map(|e| e.ends).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Real edges of the pertinent graph of `node`.
    pub fn pertinent_edges(&self, node: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(x) = stack.pop() {
            let nd = &self.nodes[x];
            if nd.kind == NodeKind::Q {
                if let SkeletonLink::Real(e) = nd.skeleton[0].link {
                    if x != self.root || node == self.root {
                        out.push(e);
                    }
                }
            }
            stack.extend(nd.children.iter().copied());
        }
        out.sort_unstable();
        out
    }

    /// Skeleton of `node` as a standalone multigraph over local vertex ids.
    /// Returns the graph and the local-to-global vertex map; skeleton edge `i`
    /// becomes graph edge `i`.
    pub fn skeleton_graph(&self, node: usize) -> (Graph, Vec<usize>) {
        let verts = self.skeleton_vertices(node);
        let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut h = Graph::new(verts.len());
        for se in &self.nodes[node].skeleton {
            h.add_edge(local[&se.ends[0]], local[&se.ends[1]]);
        }
        (h, verts)
    }

    /// Combines per-node skeleton rotations into a rotation system of the
    /// block. `skeleton_rotation[node]` maps each skeleton vertex (global id)
    /// to a clockwise order of skeleton edge indices; only S, P and R nodes are
    /// consulted. The returned map sends each block vertex to a clockwise
    /// order of real edge ids.
    pub fn compose_rotations(
        &self,
        skeleton_rotation: &[HashMap<usize, Vec<usize>>],
    ) -> HashMap<usize, Vec<usize>> {
        let mut out = HashMap::new();
        // The topmost node containing each vertex.
        let mut top: HashMap<usize, usize> = HashMap::new();
        let mut queue = VecDeque::from([self.root]);
        while let Some(x) = queue.pop_front() {
            if self.nodes[x].kind != NodeKind::Q {
                for v in self.skeleton_vertices(x) {
                    top.entry(v).or_insert(x);
                }
            }
            queue.extend(self.nodes[x].children.iter().copied());
        }
        let mut tops: Vec<(usize, usize)> = top.into_iter().collect();
        tops.sort_unstable();
        for (v, x) in tops {
            let mut rot = Vec::new();
            self.expand(x, v, None, skeleton_rotation, &mut rot);
            out.insert(v, rot);
        }
        out
    }

    fn expand(
        &self,
        x: usize,
        v: usize,
        skip: Option<usize>,
        skeleton_rotation: &[HashMap<usize, Vec<usize>>],
        out: &mut Vec<usize>,
    ) {
        let nd = &self.nodes[x];
        let rot = &skeleton_rotation[x][&v];
        let start = match skip {
            Some(s) => rot.iter().position(|&i| i == s).expect("twin edge at vertex") + 1,
            None => 0,
        };
        for k in 0..rot.len() {
            let i = rot[(start + k) % rot.len()];
            if Some(i) == skip {
                continue;
            }
            match nd.skeleton[i].link {
                SkeletonLink::Real(e) => out.push(e),
                SkeletonLink::Virtual { node, twin } => {
                    self.expand(node, v, Some(twin), skeleton_rotation, out)
                }
            }
        }
    }

    /// Planar rotations for every S, P and R skeleton: R skeletons via
    /// `planar_embed` (mirrored where `flip` says so), P skeletons with
    /// opposite orders at the two poles, S skeletons trivially.
    pub fn skeleton_rotations(&self, flip: impl Fn(usize) -> bool) -> Option<Vec<HashMap<usize, Vec<usize>>>> {
        let mut res = vec![HashMap::new(); self.nodes.len()];
        for (x, nd) in self.nodes.iter().enumerate() {
            match nd.kind {
                NodeKind::Q => {}
                NodeKind::S | NodeKind::P => {
                    let mut map: HashMap<usize, Vec<usize>> = HashMap::new();
                    for (i, se) in nd.skeleton.iter().enumerate() {
                        for v in se.ends {
                            map.entry(v).or_default().push(i);
                        }
                    }
                    if nd.kind == NodeKind::P {
                        let [a, b] = nd.skeleton[0].ends;
                        let hi = a.max(b);
                        map.get_mut(&hi).unwrap().reverse();
                    }
                    res[x] = map;
                }
                NodeKind::R => {
                    let (h, verts) = self.skeleton_graph(x);
                    let mut emb = planar_embed(&h)?;
                    if flip(x) {
                        emb = emb.mirrored();
                    }
                    res[x] = (0..h.n()).map(|i| (verts[i], emb.rotation(i).to_vec())).collect();
                }
            }
        }
        Some(res)
    }
}

/// Embedding of an R-node skeleton together with its local vertex map.
pub fn skeleton_embedding(tree: &SpqrTree, node: usize) -> Option<(Graph, Vec<usize>, Embedding)> {
    let (h, verts) = tree.skeleton_graph(node);
    let emb = planar_embed(&h)?;
    Some((h, verts, emb))
}

pub(crate) fn is_biconnected(g: &Graph) -> bool {
    if g.n() <= 2 {
        return g.is_connected();
    }
    g.is_connected() && super::bctree::biconnected_components(g).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(n: usize, edges: &[[usize; 2]]) -> SpqrTree {
        let g = Graph::from_edges(n, edges);
        let all: Vec<usize> = (0..g.m()).collect();
        SpqrTree::build(&g, &all, 0).unwrap()
    }

    #[test]
    fn k4_is_one_r_node() {
        let t = build(4, &[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
        assert_eq!(t.count(NodeKind::R), 1);
        assert_eq!(t.count(NodeKind::S) + t.count(NodeKind::P), 0);
        assert_eq!(t.count(NodeKind::Q), 6);
    }

    #[test]
    fn wheel_on_six_vertices_is_one_r_node() {
        let mut e = vec![];
        for i in 0..5 {
            e.push([5, i]);
            e.push([i, (i + 1) % 5]);
        }
        let t = build(6, &e);
        assert_eq!(t.count(NodeKind::R), 1);
        assert_eq!(t.nodes.len(), 1 + 10);
    }

    #[test]
    fn cycle_is_one_s_node() {
        let t = build(5, &[[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]);
        assert_eq!(t.count(NodeKind::S), 1);
        assert_eq!(t.count(NodeKind::R), 0);
        assert_eq!(t.nodes.len(), 1 + 5);
    }

    #[test]
    fn theta_graph_is_p_over_two_s() {
        // Paths 0-2-1, 0-3-1, 0-4-1.
        let t = build(5, &[[0, 2], [2, 1], [0, 3], [3, 1], [0, 4], [4, 1]]);
        assert_eq!(t.count(NodeKind::P), 1);
        assert_eq!(t.count(NodeKind::S), 3);
    }

    #[test]
    fn two_k4_glued_on_an_edge() {
        // K4 on 0..3 and K4 on 0,1,4,5 sharing edge 0-1.
        let t = build(
            6,
            &[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3], [0, 4], [0, 5], [1, 4], [1, 5], [4, 5]],
        );
        assert_eq!(t.count(NodeKind::R), 2);
        assert_eq!(t.count(NodeKind::P), 1);
    }
}
