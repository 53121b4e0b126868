//! Fixed-sides testing for light graphs whose frame is series-parallel or a
//! partial 2-tree.
//!
//! Each non-trivial cluster is seen as a point of the frame whose incident
//! edges must appear clockwise in the cycle order of the positions they take
//! on its wheel. A bottom-up pass over the SPQ tree of every block keeps, per
//! node, the pairs of pole states that some embedding of the pertinent graph
//! realizes. A pole state is a permutation of the pole cluster plus the
//! clockwise span of wheel positions covered by the node's edges at the pole,
//! together with its winding (a full turn is possible). Blocks meet at cut
//! vertices through the block-cut-vertex tree.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::decomposition::{biconnected_components, spq_decompose, NodeKind, SpqTree};
use crate::graph::Graph;
use crate::model::{ClusteredGraph, ModelError, PermutationAssignment};
use crate::oracle::lexicographic_permutations;
use crate::wheel::{cycle_position, dist};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpError {
    #[error("frame is not a biconnected series-parallel graph")]
    FrameNotSeriesParallel,
    #[error("frame is not a partial 2-tree")]
    FrameNotPartial2Tree,
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Outcome of a series-parallel run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpVerdict {
    /// An accepting permutation assignment, if any.
    pub pi: Option<PermutationAssignment>,
    /// Largest number of distinct permutation pairs kept at one node.
    pub max_pairs: usize,
}

impl SpVerdict {
    pub fn planar(&self) -> bool {
        self.pi.is_some()
    }
}

/// Clockwise run of wheel positions from `start`, `wind` steps long. A
/// winding equal to the cycle length is a full turn back to `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    pub start: u16,
    pub wind: u16,
}

impl Span {
    pub fn end(&self, n: usize) -> usize {
        (self.start as usize + self.wind as usize) % n
    }
}

/// Whether two spans can be the two halves of one clockwise rotation.
pub fn complementary(n: usize, a: Span, b: Span) -> bool {
    let total = a.wind as usize + dist(n, a.end(n), b.start as usize) + b.wind as usize + dist(n, b.end(n), a.start as usize);
    total == n || total == 0
}

/// Permutation index and span at a non-trivial pole.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pole {
    pub perm: u16,
    pub span: Span,
}

#[derive(Clone, Debug)]
enum Back {
    Q,
    S(usize, usize),
    P(Vec<usize>),
}

#[derive(Clone, Debug)]
struct Entry {
    s: Option<Pole>,
    t: Option<Pole>,
    back: Back,
}

/// Tests a light graph with fixed sides whose frame is biconnected and
/// series-parallel (a single edge counts).
pub fn test_series_parallel(g: &ClusteredGraph) -> Result<SpVerdict, SpError> {
    let ctx = Context::new(g)?;
    let blocks = biconnected_components(&ctx.frame);
    let covered = blocks.len() == 1 && ctx.frame.is_connected();
    if !covered {
        return Err(SpError::FrameNotSeriesParallel);
    }
    ctx.run(&blocks).map_err(|_| SpError::FrameNotSeriesParallel)
}

/// Tests a light graph with fixed sides whose frame is a partial 2-tree.
/// Components are independent.
pub fn test_partial_2_tree(g: &ClusteredGraph) -> Result<SpVerdict, SpError> {
    let ctx = Context::new(g)?;
    let blocks = biconnected_components(&ctx.frame);
    ctx.run(&blocks)
}

struct Context<'a> {
    g: &'a ClusteredGraph,
    frame: Graph,
    /// Permutations of each non-trivial cluster, lexicographic.
    perms: Vec<Vec<Vec<usize>>>,
    /// Position of each frame edge end under each permutation of its cluster.
    pos: Vec<[Vec<u16>; 2]>,
}

impl<'a> Context<'a> {
    fn new(g: &'a ClusteredGraph) -> Result<Self, SpError> {
        if let Some(v) = g.validate().into_iter().next() {
            return Err(ModelError::Invalid(v).into());
        }
        if g.sides.is_none() {
            return Err(ModelError::NoSides.into());
        }
        let fg = g.frame()?;
        let perms: Vec<Vec<Vec<usize>>> = (0..g.clusters.len())
            .map(|c| if g.is_trivial(c) { Vec::new() } else { lexicographic_permutations(&g.sorted_cluster(c)) })
            .collect();
        let mut pos = Vec::with_capacity(fg.graph.m());
        for (fe, &e) in fg.source_edge.iter().enumerate() {
            let ends = fg.graph.ends(fe);
            let at = |c: usize| -> Vec<u16> {
                if g.is_trivial(c) {
                    return Vec::new();
                }
                let v = g.endpoint_in(e, c).unwrap();
                let side = g.side(e, c).unwrap();
                perms[c]
                    .iter()
                    .map(|p| cycle_position(p.len(), p.iter().position(|&x| x == v).unwrap(), side) as u16)
                    .collect()
            };
            pos.push([at(ends[0]), at(ends[1])]);
        }
        Ok(Context { g, frame: fg.graph, perms, pos })
    }

    fn cycle_len(&self, c: usize) -> usize {
        4 * self.g.cluster_size(c)
    }

    fn trivial(&self, c: usize) -> bool {
        self.perms[c].is_empty()
    }

    fn position(&self, fe: usize, c: usize, perm: usize) -> usize {
        let i = if self.frame.ends(fe)[0] == c { 0 } else { 1 };
        self.pos[fe][i][perm] as usize
    }

    /// Permutation indices of `c` to try: `[None]` for a trivial cluster.
    fn choices(&self, c: usize, allowed: &[Vec<bool>]) -> Vec<Option<u16>> {
        if self.trivial(c) {
            return vec![None];
        }
        (0..self.perms[c].len()).filter(|&p| allowed[c].is_empty() || allowed[c][p]).map(|p| Some(p as u16)).collect()
    }

    fn run(&self, blocks: &[Vec<usize>]) -> Result<SpVerdict, SpError> {
        let f = &self.frame;
        let mut blocks_at: Vec<Vec<usize>> = vec![Vec::new(); f.n()];
        let mut block_vertices = Vec::with_capacity(blocks.len());
        for (b, es) in blocks.iter().enumerate() {
            let mut vs: Vec<usize> = es.iter().flat_map(|&e| f.ends(e)).collect();
            vs.sort_unstable();
            vs.dedup();
            for &v in &vs {
                blocks_at[v].push(b);
            }
            block_vertices.push(vs);
        }
        // Root each component of the block-cut-vertex tree at its first block.
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; blocks.len()];
        let mut seen = vec![false; blocks.len()];
        let mut order = Vec::new();
        for r in 0..blocks.len() {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            let mut queue = std::collections::VecDeque::from([r]);
            while let Some(b) = queue.pop_front() {
                order.push(b);
                for &v in &block_vertices[b] {
                    for &b2 in &blocks_at[v] {
                        if !seen[b2] {
                            seen[b2] = true;
                            parent[b2] = Some((b, v));
                            queue.push_back(b2);
                        }
                    }
                }
            }
        }
        let mut children_at: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for b in 0..blocks.len() {
            if let Some((pb, v)) = parent[b] {
                children_at.entry((pb, v)).or_default().push(b);
            }
        }
        let mut solved: Vec<Option<BlockSolution>> = vec![None; blocks.len()];
        let mut max_pairs = 0;
        for &b in order.iter().rev() {
            let mut allowed: Vec<Vec<bool>> = vec![Vec::new(); f.n()];
            for &v in &block_vertices[b] {
                let Some(kids) = children_at.get(&(b, v)) else { continue };
                if self.trivial(v) {
                    if kids.iter().any(|&k| solved[k].as_ref().unwrap().roots.is_empty()) {
                        return Ok(SpVerdict { pi: None, max_pairs });
                    }
                    continue;
                }
                let mut sets = vec![blocks[b].clone()];
                sets.extend(kids.iter().map(|&k| blocks[k].clone()));
                allowed[v] = (0..self.perms[v].len())
                    .map(|p| {
                        kids.iter().all(|&k| solved[k].as_ref().unwrap().admits(v, p as u16))
                            && self.nested_at(v, p, &sets)
                    })
                    .collect();
            }
            let root_at = parent[b].map(|(_, v)| v);
            let sol = self.solve_block(&blocks[b], root_at, &allowed)?;
            max_pairs = max_pairs.max(sol.max_pairs);
            if sol.roots.is_empty() {
                return Ok(SpVerdict { pi: None, max_pairs });
            }
            solved[b] = Some(sol);
        }
        // Top-down witness.
        let mut chosen: Vec<Option<usize>> = vec![None; f.n()];
        for &b in &order {
            let sol = solved[b].as_ref().unwrap();
            let root = match parent[b] {
                None => &sol.roots[0],
                Some((_, v)) => sol
                    .roots
                    .iter()
                    .find(|r| self.trivial(v) || r.perm_at(v) == chosen[v].map(|p| p as u16))
                    .expect("parent kept an admitted permutation"),
            };
            sol.assign(root, &mut chosen);
        }
        let pi = PermutationAssignment(
            (0..f.n())
                .map(|c| match chosen[c] {
                    Some(p) if !self.trivial(c) => self.perms[c][p].clone(),
                    _ => self.g.sorted_cluster(c),
                })
                .collect(),
        );
        Ok(SpVerdict { pi: Some(pi), max_pairs })
    }

    /// Whether the position sets of the given edge sets at `v` pairwise nest:
    /// each set lies within a closed gap between cyclically consecutive
    /// positions of the other.
    fn nested_at(&self, v: usize, perm: usize, sets: &[Vec<usize>]) -> bool {
        let n = self.cycle_len(v);
        let ps: Vec<Vec<usize>> = sets
            .iter()
            .map(|es| {
                let mut p: Vec<usize> = es
                    .iter()
                    .filter(|&&e| self.frame.ends(e).contains(&v))
                    .map(|&e| self.position(e, v, perm))
                    .collect();
                p.sort_unstable();
                p.dedup();
                p
            })
            .collect();
        (0..ps.len()).all(|i| (i + 1..ps.len()).all(|j| within_gap(n, &ps[i], &ps[j])))
    }

    fn solve_block(&self, edges: &[usize], root_at: Option<usize>, allowed: &[Vec<bool>]) -> Result<BlockSolution, SpError> {
        let root_edge = match root_at {
            Some(v) => *edges.iter().filter(|&&e| self.frame.ends(e).contains(&v)).min().unwrap(),
            None => *edges.iter().min().unwrap(),
        };
        let tree = spq_decompose(&self.frame, edges, root_edge).map_err(|_| SpError::FrameNotPartial2Tree)?;
        BlockDp::new(self, tree, edges, allowed).solve()
    }
}

/// Whether `a` lies in a closed gap of `b` (or the other way round); both are
/// sorted distinct positions on a cycle of length `n`.
fn within_gap(n: usize, a: &[usize], b: &[usize]) -> bool {
    fn inside(n: usize, a: &[usize], b: &[usize]) -> bool {
        if b.len() <= 1 || a.is_empty() {
            return true;
        }
        (0..b.len()).any(|i| {
            let (lo, hi) = (b[i], b[(i + 1) % b.len()]);
            let gap = dist(n, lo, hi);
            a.iter().all(|&p| dist(n, lo, p) <= gap)
        })
    }
    inside(n, a, b) || inside(n, b, a)
}

#[derive(Clone, Debug)]
struct RootChoice {
    poles: [usize; 2],
    states: [Option<Pole>; 2],
    entry: Option<usize>,
}

impl RootChoice {
    fn perm_at(&self, v: usize) -> Option<u16> {
        let i = if self.poles[0] == v { 0 } else { 1 };
        self.states[i].map(|p| p.perm)
    }
}

#[derive(Clone, Debug)]
struct BlockSolution {
    tree: SpqTree,
    tables: Vec<Vec<Entry>>,
    roots: Vec<RootChoice>,
    max_pairs: usize,
}

impl BlockSolution {
    fn admits(&self, v: usize, perm: u16) -> bool {
        self.roots.iter().any(|r| r.perm_at(v) == Some(perm))
    }

    fn assign(&self, root: &RootChoice, chosen: &mut [Option<usize>]) {
        for i in 0..2 {
            if let Some(p) = root.states[i] {
                chosen[root.poles[i]] = Some(p.perm as usize);
            }
        }
        let Some(x) = root.entry else { return };
        let mut stack = vec![(self.tree.nodes[self.tree.root].children[0], x)];
        while let Some((node, x)) = stack.pop() {
            let e = &self.tables[node][x];
            let nd = &self.tree.nodes[node];
            for (i, st) in [e.s, e.t].into_iter().enumerate() {
                if let Some(p) = st {
                    chosen[nd.poles[i]] = Some(p.perm as usize);
                }
            }
            match &e.back {
                Back::Q => {}
                Back::S(a, b) => {
                    stack.push((nd.children[0], *a));
                    stack.push((nd.children[1], *b));
                }
                Back::P(picks) => {
                    for (&c, &y) in nd.children.iter().zip(picks) {
                        stack.push((c, y));
                    }
                }
            }
        }
    }
}

struct BlockDp<'c, 'a> {
    ctx: &'c Context<'a>,
    tree: SpqTree,
    allowed: &'c [Vec<bool>],
    /// Block edges at each vertex of the block.
    at: HashMap<usize, Vec<usize>>,
    /// Pertinent edges of each node at its two poles.
    pole_edges: Vec<[Vec<usize>; 2]>,
}

impl<'c, 'a> BlockDp<'c, 'a> {
    fn new(ctx: &'c Context<'a>, tree: SpqTree, edges: &[usize], allowed: &'c [Vec<bool>]) -> Self {
        let mut at: HashMap<usize, Vec<usize>> = HashMap::new();
        for &e in edges {
            for v in ctx.frame.ends(e) {
                at.entry(v).or_default().push(e);
            }
        }
        let mut pole_edges: Vec<[Vec<usize>; 2]> = vec![[Vec::new(), Vec::new()]; tree.nodes.len()];
        for x in tree.post_order() {
            let nd = &tree.nodes[x];
            pole_edges[x] = match nd.kind {
                NodeKind::Q => [vec![nd.edge.unwrap()], vec![nd.edge.unwrap()]],
                NodeKind::S => [pole_edges[nd.children[0]][0].clone(), pole_edges[nd.children[1]][1].clone()],
                _ => {
                    let mut pe = [Vec::new(), Vec::new()];
                    for &c in &nd.children {
                        pe[0].extend_from_slice(&pole_edges[c][0]);
                        pe[1].extend_from_slice(&pole_edges[c][1]);
                    }
                    pe
                }
            };
        }
        BlockDp { ctx, tree, allowed, at, pole_edges }
    }

    fn solve(self) -> Result<BlockSolution, SpError> {
        let nodes = &self.tree.nodes;
        let mut tables: Vec<Vec<Entry>> = vec![Vec::new(); nodes.len()];
        let mut max_pairs = 0;
        for x in self.tree.post_order() {
            if x == self.tree.root {
                continue;
            }
            let table = match nodes[x].kind {
                NodeKind::Q => self.q_table(x),
                NodeKind::S => self.s_table(x, &tables),
                NodeKind::P => self.p_table(x, &tables),
                NodeKind::R => return Err(SpError::FrameNotPartial2Tree),
            };
            let mut pairs: Vec<(Option<u16>, Option<u16>)> =
                table.iter().map(|e| (e.s.map(|p| p.perm), e.t.map(|p| p.perm))).collect();
            pairs.sort_unstable();
            pairs.dedup();
            max_pairs = max_pairs.max(pairs.len());
            tables[x] = table;
        }
        let root = &nodes[self.tree.root];
        let poles = root.poles;
        let re = root.edge.unwrap();
        let mut roots = Vec::new();
        match root.children.first() {
            None => {
                for ps in self.ctx.choices(poles[0], self.allowed) {
                    for pt in self.ctx.choices(poles[1], self.allowed) {
                        let states = [self.point(re, poles[0], ps), self.point(re, poles[1], pt)];
                        roots.push(RootChoice { poles, states, entry: None });
                    }
                }
            }
            Some(&child) => {
                for (i, e) in tables[child].iter().enumerate() {
                    let ok = [(e.s, 0), (e.t, 1)].into_iter().all(|(st, k)| match st {
                        None => true,
                        Some(p) => {
                            let v = poles[k];
                            let q = self.ctx.position(re, v, p.perm as usize);
                            complementary(self.ctx.cycle_len(v), p.span, Span { start: q as u16, wind: 0 })
                        }
                    });
                    if ok {
                        roots.push(RootChoice { poles, states: [e.s, e.t], entry: Some(i) });
                    }
                }
            }
        }
        Ok(BlockSolution { tree: self.tree, tables, roots, max_pairs })
    }

    fn point(&self, fe: usize, v: usize, perm: Option<u16>) -> Option<Pole> {
        perm.map(|p| Pole { perm: p, span: Span { start: self.ctx.position(fe, v, p as usize) as u16, wind: 0 } })
    }

    fn q_table(&self, x: usize) -> Vec<Entry> {
        let nd = &self.tree.nodes[x];
        let fe = nd.edge.unwrap();
        let mut out = Vec::new();
        for ps in self.ctx.choices(nd.poles[0], self.allowed) {
            for pt in self.ctx.choices(nd.poles[1], self.allowed) {
                out.push(Entry { s: self.point(fe, nd.poles[0], ps), t: self.point(fe, nd.poles[1], pt), back: Back::Q });
            }
        }
        out
    }

    /// Spans the node's edges at pole `i` may cover under `perm`: they start
    /// and end at the node's positions, contain all of them and have no
    /// position of another block edge at the pole strictly inside.
    fn candidate_spans(&self, x: usize, i: usize, perm: u16) -> Vec<Span> {
        let v = self.tree.nodes[x].poles[i];
        let n = self.ctx.cycle_len(v);
        let mine = &self.pole_edges[x][i];
        let mut inner: Vec<usize> = mine.iter().map(|&e| self.ctx.position(e, v, perm as usize)).collect();
        inner.sort_unstable();
        inner.dedup();
        let outer: Vec<usize> = self.at[&v]
            .iter()
            .filter(|e| !mine.contains(e))
            .map(|&e| self.ctx.position(e, v, perm as usize))
            .collect();
        let mut out = Vec::new();
        for (j, &f) in inner.iter().enumerate() {
            let l = inner[(j + inner.len() - 1) % inner.len()];
            let wind = dist(n, f, l);
            if outer.iter().all(|&q| {
                let o = dist(n, f, q);
                o == 0 || o >= wind
            }) {
                out.push(Span { start: f as u16, wind: wind as u16 });
            }
            if inner.len() >= 2 && outer.iter().all(|&q| q == f) {
                out.push(Span { start: f as u16, wind: n as u16 });
            }
        }
        out
    }

    fn s_table(&self, x: usize, tables: &[Vec<Entry>]) -> Vec<Entry> {
        let nd = &self.tree.nodes[x];
        let (a, b) = (nd.children[0], nd.children[1]);
        let m = self.tree.nodes[a].poles[1];
        let n = if self.ctx.trivial(m) { 0 } else { self.ctx.cycle_len(m) };
        let mut left: BTreeMap<Option<Pole>, Vec<usize>> = BTreeMap::new();
        for (i, e) in tables[a].iter().enumerate() {
            left.entry(e.t).or_default().push(i);
        }
        let mut right: BTreeMap<Option<Pole>, Vec<usize>> = BTreeMap::new();
        for (i, e) in tables[b].iter().enumerate() {
            right.entry(e.s).or_default().push(i);
        }
        let mut seen: HashMap<(Option<Pole>, Option<Pole>), ()> = HashMap::new();
        let mut out = Vec::new();
        for (ml, ls) in &left {
            for (mr, rs) in &right {
                let ok = match (ml, mr) {
                    (None, None) => true,
                    (Some(p), Some(q)) => p.perm == q.perm && complementary(n, p.span, q.span),
                    _ => false,
                };
                if !ok {
                    continue;
                }
                for &i in ls {
                    for &j in rs {
                        let key = (tables[a][i].s, tables[b][j].t);
                        if seen.insert(key, ()).is_none() {
                            out.push(Entry { s: key.0, t: key.1, back: Back::S(i, j) });
                        }
                    }
                }
            }
        }
        out
    }

    fn p_table(&self, x: usize, tables: &[Vec<Entry>]) -> Vec<Entry> {
        let nd = &self.tree.nodes[x];
        let [s, t] = nd.poles;
        let mut out = Vec::new();
        for ps in self.ctx.choices(s, self.allowed) {
            for pt in self.ctx.choices(t, self.allowed) {
                let spans_s: Vec<Option<Span>> = match ps {
                    None => vec![None],
                    Some(p) => self.candidate_spans(x, 0, p).into_iter().map(Some).collect(),
                };
                let spans_t: Vec<Option<Span>> = match pt {
                    None => vec![None],
                    Some(p) => self.candidate_spans(x, 1, p).into_iter().map(Some).collect(),
                };
                for &as_ in &spans_s {
                    for &at in &spans_t {
                        let frame = [(s, ps, as_), (t, pt, at)];
                        if let Some(picks) = self.arrange(x, tables, frame) {
                            out.push(Entry {
                                s: ps.map(|p| Pole { perm: p, span: as_.unwrap() }),
                                t: pt.map(|p| Pole { perm: p, span: at.unwrap() }),
                                back: Back::P(picks),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Picks an entry for every child of P-node `x` so that the children's
    /// spans tile the node's spans in one order at `s` and the reverse order
    /// at `t`.
    fn arrange(
        &self,
        x: usize,
        tables: &[Vec<Entry>],
        frame: [(usize, Option<u16>, Option<Span>); 2],
    ) -> Option<Vec<usize>> {
        let nd = &self.tree.nodes[x];
        let n = [frame[0].0, frame[1].0].map(|v| if self.ctx.trivial(v) { 0 } else { self.ctx.cycle_len(v) });
        // Options per child: (entry, interval at s, interval at t).
        let mut options: Vec<Vec<(usize, [Option<(usize, usize)>; 2])>> = Vec::new();
        for &c in &nd.children {
            let mut opts = Vec::new();
            for (i, e) in tables[c].iter().enumerate() {
                let mut per_pole: [Vec<Option<(usize, usize)>>; 2] = [Vec::new(), Vec::new()];
                for (k, st) in [e.s, e.t].into_iter().enumerate() {
                    let (_, perm, span) = frame[k];
                    match (st, span) {
                        (None, None) => per_pole[k].push(None),
                        (Some(p), Some(a)) if Some(p.perm) == perm => {
                            per_pole[k] = intervals(n[k], a, p.span).into_iter().map(Some).collect();
                        }
                        _ => {}
                    }
                }
                for &is in &per_pole[0] {
                    for &it in &per_pole[1] {
                        opts.push((i, [is, it]));
                    }
                }
            }
            if opts.is_empty() {
                return None;
            }
            options.push(opts);
        }
        let mut idx: Vec<usize> = (0..options.len()).collect();
        idx.sort_by_key(|&i| options[i].len());
        let mut pick: Vec<usize> = vec![0; options.len()];
        let winds = [frame[0].2.map(|a| a.wind as usize), frame[1].2.map(|a| a.wind as usize)];
        if self.search(&options, &idx, 0, &mut pick, winds) {
            Some((0..options.len()).map(|c| options[c][pick[c]].0).collect())
        } else {
            None
        }
    }

    fn search(
        &self,
        options: &[Vec<(usize, [Option<(usize, usize)>; 2])>],
        idx: &[usize],
        depth: usize,
        pick: &mut Vec<usize>,
        winds: [Option<usize>; 2],
    ) -> bool {
        if depth == idx.len() {
            let chosen: Vec<[Option<(usize, usize)>; 2]> = (0..options.len()).map(|c| options[c][pick[c]].1).collect();
            return tiles(&chosen, winds);
        }
        let c = idx[depth];
        for o in 0..options[c].len() {
            let iv = options[c][o].1;
            let clash = idx[..depth].iter().any(|&d| {
                let other = options[d][pick[d]].1;
                (0..2).any(|k| match (iv[k], other[k]) {
                    (Some(a), Some(b)) => !(a.1 <= b.0 || b.1 <= a.0),
                    _ => false,
                })
            });
            if clash {
                continue;
            }
            pick[c] = o;
            if self.search(options, idx, depth + 1, pick, winds) {
                return true;
            }
        }
        false
    }
}

/// Offsets `[lo, hi]` at which `inner` can sit inside `outer`.
fn intervals(n: usize, outer: Span, inner: Span) -> Vec<(usize, usize)> {
    let lo = dist(n, outer.start as usize, inner.start as usize);
    let w = inner.wind as usize;
    let mut out = Vec::new();
    if lo + w <= outer.wind as usize {
        out.push((lo, lo + w));
    }
    if lo == 0 && w == 0 && outer.wind as usize == n {
        out.push((n, n));
    }
    out
}

/// Whether pairwise non-overlapping intervals cover both ends of their spans
/// and admit one order that runs forward at `s` and backward at `t`.
fn tiles(chosen: &[[Option<(usize, usize)>; 2]], winds: [Option<usize>; 2]) -> bool {
    for k in 0..2 {
        if let Some(w) = winds[k] {
            let lo = chosen.iter().map(|c| c[k].unwrap().0).min();
            let hi = chosen.iter().map(|c| c[k].unwrap().1).max();
            if lo != Some(0) || hi != Some(w) {
                return false;
            }
        }
    }
    // Edge i -> j: i must come before j.
    let h = chosen.len();
    let mut indeg = vec![0usize; h];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); h];
    for i in 0..h {
        for j in 0..h {
            if i == j {
                continue;
            }
            let before_s = match (chosen[i][0], chosen[j][0]) {
                (Some(a), Some(b)) => a.1 <= b.0 && b.1 > a.0,
                _ => false,
            };
            let before_t = match (chosen[i][1], chosen[j][1]) {
                (Some(a), Some(b)) => b.1 <= a.0 && a.1 > b.0,
                _ => false,
            };
            if before_s || before_t {
                succ[i].push(j);
                indeg[j] += 1;
            }
        }
    }
    let mut queue: Vec<usize> = (0..h).filter(|&i| indeg[i] == 0).collect();
    let mut done = 0;
    while let Some(i) = queue.pop() {
        done += 1;
        for &j in &succ[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                queue.push(j);
            }
        }
    }
    done == h
}

#[cfg(test)]
mod tests;
