//! Gadgets and the two reductions.
//!
//! A truth value travels along a wire: two parallel edges leaving a matrix
//! side from vertices `(a, b)` and entering another matrix side at
//! `(a', b')`. The value at a matrix is whether `a` precedes `b` in its
//! permutation. When the rest of the instance is connected it lies in one
//! face of the two-edge cycle, which forces the two matrices to see the
//! wire in opposite clockwise orders: the value is copied when one side is
//! top or right and the other bottom or left, and negated when both sides
//! are of the same kind.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::model::{Cluster, ClusteredGraph, PermutationAssignment, Side, SideMap};

use super::layout::{arc_position, direction_at, layout_formula, LayoutMode, OrthogonalLayout, Point};
use super::Nae3SatFormula;

/// Role of a cluster in a reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    /// Link `index` of the chain of variable `var`.
    Variable { var: usize, index: usize },
    /// Relay (plain or negating) in front of a clause matrix.
    Literal { clause: usize, slot: usize },
    /// Crossing of two layout edges.
    Crossing { edges: [usize; 2] },
    /// One of the three matrices of a clause.
    Clause { clause: usize, slot: usize },
    /// Anything else (fixture terminals, connectors).
    Terminal,
}

/// Two parallel edges carrying one value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Wire {
    pub from: usize,
    pub from_pair: [usize; 2],
    pub from_side: Side,
    pub to: usize,
    pub to_pair: [usize; 2],
    pub to_side: Side,
}

impl Wire {
    /// Whether the wire negates the value.
    pub fn negates(&self) -> bool {
        forward(self.from_side) == forward(self.to_side)
    }
}

/// A fixed-sides instance with its gadget inventory.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: ClusteredGraph,
    pub layout: OrthogonalLayout,
    pub kinds: Vec<GadgetKind>,
    /// Chain clusters of each variable in link order.
    pub chains: Vec<Vec<usize>>,
    /// Relay of each layout edge and whether it negates internally.
    pub relays: Vec<(usize, bool)>,
    /// The three matrices of each clause.
    pub clause_matrices: Vec<[usize; 3]>,
    pub wires: Vec<Wire>,
}

impl Reduction {
    /// Truth value of the literal in `slot` of `clause` under `pi`.
    pub fn literal_value(&self, pi: &PermutationAssignment, clause: usize, slot: usize) -> bool {
        let [a, b] = CLAUSE_PAIRS[slot];
        value(&self.graph, pi, self.clause_matrices[clause][slot], a, b)
    }

    /// Assignment read off the clause matrices at the first occurrence of
    /// each variable (false for unused variables). A variable with a
    /// single occurrence hangs off the instance by one wire, so its chain
    /// link carries no information.
    pub fn decode(&self, f: &Nae3SatFormula, pi: &PermutationAssignment) -> Vec<bool> {
        f.occurrences()
            .iter()
            .map(|occ| match occ.first() {
                Some(&(j, p)) => self.literal_value(pi, j, p) != f.clauses[j][p].negated,
                None => false,
            })
            .collect()
    }
}

/// The free-sides instance and the nine clusters replacing each cluster of
/// the triconnected fixed-sides instance (hub first, then the cycle).
#[derive(Clone, Debug)]
pub struct FreeReduction {
    pub graph: ClusteredGraph,
    pub fixed: Reduction,
    pub gadgets: Vec<[usize; 9]>,
}

fn forward(s: Side) -> bool {
    matches!(s, Side::Top | Side::Right)
}

/// Whether vertex `a` of cluster `c` (by position in the cluster) precedes
/// vertex `b` in `pi`.
pub fn value(g: &ClusteredGraph, pi: &PermutationAssignment, c: usize, a: usize, b: usize) -> bool {
    let [va, vb] = [a, b].map(|i| g.clusters[c].vertices[i]);
    let pos = |v| pi.0[c].iter().position(|&x| x == v).unwrap();
    pos(va) < pos(vb)
}

#[derive(Default)]
struct Net {
    names: Vec<String>,
    clusters: Vec<Cluster>,
    kinds: Vec<GadgetKind>,
    edges: Vec<[usize; 2]>,
    sides: SideMap,
    wires: Vec<Wire>,
}

impl Net {
    fn cluster(&mut self, name: &str, k: usize, kind: GadgetKind) -> usize {
        let vertices = (0..k)
            .map(|i| {
                self.names.push(if k == 1 { name.to_string() } else { format!("{name}.{i}") });
                self.names.len() - 1
            })
            .collect();
        self.clusters.push(Cluster { name: name.to_string(), vertices });
        self.kinds.push(kind);
        self.clusters.len() - 1
    }

    fn edge(&mut self, a: (usize, usize, Side), b: (usize, usize, Side)) {
        let e = self.edges.len();
        self.edges.push([self.clusters[a.0].vertices[a.1], self.clusters[b.0].vertices[b.1]]);
        for (c, _, s) in [a, b] {
            if self.clusters[c].vertices.len() > 1 {
                self.sides.insert((e, c), s);
            }
        }
    }

    fn wire(&mut self, from: (usize, [usize; 2], Side), to: (usize, [usize; 2], Side)) {
        for i in 0..2 {
            self.edge((from.0, from.1[i], from.2), (to.0, to.1[i], to.2));
        }
        self.wires.push(Wire {
            from: from.0,
            from_pair: from.1,
            from_side: from.2,
            to: to.0,
            to_pair: to.1,
            to_side: to.2,
        });
    }

    /// Three parallel edges between `T` of `from` and `B` of `to`, forcing
    /// equal permutations.
    fn bundle(&mut self, from: usize, to: usize) {
        for i in 0..3 {
            self.edge((from, i, Side::Top), (to, i, Side::Bottom));
        }
    }

    fn build(self) -> ClusteredGraph {
        ClusteredGraph::new(self.names, self.edges, self.clusters, Some(self.sides))
    }
}

fn side_of(d: Point) -> Side {
    match d {
        (0, 1) => Side::Top,
        (1, 0) => Side::Right,
        (0, -1) => Side::Bottom,
        (-1, 0) => Side::Left,
        _ => unreachable!("not a unit direction"),
    }
}

/// Vertex pair of clause matrix `slot`: `(a, b)`, `(b, c)`, `(c, a)`.
const CLAUSE_PAIRS: [[usize; 2]; 3] = [[0, 1], [1, 2], [2, 0]];

/// Fixed-sides reduction over the fixed-mode layout.
pub fn reduce_fixed(f: &Nae3SatFormula) -> Reduction {
    reduce_fixed_with(f, LayoutMode::Fixed, false)
}

/// Fixed-sides reduction over a layout of the given mode, optionally with
/// the connector edges of the free-sides construction (a path through the
/// relays of each clause and a cycle enclosing the drawing that runs through
/// every variable chain and every clause).
pub fn reduce_fixed_with(f: &Nae3SatFormula, mode: LayoutMode, connectors: bool) -> Reduction {
    let layout = layout_formula(f, mode);
    let mut net = Net::default();
    let mut seq = 0;
    let mut name = |role: String| {
        seq += 1;
        format!("{:03}{role}", seq - 1)
    };

    // Stations along each edge: chain link, crossings, relay, clause matrix.
    let mut crossing_cluster: BTreeMap<usize, usize> = BTreeMap::new();
    let mut clause_clusters: Vec<Option<[usize; 3]>> = vec![None; f.clauses.len()];
    let mut chains: Vec<Vec<usize>> = vec![Vec::new(); f.vars.len()];
    let mut relays = Vec::new();
    for (ei, e) in layout.edges.iter().enumerate() {
        let chain = net.cluster(&name(format!("v{}.{}", e.var, chains[e.var].len())), 2, GadgetKind::Variable {
            var: e.var,
            index: chains[e.var].len(),
        });
        if let Some(&prev) = chains[e.var].last() {
            let to_side = if Some(e.var) == layout.top_variable { Side::Left } else { Side::Bottom };
            net.wire((prev, [0, 1], Side::Right), (chain, [0, 1], to_side));
        }
        chains[e.var].push(chain);

        let line = &e.polyline;
        let mut stops: Vec<(i64, usize, [usize; 2], Point)> = Vec::new();
        for (xi, x) in layout.crossings.iter().enumerate() {
            if !x.edges.contains(&ei) {
                continue;
            }
            let c = *crossing_cluster.entry(xi).or_insert_with(|| {
                net.cluster(&name(format!("x{}.{}", x.edges[0], x.edges[1])), 3, GadgetKind::Crossing {
                    edges: x.edges,
                })
            });
            let dir = direction_at(line, x.at);
            let pair = if dir.0 == 0 { [0, 1] } else { [1, 2] };
            stops.push((arc_position(line, x.at).unwrap(), c, pair, dir));
        }
        stops.sort();

        let end = *line.last().unwrap();
        let dir_end = direction_at(line, end);
        let vs = *clause_clusters[e.clause].get_or_insert_with(|| {
            let vs = [0, 1, 2].map(|p| {
                net.cluster(&name(format!("c{}.{p}", e.clause)), 3, GadgetKind::Clause { clause: e.clause, slot: p })
            });
            net.bundle(vs[0], vs[1]);
            net.bundle(vs[1], vs[2]);
            vs
        });
        let relay =
            net.cluster(&name(format!("n{}.{}", e.clause, e.slot)), 2, GadgetKind::Literal { clause: e.clause, slot: e.slot });

        // Walk the wire and count negations up to the relay.
        let mut at = (chain, [0, 1], direction_at(line, line[0]));
        let mut negations = 0;
        for &(_, c, pair, dir) in &stops {
            let from_side = side_of(at.2);
            let to_side = side_of((-dir.0, -dir.1));
            negations += usize::from(forward(from_side) == forward(to_side));
            net.wire((at.0, at.1, from_side), (c, pair, to_side));
            at = (c, pair, dir);
        }
        let from_side = side_of(at.2);
        let in_side = side_of((-dir_end.0, -dir_end.1));
        negations += usize::from(forward(from_side) == forward(in_side));
        net.wire((at.0, at.1, from_side), (relay, [0, 1], in_side));
        let out_side = side_of(dir_end);
        negations += usize::from(forward(out_side) == forward(in_side));
        let negated = f.clauses[e.clause][e.slot].negated;
        let crossed = (negations % 2 == 1) != negated;
        let out_pair = if crossed { [1, 0] } else { [0, 1] };
        net.wire((relay, out_pair, out_side), (vs[e.slot], CLAUSE_PAIRS[e.slot], in_side));
        relays.push((relay, crossed));
    }

    let clause_matrices: Vec<[usize; 3]> = clause_clusters.into_iter().map(Option::unwrap).collect();
    if connectors {
        add_connectors(&mut net, f, &layout, &chains, &relays, &clause_matrices);
    }
    let kinds = net.kinds.clone();
    let wires = net.wires.clone();
    Reduction { graph: net.build(), layout, kinds, chains, relays, clause_matrices, wires }
}

fn add_connectors(
    net: &mut Net,
    f: &Nae3SatFormula,
    layout: &OrthogonalLayout,
    chains: &[Vec<usize>],
    relays: &[(usize, bool)],
    clause_matrices: &[[usize; 3]],
) {
    // Relays of one clause, bottom to top.
    for j in 0..f.clauses.len() {
        let mut rs: Vec<(usize, usize)> = layout
            .edges
            .iter()
            .zip(relays)
            .filter(|(e, _)| e.clause == j)
            .map(|(e, &(r, _))| (e.slot, r))
            .collect();
        rs.sort();
        for w in rs.windows(2) {
            net.edge((w[0].1, 0, Side::Top), (w[1].1, 0, Side::Bottom));
        }
    }
    // One cycle around the drawing: the bottom chains left to right, up
    // through the right clause, the relocated chain right to left, then
    // down through the left clauses. Each stop is entered at one end and
    // left at the other.
    type End = (usize, usize, Side);
    let mut stops: Vec<(End, End)> = Vec::new();
    for v in (0..chains.len()).filter(|&v| !chains[v].is_empty() && Some(v) != layout.top_variable) {
        let ch = &chains[v];
        stops.push(((ch[0], 1, Side::Left), (*ch.last().unwrap(), 0, Side::Right)));
    }
    let clause_stop = |j: usize| -> (End, End) {
        let vs = clause_matrices[j];
        ((vs[0], 0, Side::Bottom), (vs[2], 0, Side::Top))
    };
    if let Some(j) = layout.right_clause {
        stops.push(clause_stop(j));
    }
    if let Some(v) = layout.top_variable {
        let ch = &chains[v];
        stops.push(((*ch.last().unwrap(), 0, Side::Right), (ch[0], 1, Side::Left)));
    }
    for j in (0..f.clauses.len()).rev().filter(|&j| Some(j) != layout.right_clause) {
        let (inn, out) = clause_stop(j);
        // Walking down the left side enters at the top.
        stops.push(((out.0, 1, Side::Top), (inn.0, 1, Side::Bottom)));
    }
    for i in 0..stops.len() {
        let a = stops[i].1;
        let b = stops[(i + 1) % stops.len()].0;
        if a.0 != b.0 {
            net.edge(a, b);
        }
    }
}

/// Free-sides reduction: the triconnected fixed-sides instance with
/// connectors, every cluster replaced by a wheel of nine size-5 clusters.
/// External edges of side `X` of a cluster attach to the cycle cluster of
/// that side; the hub sends one lane per original vertex to each side
/// cluster and one edge to each corner cluster.
pub fn reduce_free(f: &Nae3SatFormula) -> FreeReduction {
    let fixed = reduce_fixed_with(f, LayoutMode::Triconnected, true);
    let g = &fixed.graph;
    let mut net = Net::default();
    let mut gadgets = Vec::new();
    for c in 0..g.clusters.len() {
        let base = &g.clusters[c].name;
        let hub = net.cluster(&format!("{base}/h"), 5, GadgetKind::Terminal);
        let mut gadget = [hub; 9];
        for i in 0..8 {
            gadget[i + 1] = net.cluster(&format!("{base}/{i}"), 5, GadgetKind::Terminal);
        }
        let k = g.cluster_size(c);
        for i in 0..8 {
            let cyc = gadget[i + 1];
            let next = gadget[(i + 1) % 8 + 1];
            net.edge((cyc, 4, Side::Top), (next, 3, Side::Top));
            if i % 2 == 0 {
                for j in 0..k {
                    net.edge((hub, j, Side::Top), (cyc, j, Side::Top));
                }
            } else {
                net.edge((hub, 4, Side::Top), (cyc, 0, Side::Top));
            }
        }
        gadgets.push(gadget);
    }
    for e in 0..g.m() {
        let ends = g.edges[e].map(|v| {
            let c = g.cluster_of(v);
            let j = g.clusters[c].vertices.iter().position(|&x| x == v).unwrap();
            let cyc = 2 * g.side(e, c).unwrap().index();
            (gadgets[c][cyc + 1], j, Side::Top)
        });
        net.edge(ends[0], ends[1]);
    }
    let graph = net.build().without_sides();
    FreeReduction { graph, fixed, gadgets }
}

impl FreeReduction {
    /// Whether the frame restricted to gadget `i` is a wheel: the hub joined
    /// to all eight cycle clusters, cycle clusters joined to their two cycle
    /// neighbours only.
    pub fn gadget_is_wheel(&self, i: usize) -> bool {
        let gd = &self.gadgets[i];
        let frame = self.graph.frame_unchecked().graph;
        let local = |c: usize| gd.iter().position(|&x| x == c);
        let mut adj = [[false; 9]; 9];
        for &[u, v] in frame.edges() {
            if let (Some(a), Some(b)) = (local(u), local(v)) {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
        (0..9).all(|a| {
            (0..9).all(|b| {
                let want = match (a, b) {
                    _ if a == b => false,
                    (0, _) | (_, 0) => true,
                    _ => {
                        let d = (a as i64 - b as i64).rem_euclid(8);
                        d == 1 || d == 7
                    }
                };
                adj[a][b] == want
            })
        })
    }

    /// Frame graph with parallel edges merged.
    pub fn frame(&self) -> Graph {
        self.graph.frame_unchecked().graph
    }
}

/// A small instance around one gadget: the gadget clusters, the clusters
/// feeding or reading it, and a point joining every terminal so the rest
/// of the instance is connected.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub graph: ClusteredGraph,
    pub gadget: Vec<usize>,
    pub terminals: Vec<usize>,
}

/// A chain of `h` variable links, each reading out at the top into a
/// common point.
pub fn variable_fixture(h: usize) -> Fixture {
    let mut net = Net::default();
    let z = net.cluster("z", 1, GadgetKind::Terminal);
    let chain: Vec<usize> =
        (0..h).map(|i| net.cluster(&format!("v{i}"), 2, GadgetKind::Variable { var: 0, index: i })).collect();
    for i in 0..h {
        if i > 0 {
            net.wire((chain[i - 1], [0, 1], Side::Right), (chain[i], [0, 1], Side::Bottom));
        }
        for j in 0..2 {
            net.edge((chain[i], j, Side::Top), (z, 0, Side::Top));
        }
    }
    Fixture { graph: net.build(), gadget: chain, terminals: vec![z] }
}

/// A crossing matrix with terminals below, above, right and left
/// (in that order), each also tied to a common point.
pub fn crossing_fixture() -> Fixture {
    let mut net = Net::default();
    let x = net.cluster("x", 3, GadgetKind::Crossing { edges: [0, 1] });
    let ts: Vec<usize> = ["s", "n", "e", "w"].iter().map(|t| net.cluster(t, 2, GadgetKind::Terminal)).collect();
    let z = net.cluster("z", 1, GadgetKind::Terminal);
    net.wire((ts[0], [0, 1], Side::Top), (x, [0, 1], Side::Bottom));
    net.wire((x, [0, 1], Side::Top), (ts[1], [0, 1], Side::Bottom));
    net.wire((ts[2], [0, 1], Side::Left), (x, [1, 2], Side::Right));
    net.wire((x, [1, 2], Side::Left), (ts[3], [0, 1], Side::Right));
    for (t, s) in ts.iter().zip([Side::Bottom, Side::Top, Side::Right, Side::Left]) {
        for j in 0..2 {
            net.edge((*t, j, s), (z, 0, Side::Top));
        }
    }
    Fixture { graph: net.build(), gadget: vec![x], terminals: ts }
}

/// The three clause matrices, each fed from the right by a size-2 source
/// whose value is the literal.
pub fn clause_fixture() -> Fixture {
    let mut net = Net::default();
    let vs: Vec<usize> =
        (0..3).map(|p| net.cluster(&format!("c{p}"), 3, GadgetKind::Clause { clause: 0, slot: p })).collect();
    net.bundle(vs[0], vs[1]);
    net.bundle(vs[1], vs[2]);
    let z = net.cluster("z", 1, GadgetKind::Terminal);
    let src: Vec<usize> = (0..3).map(|p| net.cluster(&format!("s{p}"), 2, GadgetKind::Terminal)).collect();
    for p in 0..3 {
        net.wire((src[p], [0, 1], Side::Left), (vs[p], CLAUSE_PAIRS[p], Side::Right));
        for j in 0..2 {
            net.edge((src[p], j, Side::Right), (z, 0, Side::Top));
        }
    }
    Fixture { graph: net.build(), gadget: vs, terminals: src }
}
