//! The auxiliary graph: every vertex replaced by a gadget for its tree.

use std::collections::HashMap;

use crate::embedding::Embedding;
use crate::graph::Graph;

use super::solve::{WheelRule, WheelSpec};
use super::{normalize, Constraint, ConstraintKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetChild {
    Leaf(usize),
    Node(usize),
}

/// One inner node of a normalized tree. Group nodes are a single vertex
/// (`center`); the other kinds are a wheel with hub `center` and one cycle
/// slot per child followed by the slot of the parent link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub vertex: usize,
    pub kind: ConstraintKind,
    pub center: usize,
    pub cycle: Vec<usize>,
    pub children: Vec<GadgetChild>,
    pub parent_link: Option<usize>,
}

impl Gadget {
    pub fn is_wheel(&self) -> bool {
        self.kind != ConstraintKind::Group
    }
}

#[derive(Clone, Debug)]
pub struct AuxGraph {
    pub graph: Graph,
    pub gadgets: Vec<Gadget>,
    /// Root gadget of each vertex of the input graph.
    pub roots: Vec<usize>,
    /// Input edge represented by each auxiliary edge (both halves of a
    /// subdivided edge map to it); `None` for gadget edges.
    pub edge_source: Vec<Option<usize>>,
    /// Edges that are not input edges and get contracted away.
    pub contractible: Vec<bool>,
    /// Child gadget reached through each link edge.
    link_child: HashMap<usize, usize>,
}

/// Builds the auxiliary graph for well-formed trees. Input edges whose ends
/// would be parallel in the auxiliary graph are subdivided.
pub fn build_aux_graph(g: &Graph, trees: &[Constraint]) -> AuxGraph {
    let mut aux = AuxGraph {
        graph: Graph::new(0),
        gadgets: Vec::new(),
        roots: Vec::new(),
        edge_source: Vec::new(),
        contractible: Vec::new(),
        link_child: HashMap::new(),
    };
    // Attachment vertex of each (edge, endpoint side).
    let mut attach: HashMap<(usize, usize), usize> = HashMap::new();
    for v in 0..g.n() {
        let t = normalize(&trees[v]);
        let root = aux.build(v, &t, None, &mut attach);
        aux.roots.push(root);
    }
    for e in 0..g.m() {
        let [u, v] = g.ends(e);
        let a = attach[&(e, u)];
        let b = attach[&(e, v)];
        if aux.graph.find_edge(a, b).is_some() {
            let mid = aux.graph.add_vertex();
            aux.add(a, mid, Some(e));
            aux.add(mid, b, Some(e));
        } else {
            aux.add(a, b, Some(e));
        }
    }
    aux
}

impl AuxGraph {
    fn add(&mut self, a: usize, b: usize, source: Option<usize>) -> usize {
        let id = self.graph.add_edge(a, b);
        self.edge_source.push(source);
        self.contractible.push(source.is_none());
        id
    }

    fn build(
        &mut self,
        v: usize,
        t: &Constraint,
        parent: Option<usize>,
        attach: &mut HashMap<(usize, usize), usize>,
    ) -> usize {
        let Constraint::Node(kind, children) = t else {
            unreachable!("gadgets are built for inner nodes")
        };
        let id = self.gadgets.len();
        let center = self.graph.add_vertex();
        let mut cycle = Vec::new();
        let mut entry = center;
        if *kind != ConstraintKind::Group {
            let slots = (children.len() + usize::from(parent.is_some())).max(3);
            cycle = (0..slots).map(|_| self.graph.add_vertex()).collect();
            for i in 0..slots {
                self.add(cycle[i], cycle[(i + 1) % slots], None);
            }
            for &c in &cycle {
                self.add(center, c, None);
            }
            entry = cycle.get(children.len()).copied().unwrap_or(center);
        }
        let parent_link = parent.map(|p| self.add(p, entry, None));
        self.gadgets.push(Gadget {
            vertex: v,
            kind: *kind,
            center,
            cycle: cycle.clone(),
            children: Vec::new(),
            parent_link,
        });
        let mut out = Vec::new();
        for (i, ch) in children.iter().enumerate() {
            let at = if cycle.is_empty() { center } else { cycle[i] };
            match ch {
                Constraint::Leaf(e) => {
                    attach.insert((*e, v), at);
                    out.push(GadgetChild::Leaf(*e));
                }
                Constraint::Node(..) => {
                    let child = self.build(v, ch, Some(at), attach);
                    let link = self.gadgets[child].parent_link.unwrap();
                    self.link_child.insert(link, child);
                    out.push(GadgetChild::Node(child));
                }
            }
        }
        self.gadgets[id].children = out;
        id
    }

    /// Wheel requirements of the oriented, mirror and synchronized gadgets.
    pub fn gadget_wheels(&self) -> Vec<WheelSpec> {
        let mut out = Vec::new();
        for gd in &self.gadgets {
            let rule = match gd.kind {
                ConstraintKind::Group => continue,
                ConstraintKind::Oriented => WheelRule::Oriented,
                ConstraintKind::Mirror => WheelRule::Mirror,
                ConstraintKind::Synchronized(c) => WheelRule::Synchronized(c),
            };
            out.push(self.spec(gd.center, &gd.cycle, rule));
        }
        out
    }

    fn spec(&self, hub: usize, cycle: &[usize], rule: WheelRule) -> WheelSpec {
        let slot: HashMap<usize, usize> = cycle.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let spokes = self
            .graph
            .incident(hub)
            .iter()
            .filter_map(|&f| slot.get(&self.graph.other(f, hub)).map(|&i| (f, i)))
            .collect();
        WheelSpec { hub, slots: cycle.len(), spoke_slot: spokes, rule }
    }

    /// Requirement for a wheel `(hub, cycle)` that is already a subgraph of
    /// the input graph, to be embedded with the given clockwise order. All
    /// its vertices must be unconstrained.
    pub fn native_wheel(&self, g: &Graph, hub: usize, cycle: &[usize]) -> Option<WheelSpec> {
        let plain = |v: usize| {
            let gd = &self.gadgets[self.roots[v]];
            !gd.is_wheel() && gd.children.iter().all(|c| matches!(c, GadgetChild::Leaf(_)))
        };
        if cycle.len() < 3 || !plain(hub) || !cycle.iter().all(|&c| plain(c)) {
            return None;
        }
        if cycle.iter().any(|&c| g.find_edge(hub, c).is_none()) {
            return None;
        }
        let image: Vec<usize> = cycle.iter().map(|&c| self.gadgets[self.roots[c]].center).collect();
        let spec = self.spec(self.gadgets[self.roots[hub]].center, &image, WheelRule::Oriented);
        (spec.spoke_slot.len() == cycle.len()).then_some(spec)
    }

    /// Embedding of the input graph obtained by contracting every gadget in
    /// an embedding of the auxiliary graph.
    pub fn contract(&self, g: &Graph, h_emb: &Embedding) -> Embedding {
        let rotation = (0..g.n())
            .map(|v| {
                let mut out = Vec::new();
                self.walk(self.roots[v], h_emb, &mut out);
                out
            })
            .collect();
        Embedding::new(rotation)
    }

    fn walk(&self, id: usize, h_emb: &Embedding, out: &mut Vec<usize>) {
        let gd = &self.gadgets[id];
        if !gd.is_wheel() {
            let rot = h_emb.rotation(gd.center);
            let start = gd
                .parent_link
                .map_or(0, |p| rot.iter().position(|&f| f == p).unwrap() + 1);
            for i in 0..rot.len() {
                let f = rot[(start + i) % rot.len()];
                if Some(f) == gd.parent_link {
                    continue;
                }
                if let Some(&child) = self.link_child.get(&f) {
                    self.walk(child, h_emb, out);
                } else if let Some(e) = self.edge_source[f] {
                    out.push(e);
                }
            }
            return;
        }
        let slot: HashMap<usize, usize> = gd.cycle.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let order: Vec<usize> = h_emb
            .rotation(gd.center)
            .iter()
            .map(|&f| slot[&self.graph.other(f, gd.center)])
            .collect();
        let parent_slot = gd.children.len();
        let start = if gd.parent_link.is_some() {
            order.iter().position(|&s| s == parent_slot).unwrap() + 1
        } else {
            0
        };
        for i in 0..order.len() {
            match gd.children.get(order[(start + i) % order.len()]) {
                Some(GadgetChild::Leaf(e)) => out.push(*e),
                Some(GadgetChild::Node(c)) => self.walk(*c, h_emb, out),
                None => {}
            }
        }
    }
}
