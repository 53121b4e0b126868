//! Planar embeddings under embedding-constraint trees.
//!
//! Every vertex carries an ordered tree whose leaves are its incident edges.
//! Inner nodes are oriented (children in a fixed clockwise order), mirror
//! (fixed order up to a flip), group (children may be permuted) or
//! synchronized mirror (like mirror, but all nodes of one color flip
//! together). Testing goes through an auxiliary graph where each oriented or
//! mirror node becomes a wheel, an SPQR tree per block, and a 2SAT formula
//! over the orientations of the rigid skeletons.

mod aux;
mod enumerate;
mod solve;
pub mod twosat;

use std::collections::HashMap;

use thiserror::Error;

use crate::embedding::Embedding;
use crate::graph::Graph;

pub use aux::{build_aux_graph, AuxGraph, Gadget, GadgetChild};
pub use enumerate::{enumerate_embeddings_oracle, BudgetExceeded};
pub use solve::{embed_with_wheels, orientation_formula, OrientationFormula, WheelRule, WheelSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstraintKind {
    Oriented,
    Mirror,
    Group,
    /// Synchronized mirror with its color.
    Synchronized(u32),
}

/// A node of a constraint tree. Leaves are edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    Leaf(usize),
    Node(ConstraintKind, Vec<Constraint>),
}

impl Constraint {
    pub fn group(children: Vec<Constraint>) -> Constraint {
        Constraint::Node(ConstraintKind::Group, children)
    }

    pub fn oriented(children: Vec<Constraint>) -> Constraint {
        Constraint::Node(ConstraintKind::Oriented, children)
    }

    pub fn mirror(children: Vec<Constraint>) -> Constraint {
        Constraint::Node(ConstraintKind::Mirror, children)
    }

    pub fn synchronized(color: u32, children: Vec<Constraint>) -> Constraint {
        Constraint::Node(ConstraintKind::Synchronized(color), children)
    }

    pub fn leaves(edges: &[usize]) -> Vec<Constraint> {
        edges.iter().map(|&e| Constraint::Leaf(e)).collect()
    }

    /// A group root over `edges`: no constraint at all.
    pub fn free(edges: &[usize]) -> Constraint {
        Constraint::group(Constraint::leaves(edges))
    }

    pub fn leaf_edges(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Constraint::Leaf(e) => out.push(*e),
            Constraint::Node(_, ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }
}

/// Unconstrained trees for every vertex of `g`.
pub fn unconstrained(g: &Graph) -> Vec<Constraint> {
    (0..g.n()).map(|v| Constraint::free(g.incident(v))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Reject {
    #[error("constraint tree of vertex {0} does not match its incident edges")]
    Malformed(usize),
    #[error("auxiliary graph is not planar")]
    NonPlanarAux,
    #[error("no orientation of the rigid components satisfies the constraints")]
    UnsatisfiableOrientation,
}

/// Checks that the leaves of each tree are exactly the incident edges, that
/// inner nodes are nonempty and that there are no self-loops.
pub fn well_formed(g: &Graph, trees: &[Constraint]) -> Result<(), Reject> {
    if trees.len() != g.n() {
        return Err(Reject::Malformed(trees.len().min(g.n())));
    }
    for v in 0..g.n() {
        fn nonempty(c: &Constraint) -> bool {
            match c {
                Constraint::Leaf(_) => true,
                Constraint::Node(_, ch) => !ch.is_empty() && ch.iter().all(nonempty),
            }
        }
        let t = &trees[v];
        let is_root_node = matches!(t, Constraint::Node(..));
        let inner_ok = match t {
            Constraint::Node(_, ch) => ch.iter().all(nonempty),
            Constraint::Leaf(_) => false,
        };
        let mut a = t.leaf_edges();
        let mut b = g.incident(v).to_vec();
        a.sort_unstable();
        b.sort_unstable();
        let loops = g.incident(v).iter().any(|&e| g.other(e, v) == v);
        if !is_root_node || !inner_ok || a != b || loops {
            return Err(Reject::Malformed(v));
        }
    }
    Ok(())
}

/// Simplified equivalent tree: inner nodes with one child are replaced by
/// that child (at the root as well), and a non-group root with at most two
/// children becomes a group (its order is then meaningless).
pub fn normalize(t: &Constraint) -> Constraint {
    fn inner(c: &Constraint) -> Constraint {
        match c {
            Constraint::Leaf(e) => Constraint::Leaf(*e),
            Constraint::Node(k, ch) => {
                if ch.len() == 1 {
                    return inner(&ch[0]);
                }
                Constraint::Node(*k, ch.iter().map(inner).collect())
            }
        }
    }
    let mut t = t;
    while let Constraint::Node(_, ch) = t {
        match ch.as_slice() {
            [only @ Constraint::Node(..)] => t = only,
            _ => break,
        }
    }
    match t {
        Constraint::Leaf(e) => Constraint::Leaf(*e),
        Constraint::Node(k, ch) => {
            let ch: Vec<Constraint> = ch.iter().map(inner).collect();
            let k = if ch.len() <= 2 { ConstraintKind::Group } else { *k };
            Constraint::Node(k, ch)
        }
    }
}

/// Tests whether `g` has a planar embedding satisfying `trees` and returns
/// one. Rotations are clockwise.
pub fn test_constrained(g: &Graph, trees: &[Constraint]) -> Result<Embedding, Reject> {
    test_constrained_with_wheels(g, trees, &[])
}

/// Like [`test_constrained`], but additionally requires each wheel subgraph
/// of `g` given as `(hub, cycle)` to be embedded with the hub seeing the cycle
/// in the given clockwise order. Hub and cycle vertices must be
/// unconstrained.
pub fn test_constrained_with_wheels(
    g: &Graph,
    trees: &[Constraint],
    wheels: &[(usize, Vec<usize>)],
) -> Result<Embedding, Reject> {
    well_formed(g, trees)?;
    let aux = build_aux_graph(g, trees);
    let mut specs = aux.gadget_wheels();
    for (hub, cycle) in wheels {
        specs.push(aux.native_wheel(g, *hub, cycle).ok_or(Reject::Malformed(*hub))?);
    }
    let h_emb = embed_with_wheels(&aux.graph, &specs)?;
    Ok(aux.contract(g, &h_emb))
}

/// Direction in which the items of a node appear around its vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    Forward,
    Backward,
    Vacuous,
}

/// Checks `emb` against every tree literally, by walking each tree against
/// the rotation at its vertex. Does not check planarity.
pub fn check_constraints(g: &Graph, trees: &[Constraint], emb: &Embedding) -> bool {
    let mut colors: HashMap<u32, Direction> = HashMap::new();
    for v in 0..g.n() {
        let rot = emb.rotation(v);
        let pos: HashMap<usize, usize> = rot.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        if pos.len() != rot.len() || rot.len() != g.degree(v) {
            return false;
        }
        let mut dirs = Vec::new();
        if !check_node(&trees[v], true, &pos, rot.len(), &mut dirs) {
            return false;
        }
        for (color, d) in dirs {
            match colors.get(&color) {
                Some(&prev) if prev != d => return false,
                _ => {
                    colors.insert(color, d);
                }
            }
        }
    }
    true
}

/// Leaves of a node are contiguous in a rotation of length `n`.
fn contiguous(positions: &[usize], n: usize) -> bool {
    if positions.len() >= n || positions.is_empty() {
        return true;
    }
    let mut mark = vec![false; n];
    for &p in positions {
        mark[p] = true;
    }
    // Count boundaries where a marked position follows an unmarked one.
    (0..n).filter(|&i| mark[i] && !mark[(i + n - 1) % n]).count() == 1
}

fn check_node(
    c: &Constraint,
    root: bool,
    pos: &HashMap<usize, usize>,
    n: usize,
    dirs: &mut Vec<(u32, Direction)>,
) -> bool {
    let Constraint::Node(kind, children) = c else {
        return true;
    };
    let leaves = c.leaf_edges();
    let ps: Vec<usize> = leaves.iter().map(|e| pos[e]).collect();
    if !root && !contiguous(&ps, n) {
        return false;
    }
    if !children.iter().all(|ch| check_node(ch, false, pos, n, dirs)) {
        return false;
    }
    if *kind == ConstraintKind::Group {
        return true;
    }
    // Item of each rotation position: a child index, the rest, or nothing.
    let rest = children.len();
    let mut item = vec![rest; n];
    for (i, ch) in children.iter().enumerate() {
        for e in ch.leaf_edges() {
            item[pos[&e]] = i;
        }
    }
    let items = children.len() + usize::from(!root && leaves.len() < n);
    let dir = if items <= 2 {
        Direction::Vacuous
    } else {
        let mut seq: Vec<usize> = Vec::new();
        for i in 0..n {
            if i == 0 || item[i] != item[i - 1] {
                seq.push(item[i]);
            }
        }
        if seq.len() > 1 && seq[0] == *seq.last().unwrap() {
            seq.pop();
        }
        let forward: Vec<usize> = (0..items).collect();
        let backward: Vec<usize> = forward.iter().rev().copied().collect();
        if crate::embedding::cyclically_equal(&forward, &seq) {
            Direction::Forward
        } else if crate::embedding::cyclically_equal(&backward, &seq) {
            Direction::Backward
        } else {
            return false;
        }
    };
    match kind {
        ConstraintKind::Oriented => dir != Direction::Backward,
        ConstraintKind::Mirror => true,
        ConstraintKind::Synchronized(color) => {
            if dir != Direction::Vacuous {
                dirs.push((*color, dir));
            }
            true
        }
        ConstraintKind::Group => true,
    }
}

#[cfg(test)]
mod tests;

/// Random constraint trees for `g`: each vertex's edges are shuffled and
/// recursively grouped under nodes of random kinds, with synchronized colors
/// drawn from `0..colors`.
pub fn random_constraints<R: rand::Rng>(g: &Graph, colors: u32, rng: &mut R) -> Vec<Constraint> {
    use rand::seq::SliceRandom;
    fn kind<R: rand::Rng>(colors: u32, rng: &mut R) -> ConstraintKind {
        match rng.gen_range(0..4) {
            0 => ConstraintKind::Oriented,
            1 => ConstraintKind::Mirror,
            2 if colors > 0 => ConstraintKind::Synchronized(rng.gen_range(0..colors)),
            _ => ConstraintKind::Group,
        }
    }
    fn grow<R: rand::Rng>(items: Vec<Constraint>, colors: u32, rng: &mut R) -> Vec<Constraint> {
        if items.len() <= 2 || rng.gen_bool(0.4) {
            return items;
        }
        let a = rng.gen_range(0..items.len() - 1);
        let b = rng.gen_range(a + 2..=items.len());
        let mut items = items;
        let inner: Vec<Constraint> = items.drain(a..b).collect();
        let node = Constraint::Node(kind(colors, rng), grow(inner, colors, rng));
        items.insert(a, node);
        grow(items, colors, rng)
    }
    (0..g.n())
        .map(|v| {
            let mut edges = g.incident(v).to_vec();
            edges.shuffle(rng);
            let children = grow(Constraint::leaves(&edges), colors, rng);
            Constraint::Node(kind(colors, rng), children)
        })
        .collect()
}
