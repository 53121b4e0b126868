//! Orientation variables, clauses and re-embedding of the auxiliary graph.

use std::collections::{BTreeMap, HashMap};

use crate::decomposition::{biconnected_components, planar_embed, NodeKind, SkeletonLink, SpqrTree};
use crate::embedding::Embedding;
use crate::graph::Graph;

use super::twosat::{Lit, TwoSat};
use super::Reject;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WheelRule {
    /// Must be clockwise.
    Oriented,
    /// Either orientation.
    Mirror,
    /// All wheels of the color share an orientation.
    Synchronized(u32),
}

/// A wheel subgraph with a rule on its orientation. The wheel is clockwise
/// when the hub sees slots `0, 1, ..` in clockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WheelSpec {
    pub hub: usize,
    pub slots: usize,
    /// Slot reached through each spoke.
    pub spoke_slot: HashMap<usize, usize>,
    pub rule: WheelRule,
}

impl WheelSpec {
    /// Whether `rotation` (the hub's, as edge ids) is clockwise.
    pub fn clockwise_in(&self, rotation: &[usize]) -> bool {
        let seq: Vec<usize> = rotation.iter().map(|f| self.spoke_slot[f]).collect();
        (0..seq.len()).all(|i| seq[(i + 1) % seq.len()] == (seq[i] + 1) % self.slots)
    }
}

/// The orientation formula of a graph with wheel requirements.
#[derive(Clone, Debug)]
pub struct OrientationFormula {
    /// Reference embedding; a variable is true when its skeleton keeps the
    /// orientation it has here.
    pub reference: Embedding,
    pub formula: TwoSat,
    /// Variable of each constrained wheel (`None` for mirror wheels) and
    /// whether the wheel is clockwise in the reference embedding.
    pub wheel_var: Vec<(Option<usize>, bool)>,
    /// Rigid node of each variable, as `(block, node)`.
    pub var_node: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    trees: BTreeMap<usize, SpqrTree>,
}

/// Builds the variables and clauses. Each oriented or synchronized wheel
/// lives in exactly one rigid skeleton; skeletons get one variable each.
pub fn orientation_formula(h: &Graph, wheels: &[WheelSpec]) -> Result<OrientationFormula, Reject> {
    let reference = planar_embed(h).ok_or(Reject::NonPlanarAux)?;
    let blocks = biconnected_components(h);
    let mut block_of = vec![usize::MAX; h.m()];
    for (b, es) in blocks.iter().enumerate() {
        for &e in es {
            block_of[e] = b;
        }
    }
    let mut trees: BTreeMap<usize, SpqrTree> = BTreeMap::new();
    let mut node_var: HashMap<(usize, usize), usize> = HashMap::new();
    let mut formula = TwoSat::new(0);
    let mut var_node = Vec::new();
    let mut wheel_var = Vec::new();
    for w in wheels {
        let cw = w.clockwise_in(reference.rotation(w.hub));
        if w.rule == WheelRule::Mirror {
            wheel_var.push((None, cw));
            continue;
        }
        let b = block_of[h.incident(w.hub)[0]];
        let tree = trees
            .entry(b)
            .or_insert_with(|| SpqrTree::build(h, &blocks[b], blocks[b][0]).expect("block is biconnected"));
        let node = rigid_node_of(tree, w.hub);
        let var = *node_var.entry((b, node)).or_insert_with(|| {
            var_node.push((b, node));
            formula.add_var()
        });
        wheel_var.push((Some(var), cw));
    }
    let mut color_rep: HashMap<u32, (usize, bool)> = HashMap::new();
    for (w, &(var, cw)) in wheels.iter().zip(&wheel_var) {
        let Some(x) = var else { continue };
        match w.rule {
            WheelRule::Oriented => formula.unit(if cw { Lit::pos(x) } else { Lit::neg(x) }),
            WheelRule::Synchronized(c) => match color_rep.get(&c) {
                None => {
                    color_rep.insert(c, (x, cw));
                }
                Some(&(y, cw_y)) => {
                    if cw == cw_y {
                        formula.equal(x, y);
                    } else {
                        formula.differ(x, y);
                    }
                }
            },
            WheelRule::Mirror => {}
        }
    }
    Ok(OrientationFormula { reference, formula, wheel_var, var_node, blocks, trees })
}

fn rigid_node_of(tree: &SpqrTree, hub: usize) -> usize {
    let node = (0..tree.nodes.len())
        .find(|&x| {
            tree.nodes[x].kind != NodeKind::Q
                && tree.nodes[x].skeleton.iter().any(|se| se.ends.contains(&hub))
        })
        .expect("hub lies in some skeleton");
    assert_eq!(tree.nodes[node].kind, NodeKind::R, "wheel outside a rigid skeleton");
    node
}

/// A planar embedding of `h` meeting every wheel requirement.
pub fn embed_with_wheels(h: &Graph, wheels: &[WheelSpec]) -> Result<Embedding, Reject> {
    let of = orientation_formula(h, wheels)?;
    let value = of.formula.solve().ok_or(Reject::UnsatisfiableOrientation)?;
    Ok(of.embed(h, wheels, &value))
}

impl OrientationFormula {
    /// Embedding of `h` where each rigid skeleton keeps its reference
    /// orientation iff its variable is true.
    pub fn embed(&self, h: &Graph, wheels: &[WheelSpec], value: &[bool]) -> Embedding {
        let mut block_rot: BTreeMap<usize, HashMap<usize, Vec<usize>>> = BTreeMap::new();
        for (&b, tree) in &self.trees {
            let mut rots = tree.skeleton_rotations(|_| false).expect("planar skeletons");
            for (w, &(var, cw)) in wheels.iter().zip(&self.wheel_var) {
                let Some(x) = var else { continue };
                let (wb, node) = self.var_node[x];
                if wb != b {
                    continue;
                }
                let hub_rot: Vec<usize> = rots[node][&w.hub]
                    .iter()
                    .map(|&i| match tree.nodes[node].skeleton[i].link {
                        SkeletonLink::Real(f) => f,
                        SkeletonLink::Virtual { .. } => unreachable!("spokes are real skeleton edges"),
                    })
                    .collect();
                let want = if value[x] { cw } else { !cw };
                if w.clockwise_in(&hub_rot) != want {
                    for r in rots[node].values_mut() {
                        r.reverse();
                    }
                }
            }
            block_rot.insert(b, tree.compose_rotations(&rots));
        }
        let mut rotation = vec![Vec::new(); h.n()];
        let mut block_of = vec![usize::MAX; h.m()];
        for (b, es) in self.blocks.iter().enumerate() {
            for &e in es {
                block_of[e] = b;
            }
        }
        for v in 0..h.n() {
            let mut seen: Vec<usize> = h.incident(v).iter().map(|&e| block_of[e]).collect();
            seen.sort_unstable();
            seen.dedup();
            for b in seen {
                match block_rot.get(&b) {
                    Some(r) => rotation[v].extend(r[&v].iter().copied()),
                    None => rotation[v].extend(
                        self.reference.rotation(v).iter().copied().filter(|&e| block_of[e] == b),
                    ),
                }
            }
        }
        Embedding::new(rotation)
    }
}
