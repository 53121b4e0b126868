//! JSON witnesses: permutations, sides and the rotation system of the wheel
//! reduction.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::model::{ClusteredGraph, Side};
use crate::oracle::Witness;
use crate::wheel::position_slot;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideEntry {
    /// Edge endpoints by name, in stored order.
    pub edge: [String; 2],
    pub cluster: String,
    pub side: Side,
}

/// Clockwise neighbours of one vertex of the wheel reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationEntry {
    pub vertex: String,
    pub clockwise: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub planar: bool,
    pub algorithm: String,
    pub model: String,
    /// Column order of each non-trivial cluster.
    pub permutations: BTreeMap<String, Vec<String>>,
    pub sides: Vec<SideEntry>,
    /// Wheel-reduction vertices are named after trivial vertices, `C/hub`
    /// for hubs and `C/v.X` for the copy of `v` on side `X` of cluster `C`.
    pub rotation_system: Vec<RotationEntry>,
}

impl WitnessDoc {
    /// A document for a non-planar verdict.
    pub fn rejected(g: &ClusteredGraph, algorithm: &str) -> Self {
        WitnessDoc {
            planar: false,
            algorithm: algorithm.to_string(),
            model: model(g).to_string(),
            permutations: BTreeMap::new(),
            sides: Vec::new(),
            rotation_system: Vec::new(),
        }
    }

    /// `g` must carry the sides the witness was computed for; `model` names
    /// the model of the input (free inputs get their sides from the run).
    pub fn accepted(g: &ClusteredGraph, w: &Witness, algorithm: &str, model: &str) -> Self {
        let name = |v: usize| g.vertex_names[v].clone();
        let permutations = (0..g.clusters.len())
            .filter(|&c| !g.is_trivial(c))
            .map(|c| (g.clusters[c].name.clone(), w.pi.0[c].iter().map(|&v| name(v)).collect()))
            .collect();
        let sides = g
            .sides
            .iter()
            .flatten()
            .map(|(&(e, c), &side)| SideEntry {
                edge: g.edges[e].map(name),
                cluster: g.clusters[c].name.clone(),
                side,
            })
            .collect();
        let red = &w.reduction;
        let mut host = vec![String::new(); red.graph.n()];
        for (v, img) in red.vertex_image.iter().enumerate() {
            if let Some(x) = img {
                host[*x] = name(v);
            }
        }
        for wh in red.wheels.iter().flatten() {
            let cname = &g.clusters[wh.cluster].name;
            host[wh.hub] = format!("{cname}/hub");
            for (p, &x) in wh.cycle.iter().enumerate() {
                let (j, side) = position_slot(wh.k(), p);
                host[x] = format!("{cname}/{}.{side}", name(wh.perm[j]));
            }
        }
        let rotation_system = (0..red.graph.n())
            .map(|v| RotationEntry {
                vertex: host[v].clone(),
                clockwise: w.embedding.neighbor_order(&red.graph, v).into_iter().map(|u| host[u].clone()).collect(),
            })
            .collect();
        WitnessDoc {
            planar: true,
            algorithm: algorithm.to_string(),
            model: model.to_string(),
            permutations,
            sides,
            rotation_system,
        }
    }
}

fn model(g: &ClusteredGraph) -> &'static str {
    if g.sides.is_some() {
        "fixed"
    } else {
        "free"
    }
}
