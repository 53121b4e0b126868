//! Fixed-sides testing for clusters of size at most two.
//!
//! Every cluster `{v', v''}` becomes a 13-vertex tree: a center with an
//! oriented order over four side vertices (top, right, bottom, left), each
//! side vertex with a synchronized mirror order over the center and two
//! leaves, one per cluster vertex. All four side vertices of a cluster share
//! a color, so the gadget has exactly two embeddings, one per permutation.
//! Edges attach to the leaf of their endpoint and side.

use thiserror::Error;

use crate::constrained::{test_constrained, Constraint};
use crate::embedding::{cyclically_equal, Embedding};
use crate::graph::Graph;
use crate::model::{ClusteredGraph, ModelError, PermutationAssignment, Side};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum K2Error {
    #[error("cluster {0} has more than two vertices")]
    ClusterTooLarge(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// The gadget of one size-2 cluster inside the auxiliary graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiGadget {
    pub cluster: usize,
    /// Cluster vertices `v'` and `v''` (name order).
    pub pair: [usize; 2],
    pub center: usize,
    /// Side vertices in `T, R, B, L` order.
    pub sides: [usize; 4],
    /// Leaves per side: `[v'_X, v''_X]`.
    pub leaves: [[usize; 2]; 4],
    /// Tree edge from the center to each side vertex.
    pub center_edges: [usize; 4],
    /// Tree edges from each side vertex to its two leaves.
    pub leaf_edges: [[usize; 2]; 4],
}

/// The auxiliary graph with its constraint trees.
#[derive(Clone, Debug)]
pub struct K2Instance {
    pub graph: Graph,
    pub trees: Vec<Constraint>,
    /// Gadget of each cluster (`None` for trivial clusters).
    pub gadgets: Vec<Option<ChiGadget>>,
    /// Vertex standing for each trivial cluster.
    pub point: Vec<Option<usize>>,
    /// Auxiliary edge of each inter-cluster edge.
    pub image: Vec<Option<usize>>,
}

/// Outcome of a run.
#[derive(Clone, Debug)]
pub struct K2Verdict {
    pub pi: Option<PermutationAssignment>,
    /// The accepted embedding of the auxiliary graph.
    pub embedding: Option<Embedding>,
    pub instance: K2Instance,
}

impl K2Verdict {
    pub fn planar(&self) -> bool {
        self.pi.is_some()
    }
}

/// Builds the auxiliary graph: one vertex per trivial cluster and one gadget
/// per size-2 cluster, colored by cluster index.
pub fn build_k2_instance(g: &ClusteredGraph) -> Result<K2Instance, K2Error> {
    if let Some(v) = g.validate().into_iter().next() {
        return Err(ModelError::Invalid(v).into());
    }
    if g.sides.is_none() {
        return Err(ModelError::NoSides.into());
    }
    if let Some(c) = g.clusters.iter().find(|c| c.vertices.len() > 2) {
        return Err(K2Error::ClusterTooLarge(c.name.clone()));
    }
    let mut h = Graph::new(0);
    let mut gadgets = vec![None; g.clusters.len()];
    let mut point = vec![None; g.clusters.len()];
    for c in 0..g.clusters.len() {
        if g.is_trivial(c) {
            point[c] = Some(h.add_vertex());
            continue;
        }
        let pair: [usize; 2] = g.sorted_cluster(c).try_into().unwrap();
        let center = h.add_vertex();
        let sides = [(); 4].map(|_| h.add_vertex());
        let leaves = [(); 4].map(|_| [h.add_vertex(), h.add_vertex()]);
        let center_edges = [0, 1, 2, 3].map(|x| h.add_edge(center, sides[x]));
        let leaf_edges = [0, 1, 2, 3].map(|x| [h.add_edge(sides[x], leaves[x][0]), h.add_edge(sides[x], leaves[x][1])]);
        gadgets[c] = Some(ChiGadget { cluster: c, pair, center, sides, leaves, center_edges, leaf_edges });
    }
    let mut image = vec![None; g.m()];
    for e in g.inter_edges() {
        let ends = g.edges[e].map(|v| {
            let c = g.cluster_of(v);
            match &gadgets[c] {
                None => point[c].unwrap(),
                Some(gd) => {
                    let i = usize::from(gd.pair[1] == v);
                    gd.leaves[g.side(e, c).unwrap().index()][i]
                }
            }
        });
        image[e] = Some(h.add_edge(ends[0], ends[1]));
    }
    let mut trees: Vec<Constraint> = (0..h.n()).map(|v| Constraint::free(h.incident(v))).collect();
    for gd in gadgets.iter().flatten() {
        trees[gd.center] = Constraint::oriented(Constraint::leaves(&gd.center_edges));
        for x in 0..4 {
            let [a, b] = gd.leaf_edges[x];
            // Top and right read v' then v''; bottom and left the other way.
            let order = if x < 2 { [gd.center_edges[x], a, b] } else { [gd.center_edges[x], b, a] };
            trees[gd.sides[x]] = Constraint::synchronized(gd.cluster as u32, Constraint::leaves(&order));
        }
    }
    Ok(K2Instance { graph: h, trees, gadgets, point, image })
}

/// Whether the gadget is embedded as the permutation `(v', v'')` at side `x`.
pub fn reads_forward(gd: &ChiGadget, emb: &Embedding, x: Side) -> bool {
    let i = x.index();
    let [a, b] = gd.leaf_edges[i];
    let order = if i < 2 { [gd.center_edges[i], a, b] } else { [gd.center_edges[i], b, a] };
    cyclically_equal(&order, emb.rotation(gd.sides[i]))
}

/// Tests `g` (clusters of size at most two, sides fixed).
pub fn test_k2(g: &ClusteredGraph) -> Result<K2Verdict, K2Error> {
    let instance = build_k2_instance(g)?;
    let Ok(emb) = test_constrained(&instance.graph, &instance.trees) else {
        return Ok(K2Verdict { pi: None, embedding: None, instance });
    };
    let pi = (0..g.clusters.len())
        .map(|c| match &instance.gadgets[c] {
            None => g.clusters[c].vertices.clone(),
            Some(gd) if reads_forward(gd, &emb, Side::Top) => gd.pair.to_vec(),
            Some(gd) => vec![gd.pair[1], gd.pair[0]],
        })
        .collect();
    Ok(K2Verdict { pi: Some(PermutationAssignment(pi)), embedding: Some(emb), instance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen_random, FrameShape, GenParams};
    use crate::oracle::{oracle_fixed, test_assignment, DEFAULT_BUDGET};

    #[test]
    fn gadget_routes_edges_to_leaves() {
        let g = ClusteredGraph::builder()
            .cluster("A", &["p", "q"])
            .point("x")
            .point("y")
            .edge_at("p", Side::Top, "x")
            .edge_at("q", Side::Top, "y")
            .with_sides()
            .build();
        let inst = build_k2_instance(&g).unwrap();
        let a = g.cluster_index("A").unwrap();
        let gd = inst.gadgets[a].as_ref().unwrap();
        assert_eq!(inst.graph.n(), 13 + 2);
        let e1 = inst.image[0].unwrap();
        let e2 = inst.image[1].unwrap();
        assert!(inst.graph.ends(e1).contains(&gd.leaves[0][0]));
        assert!(inst.graph.ends(e2).contains(&gd.leaves[0][1]));
    }

    #[test]
    fn bare_gadget_is_a_tree() {
        let g = ClusteredGraph::builder().cluster("A", &["p", "q"]).with_sides().build();
        let inst = build_k2_instance(&g).unwrap();
        assert_eq!((inst.graph.n(), inst.graph.m()), (13, 12));
        let v = test_k2(&g).unwrap();
        assert!(v.planar());
    }

    #[test]
    fn large_cluster_is_rejected() {
        let g = ClusteredGraph::builder().cluster("A", &["p", "q", "r"]).with_sides().build();
        assert_eq!(test_k2(&g).unwrap_err(), K2Error::ClusterTooLarge("A".into()));
    }

    #[test]
    fn sides_read_the_same_permutation() {
        for seed in 0..60 {
            let p = GenParams::new(6, 2, FrameShape::Planar);
            let g = gen_random(&p, seed);
            let v = test_k2(&g).unwrap();
            if let Some(emb) = &v.embedding {
                for gd in v.instance.gadgets.iter().flatten() {
                    let top = reads_forward(gd, emb, Side::Top);
                    for x in Side::ALL {
                        assert_eq!(reads_forward(gd, emb, x), top);
                    }
                }
            }
        }
    }

    #[test]
    fn agrees_with_oracle() {
        let mut planar = 0;
        for seed in 0..400 {
            let clusters = 3 + (seed % 5) as usize;
            let mut p = GenParams::new(clusters, 2, FrameShape::Planar);
            p.nontrivial_prob = 0.8;
            p.light = seed % 3 != 0;
            let g = gen_random(&p, seed);
            let got = test_k2(&g).unwrap();
            let want = oracle_fixed(&g, DEFAULT_BUDGET).unwrap();
            assert_eq!(got.planar(), want.planar(), "seed {seed}");
            if let Some(pi) = &got.pi {
                assert!(test_assignment(&g, pi).is_some(), "seed {seed}");
                planar += 1;
            }
        }
        assert!(planar > 20 && planar < 380, "{planar}");
    }
}
