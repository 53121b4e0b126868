//! Seeded random instances.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::model::{ClusteredGraph, Cluster, Side, SideMap};

/// Shape of the frame graph of a generated instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameShape {
    /// Biconnected series-parallel.
    Sp,
    /// Every block series-parallel.
    Partial2Tree,
    /// Planar, usually with rigid parts.
    Planar,
}

impl FromStr for FrameShape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sp" => Ok(FrameShape::Sp),
            "partial2tree" => Ok(FrameShape::Partial2Tree),
            "planar" => Ok(FrameShape::Planar),
            _ => Err(format!("unknown frame shape {s:?} (expected sp, partial2tree or planar)")),
        }
    }
}

impl fmt::Display for FrameShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrameShape::Sp => "sp",
            FrameShape::Partial2Tree => "partial2tree",
            FrameShape::Planar => "planar",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenParams {
    /// Number of clusters (frame vertices).
    pub clusters: usize,
    /// Maximum cluster size.
    pub k: usize,
    /// Cap on the number of non-trivial clusters.
    pub max_nontrivial: usize,
    /// Probability that an eligible cluster becomes non-trivial.
    pub nontrivial_prob: f64,
    pub shape: FrameShape,
    /// When false, non-trivial clusters may be adjacent and frame edges may
    /// stand for several edges.
    pub light: bool,
    /// Probability of each intra-cluster edge.
    pub intra_prob: f64,
}

impl GenParams {
    pub fn new(clusters: usize, k: usize, shape: FrameShape) -> Self {
        GenParams {
            clusters,
            k,
            max_nontrivial: usize::MAX,
            nontrivial_prob: 0.5,
            shape,
            light: true,
            intra_prob: 0.3,
        }
    }
}

/// A random instance with a full side assignment.
pub fn gen_random(params: &GenParams, seed: u64) -> ClusteredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let frame = match params.shape {
        FrameShape::Sp => random_sp_frame(params.clusters, &mut rng),
        FrameShape::Partial2Tree => random_partial_2_tree(params.clusters, &mut rng),
        FrameShape::Planar => random_planar_frame(params.clusters, &mut rng),
    };
    populate(&frame, params, &mut rng)
}

/// Biconnected simple series-parallel graph on `n` vertices, grown from a
/// triangle by subdividing edges and adding paths of length two.
pub fn random_sp_frame<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        let mut g = Graph::new(n);
        if n == 2 {
            g.add_edge(0, 1);
        }
        return g;
    }
    let mut edges = vec![[0, 1], [1, 2], [2, 0]];
    for x in 3..n {
        let i = rng.gen_range(0..edges.len());
        let [u, v] = edges[i];
        if rng.gen_bool(0.5) {
            edges[i] = [u, x];
            edges.push([x, v]);
        } else {
            edges.push([u, x]);
            edges.push([x, v]);
        }
    }
    Graph::from_edges(n, &edges)
}

/// Series-parallel blocks (some of them single edges) glued at cut vertices.
pub fn random_partial_2_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new(0);
    if n == 0 {
        return g;
    }
    g.add_vertex();
    while g.n() < n {
        let at = rng.gen_range(0..g.n());
        let size = rng.gen_range(2..=(n - g.n() + 1).min(6));
        let block = random_sp_frame(size, rng);
        let mut map = vec![at];
        for _ in 1..size {
            map.push(g.add_vertex());
        }
        for &[u, v] in block.edges() {
            g.add_edge(map[u], map[v]);
        }
    }
    g
}

/// Planar graph on `n` vertices: a stacked triangulation with some edges
/// removed.
pub fn random_planar_frame<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n <= 3 {
        return random_sp_frame(n, rng);
    }
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut edges = vec![[0, 1], [1, 2], [2, 0]];
    for x in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        edges.extend([[a, x], [b, x], [c, x]]);
        faces.extend([[a, b, x], [b, c, x], [c, a, x]]);
    }
    let keep: Vec<[usize; 2]> = edges.into_iter().filter(|_| rng.gen_bool(0.75)).collect();
    Graph::from_edges(n, &keep)
}

/// Turns a frame into a clustered graph: picks non-trivial clusters, routes
/// each frame edge to a random vertex of each non-trivial endpoint with a
/// random side, and adds random intra-cluster edges.
pub fn populate<R: Rng>(frame: &Graph, params: &GenParams, rng: &mut R) -> ClusteredGraph {
    let n = frame.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut size = vec![1usize; n];
    let mut count = 0;
    for &c in &order {
        if params.k < 2 || count >= params.max_nontrivial {
            break;
        }
        let blocked = params.light && frame.neighbors(c).any(|d| size[d] > 1);
        if !blocked && rng.gen_bool(params.nontrivial_prob) {
            size[c] = rng.gen_range(2..=params.k);
            count += 1;
        }
    }
    let width = n.saturating_sub(1).to_string().len();
    let mut names = Vec::new();
    let mut clusters = Vec::new();
    for c in 0..n {
        let cname = format!("c{c:0width$}");
        let start = names.len();
        if size[c] == 1 {
            names.push(cname.clone());
        } else {
            for j in 0..size[c] {
                names.push(format!("{cname}.{j}"));
            }
        }
        clusters.push(Cluster { name: cname, vertices: (start..names.len()).collect() });
    }
    let mut edges: Vec<[usize; 2]> = Vec::new();
    let mut sides = SideMap::new();
    for &[a, b] in frame.edges() {
        let copies = if params.light || size[a] == 1 && size[b] == 1 { 1 } else { rng.gen_range(1..=2) };
        for _ in 0..copies {
            let u = clusters[a].vertices[rng.gen_range(0..size[a])];
            let v = clusters[b].vertices[rng.gen_range(0..size[b])];
            if edges.iter().any(|&[x, y]| (x, y) == (u, v) || (x, y) == (v, u)) {
                continue;
            }
            let e = edges.len();
            edges.push([u, v]);
            for c in [a, b] {
                if size[c] > 1 {
                    sides.insert((e, c), Side::ALL[rng.gen_range(0..4)]);
                }
            }
        }
    }
    for cl in &clusters {
        for i in 0..cl.vertices.len() {
            for j in i + 1..cl.vertices.len() {
                if rng.gen_bool(params.intra_prob) {
                    edges.push([cl.vertices[i], cl.vertices[j]]);
                }
            }
        }
    }
    ClusteredGraph::new(names, edges, clusters, Some(sides))
}

/// Frame for scaling runs: a chain of `n` clusters where consecutive
/// clusters are joined in series and every few steps a parallel bypass is
/// added, so the SPQ tree mixes S- and P-nodes.
pub fn sp_chain(n: usize, k: usize, seed: u64) -> ClusteredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for i in 0..n.saturating_sub(1) {
        g.add_edge(i, i + 1);
    }
    let mut i = 0;
    while i + 4 < n {
        g.add_edge(i, i + 4);
        i += 4;
    }
    if n > 3 {
        g.add_edge(0, n - 1);
    }
    let mut params = GenParams::new(n, k, FrameShape::Sp);
    params.nontrivial_prob = 1.0;
    let inst = populate(&g, &params, &mut rng);
    embed_sides(&inst, &mut rng)
}

/// Re-routes the inter-cluster edges of a light graph with a planar frame so
/// that the result is planar: around each non-trivial cluster the edges take
/// random wheel positions that increase along the rotation of a planar
/// embedding of the frame, starting at a random edge.
pub fn embed_sides<R: Rng>(g: &ClusteredGraph, rng: &mut R) -> ClusteredGraph {
    let fg = g.frame().expect("light graph");
    let emb = crate::decomposition::planar_embed(&fg.graph).expect("planar frame");
    let mut edges = g.edges.clone();
    let mut sides = SideMap::new();
    for c in 0..g.clusters.len() {
        if g.is_trivial(c) {
            continue;
        }
        let k = g.cluster_size(c);
        let members = g.sorted_cluster(c);
        let rot = emb.rotation(c);
        let mut ps: Vec<usize> = (0..rot.len()).map(|_| rng.gen_range(0..4 * k)).collect();
        ps.sort_unstable();
        let shift = if rot.is_empty() { 0 } else { rng.gen_range(0..rot.len()) };
        for (i, &fe) in rot.iter().enumerate() {
            let e = fg.source_edge[fe];
            let (j, side) = crate::wheel::position_slot(k, ps[(i + shift) % rot.len()]);
            let old = g.endpoint_in(e, c).unwrap();
            let end = if edges[e][0] == old { 0 } else { 1 };
            edges[e][end] = members[j];
            sides.insert((e, c), side);
        }
    }
    ClusteredGraph::new(g.vertex_names.clone(), edges, g.clusters.clone(), Some(sides))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{is_partial_2_tree, planar_embed};

    #[test]
    fn same_seed_same_instance() {
        let p = GenParams::new(12, 3, FrameShape::Planar);
        assert_eq!(gen_random(&p, 5), gen_random(&p, 5));
    }

    #[test]
    fn shapes_hold() {
        for seed in 0..50 {
            for shape in [FrameShape::Sp, FrameShape::Partial2Tree, FrameShape::Planar] {
                let p = GenParams::new(10, 3, shape);
                let g = gen_random(&p, seed);
                assert!(g.validate().is_empty(), "{:?}", g.validate());
                assert!(g.is_light());
                assert!(g.max_cluster_size() <= 3);
                let f = g.frame().unwrap().graph;
                assert!(planar_embed(&f).is_some());
                match shape {
                    FrameShape::Sp => {
                        assert!(is_partial_2_tree(&f));
                        assert!(crate::decomposition::biconnected_components(&f).len() == 1);
                    }
                    FrameShape::Partial2Tree => assert!(is_partial_2_tree(&f)),
                    FrameShape::Planar => {}
                }
            }
        }
    }

    #[test]
    fn embedded_sides_are_planar() {
        for seed in 0..40 {
            let p = GenParams::new(7, 3, FrameShape::Partial2Tree);
            let g = gen_random(&p, seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = embed_sides(&g, &mut rng);
            assert!(h.validate().is_empty());
            assert!(crate::oracle::oracle_fixed(&h, crate::oracle::DEFAULT_BUDGET).unwrap().planar(), "seed {seed}");
        }
    }

    #[test]
    fn heavy_instances_validate() {
        for seed in 0..30 {
            let mut p = GenParams::new(7, 3, FrameShape::Partial2Tree);
            p.light = false;
            let g = gen_random(&p, seed);
            assert!(g.validate().is_empty());
        }
    }
}
