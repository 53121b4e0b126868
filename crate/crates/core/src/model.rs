//! Flat clustered graphs, side assignments, light reduction and frames.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Side of a matrix. The derived order is the canonical one: T < R < B < L.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Top,
    Right,
    Bottom,
    Left,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Top, Side::Right, Side::Bottom, Side::Left];

    pub fn letter(self) -> char {
        match self {
            Side::Top => 'T',
            Side::Right => 'R',
            Side::Bottom => 'B',
            Side::Left => 'L',
        }
    }

    pub fn from_letter(c: char) -> Option<Side> {
        match c {
            'T' => Some(Side::Top),
            'R' => Some(Side::Right),
            'B' => Some(Side::Bottom),
            'L' => Some(Side::Left),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub name: String,
    pub vertices: Vec<usize>,
}

/// Side per `(edge, cluster)` incidence.
pub type SideMap = BTreeMap<(usize, usize), Side>;

/// A flat clustered graph `G = (V, E, C, Φ)`.
///
/// Vertices and edges are dense indices; names are kept for I/O. The value is
/// not validated on construction, see [`ClusteredGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusteredGraph {
    pub vertex_names: Vec<String>,
    pub edges: Vec<[usize; 2]>,
    pub clusters: Vec<Cluster>,
    /// Side assignment, keyed by `(edge, cluster of the endpoint)`.
    pub sides: Option<SideMap>,
    cluster_of: Vec<usize>,
}

/// One broken invariant of a [`ClusteredGraph`].
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("vertex {0} belongs to no cluster")]
    Unclustered(String),
    #[error("vertex {0} belongs to more than one cluster")]
    MultiplyClustered(String),
    #[error("cluster {0} is empty")]
    EmptyCluster(String),
    #[error("duplicate cluster name {0}")]
    DuplicateClusterName(String),
    #[error("duplicate vertex name {0}")]
    DuplicateVertexName(String),
    #[error("edge {0}-{1} references an unknown vertex")]
    UnknownVertex(usize, usize),
    #[error("self-loop at {0}")]
    SelfLoop(String),
    #[error("parallel edges between {0} and {1}")]
    ParallelEdge(String, String),
    #[error("no side for edge {0}-{1} at cluster {2}")]
    MissingSide(String, String, String),
    #[error("side given for edge {0}-{1} at cluster {2}, which is not a non-trivial endpoint cluster")]
    ExtraSide(String, String, String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("graph is not light")]
    NotLight,
    #[error("graph is invalid: {0}")]
    Invalid(Violation),
    #[error("side assignment is missing")]
    NoSides,
}

/// Frame graph: one vertex per cluster (vertex `i` is cluster `i`) and one
/// edge per inter-cluster edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameGraph {
    pub graph: Graph,
    /// Source inter-cluster edge of each frame edge.
    pub source_edge: Vec<usize>,
}

/// One permutation per cluster, indexed like `ClusteredGraph::clusters`.
/// Trivial clusters hold their single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PermutationAssignment(pub Vec<Vec<usize>>);

impl PermutationAssignment {
    /// The permutation that lists each cluster's vertices as stored.
    pub fn identity(g: &ClusteredGraph) -> Self {
        PermutationAssignment(g.clusters.iter().map(|c| c.vertices.clone()).collect())
    }

    pub fn is_valid_for(&self, g: &ClusteredGraph) -> bool {
        self.0.len() == g.clusters.len()
            && self.0.iter().zip(&g.clusters).all(|(p, c)| {
                let mut a = p.clone();
                let mut b = c.vertices.clone();
                a.sort_unstable();
                b.sort_unstable();
                a == b
            })
    }
}

impl ClusteredGraph {
    pub fn new(
        vertex_names: Vec<String>,
        edges: Vec<[usize; 2]>,
        clusters: Vec<Cluster>,
        sides: Option<SideMap>,
    ) -> Self {
        let mut cluster_of = vec![usize::MAX; vertex_names.len()];
        for (i, c) in clusters.iter().enumerate() {
            for &v in &c.vertices {
                if v < cluster_of.len() && cluster_of[v] == usize::MAX {
                    cluster_of[v] = i;
                }
            }
        }
        ClusteredGraph { vertex_names, edges, clusters, sides, cluster_of }
    }

    pub fn builder() -> Builder {
        Builder::default()
    }

    pub fn n(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn cluster_of(&self, v: usize) -> usize {
        self.cluster_of[v]
    }

    pub fn cluster_size(&self, c: usize) -> usize {
        self.clusters[c].vertices.len()
    }

    pub fn is_trivial(&self, c: usize) -> bool {
        self.clusters[c].vertices.len() <= 1
    }

    pub fn max_cluster_size(&self) -> usize {
        self.clusters.iter().map(|c| c.vertices.len()).max().unwrap_or(0)
    }

    pub fn is_inter(&self, e: usize) -> bool {
        let [u, v] = self.edges[e];
        self.cluster_of[u] != self.cluster_of[v]
    }

    pub fn inter_edges(&self) -> Vec<usize> {
        (0..self.m()).filter(|&e| self.is_inter(e)).collect()
    }

    pub fn intra_edges(&self) -> Vec<usize> {
        (0..self.m()).filter(|&e| !self.is_inter(e)).collect()
    }

    /// Side of `e` at cluster `c`.
    pub fn side(&self, e: usize, c: usize) -> Option<Side> {
        self.sides.as_ref().and_then(|s| s.get(&(e, c)).copied())
    }

    /// The endpoint of `e` in cluster `c`.
    pub fn endpoint_in(&self, e: usize, c: usize) -> Option<usize> {
        self.edges[e].into_iter().find(|&v| self.cluster_of[v] == c)
    }

    /// Non-trivial `(edge, cluster)` incidences of inter-cluster edges, sorted.
    pub fn side_domain(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for e in 0..self.m() {
            if !self.is_inter(e) {
                continue;
            }
            for v in self.edges[e] {
                let c = self.cluster_of[v];
                if !self.is_trivial(c) {
                    out.push((e, c));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Inter-cluster edges incident to cluster `c`.
    pub fn cluster_edges(&self, c: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for e in 0..self.m() {
            if self.is_inter(e) && self.edges[e].iter().any(|&v| self.cluster_of[v] == c) {
                out.push(e);
            }
        }
        out
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|n| n == name)
    }

    pub fn cluster_index(&self, name: &str) -> Option<usize> {
        self.clusters.iter().position(|c| c.name == name)
    }

    /// The underlying graph on all vertices and edges.
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.n(), &self.edges)
    }

    pub fn without_sides(&self) -> ClusteredGraph {
        let mut g = self.clone();
        g.sides = None;
        g
    }

    pub fn with_sides(&self, sides: SideMap) -> ClusteredGraph {
        let mut g = self.clone();
        g.sides = Some(sides);
        g
    }

    /// All broken invariants; empty iff the graph is well formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let name = |v: usize| self.vertex_names.get(v).cloned().unwrap_or_else(|| format!("#{v}"));
        let mut seen_names = BTreeSet::new();
        for n in &self.vertex_names {
            if !seen_names.insert(n) {
                out.push(Violation::DuplicateVertexName(n.clone()));
            }
        }
        let mut seen_clusters = BTreeSet::new();
        let mut count = vec![0usize; self.n()];
        for c in &self.clusters {
            if !seen_clusters.insert(&c.name) {
                out.push(Violation::DuplicateClusterName(c.name.clone()));
            }
            if c.vertices.is_empty() {
                out.push(Violation::EmptyCluster(c.name.clone()));
            }
            for &v in &c.vertices {
                if v < count.len() {
                    count[v] += 1;
                }
            }
        }
        for (v, &k) in count.iter().enumerate() {
            match k {
                0 => out.push(Violation::Unclustered(name(v))),
                1 => {}
                _ => out.push(Violation::MultiplyClustered(name(v))),
            }
        }
        let mut pairs = BTreeSet::new();
        for &[u, v] in &self.edges {
            if u >= self.n() || v >= self.n() {
                out.push(Violation::UnknownVertex(u, v));
                continue;
            }
            if u == v {
                out.push(Violation::SelfLoop(name(u)));
            } else if !pairs.insert((u.min(v), u.max(v))) {
                out.push(Violation::ParallelEdge(name(u.min(v)), name(u.max(v))));
            }
        }
        if !out.is_empty() {
            return out;
        }
        if let Some(sides) = &self.sides {
            let domain: BTreeSet<(usize, usize)> = self.side_domain().into_iter().collect();
            for &(e, c) in &domain {
                if !sides.contains_key(&(e, c)) {
                    let [u, v] = self.edges[e];
                    out.push(Violation::MissingSide(name(u), name(v), self.clusters[c].name.clone()));
                }
            }
            for &(e, c) in sides.keys() {
                if !domain.contains(&(e, c)) {
                    let (u, v) = match self.edges.get(e) {
                        Some(&[u, v]) => (name(u), name(v)),
                        None => (format!("#{e}"), String::new()),
                    };
                    let cname = self.clusters.get(c).map_or_else(|| format!("#{c}"), |x| x.name.clone());
                    out.push(Violation::ExtraSide(u, v, cname));
                }
            }
        }
        out
    }

    /// No inter-cluster edge joins two non-trivial clusters, and no trivial
    /// cluster has two edges into the same non-trivial cluster.
    pub fn is_light(&self) -> bool {
        let mut seen = BTreeSet::new();
        for e in self.inter_edges() {
            let [u, v] = self.edges[e];
            let (cu, cv) = (self.cluster_of[u], self.cluster_of[v]);
            match (self.is_trivial(cu), self.is_trivial(cv)) {
                (false, false) => return false,
                (true, false) => {
                    if !seen.insert((cu, cv)) {
                        return false;
                    }
                }
                (false, true) => {
                    if !seen.insert((cv, cu)) {
                        return false;
                    }
                }
                (true, true) => {}
            }
        }
        true
    }

    /// Subdivides every inter-cluster edge once. Each subdivision vertex is a
    /// new trivial cluster; sides move to the half-edge at their cluster.
    pub fn light_reduce(&self) -> ClusteredGraph {
        let mut names = self.vertex_names.clone();
        let mut used: BTreeSet<String> = names.iter().cloned().collect();
        let mut cluster_names: BTreeSet<String> = self.clusters.iter().map(|c| c.name.clone()).collect();
        let mut clusters = self.clusters.clone();
        let mut edges = Vec::new();
        let mut sides = self.sides.as_ref().map(|_| SideMap::new());
        for (e, &[u, v]) in self.edges.iter().enumerate() {
            if !self.is_inter(e) {
                edges.push([u, v]);
                continue;
            }
            let base = format!("{}~{}", self.vertex_names[u], self.vertex_names[v]);
            let name = fresh(&base, &used);
            used.insert(name.clone());
            let cname = fresh(&name, &cluster_names);
            cluster_names.insert(cname.clone());
            let x = names.len();
            names.push(name);
            clusters.push(Cluster { name: cname, vertices: vec![x] });
            for w in [u, v] {
                let id = edges.len();
                edges.push([w, x]);
                let c = self.cluster_of[w];
                if let (Some(out), Some(s)) = (sides.as_mut(), self.side(e, c)) {
                    out.insert((id, c), s);
                }
            }
        }
        ClusteredGraph::new(names, edges, clusters, sides)
    }

    /// Frame graph; requires a light graph.
    pub fn frame(&self) -> Result<FrameGraph, ModelError> {
        if !self.is_light() {
            return Err(ModelError::NotLight);
        }
        Ok(self.frame_unchecked())
    }

    /// Frame graph, possibly with parallel edges when the graph is not light.
    pub fn frame_unchecked(&self) -> FrameGraph {
        let mut graph = Graph::new(self.clusters.len());
        let mut source_edge = Vec::new();
        for e in self.inter_edges() {
            let [u, v] = self.edges[e];
            graph.add_edge(self.cluster_of[u], self.cluster_of[v]);
            source_edge.push(e);
        }
        FrameGraph { graph, source_edge }
    }

    /// Clusters in canonical (name) order.
    pub fn clusters_by_name(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.clusters.len()).collect();
        ids.sort_by(|&a, &b| self.clusters[a].name.cmp(&self.clusters[b].name));
        ids
    }

    /// Vertices of cluster `c` sorted by name.
    pub fn sorted_cluster(&self, c: usize) -> Vec<usize> {
        let mut vs = self.clusters[c].vertices.clone();
        vs.sort_by(|&a, &b| self.vertex_names[a].cmp(&self.vertex_names[b]));
        vs
    }
}

fn fresh(base: &str, used: &BTreeSet<String>) -> String {
    let mut name = base.to_string();
    while used.contains(&name) {
        name.push('\'');
    }
    name
}

/// Builds a [`ClusteredGraph`] from names.
#[derive(Clone, Debug, Default)]
pub struct Builder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    clusters: Vec<Cluster>,
    edges: Vec<[usize; 2]>,
    sides: SideMap,
    has_sides: bool,
}

impl Builder {
    fn vertex(&mut self, name: &str) -> usize {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        v
    }

    /// Adds a cluster with the given vertices (created on first use).
    pub fn cluster(mut self, name: &str, vertices: &[&str]) -> Self {
        let vs = vertices.iter().map(|v| self.vertex(v)).collect();
        self.clusters.push(Cluster { name: name.to_string(), vertices: vs });
        self
    }

    /// Adds a trivial cluster named after its vertex.
    pub fn point(self, name: &str) -> Self {
        self.cluster(name, &[name])
    }

    pub fn edge(mut self, u: &str, v: &str) -> Self {
        let a = self.vertex(u);
        let b = self.vertex(v);
        self.edges.push([a, b]);
        self
    }

    /// Adds an edge with a side at the `u` end (for a non-trivial cluster).
    pub fn edge_at(mut self, u: &str, side: Side, v: &str) -> Self {
        self = self.edge(u, v);
        self.pending_side(0, side);
        self
    }

    /// Adds an edge with sides at both ends.
    pub fn edge_both(mut self, u: &str, su: Side, v: &str, sv: Side) -> Self {
        self = self.edge(u, v);
        self.pending_side(0, su);
        self.pending_side(1, sv);
        self
    }

    fn pending_side(&mut self, end: usize, side: Side) {
        let e = self.edges.len() - 1;
        let v = self.edges[e][end];
        // Clusters may be declared later, so resolve at build time.
        self.sides.insert((e, usize::MAX - v), side);
        self.has_sides = true;
    }

    /// Marks the graph as carrying a side assignment even if it has none.
    pub fn with_sides(mut self) -> Self {
        self.has_sides = true;
        self
    }

    pub fn build(self) -> ClusteredGraph {
        let g = ClusteredGraph::new(self.names, self.edges, self.clusters, None);
        if !self.has_sides {
            return g;
        }
        let sides = self
            .sides
            .into_iter()
            .map(|((e, key), s)| ((e, g.cluster_of(usize::MAX - key)), s))
            .collect();
        ClusteredGraph { sides: Some(sides), ..g }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_clusters() -> ClusteredGraph {
        ClusteredGraph::builder()
            .cluster("A", &["a1", "a2"])
            .point("x")
            .edge("a1", "a2")
            .edge_at("a1", Side::Top, "x")
            .edge_at("a2", Side::Left, "x")
            .build()
    }

    #[test]
    fn well_formed_graph_has_no_violations() {
        assert!(two_clusters().validate().is_empty());
    }

    #[test]
    fn vertex_in_two_clusters_is_reported() {
        let g = ClusteredGraph::builder().cluster("A", &["a", "b"]).cluster("B", &["b"]).build();
        assert!(g.validate().contains(&Violation::MultiplyClustered("b".into())));
    }

    #[test]
    fn missing_side_is_reported() {
        let mut g = two_clusters();
        g.sides.as_mut().unwrap().remove(&(1, 0));
        assert!(matches!(g.validate()[..], [Violation::MissingSide(..)]));
    }

    #[test]
    fn trivial_cluster_with_two_edges_into_one_cluster_is_not_light() {
        assert!(!two_clusters().is_light());
        let r = two_clusters().light_reduce();
        assert!(r.is_light());
        assert!(r.validate().is_empty());
        assert_eq!(r.n(), 3 + 2);
        assert_eq!(r.inter_edges().len(), 4);
        assert!(r.frame().unwrap().graph.is_simple());
    }

    #[test]
    fn light_reduce_of_trivial_edge_is_a_path() {
        let g = ClusteredGraph::builder().point("u").point("v").edge("u", "v").build();
        let r = g.light_reduce();
        assert_eq!(r.clusters.len(), 3);
        assert_eq!(r.m(), 2);
        assert!(r.clusters.iter().all(|c| c.vertices.len() == 1));
    }

    #[test]
    fn frame_rejects_non_light() {
        assert_eq!(two_clusters().frame(), Err(ModelError::NotLight));
        let g = ClusteredGraph::builder().cluster("A", &["a", "b"]).edge("a", "b").build();
        let f = g.frame().unwrap();
        assert_eq!((f.graph.n(), f.graph.m()), (1, 0));
    }
}
