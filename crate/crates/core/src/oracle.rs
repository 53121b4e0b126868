//! Exhaustive reference testers built on the wheel reduction.
//!
//! A graph with fixed sides is planar iff, for some permutation assignment,
//! its wheel reduction has a planar embedding where every wheel sees its cycle
//! clockwise. The fixed-sides oracle searches permutation assignments
//! depth-first (clusters by name, permutations in lexicographic order) and
//! prunes a partial assignment when the graph with the unassigned clusters
//! shrunk to points, each with its edges grouped by side and vertex, has no
//! constrained embedding.

use thiserror::Error;

use crate::constrained::{test_constrained, Constraint};
use crate::decomposition::planar_embed;
use crate::embedding::Embedding;
use crate::graph::Graph;
use crate::model::{ClusteredGraph, ModelError, PermutationAssignment, Side, SideMap};
use crate::wheel::{wheel_reduction, WheelReduction};

/// Default bound on constrained-planarity calls.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle budget of {0} constrained-planarity calls exceeded")]
    BudgetExceeded(u64),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// An accepting permutation assignment with an embedding of its wheel
/// reduction in which every wheel is clockwise.
#[derive(Clone, Debug)]
pub struct Witness {
    pub pi: PermutationAssignment,
    pub reduction: WheelReduction,
    pub embedding: Embedding,
}

/// Outcome of a fixed-sides run.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub witness: Option<Witness>,
    /// Constrained-planarity calls made.
    pub calls: u64,
}

impl Verdict {
    pub fn planar(&self) -> bool {
        self.witness.is_some()
    }
}

/// Constraint trees that force every wheel of `red` clockwise: an oriented
/// tree at each hub over its spokes in cycle order, free trees elsewhere.
pub fn wheel_constraints(red: &WheelReduction) -> Vec<Constraint> {
    let h = &red.graph;
    let mut trees: Vec<Constraint> = (0..h.n()).map(|v| Constraint::free(h.incident(v))).collect();
    for w in red.wheels.iter().flatten() {
        let spokes: Vec<usize> = w.cycle.iter().map(|&c| h.find_edge(w.hub, c).unwrap()).collect();
        trees[w.hub] = Constraint::oriented(Constraint::leaves(&spokes));
    }
    trees
}

/// Tests one permutation assignment exactly.
pub fn test_assignment(g: &ClusteredGraph, pi: &PermutationAssignment) -> Option<Witness> {
    let reduction = wheel_reduction(g, pi);
    let trees = wheel_constraints(&reduction);
    let embedding = test_constrained(&reduction.graph, &trees).ok()?;
    Some(Witness { pi: pi.clone(), reduction, embedding })
}

/// Fixed-sides oracle. The graph must be valid with a full side assignment;
/// it need not be light.
pub fn oracle_fixed(g: &ClusteredGraph, budget: u64) -> Result<Verdict, OracleError> {
    if let Some(v) = g.validate().into_iter().next() {
        return Err(ModelError::Invalid(v).into());
    }
    if g.sides.is_none() {
        return Err(ModelError::NoSides.into());
    }
    let order: Vec<usize> = g.clusters_by_name().into_iter().filter(|&c| !g.is_trivial(c)).collect();
    let mut search = Search { g, order: &order, budget, calls: 0, perms: vec![None; g.clusters.len()] };
    let witness = search.run(0)?;
    Ok(Verdict { witness, calls: search.calls })
}

struct Search<'a> {
    g: &'a ClusteredGraph,
    order: &'a [usize],
    budget: u64,
    calls: u64,
    perms: Vec<Option<Vec<usize>>>,
}

impl Search<'_> {
    fn charge(&mut self) -> Result<(), OracleError> {
        self.calls += 1;
        if self.calls > self.budget {
            return Err(OracleError::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    fn run(&mut self, depth: usize) -> Result<Option<Witness>, OracleError> {
        if depth == self.order.len() {
            self.charge()?;
            let pi = PermutationAssignment(
                (0..self.g.clusters.len())
                    .map(|c| self.perms[c].clone().unwrap_or_else(|| self.g.clusters[c].vertices.clone()))
                    .collect(),
            );
            return Ok(test_assignment(self.g, &pi));
        }
        self.charge()?;
        let (h, trees) = partial_instance(self.g, &self.perms);
        if test_constrained(&h, &trees).is_err() {
            return Ok(None);
        }
        let c = self.order[depth];
        for perm in lexicographic_permutations(&self.g.sorted_cluster(c)) {
            self.perms[c] = Some(perm);
            if let Some(w) = self.run(depth + 1)? {
                return Ok(Some(w));
            }
        }
        self.perms[c] = None;
        Ok(None)
    }
}

/// The graph where assigned clusters are wheels and every other non-trivial
/// cluster is a single vertex whose edges are grouped clockwise by side
/// (top, right, bottom, left) and, within a side, by endpoint.
fn partial_instance(g: &ClusteredGraph, perms: &[Option<Vec<usize>>]) -> (Graph, Vec<Constraint>) {
    let mut h = Graph::new(0);
    let mut point = vec![usize::MAX; g.clusters.len()];
    let mut wheel_cycle: Vec<Vec<usize>> = vec![Vec::new(); g.clusters.len()];
    let mut hubs = Vec::new();
    for c in 0..g.clusters.len() {
        match &perms[c] {
            Some(perm) if !g.is_trivial(c) => {
                let hub = h.add_vertex();
                let cycle: Vec<usize> = (0..4 * perm.len()).map(|_| h.add_vertex()).collect();
                for i in 0..cycle.len() {
                    h.add_edge(cycle[i], cycle[(i + 1) % cycle.len()]);
                }
                let spokes: Vec<usize> = cycle.iter().map(|&x| h.add_edge(hub, x)).collect();
                hubs.push((hub, spokes));
                wheel_cycle[c] = cycle;
            }
            _ => point[c] = h.add_vertex(),
        }
    }
    // Per point cluster: (side, vertex, edge) for grouping.
    let mut groups: Vec<Vec<(Side, usize, usize)>> = vec![Vec::new(); g.clusters.len()];
    for e in g.inter_edges() {
        let mut ends = [0; 2];
        let mut entries = Vec::new();
        for (i, v) in g.edges[e].into_iter().enumerate() {
            let c = g.cluster_of(v);
            ends[i] = match &perms[c] {
                Some(perm) if !g.is_trivial(c) => {
                    let j = perm.iter().position(|&x| x == v).unwrap();
                    wheel_cycle[c][crate::wheel::cycle_position(perm.len(), j, g.side(e, c).unwrap())]
                }
                _ => {
                    if !g.is_trivial(c) {
                        entries.push((c, g.side(e, c).unwrap(), v));
                    }
                    point[c]
                }
            };
        }
        let id = h.add_edge(ends[0], ends[1]);
        for (c, s, v) in entries {
            groups[c].push((s, v, id));
        }
    }
    let mut trees: Vec<Constraint> = (0..h.n()).map(|v| Constraint::free(h.incident(v))).collect();
    for (hub, spokes) in hubs {
        trees[hub] = Constraint::oriented(Constraint::leaves(&spokes));
    }
    for c in 0..g.clusters.len() {
        if point[c] == usize::MAX || g.is_trivial(c) {
            continue;
        }
        let mut sides = Vec::new();
        for s in Side::ALL {
            let mut per_vertex = Vec::new();
            for &v in &g.clusters[c].vertices {
                let es: Vec<usize> = groups[c].iter().filter(|x| x.0 == s && x.1 == v).map(|x| x.2).collect();
                if !es.is_empty() {
                    per_vertex.push(Constraint::free(&es));
                }
            }
            if !per_vertex.is_empty() {
                sides.push(Constraint::group(per_vertex));
            }
        }
        if !sides.is_empty() {
            trees[point[c]] = Constraint::oriented(sides);
        }
    }
    (h, trees)
}

/// Permutations of `items` in lexicographic order of positions.
pub fn lexicographic_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut idx: Vec<usize> = (0..items.len()).collect();
    let mut out = vec![items.to_vec()];
    // Standard next-permutation on indices.
    loop {
        let Some(i) = (1..idx.len()).rev().find(|&i| idx[i - 1] < idx[i]) else {
            return out;
        };
        let j = (i..idx.len()).rev().find(|&j| idx[j] > idx[i - 1]).unwrap();
        idx.swap(i - 1, j);
        idx[i..].reverse();
        out.push(idx.iter().map(|&x| items[x]).collect());
    }
}

/// Every accepting permutation assignment, by exhaustive product over the
/// non-trivial clusters (name order, lexicographic permutations). Meant for
/// gadget-sized instances.
pub fn accepting_assignments(g: &ClusteredGraph) -> Vec<PermutationAssignment> {
    let order: Vec<usize> = g.clusters_by_name().into_iter().filter(|&c| !g.is_trivial(c)).collect();
    let options: Vec<Vec<Vec<usize>>> =
        order.iter().map(|&c| lexicographic_permutations(&g.sorted_cluster(c))).collect();
    let mut pi = PermutationAssignment::identity(g);
    let mut digits = vec![0usize; order.len()];
    let mut out = Vec::new();
    loop {
        for (i, &c) in order.iter().enumerate() {
            pi.0[c] = options[i][digits[i]].clone();
        }
        if test_assignment(g, &pi).is_some() {
            out.push(pi.clone());
        }
        let mut i = digits.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < options[i].len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Outcome of a free-sides run.
#[derive(Clone, Debug)]
pub struct FreeVerdict {
    pub sides: Option<SideMap>,
    pub witness: Option<Witness>,
    pub calls: u64,
}

/// Free-sides oracle: tries every side assignment in canonical order (first
/// incidence most significant, sides in `T < R < B < L` order). Any side
/// assignment already present on `g` is ignored.
pub fn oracle_free(g: &ClusteredGraph, budget: u64) -> Result<FreeVerdict, OracleError> {
    let base = g.without_sides();
    if let Some(v) = base.validate().into_iter().next() {
        return Err(ModelError::Invalid(v).into());
    }
    let mut calls = 0;
    if !frame_is_planar(&base) {
        return Ok(FreeVerdict { sides: None, witness: None, calls });
    }
    let domain = base.side_domain();
    let mut digits = vec![0usize; domain.len()];
    loop {
        let sides: SideMap = domain.iter().zip(&digits).map(|(&k, &d)| (k, Side::ALL[d])).collect();
        let inst = base.with_sides(sides.clone());
        let v = oracle_fixed(&inst, budget.saturating_sub(calls)).map_err(|e| match e {
            OracleError::BudgetExceeded(_) => OracleError::BudgetExceeded(budget),
            other => other,
        })?;
        calls += v.calls;
        if v.witness.is_some() {
            return Ok(FreeVerdict { sides: Some(sides), witness: v.witness, calls });
        }
        // Increment the last digit first.
        let mut i = digits.len();
        loop {
            if i == 0 {
                return Ok(FreeVerdict { sides: None, witness: None, calls });
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < 4 {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Planarity of the frame, ignoring edge multiplicities.
pub fn frame_is_planar(g: &ClusteredGraph) -> bool {
    let f = g.frame_unchecked().graph;
    let mut simple = Graph::new(f.n());
    for &[u, v] in f.edges() {
        if simple.find_edge(u, v).is_none() {
            simple.add_edge(u, v);
        }
    }
    planar_embed(&simple).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_in_order() {
        let p = lexicographic_permutations(&[5, 7, 9]);
        assert_eq!(
            p,
            vec![vec![5, 7, 9], vec![5, 9, 7], vec![7, 5, 9], vec![7, 9, 5], vec![9, 5, 7], vec![9, 7, 5]]
        );
    }

    #[test]
    fn lone_cluster_is_planar() {
        let g = ClusteredGraph::builder().cluster("C", &["a", "b", "c"]).with_sides().build();
        let v = oracle_fixed(&g, DEFAULT_BUDGET).unwrap();
        assert!(v.planar());
        for pi in lexicographic_permutations(&[0, 1, 2]) {
            assert!(test_assignment(&g, &PermutationAssignment(vec![pi])).is_some());
        }
    }

    #[test]
    fn k5_frame_is_never_planar() {
        let mut b = ClusteredGraph::builder().cluster("A", &["a0", "a1"]);
        let pts = ["p", "q", "r", "s"];
        for p in pts {
            b = b.point(p);
        }
        for (i, p) in pts.iter().enumerate() {
            b = b.edge_at(if i % 2 == 0 { "a0" } else { "a1" }, Side::ALL[i], p);
            for q in &pts[i + 1..] {
                b = b.edge(p, q);
            }
        }
        let g = b.build();
        assert!(g.is_light());
        assert!(!oracle_fixed(&g, DEFAULT_BUDGET).unwrap().planar());
        assert!(oracle_free(&g, DEFAULT_BUDGET).unwrap().sides.is_none());
    }

    #[test]
    fn five_edges_on_a_pair_fit_some_sides() {
        let mut b = ClusteredGraph::builder().cluster("A", &["a0", "a1"]);
        for i in 0..5 {
            let p = format!("p{i}");
            b = b.point(&p).edge(if i % 2 == 0 { "a0" } else { "a1" }, &p);
        }
        let v = oracle_free(&b.build(), DEFAULT_BUDGET).unwrap();
        let sides = v.sides.unwrap();
        assert!(sides.values().all(|&s| s == Side::Top));
    }

    #[test]
    fn budget_is_enforced() {
        let g = ClusteredGraph::builder().cluster("C", &["a", "b", "c"]).with_sides().build();
        assert_eq!(oracle_fixed(&g, 1).unwrap_err(), OracleError::BudgetExceeded(1));
    }

    fn every_assignment(g: &ClusteredGraph) -> Vec<PermutationAssignment> {
        let mut out = vec![PermutationAssignment(Vec::new())];
        for c in 0..g.clusters.len() {
            let perms = lexicographic_permutations(&g.clusters[c].vertices);
            out = out
                .into_iter()
                .flat_map(|pi| {
                    perms.iter().map(move |p| {
                        let mut q = pi.clone();
                        q.0.push(p.clone());
                        q
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn pruning_does_not_change_verdicts() {
        use crate::generate::{gen_random, FrameShape, GenParams};
        let mut seen = [0, 0];
        for seed in 0..120 {
            let shape = [FrameShape::Sp, FrameShape::Partial2Tree, FrameShape::Planar][seed as usize % 3];
            let mut p = GenParams::new(6, 3, shape);
            p.max_nontrivial = 3;
            p.light = seed % 2 == 0;
            let g = gen_random(&p, seed);
            let fast = oracle_fixed(&g, DEFAULT_BUDGET).unwrap();
            let slow = every_assignment(&g).iter().any(|pi| test_assignment(&g, pi).is_some());
            assert_eq!(fast.planar(), slow, "seed {seed}");
            seen[usize::from(slow)] += 1;
            if let Some(w) = &fast.witness {
                assert!(w.embedding.is_planar(&w.reduction.graph));
                for wh in w.reduction.wheels.iter().flatten() {
                    let order = w.embedding.neighbor_order(&w.reduction.graph, wh.hub);
                    assert!(crate::embedding::cyclically_equal(&wh.cycle, &order));
                }
            }
        }
        assert!(seen[0] > 10 && seen[1] > 10, "{seen:?}");
    }
}
