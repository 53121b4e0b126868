//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use nodetrix::embedding::Embedding;
use nodetrix::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Exhaustive search over rotation systems. Only for tiny graphs.
pub fn brute_planar(g: &Graph) -> bool {
    let mut rot: Vec<Vec<usize>> = (0..g.n()).map(|v| g.incident(v).to_vec()).collect();
    fn rec(g: &Graph, v: usize, rot: &mut Vec<Vec<usize>>) -> bool {
        if v == g.n() {
            return Embedding::new(rot.clone()).is_planar(g);
        }
        let d = rot[v].len();
        if d <= 2 {
            return rec(g, v + 1, rot);
        }
        // Fix the first element; permute the rest.
        let rest: Vec<usize> = rot[v][1..].to_vec();
        let mut perms = Vec::new();
        permutations(&rest, &mut Vec::new(), &mut vec![false; rest.len()], &mut perms);
        let first = rot[v][0];
        for p in perms {
            let mut r = vec![first];
            r.extend(p);
            let saved = std::mem::replace(&mut rot[v], r);
            if rec(g, v + 1, rot) {
                rot[v] = saved;
                return true;
            }
            rot[v] = saved;
        }
        false
    }
    rec(g, 0, &mut rot)
}

pub fn permutations<T: Clone>(items: &[T], cur: &mut Vec<T>, used: &mut Vec<bool>, out: &mut Vec<Vec<T>>) {
    if cur.len() == items.len() {
        out.push(cur.clone());
        return;
    }
    for i in 0..items.len() {
        if !used[i] {
            used[i] = true;
            cur.push(items[i].clone());
            permutations(items, cur, used, out);
            cur.pop();
            used[i] = false;
        }
    }
}

/// True iff `g` has a K4 minor: four disjoint connected branch sets that are
/// pairwise adjacent. Exhaustive over labelings, so only for ≤ 8 vertices.
pub fn brute_has_k4_minor(g: &Graph) -> bool {
    let n = g.n();
    let mut label = vec![4usize; n];
    fn rec(g: &Graph, i: usize, label: &mut Vec<usize>) -> bool {
        if i == g.n() {
            return check(g, label);
        }
        for l in 0..5 {
            label[i] = l;
            if rec(g, i + 1, label) {
                return true;
            }
        }
        false
    }
    fn check(g: &Graph, label: &[usize]) -> bool {
        for l in 0..4 {
            let members: Vec<usize> = (0..g.n()).filter(|&v| label[v] == l).collect();
            if members.is_empty() {
                return false;
            }
            let mut seen = vec![false; g.n()];
            let mut stack = vec![members[0]];
            seen[members[0]] = true;
            let mut count = 0;
            while let Some(v) = stack.pop() {
                count += 1;
                for w in g.neighbors(v) {
                    if label[w] == l && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if count != members.len() {
                return false;
            }
        }
        let mut adj = [[false; 4]; 4];
        for &[u, v] in g.edges() {
            let (a, b) = (label[u], label[v]);
            if a < 4 && b < 4 && a != b {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
        (0..4).all(|a| (0..4).all(|b| a == b || adj[a][b]))
    }
    // Symmetry: vertex 0 is either unused or in branch set 0.
    if n == 0 {
        return false;
    }
    for l0 in [0usize, 4] {
        label[0] = l0;
        if rec(g, 1, &mut label) {
            return true;
        }
    }
    false
}

/// Connected after removing the vertices in `removed`.
pub fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let alive: Vec<usize> = (0..g.n()).filter(|v| !removed.contains(v)).collect();
    if alive.is_empty() {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![alive[0]];
    seen[alive[0]] = true;
    let mut count = 0;
    while let Some(v) = stack.pop() {
        count += 1;
        for w in g.neighbors(v) {
            if !removed.contains(&w) && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    count == alive.len()
}

pub fn brute_biconnected(g: &Graph) -> bool {
    g.n() >= 2 && connected_without(g, &[]) && (0..g.n()).all(|v| connected_without(g, &[v]))
}

pub fn brute_triconnected(g: &Graph) -> bool {
    g.n() >= 4
        && brute_biconnected(g)
        && (0..g.n()).all(|a| (a + 1..g.n()).all(|b| connected_without(g, &[a, b])))
}

/// Random simple graph with `n` vertices and about `m` edges.
pub fn random_graph(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push([i, j]);
        }
    }
    pairs.shuffle(rng);
    pairs.truncate(m.min(pairs.len()));
    Graph::from_edges(n, &pairs)
}

/// Random biconnected graph built from a cycle plus random ears.
pub fn random_biconnected(rng: &mut impl Rng, n: usize, extra: usize) -> Graph {
    let mut g = Graph::new(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 0..n {
        g.add_edge(order[i], order[(i + 1) % n]);
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b && g.find_edge(a, b).is_none() {
            g.add_edge(a, b);
        }
    }
    g
}

/// Random biconnected series-parallel graph by random series and parallel
/// compositions of edges.
pub fn random_series_parallel(rng: &mut impl Rng, steps: usize) -> Graph {
    // Start from a digon-free triangle and subdivide or add parallel paths.
    let mut g = Graph::from_edges(3, &[[0, 1], [1, 2], [2, 0]]);
    for _ in 0..steps {
        let e = rng.gen_range(0..g.m());
        let [a, b] = g.ends(e);
        let x = g.add_vertex();
        if rng.gen_bool(0.5) {
            // Parallel path a - x - b.
            g.add_edge(a, x);
            g.add_edge(x, b);
        } else {
            // Subdivide by rebuilding the edge list.
            let mut edges: Vec<[usize; 2]> = g.edges().to_vec();
            edges[e] = [a, x];
            edges.push([x, b]);
            g = Graph::from_edges(g.n(), &edges);
        }
    }
    g
}
