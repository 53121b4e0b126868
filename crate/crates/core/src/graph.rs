//! Plain undirected graphs over dense vertex and edge indices.

/// Undirected graph with stable edge ids. Parallel edges and loops are
/// representable; most algorithms in this crate require a simple graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<[usize; 2]>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[[usize; 2]]) -> Self {
        let mut g = Graph::new(n);
        for &[u, v] in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        let e = self.edges.len();
        self.edges.push([u, v]);
        self.adj[u].push(e);
        if u != v {
            self.adj[v].push(e);
        }
        e
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn ends(&self, e: usize) -> [usize; 2] {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(move |&e| self.other(e, v))
    }

    /// Edge joining `u` and `v`, if any.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].iter().copied().find(|&e| self.other(e, a) == b)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&[u, v]| u != v && seen.insert((u.min(v), u.max(v))))
    }

    /// Component index per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n()];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Subgraph induced by an edge subset. Returns the subgraph, the map from
    /// new vertex to old vertex, and the map from new edge to old edge.
    pub fn edge_subgraph(&self, edges: &[usize]) -> (Graph, Vec<usize>, Vec<usize>) {
        let mut local = std::collections::HashMap::new();
        let mut verts = Vec::new();
        let mut g = Graph::new(0);
        for &e in edges {
            let [u, v] = self.edges[e];
            let mut id = |x: usize, g: &mut Graph| {
                *local.entry(x).or_insert_with(|| {
                    verts.push(x);
                    g.add_vertex()
                })
            };
            let a = id(u, &mut g);
            let b = id(v, &mut g);
            g.add_edge(a, b);
        }
        (g, verts, edges.to_vec())
    }
}
