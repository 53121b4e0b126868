//! Biconnected components and block-cut-vertex trees.

use crate::graph::Graph;

use super::DecompositionError;

/// Block-cut-vertex tree of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCutTree {
    /// Edge ids of each block.
    pub blocks: Vec<Vec<usize>>,
    /// Vertices of each block, sorted.
    pub block_vertices: Vec<Vec<usize>>,
    /// Cut vertices, sorted.
    pub cut_vertices: Vec<usize>,
    /// `(block, cut vertex)` incidences.
    pub tree_edges: Vec<(usize, usize)>,
}

/// Edge sets of the biconnected components of `g` (bridges are blocks of
/// one edge). Works on disconnected graphs.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    // Frame: (vertex, parent edge, next incident index).
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        frames.push((root, usize::MAX, 0));
        while let Some(&mut (v, pe, ref mut i)) = frames.last_mut() {
            if *i < g.degree(v) {
                let e = g.incident(v)[*i];
                *i += 1;
                if e == pe {
                    continue;
                }
                let w = g.other(e, v);
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(u, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Whether the underlying simple graph of `g` is biconnected (at least
/// three vertices).
pub fn is_biconnected(g: &Graph) -> bool {
    let s = simplified(g);
    s.n() >= 3 && s.is_connected() && biconnected_components(&s).len() == 1
}

/// Whether the underlying simple graph of `g` is 3-connected (at least four
/// vertices, no separation pair). Quadratic: every vertex is deleted once.
pub fn is_triconnected(g: &Graph) -> bool {
    let s = simplified(g);
    if s.n() < 4 || !is_biconnected(&s) {
        return false;
    }
    (0..s.n()).all(|a| {
        let idx = |v: usize| if v < a { v } else { v - 1 };
        let edges: Vec<[usize; 2]> =
            s.edges().iter().filter(|e| !e.contains(&a)).map(|&[u, v]| [idx(u), idx(v)]).collect();
        let h = Graph::from_edges(s.n() - 1, &edges);
        h.is_connected() && biconnected_components(&h).len() == 1
    })
}

fn simplified(g: &Graph) -> Graph {
    let mut s = Graph::new(g.n());
    for &[u, v] in g.edges() {
        if u != v && s.find_edge(u, v).is_none() {
            s.add_edge(u, v);
        }
    }
    s
}

/// Block-cut-vertex tree of a connected graph.
pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree, DecompositionError> {
    if !g.is_connected() {
        return Err(DecompositionError::Disconnected);
    }
    let blocks = biconnected_components(g);
    let mut count = vec![0usize; g.n()];
    let mut block_vertices = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let mut vs: Vec<usize> = b.iter().flat_map(|&e| g.ends(e)).collect();
        vs.sort_unstable();
        vs.dedup();
        for &v in &vs {
            count[v] += 1;
        }
        block_vertices.push(vs);
    }
    let cut_vertices: Vec<usize> = (0..g.n()).filter(|&v| count[v] >= 2).collect();
    let mut tree_edges = Vec::new();
    for (i, vs) in block_vertices.iter().enumerate() {
        for &v in vs {
            if count[v] >= 2 {
                tree_edges.push((i, v));
            }
        }
    }
    Ok(BlockCutTree { blocks, block_vertices, cut_vertices, tree_edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_edges_are_blocks() {
        let g = Graph::from_edges(5, &[[0, 1], [1, 2], [1, 3], [3, 4]]);
        let t = block_cut_tree(&g).unwrap();
        assert_eq!(t.blocks.len(), 4);
        assert_eq!(t.cut_vertices, vec![1, 3]);
    }

    #[test]
    fn bowtie_has_one_cut_vertex() {
        let g = Graph::from_edges(5, &[[0, 1], [1, 2], [2, 0], [2, 3], [3, 4], [4, 2]]);
        let t = block_cut_tree(&g).unwrap();
        assert_eq!(t.blocks.len(), 2);
        assert_eq!(t.cut_vertices, vec![2]);
        assert_eq!(t.tree_edges.len(), 2);
    }

    #[test]
    fn cycle_is_one_block() {
        let g = Graph::from_edges(4, &[[0, 1], [1, 2], [2, 3], [3, 0]]);
        let t = block_cut_tree(&g).unwrap();
        assert_eq!(t.blocks, vec![vec![0, 1, 2, 3]]);
        assert!(t.cut_vertices.is_empty());
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(4, &[[0, 1], [2, 3]]);
        assert_eq!(block_cut_tree(&g), Err(DecompositionError::Disconnected));
    }
}
