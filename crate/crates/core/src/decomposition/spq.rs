//! SPQ trees of series-parallel blocks with binarized S-nodes.

use crate::graph::Graph;

use super::spqr::{NodeKind, SkeletonLink, SpqrTree};
use super::{bctree, DecompositionError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpqNode {
    pub kind: NodeKind,
    /// Oriented poles `(s, t)`. For an S-node, child 0 spans `(s, m)` and
    /// child 1 spans `(m, t)`.
    pub poles: [usize; 2],
    pub children: Vec<usize>,
    pub parent: Option<usize>,
    /// The graph edge of a Q-node.
    pub edge: Option<usize>,
}

impl SpqNode {
    /// Middle vertex of a binarized S-node.
    pub fn middle(&self, tree: &SpqTree) -> Option<usize> {
        (self.kind == NodeKind::S).then(|| tree.nodes[self.children[0]].poles[1])
    }
}

/// Rooted SPQ tree: the root is the Q-node of the root edge and has a single
/// child spanning the rest of the block (absent for a single-edge block).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpqTree {
    pub nodes: Vec<SpqNode>,
    pub root: usize,
}

impl SpqTree {
    /// Nodes in post-order (children before parents).
    pub fn post_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((x, done)) = stack.pop() {
            if done {
                order.push(x);
            } else {
                stack.push((x, true));
                for &c in self.nodes[x].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        order
    }

    /// Real edges of the pertinent graph of `node`.
    pub fn pertinent_edges(&self, node: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(x) = stack.pop() {
            if let Some(e) = self.nodes[x].edge {
                if x != self.root || node == self.root {
                    out.push(e);
                }
            }
            stack.extend(self.nodes[x].children.iter().copied());
        }
        out.sort_unstable();
        out
    }

    /// Skeleton of `node` as `(ends, child)` pairs: one virtual edge per child
    /// plus the reference edge between the poles (child `None`).
    pub fn skeleton(&self, node: usize) -> Vec<([usize; 2], Option<usize>)> {
        let nd = &self.nodes[node];
        let mut out = vec![(nd.poles, None)];
        for &c in &nd.children {
            out.push((self.nodes[c].poles, Some(c)));
        }
        out
    }
}

/// SPQ tree of the block formed by `edges` of `g`, rooted at `root_edge`.
pub fn spq_decompose(g: &Graph, edges: &[usize], root_edge: usize) -> Result<SpqTree, DecompositionError> {
    let spqr = SpqrTree::build(g, edges, root_edge)?;
    if spqr.count(NodeKind::R) > 0 {
        return Err(DecompositionError::NotSeriesParallel);
    }
    Ok(from_spqr(g, &spqr))
}

fn from_spqr(g: &Graph, spqr: &SpqrTree) -> SpqTree {
    let root_edge = match spqr.nodes[spqr.root].skeleton[0].link {
        SkeletonLink::Real(e) => e,
        SkeletonLink::Virtual { .. } => unreachable!("root is a Q-node"),
    };
    let mut nodes = vec![SpqNode {
        kind: NodeKind::Q,
        poles: g.ends(root_edge),
        children: Vec::new(),
        parent: None,
        edge: Some(root_edge),
    }];
    // Work items: (spqr node, oriented poles, spq parent).
    let mut work: Vec<(usize, [usize; 2], usize)> = spqr.nodes[spqr.root]
        .children
        .iter()
        .map(|&c| (c, g.ends(root_edge), 0))
        .collect();
    while let Some((x, [s, t], parent)) = work.pop() {
        let nd = &spqr.nodes[x];
        let id = nodes.len();
        nodes[parent].children.push(id);
        match nd.kind {
            NodeKind::Q => {
                let e = match nd.skeleton[0].link {
                    SkeletonLink::Real(e) => e,
                    SkeletonLink::Virtual { .. } => unreachable!(),
                };
                nodes.push(SpqNode { kind: NodeKind::Q, poles: [s, t], children: vec![], parent: Some(parent), edge: Some(e) });
            }
            NodeKind::P => {
                nodes.push(SpqNode { kind: NodeKind::P, poles: [s, t], children: vec![], parent: Some(parent), edge: None });
                // Children are pushed in reverse so they are attached in skeleton order.
                let kids: Vec<usize> = nd.children.clone();
                for &c in kids.iter().rev() {
                    work.push((c, [s, t], id));
                }
            }
            NodeKind::S => {
                // Walk the cycle from s to t avoiding the parent edge.
                let pe = nd.parent_edge.expect("non-root S-node has a parent edge");
                let mut chain = Vec::new();
                let mut at = s;
                let mut used = vec![false; nd.skeleton.len()];
                used[pe] = true;
                while at != t || chain.is_empty() {
                    let i = (0..nd.skeleton.len())
                        .find(|&i| !used[i] && nd.skeleton[i].ends.contains(&at))
                        .expect("cycle continues");
                    used[i] = true;
                    let [a, b] = nd.skeleton[i].ends;
                    let next = if a == at { b } else { a };
                    chain.push((nd.child_of_edge[i].unwrap(), [at, next]));
                    at = next;
                }
                // Right-nested binarization.
                let r = chain.len();
                let mut prev = parent;
                for j in 0..r - 1 {
                    let cur = if j == 0 {
                        id
                    } else {
                        let c = nodes.len();
                        nodes[prev].children.push(c);
                        c
                    };
                    nodes.push(SpqNode {
                        kind: NodeKind::S,
                        poles: [chain[j].1[0], t],
                        children: vec![],
                        parent: Some(prev),
                        edge: None,
                    });
                    work.push((chain[j].0, chain[j].1, cur));
                    if j == r - 2 {
                        work.push((chain[r - 1].0, chain[r - 1].1, cur));
                    }
                    prev = cur;
                }
            }
            NodeKind::R => unreachable!("checked by caller"),
        }
    }
    let mut tree = SpqTree { nodes, root: 0 };
    normalize_order(&mut tree);
    tree
}

/// Orders the children of every S-node so that child 0 starts at pole s.
fn normalize_order(tree: &mut SpqTree) {
    for x in 0..tree.nodes.len() {
        if tree.nodes[x].kind == NodeKind::S {
            let s = tree.nodes[x].poles[0];
            let c0 = tree.nodes[x].children[0];
            if tree.nodes[c0].poles[0] != s {
                tree.nodes[x].children.swap(0, 1);
            }
            debug_assert_eq!(tree.nodes[tree.nodes[x].children[0]].poles[0], s);
            debug_assert_eq!(tree.nodes[tree.nodes[x].children[1]].poles[1], tree.nodes[x].poles[1]);
        }
    }
}

/// True iff every block of every component is series-parallel.
pub fn is_partial_2_tree(g: &Graph) -> bool {
    bctree::biconnected_components(g).iter().all(|b| {
        b.len() == 1 || SpqrTree::build(g, b, b[0]).map_or(false, |t| t.count(NodeKind::R) == 0)
    })
}
