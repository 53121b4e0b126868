//! Planar embedding under rotation constraints: an oriented order at one
//! vertex and a synchronized pair that must flip together.

use nodetrix::constrained::{check_constraints, test_constrained, unconstrained, Constraint};
use nodetrix::graph::Graph;

fn main() {
    // K4 with edges 0:01 1:02 2:03 3:12 4:13 5:23.
    let g = Graph::from_edges(4, &[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);

    let mut trees = unconstrained(&g);
    trees[0] = Constraint::oriented(Constraint::leaves(&[0, 1, 2]));
    let emb = test_constrained(&g, &trees).expect("any clockwise order at one vertex is realizable");
    println!("oriented: accepted, constraints hold: {}", check_constraints(&g, &trees, &emb));

    let mut trees = unconstrained(&g);
    trees[0] = Constraint::synchronized(0, Constraint::leaves(&[1, 0, 2]));
    trees[1] = Constraint::synchronized(0, Constraint::leaves(&[0, 4, 3]));
    println!("synchronized: accepted {}", test_constrained(&g, &trees).is_ok());
}
