use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

/// Two vertices of K4 whose synchronized orders cannot both hold.
fn k4_fixture(second_color: u32) -> (Graph, Vec<Constraint>) {
    // Vertices v1..v4 are 0..3; edges e12, e13, e14, e23, e24, e34.
    let g = Graph::from_edges(4, &[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
    let (e12, e13, e14, e23, e24) = (0, 1, 2, 3, 4);
    let mut trees = unconstrained(&g);
    trees[0] = Constraint::synchronized(0, Constraint::leaves(&[e13, e12, e14]));
    trees[1] = Constraint::synchronized(second_color, Constraint::leaves(&[e12, e24, e23]));
    (g, trees)
}

fn random_graph(rng: &mut ChaCha8Rng, max_edges: usize) -> Graph {
    let n = rng.gen_range(2..=6);
    let mut g = Graph::new(n);
    let m = rng.gen_range(1..=max_edges);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            g.add_edge(u, v);
        }
    }
    g
}

#[test]
fn synchronized_k4_is_rejected() {
    let (g, trees) = k4_fixture(0);
    assert_eq!(test_constrained(&g, &trees), Err(Reject::UnsatisfiableOrientation));
    assert_eq!(enumerate_embeddings_oracle(&g, &trees, 1_000_000), Ok(None));
}

#[test]
fn fresh_color_makes_k4_embeddable() {
    let (g, trees) = k4_fixture(1);
    let emb = test_constrained(&g, &trees).unwrap();
    assert!(emb.is_planar(&g));
    assert!(check_constraints(&g, &trees, &emb));
    assert!(enumerate_embeddings_oracle(&g, &trees, 1_000_000).unwrap().is_some());
}

#[test]
fn unconstrained_planar_graph_embeds() {
    let g = Graph::from_edges(3, &[[0, 1], [1, 2], [2, 0]]);
    let emb = test_constrained(&g, &unconstrained(&g)).unwrap();
    assert!(emb.is_planar(&g));
}

#[test]
fn k5_is_rejected() {
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            edges.push([u, v]);
        }
    }
    let g = Graph::from_edges(5, &edges);
    assert_eq!(test_constrained(&g, &unconstrained(&g)), Err(Reject::NonPlanarAux));
    assert_eq!(enumerate_embeddings_oracle(&g, &unconstrained(&g), 10_000_000), Ok(None));
}

#[test]
fn leaf_mismatch_is_malformed() {
    let g = Graph::from_edges(2, &[[0, 1]]);
    let trees = vec![Constraint::free(&[0]), Constraint::free(&[])];
    assert_eq!(test_constrained(&g, &trees), Err(Reject::Malformed(1)));
}

#[test]
fn single_oriented_root_makes_one_wheel() {
    let g = Graph::from_edges(4, &[[0, 1], [0, 2], [0, 3]]);
    let mut trees = unconstrained(&g);
    trees[0] = Constraint::oriented(Constraint::leaves(&[0, 2, 1]));
    let aux = build_aux_graph(&g, &trees);
    assert_eq!(aux.gadget_wheels().len(), 1);
    assert_eq!(aux.graph.n(), 4 + 3);
    let emb = test_constrained(&g, &trees).unwrap();
    assert!(crate::embedding::cyclically_equal(&[0, 2, 1], emb.rotation(0)));
}

#[test]
fn oriented_star_keeps_order() {
    // Wheel-like graph: a center with five neighbours on a cycle.
    let mut edges = vec![];
    for i in 0..5 {
        edges.push([0, i + 1]);
        edges.push([i + 1, (i + 1) % 5 + 1]);
    }
    let g = Graph::from_edges(6, &edges);
    let spokes: Vec<usize> = (0..5).map(|i| 2 * i).collect();
    for order in [spokes.clone(), spokes.iter().rev().copied().collect()] {
        let mut trees = unconstrained(&g);
        trees[0] = Constraint::oriented(Constraint::leaves(&order));
        let emb = test_constrained(&g, &trees).unwrap();
        assert!(crate::embedding::cyclically_equal(&order, emb.rotation(0)));
        assert!(emb.is_planar(&g));
    }
}

#[test]
fn checker_reads_directions() {
    let g = Graph::from_edges(5, &[[0, 1], [0, 2], [0, 3], [0, 4]]);
    let mut trees = unconstrained(&g);
    trees[0] = Constraint::oriented(vec![
        Constraint::Leaf(0),
        Constraint::mirror(Constraint::leaves(&[1, 2])),
        Constraint::Leaf(3),
    ]);
    let mut rot = vec![vec![]; 5];
    for v in 1..5 {
        rot[v] = vec![v - 1];
    }
    rot[0] = vec![0, 1, 2, 3];
    assert!(check_constraints(&g, &trees, &Embedding::new(rot.clone())));
    rot[0] = vec![0, 2, 1, 3];
    assert!(check_constraints(&g, &trees, &Embedding::new(rot.clone())));
    rot[0] = vec![0, 3, 1, 2];
    assert!(!check_constraints(&g, &trees, &Embedding::new(rot.clone())));
    rot[0] = vec![0, 1, 3, 2];
    assert!(!check_constraints(&g, &trees, &Embedding::new(rot)));
}

#[test]
fn agrees_with_enumeration_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..1500 {
        let g = random_graph(&mut rng, 9);
        let trees = random_constraints(&g, 2, &mut rng);
        let fast = test_constrained(&g, &trees);
        let slow = enumerate_embeddings_oracle(&g, &trees, 50_000_000).unwrap();
        match (&fast, &slow) {
            (Ok(emb), Some(_)) => {
                assert!(emb.is_planar(&g));
                assert!(check_constraints(&g, &trees, emb), "{g:?} {trees:?}");
                yes += 1;
            }
            (Err(_), None) => no += 1,
            _ => panic!("disagreement on {g:?} {trees:?}: {fast:?} vs {}", slow.is_some()),
        }
    }
    assert!(yes > 30 && no > 30, "{yes} {no}");
}

#[test]
fn native_wheels_are_oriented() {
    // Two wheels sharing nothing, joined by an edge between rims.
    let mut g = Graph::new(8);
    for (hub, rim) in [(0, [1, 2, 3]), (4, [5, 6, 7])] {
        for i in 0..3 {
            g.add_edge(hub, rim[i]);
            g.add_edge(rim[i], rim[(i + 1) % 3]);
        }
    }
    g.add_edge(1, 5);
    let trees = unconstrained(&g);
    let wheels = vec![(0, vec![1, 2, 3]), (4, vec![7, 6, 5])];
    let emb = test_constrained_with_wheels(&g, &trees, &wheels).unwrap();
    assert!(emb.is_planar(&g));
    for (hub, rim) in &wheels {
        assert!(crate::embedding::cyclically_equal(rim, &emb.neighbor_order(&g, *hub)));
    }
}

#[test]
fn flipping_one_rigid_node_matches_the_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut flips = 0;
    for _ in 0..400 {
        let g = random_graph(&mut rng, 9);
        let trees = random_constraints(&g, 2, &mut rng);
        let aux = build_aux_graph(&g, &trees);
        let specs = aux.gadget_wheels();
        let Ok(of) = orientation_formula(&aux.graph, &specs) else { continue };
        let Some(value) = of.formula.solve() else { continue };
        for x in 0..value.len() {
            let mut flipped = value.clone();
            flipped[x] = !flipped[x];
            let emb = aux.contract(&g, &of.embed(&aux.graph, &specs, &flipped));
            assert!(emb.is_planar(&g));
            assert_eq!(check_constraints(&g, &trees, &emb), of.formula.satisfied_by(&flipped), "{g:?} {trees:?} {x} {:?}", of.formula);
            flips += 1;
        }
    }
    assert!(flips > 50, "{flips}");
}
