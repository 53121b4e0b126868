//! Decides a random instance with a partial-2-tree frame and checks the
//! accepted permutation assignment against the wheel reduction.

use nodetrix::generate::{gen_random, FrameShape, GenParams};
use nodetrix::oracle::test_assignment;
use nodetrix::sp::test_partial_2_tree;

fn main() {
    let mut params = GenParams::new(8, 3, FrameShape::Partial2Tree);
    params.max_nontrivial = 5;
    for seed in 0..5 {
        let g = gen_random(&params, seed);
        let v = test_partial_2_tree(&g).expect("light instance with a partial-2-tree frame");
        let confirmed = v.pi.as_ref().map(|pi| test_assignment(&g, pi).is_some());
        println!("seed {seed}: planar {} (max pairs {}, confirmed {confirmed:?})", v.planar(), v.max_pairs);
    }
}
