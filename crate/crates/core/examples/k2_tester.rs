//! Decides instances whose clusters have at most two vertices on an
//! arbitrary planar frame.

use nodetrix::generate::{gen_random, FrameShape, GenParams};
use nodetrix::k2::test_k2;

fn main() {
    let mut params = GenParams::new(7, 2, FrameShape::Planar);
    params.nontrivial_prob = 0.8;
    for seed in 0..5 {
        let g = gen_random(&params, seed);
        let v = test_k2(&g).expect("clusters of size at most two");
        match &v.pi {
            Some(pi) => println!("seed {seed}: planar, permutations {:?}", pi.0),
            None => println!("seed {seed}: not planar"),
        }
    }
}
