//! Seeded generators: random frames populated with clusters, and the
//! series-parallel chains used for scaling runs.

use nodetrix::cli::serialize;
use nodetrix::generate::{gen_random, sp_chain, FrameShape, GenParams};

fn main() {
    for shape in [FrameShape::Sp, FrameShape::Partial2Tree, FrameShape::Planar] {
        let g = gen_random(&GenParams::new(6, 3, shape), 42);
        println!("{shape:?}: {} vertices, {} edges, light {}", g.n(), g.m(), g.is_light());
    }
    let chain = sp_chain(10, 3, 1);
    println!("chain of 10: {} vertices", chain.n());
    print!("{}", serialize(&gen_random(&GenParams::new(3, 2, FrameShape::Sp), 1)));
}
