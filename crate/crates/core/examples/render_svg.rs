//! Decides an instance, lays it out as matrices and connectors, audits the
//! drawing and writes it as SVG.

use nodetrix::cli::{audit, compute_layout, render_svg, run_test, Algorithm};
use nodetrix::generate::{gen_random, FrameShape, GenParams};
use nodetrix::oracle::DEFAULT_BUDGET;

fn main() {
    let mut params = GenParams::new(6, 3, FrameShape::Sp);
    params.max_nontrivial = 3;
    let g = gen_random(&params, 3);
    let out = run_test(&g, Algorithm::Auto, DEFAULT_BUDGET).unwrap();
    let Some(witness) = &out.witness else {
        println!("not planar, nothing to draw");
        return;
    };
    let layout = compute_layout(&out.sided, witness).unwrap();
    println!("{} matrices, {} connectors, defects {:?}", layout.matrices.len(), layout.routes.len(), audit(&out.sided, &layout));
    let path = std::env::temp_dir().join("nodetrix.svg");
    std::fs::write(&path, render_svg(&out.sided, &layout)).unwrap();
    println!("wrote {}", path.display());
}
