//! Exhaustive search over permutations, and over sides in the free model,
//! with a budget on constrained-planarity calls.

use nodetrix::generate::{gen_random, FrameShape, GenParams};
use nodetrix::oracle::{oracle_fixed, oracle_free, OracleError};

fn main() {
    let mut params = GenParams::new(5, 3, FrameShape::Planar);
    params.max_nontrivial = 2;
    let g = gen_random(&params, 7);

    let fixed = oracle_fixed(&g, 1_000_000).unwrap();
    println!("fixed sides: planar {} after {} calls", fixed.planar(), fixed.calls);

    let free = oracle_free(&g.without_sides(), 1_000_000).unwrap();
    println!("free sides: planar {} after {} calls", free.witness.is_some(), free.calls);

    match oracle_fixed(&g, 1) {
        Err(OracleError::BudgetExceeded(b)) => println!("budget of {b} exhausted"),
        other => println!("decided within one call: {}", other.unwrap().planar()),
    }
}
