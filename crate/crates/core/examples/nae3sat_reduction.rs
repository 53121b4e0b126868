//! Builds the fixed-sides and free-sides instances of a not-all-equal
//! 3-SAT formula and checks the fixed one end to end.

use nodetrix::hardness::{reduce_fixed, reduce_free, verify_reduction, Nae3SatFormula};

fn main() {
    let f = Nae3SatFormula::parse("a b c\n-a -b -c\n").unwrap();

    let fixed = reduce_fixed(&f);
    println!("fixed: {} clusters, {} edges", fixed.graph.clusters.len(), fixed.graph.m());
    let report = verify_reduction(&f, 1_000_000).unwrap();
    println!(
        "satisfiable {} planar {} ({} oracle calls)",
        report.satisfiable, report.planar, report.oracle_calls
    );

    let free = reduce_free(&f);
    let wheels = (0..free.gadgets.len()).filter(|&i| free.gadget_is_wheel(i)).count();
    println!("free: {} clusters, {wheels} wheel gadgets", free.graph.clusters.len());
}
