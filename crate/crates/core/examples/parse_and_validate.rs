//! Reads an instance in the text format, reports violations and prints the
//! canonical form.

use nodetrix::cli::{parse, serialize};

const TEXT: &str = "\
nodetrix 1
model fixed
[vertices]
a1 a2 b1 b2 x
[clusters]
A = a1 a2
B = b1 b2
[intra]
a1 a2
[inter]
a1:R b1:L
a2:B x
b2:T x
";

fn main() {
    let g = parse(TEXT).expect("well-formed instance");
    println!("{} vertices, {} edges, {} clusters, light: {}", g.n(), g.m(), g.clusters.len(), g.is_light());
    print!("{}", serialize(&g));

    let broken = TEXT.replace("a2:B x", "a2 x");
    match parse(&broken) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
}
