//! Parse a parity-check matrix in alist or dense form and print its basic
//! structure: degrees, girth, rank, minimum distance.
//!
//! `cargo run --example parse_and_stats -- fixtures/hamming7-b.alist`

use pseudocodeword::graph::{emit_dense, parse, stats, MatrixFormat};

fn main() -> pseudocodeword::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/hamming7-a.alist").into());
    let fmt = if path.ends_with(".alist") { MatrixFormat::Alist } else { MatrixFormat::Dense };
    let g = parse(&std::fs::read_to_string(&path)?, fmt)?;
    let s = stats(&g)?;
    println!("{path}");
    print!("{}", emit_dense(&g));
    println!("n={} m={} edges={} rank={} k={}", s.n, s.m, s.edges, s.rank, s.dimension);
    println!("girth={:?} d_min={:?}", s.girth, s.d_min);
    println!("variable degrees {:?}", s.var_degrees);
    println!("check degrees    {:?}", s.check_degrees);
    println!("sha256 {}", g.content_hash());
    Ok(())
}
