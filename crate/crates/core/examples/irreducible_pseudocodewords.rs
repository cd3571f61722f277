//! Irreducible pseudocodewords and t-values of the bundled fixtures.
//!
//! Run with `cargo run --example irreducible_pseudocodewords`.

use pseudocodeword::fixtures;
use pseudocodeword::polytope::{enumerate_irreducible, Lattice, enumerate_irreducible_with, EnumLimits};

fn main() -> pseudocodeword::Result<()> {
    let graphs = [
        ("three-cycle", fixtures::three_cycle()),
        ("repetition", fixtures::repetition_cycle()),
        ("repetition-augmented", fixtures::repetition_augmented()),
        ("tree", fixtures::tree_graph()),
        ("fano", fixtures::fano()),
        ("hamming7-a", fixtures::hamming7_a()),
        ("hamming7-b", fixtures::hamming7_b()),
        ("hamming7-c", fixtures::hamming7_c()),
        ("star-ring-5", fixtures::star_ring(5)),
    ];
    println!("{:<22} {:>8} {:>12} {:>14} {:>3}", "graph", "vertices", "irreducible", "non-codeword", "t");
    for (name, g) in &graphs {
        let s = enumerate_irreducible(g)?;
        println!(
            "{:<22} {:>8} {:>12} {:>14} {:>3}",
            name, s.counts.vertices, s.counts.irreducible, s.counts.non_codeword, s.t_value
        );
    }

    let a = fixtures::hamming7_a();
    let s = enumerate_irreducible(&a)?;
    println!("\nnon-codeword irreducibles of hamming7-a:");
    for p in s.irreducible.iter().filter(|p| p.iter().any(|&x| x > 1)) {
        println!("  {p:?}");
    }

    // Without the parity constraint the monoid has many more minimal elements.
    let plain = enumerate_irreducible_with(&a, Lattice::Integer, &EnumLimits::default())?;
    println!("\nhamming7-a ignoring parity: {} minimal cone points", plain.counts.irreducible);
    Ok(())
}
