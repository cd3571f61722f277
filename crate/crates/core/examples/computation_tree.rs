//! Unroll the four-cycle repetition graph with and without the redundant
//! degree-four check, and look for valid tree assignments whose local
//! configurations do not agree on a single base vector.

use pseudocodeword::comptree::{build_tree, check_claims, consistency_check, find_assignment_with_local_config, rats};
use pseudocodeword::fixtures;
use pseudocodeword::linalg::fmt_rat;

fn main() -> pseudocodeword::Result<()> {
    let cycle = fixtures::repetition_cycle();
    let aug = fixtures::repetition_augmented();
    println!("cycle claims {:?}", check_claims(&cycle));
    println!("augmented claims {:?}", check_claims(&aug));

    let tree = build_tree(&aug, 0, 2)?;
    println!("augmented, 2 iterations: {} nodes, copies {:?}", tree.nodes.len(), tree.check_copies());
    let target = rats(&[(1, 3), (1, 1), (0, 1), (2, 3)]);
    if let Some(a) = find_assignment_with_local_config(&tree, 4, &target) {
        let c = consistency_check(&tree, &a, aug.n());
        println!("consistent: {}", c.consistent);
        for lc in &c.local_configs {
            let v: Vec<String> = lc.average.iter().map(fmt_rat).collect();
            println!("  u{} over {} copies: ({})", lc.check + 1, lc.copies, v.join(", "));
        }
    }
    if std::env::args().any(|a| a == "--dot") {
        print!("{}", tree.to_dot(&aug));
    }
    Ok(())
}
