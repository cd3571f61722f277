//! Minimal stopping sets, property Θ, problematic nodes, and which case of
//! the stopping-set classification applies to each set.

use pseudocodeword::fixtures;
use pseudocodeword::stopping::{classify_stopping_set, enumerate_minimal_stopping_sets, find_problematic_nodes, s_min};

fn main() -> pseudocodeword::Result<()> {
    for (name, g) in [("hamming7-a", fixtures::hamming7_a()), ("hamming7-b", fixtures::hamming7_b()), ("star-ring-5", fixtures::star_ring(5))] {
        println!("{name}: s_min = {:?}, problematic nodes {:?}", s_min(&g)?, find_problematic_nodes(&g)?);
        for s in enumerate_minimal_stopping_sets(&g, g.n(), false)?.iter().take(6) {
            let r = classify_stopping_set(&g, s)?;
            println!("  S = {:?}  theta {}  case {:?}  bad {}", r.members, r.theta, r.case, r.bad_exists);
        }
    }
    Ok(())
}
