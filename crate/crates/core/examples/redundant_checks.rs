//! Adding redundant parity checks changes the graph but not the code. The
//! irreducible pseudocodewords shrink, and so do the iterative decoder's
//! failures.

use pseudocodeword::decode::{exhaustive_bsc_sweep, Algorithm};
use pseudocodeword::fixtures;
use pseudocodeword::graph::{add_redundant_checks, enumerate_codewords, girth};
use pseudocodeword::polytope::enumerate_irreducible;

fn main() -> pseudocodeword::Result<()> {
    let a = fixtures::hamming7_a();
    for order in 1..=3 {
        let g = add_redundant_checks(&a, order)?;
        assert_eq!(enumerate_codewords(&g)?.words, enumerate_codewords(&a)?.words);
        let set = enumerate_irreducible(&g)?;
        let sweep = exhaustive_bsc_sweep(&g, Algorithm::MinSum, 100, 1)?;
        println!(
            "order {order}: {} checks, girth {:?}, {} irreducible ({} non-codeword), t = {}, weight-1 patterns corrected {}/{}",
            g.m(),
            girth(&g),
            set.counts.irreducible,
            set.counts.non_codeword,
            set.t_value,
            sweep.rows[1].correct,
            sweep.rows[1].patterns
        );
    }
    Ok(())
}
