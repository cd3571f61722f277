//! Realize a pseudocodeword as a codeword in a finite lift, then check the
//! lift and project the codeword back down.

use pseudocodeword::fixtures;
use pseudocodeword::graph::girth;
use pseudocodeword::lift::{realize_pseudocodeword, reduce_lift_codeword, RealizeOutcome};
use pseudocodeword::polytope::{enumerate_irreducible, min_lift_degree_bound};

fn main() -> pseudocodeword::Result<()> {
    let g = fixtures::hamming7_a();
    let set = enumerate_irreducible(&g)?;
    for p in set.irreducible.iter().filter(|p| p.iter().any(|&x| x > 1)).take(5) {
        let bound = min_lift_degree_bound(&g, p)?;
        match realize_pseudocodeword(&g, p, Some(8))? {
            RealizeOutcome::Realized(r) => {
                let lift = r.lift(&g);
                assert!(lift.is_codeword(&r.lift_codeword));
                assert_eq!(&reduce_lift_codeword(&lift, &r.lift_codeword)?, p);
                println!(
                    "p = {p:?}: degree {} (lower bound {}), lift girth {:?}",
                    r.degree,
                    bound.check_sum_bound,
                    girth(&lift.to_tanner())
                );
            }
            RealizeOutcome::NotFoundWithinBound { max_degree } => println!("p = {p:?}: no lift up to degree {max_degree}"),
        }
    }
    Ok(())
}
