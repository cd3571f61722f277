//! Pseudo-weights on every channel and the closed-form lower bounds next to
//! the measured minimum.

use pseudocodeword::fixtures;
use pseudocodeword::graph::girth;
use pseudocodeword::linalg::fmt_rat;
use pseudocodeword::polytope::enumerate_irreducible;
use pseudocodeword::weights::{feldman_bound, histogram_csv, min_weight, tree_bound, weight_histogram, weight_report, Channel};

fn main() -> pseudocodeword::Result<()> {
    let p = [2, 1, 1, 0, 1, 1, 0];
    let w = weight_report(&p)?;
    println!("p = {p:?}: BEC {} BSC {} AWGN {} max-frac {}", w.w_bec, w.w_bsc, fmt_rat(&w.w_awgn), fmt_rat(&w.w_maxfrac));

    let g = fixtures::fano();
    let gi = girth(&g).expect("has cycles") as u64;
    let set = enumerate_irreducible(&g)?;
    let awgn = min_weight(&set.irreducible, Channel::Awgn)?.expect("nonempty");
    println!("fano: girth {gi}, w_min(AWGN) = {}", fmt_rat(&awgn));
    println!("  tree bound      {}", tree_bound(3, gi)?);
    println!("  feldman bound   {}", feldman_bound(3, 3, gi)?);

    let h = enumerate_irreducible(&fixtures::hamming7_a())?;
    print!("hamming7-a AWGN histogram\n{}", histogram_csv(&weight_histogram(&h, Channel::Awgn)?));
    Ok(())
}
