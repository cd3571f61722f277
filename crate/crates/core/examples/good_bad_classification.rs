//! Decide with exact LP whether a pseudocodeword is bad, i.e. some channel
//! output makes it beat every codeword, and print the witness.

use pseudocodeword::classify::{classify_all, is_bad_awgn, is_bad_restricted, Domain};
use pseudocodeword::fixtures;
use pseudocodeword::linalg::fmt_rat;

fn main() -> pseudocodeword::Result<()> {
    let g = fixtures::len14_d8();
    let p = fixtures::LEN14_D8_P;
    let d = is_bad_awgn(&g, &p)?;
    let w = d.witness.as_ref().expect("bad");
    println!("length-14 vector bad: {}", d.bad);
    println!("  w = [{}]", w.w.iter().map(fmt_rat).collect::<Vec<_>>().join(", "));
    println!("  p.w = {}", fmt_rat(&w.p_dot_w));

    let h = fixtures::hamming7_a();
    let all = classify_all(&h)?;
    let bad = all.iter().filter(|c| c.bad).count();
    println!("hamming7-a: {bad} bad of {} irreducible", all.len());
    for c in all.iter().filter(|c| c.bad).take(3) {
        let bsc = is_bad_restricted(&h, &c.p, Domain::Bsc)?.bad;
        println!("  {:?} awgn-bad, bsc-bad {bsc}", c.p);
    }
    Ok(())
}
