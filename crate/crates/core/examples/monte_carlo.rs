//! Seed-fixed BIAWGN simulation of the Hamming representations under
//! min-sum, with detected and undetected errors counted separately.
//!
//! `cargo run --release --example monte_carlo -- 100000`

use pseudocodeword::decode::{code_rate, monte_carlo, monte_carlo_csv, Algorithm, ChannelModel, Decoder};
use pseudocodeword::fixtures;

fn main() -> pseudocodeword::Result<()> {
    let trials: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20_000);
    for (name, g) in [("A", fixtures::hamming7_a()), ("B", fixtures::hamming7_b()), ("C", fixtures::hamming7_c())] {
        let dec = Decoder::new(&g, Algorithm::MinSum, 100)?;
        let rate = code_rate(&g)?;
        let mut points = Vec::new();
        for snr in [4.0, 6.0, 8.0] {
            points.push(monte_carlo(&g, &dec, ChannelModel::Biawgn { ebn0_db: snr, rate }, trials, 2024)?);
        }
        println!("# representation {name}");
        print!("{}", monte_carlo_csv(&points, g.n()));
    }
    Ok(())
}
