//! Min-sum, sum-product and ML decoding, channel models, and the
//! exhaustive and Monte Carlo harnesses built on them.
//!
//! Decoding runs in the LLR domain with `f64` messages clipped to
//! `±MESSAGE_CLIP`; a positive LLR favors bit 0.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{limit, pre, Result};
use crate::graph::{enumerate_codewords, gf2_rank, Codebook, TannerGraph};

pub const MESSAGE_CLIP: f64 = 50.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    MinSum,
    SumProduct,
    Ml,
}

impl std::str::FromStr for Algorithm {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ms" | "min-sum" => Ok(Algorithm::MinSum),
            "sp" | "sum-product" => Ok(Algorithm::SumProduct),
            "ml" => Ok(Algorithm::Ml),
            _ => Err(format!("unknown decoder {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Correct,
    UndetectedError,
    DetectedError,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecodeOutput {
    /// Final hard decision, a codeword only when `converged`.
    pub hard: Vec<u8>,
    pub converged: bool,
    pub iters: usize,
    /// ML only: another codeword had the same cost.
    pub tie: bool,
}

impl DecodeOutput {
    pub fn status(&self, tx: &[u8]) -> Status {
        if !self.converged {
            Status::DetectedError
        } else if self.hard == tx {
            Status::Correct
        } else {
            Status::UndetectedError
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialRecord {
    pub tx: Vec<u8>,
    pub llr: Vec<f64>,
    pub output: DecodeOutput,
    pub status: Status,
}

fn hard(l: f64) -> u8 {
    u8::from(l < 0.0)
}

fn clip(x: f64) -> f64 {
    x.clamp(-MESSAGE_CLIP, MESSAGE_CLIP)
}

/// Edge layout shared by the iterative decoders.
struct Edges {
    n: usize,
    /// Edge ids per check, in the check's neighbor order.
    check_edges: Vec<Vec<usize>>,
    edge_var: Vec<usize>,
    var_edges: Vec<Vec<usize>>,
}

impl Edges {
    fn new(g: &TannerGraph) -> Self {
        let mut check_edges = Vec::with_capacity(g.m());
        let mut edge_var = Vec::new();
        let mut var_edges = vec![Vec::new(); g.n()];
        for c in g.checks() {
            let mut ids = Vec::with_capacity(c.len());
            for &i in c {
                ids.push(edge_var.len());
                var_edges[i].push(edge_var.len());
                edge_var.push(i);
            }
            check_edges.push(ids);
        }
        Edges { n: g.n(), check_edges, edge_var, var_edges }
    }

    fn syndrome_ok(&self, x: &[u8]) -> bool {
        self.check_edges.iter().all(|es| es.iter().map(|&e| x[self.edge_var[e]]).sum::<u8>() % 2 == 0)
    }

    fn run(&self, llr: &[f64], max_iters: usize, sum_product: bool) -> DecodeOutput {
        let ne = self.edge_var.len();
        let mut c2v = vec![0.0f64; ne];
        let mut v2c = vec![0.0f64; ne];
        let mut x = vec![0u8; self.n];
        for it in 1..=max_iters {
            for i in 0..self.n {
                let total: f64 = llr[i] + self.var_edges[i].iter().map(|&e| c2v[e]).sum::<f64>();
                for &e in &self.var_edges[i] {
                    v2c[e] = clip(total - c2v[e]);
                }
            }
            for es in &self.check_edges {
                if sum_product {
                    check_update_tanh(es, &v2c, &mut c2v);
                } else {
                    check_update_min(es, &v2c, &mut c2v);
                }
            }
            for i in 0..self.n {
                let total = llr[i] + self.var_edges[i].iter().map(|&e| c2v[e]).sum::<f64>();
                x[i] = hard(total);
            }
            if self.syndrome_ok(&x) {
                return DecodeOutput { hard: x, converged: true, iters: it, tie: false };
            }
        }
        DecodeOutput { hard: x, converged: false, iters: max_iters, tie: false }
    }
}

fn check_update_min(es: &[usize], v2c: &[f64], c2v: &mut [f64]) {
    // Sign product and the two smallest magnitudes give every extrinsic min.
    let mut sign = 1.0;
    let (mut m1, mut m2, mut arg) = (f64::INFINITY, f64::INFINITY, usize::MAX);
    for &e in es {
        let v = v2c[e];
        if v < 0.0 {
            sign = -sign;
        }
        let a = v.abs();
        if a < m1 {
            m2 = m1;
            m1 = a;
            arg = e;
        } else if a < m2 {
            m2 = a;
        }
    }
    for &e in es {
        let s = if v2c[e] < 0.0 { -sign } else { sign };
        let mag = if e == arg { m2 } else { m1 };
        c2v[e] = if mag.is_finite() { clip(s * mag) } else { 0.0 };
    }
}

fn check_update_tanh(es: &[usize], v2c: &[f64], c2v: &mut [f64]) {
    const T_MAX: f64 = 0.999_999_999_999;
    for &e in es {
        let mut prod = 1.0;
        for &f in es {
            if f != e {
                prod *= (v2c[f] / 2.0).tanh();
            }
        }
        let prod = prod.clamp(-T_MAX, T_MAX);
        c2v[e] = clip(2.0 * prod.atanh());
    }
}

pub fn min_sum_decode(g: &TannerGraph, llr: &[f64], max_iters: usize) -> Result<DecodeOutput> {
    check_args(g, llr, max_iters)?;
    Ok(Edges::new(g).run(llr, max_iters, false))
}

pub fn sum_product_decode(g: &TannerGraph, llr: &[f64], max_iters: usize) -> Result<DecodeOutput> {
    check_args(g, llr, max_iters)?;
    Ok(Edges::new(g).run(llr, max_iters, true))
}

fn check_args(g: &TannerGraph, llr: &[f64], max_iters: usize) -> Result<()> {
    if llr.len() != g.n() {
        return pre(format!("LLR length {} does not match n = {}", llr.len(), g.n()));
    }
    if max_iters == 0 {
        return pre("max_iters must be at least 1");
    }
    Ok(())
}

/// `argmin_c Σ c_i llr_i`; the codebook is sorted, so the first minimum is the
/// lexicographically smallest.
pub fn ml_decode(cb: &Codebook, llr: &[f64]) -> DecodeOutput {
    let cost = |c: &[u8]| c.iter().zip(llr).map(|(&b, &l)| if b == 1 { l } else { 0.0 }).sum::<f64>();
    let mut best = 0;
    let mut best_cost = f64::INFINITY;
    let mut tie = false;
    for (k, c) in cb.words.iter().enumerate() {
        let v = cost(c);
        if v < best_cost {
            best = k;
            best_cost = v;
            tie = false;
        } else if v == best_cost {
            tie = true;
        }
    }
    DecodeOutput { hard: cb.words[best].clone(), converged: true, iters: 1, tie }
}

/// A decoder bound to one graph, reusable across trials.
pub struct Decoder {
    pub algorithm: Algorithm,
    pub max_iters: usize,
    edges: Edges,
    codebook: Option<Codebook>,
}

impl Decoder {
    pub fn new(g: &TannerGraph, algorithm: Algorithm, max_iters: usize) -> Result<Self> {
        if max_iters == 0 {
            return pre("max_iters must be at least 1");
        }
        let codebook = match algorithm {
            Algorithm::Ml => Some(enumerate_codewords(g)?),
            _ => None,
        };
        Ok(Decoder { algorithm, max_iters, edges: Edges::new(g), codebook })
    }

    pub fn decode(&self, llr: &[f64]) -> DecodeOutput {
        match self.algorithm {
            Algorithm::MinSum => self.edges.run(llr, self.max_iters, false),
            Algorithm::SumProduct => self.edges.run(llr, self.max_iters, true),
            Algorithm::Ml => ml_decode(self.codebook.as_ref().expect("built for ML"), llr),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PeelResult {
    pub decoded: Vec<Option<u8>>,
    /// Variables still erased when no check has a single erased neighbor.
    pub stall: Vec<usize>,
}

/// Erasure decoding by peeling; `received[i] == None` marks an erasure.
pub fn bec_peel(g: &TannerGraph, received: &[Option<u8>]) -> Result<PeelResult> {
    if received.len() != g.n() {
        return pre("received length does not match n");
    }
    let mut x = received.to_vec();
    loop {
        let mut progress = false;
        for c in g.checks() {
            let erased: Vec<usize> = c.iter().copied().filter(|&i| x[i].is_none()).collect();
            if erased.len() == 1 {
                let s: u8 = c.iter().filter_map(|&i| x[i]).sum::<u8>() % 2;
                x[erased[0]] = Some(s);
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    let stall = (0..g.n()).filter(|&i| x[i].is_none()).collect();
    Ok(PeelResult { decoded: x, stall })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ChannelModel {
    Bsc { p: f64 },
    Bec { p: f64 },
    Biawgn { ebn0_db: f64, rate: f64 },
}

impl ChannelModel {
    /// Noise variance `σ² = 1 / (2 R 10^(Eb/N0 / 10))`.
    pub fn sigma2(ebn0_db: f64, rate: f64) -> f64 {
        1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0))
    }

    pub fn bsc_llr(p: f64) -> f64 {
        if p <= 0.0 {
            MESSAGE_CLIP
        } else {
            clip(((1.0 - p) / p).ln())
        }
    }

    /// Name of the CSV parameter column.
    pub fn param_name(&self) -> &'static str {
        match self {
            ChannelModel::Bsc { .. } => "p_flip",
            ChannelModel::Bec { .. } => "p_erase",
            ChannelModel::Biawgn { .. } => "snr_db",
        }
    }

    pub fn param(&self) -> f64 {
        match *self {
            ChannelModel::Bsc { p } | ChannelModel::Bec { p } => p,
            ChannelModel::Biawgn { ebn0_db, .. } => ebn0_db,
        }
    }

    /// Draws a channel output for `tx` and maps it to LLRs.
    pub fn sample<R: Rng>(&self, tx: &[u8], rng: &mut R) -> Vec<f64> {
        match *self {
            ChannelModel::Bsc { p } => {
                let l = Self::bsc_llr(p);
                tx.iter().map(|&b| if (b ^ u8::from(rng.gen::<f64>() < p)) == 0 { l } else { -l }).collect()
            }
            ChannelModel::Bec { p } => tx
                .iter()
                .map(|&b| if rng.gen::<f64>() < p { 0.0 } else if b == 0 { MESSAGE_CLIP } else { -MESSAGE_CLIP })
                .collect(),
            ChannelModel::Biawgn { ebn0_db, rate } => {
                let s2 = Self::sigma2(ebn0_db, rate);
                let sigma = s2.sqrt();
                tx.iter()
                    .map(|&b| {
                        let n: f64 = rng.sample(StandardNormal);
                        let y = if b == 0 { 1.0 } else { -1.0 } + sigma * n;
                        clip(2.0 * y / s2)
                    })
                    .collect()
            }
        }
    }
}

pub fn code_rate(g: &TannerGraph) -> Result<f64> {
    Ok((g.n() - gf2_rank(g)?) as f64 / g.n() as f64)
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct WeightRow {
    pub weight: usize,
    pub patterns: u64,
    pub correct: u64,
    pub undetected: u64,
    pub detected: u64,
    /// Mean Hamming distance between output and the sent all-zeros word.
    pub avg_output_bit_errors: f64,
    /// Patterns where the decoder's hard decision equals the ML decision.
    pub ml_agree: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub algorithm: Algorithm,
    pub max_iters: usize,
    pub rows: Vec<WeightRow>,
}

pub const MAX_SWEEP_N: usize = 24;

/// Sends the zero word through every BSC error pattern of weight up to
/// `max_weight`. Patterns carry LLR `±ln((1-p)/p)` with `p = 0.05`; min-sum
/// does not depend on the scale.
pub fn exhaustive_bsc_sweep(g: &TannerGraph, algorithm: Algorithm, max_iters: usize, max_weight: usize) -> Result<SweepReport> {
    if g.n() > MAX_SWEEP_N {
        return limit(format!("exhaustive sweep supports n <= {MAX_SWEEP_N}, got {}", g.n()));
    }
    let dec = Decoder::new(g, algorithm, max_iters)?;
    let ml = Decoder::new(g, Algorithm::Ml, 1)?;
    let n = g.n();
    let l = ChannelModel::bsc_llr(0.05);
    let max_weight = max_weight.min(n);
    let rows: Vec<WeightRow> = (0u64..1 << n)
        .into_par_iter()
        .filter(|m| m.count_ones() as usize <= max_weight)
        .fold(
            || vec![WeightRow::default(); max_weight + 1],
            |mut acc, mask| {
                let llr: Vec<f64> = (0..n).map(|i| if mask >> i & 1 == 1 { -l } else { l }).collect();
                let out = dec.decode(&llr);
                let row = &mut acc[mask.count_ones() as usize];
                row.patterns += 1;
                match out.status(&vec![0; n]) {
                    Status::Correct => row.correct += 1,
                    Status::UndetectedError => row.undetected += 1,
                    Status::DetectedError => row.detected += 1,
                }
                row.avg_output_bit_errors += out.hard.iter().map(|&b| b as f64).sum::<f64>();
                if out.hard == ml.decode(&llr).hard {
                    row.ml_agree += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![WeightRow::default(); max_weight + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    x.patterns += y.patterns;
                    x.correct += y.correct;
                    x.undetected += y.undetected;
                    x.detected += y.detected;
                    x.avg_output_bit_errors += y.avg_output_bit_errors;
                    x.ml_agree += y.ml_agree;
                }
                a
            },
        );
    let rows = rows
        .into_iter()
        .enumerate()
        .map(|(w, mut r)| {
            r.weight = w;
            if r.patterns > 0 {
                r.avg_output_bit_errors /= r.patterns as f64;
            }
            r
        })
        .collect();
    Ok(SweepReport { algorithm, max_iters, rows })
}

pub fn sweep_csv(report: &SweepReport) -> String {
    let mut s = String::from("weight,patterns,correct,undetected,detected,avg_output_bit_errors,ml_agree\n");
    for r in &report.rows {
        s.push_str(&format!(
            "{},{},{},{},{},{:.6},{}\n",
            r.weight, r.patterns, r.correct, r.undetected, r.detected, r.avg_output_bit_errors, r.ml_agree
        ));
    }
    s
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloPoint {
    pub channel: ChannelModel,
    pub trials: u64,
    pub bit_errors: u64,
    pub frame_errors: u64,
    pub detected: u64,
    pub undetected: u64,
}

impl MonteCarloPoint {
    pub fn ber(&self, n: usize) -> f64 {
        self.bit_errors as f64 / (self.trials as f64 * n as f64)
    }
    pub fn fer(&self) -> f64 {
        self.frame_errors as f64 / self.trials as f64
    }
    pub fn detected_rate(&self) -> f64 {
        self.detected as f64 / self.trials as f64
    }
    pub fn undetected_rate(&self) -> f64 {
        self.undetected as f64 / self.trials as f64
    }
}

/// One trial with its own RNG stream, so results do not depend on thread
/// count or scheduling.
pub fn run_trial(dec: &Decoder, channel: &ChannelModel, n: usize, seed: u64, index: u64) -> TrialRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let tx = vec![0u8; n];
    let llr = channel.sample(&tx, &mut rng);
    let output = dec.decode(&llr);
    let status = output.status(&tx);
    TrialRecord { tx, llr, output, status }
}

/// All-zeros transmission over `channel`, `trials` independent draws.
pub fn monte_carlo(g: &TannerGraph, dec: &Decoder, channel: ChannelModel, trials: u64, seed: u64) -> Result<MonteCarloPoint> {
    if trials == 0 {
        return pre("trials must be at least 1");
    }
    let n = g.n();
    let (bits, frames, det, undet) = (0..trials)
        .into_par_iter()
        .map(|t| {
            let r = run_trial(dec, &channel, n, seed, t);
            let bits = r.output.hard.iter().map(|&b| b as u64).sum::<u64>();
            match r.status {
                Status::Correct => (bits, 0, 0, 0),
                Status::UndetectedError => (bits, 1, 0, 1),
                Status::DetectedError => (bits, 1, 1, 0),
            }
        })
        .reduce(|| (0, 0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2, a.3 + b.3));
    Ok(MonteCarloPoint { channel, trials, bit_errors: bits, frame_errors: frames, detected: det, undetected: undet })
}

pub fn monte_carlo_csv(points: &[MonteCarloPoint], n: usize) -> String {
    let name = points.first().map_or("snr_db", |p| p.channel.param_name());
    let mut s = format!("{name},trials,ber,fer,detected,undetected\n");
    for p in points {
        s.push_str(&format!(
            "{},{},{:.6e},{:.6e},{:.6e},{:.6e}\n",
            p.channel.param(),
            p.trials,
            p.ber(n),
            p.fer(),
            p.detected_rate(),
            p.undetected_rate()
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::stopping::is_stopping_set;

    #[test]
    fn positive_llr_decodes_to_zero_in_one_iteration() {
        let g = fixtures::hamming7_a();
        let out = min_sum_decode(&g, &[1.0; 7], 100).unwrap();
        assert_eq!((out.hard, out.converged, out.iters), (vec![0; 7], true, 1));
    }

    #[test]
    fn ml_total_tie_picks_first_word() {
        let cb = enumerate_codewords(&fixtures::hamming7_a()).unwrap();
        let out = ml_decode(&cb, &[0.0; 7]);
        assert!(out.tie);
        assert_eq!(out.hard, vec![0; 7]);
    }

    #[test]
    fn peeling_stalls_on_stopping_set() {
        let g = fixtures::hamming7_a();
        let mut rx = vec![Some(0u8); 7];
        for &i in &[0, 1, 2, 3, 4, 5, 6] {
            rx[i] = None;
        }
        let r = bec_peel(&g, &rx).unwrap();
        assert!(is_stopping_set(&g, &r.stall));
        rx = vec![Some(0); 7];
        rx[0] = None;
        assert!(bec_peel(&g, &rx).unwrap().stall.is_empty());
    }

    #[test]
    fn sigma_convention() {
        assert!((ChannelModel::sigma2(0.0, 0.5) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn monte_carlo_is_deterministic() {
        let g = fixtures::hamming7_a();
        let dec = Decoder::new(&g, Algorithm::MinSum, 20).unwrap();
        let ch = ChannelModel::Biawgn { ebn0_db: 2.0, rate: 4.0 / 7.0 };
        let a = monte_carlo(&g, &dec, ch, 500, 7).unwrap();
        let b = monte_carlo(&g, &dec, ch, 500, 7).unwrap();
        assert_eq!(a, b);
        let z = monte_carlo(&g, &dec, ChannelModel::Bsc { p: 0.0 }, 100, 1).unwrap();
        assert_eq!(z.frame_errors, 0);
    }
}
