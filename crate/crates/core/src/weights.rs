//! Pseudo-weights per channel, the max-fractional weight, and closed-form
//! lower bounds on the minimum pseudo-weight.

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{input, pre, Result};
use crate::graph::TannerGraph;
use crate::linalg::{rat, ratio, serde_rat, Rational};
use crate::polytope::{enumerate_irreducible, IrreducibleSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Channel {
    Bec,
    Bsc,
    Awgn,
}

impl Channel {
    pub const ALL: [Channel; 3] = [Channel::Bec, Channel::Bsc, Channel::Awgn];
}

fn nonzero(p: &[i64]) -> Result<()> {
    if p.iter().any(|&x| x < 0) {
        return input("pseudocodeword has a negative component");
    }
    if p.iter().all(|&x| x == 0) {
        return pre("weight of the zero vector is undefined");
    }
    Ok(())
}

/// Smallest `e` whose `e` largest components reach half the total, and
/// whether they hit it exactly.
pub fn bsc_median(p: &[i64]) -> Result<(usize, bool)> {
    nonzero(p)?;
    let mut v = p.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    let total: i64 = v.iter().sum();
    let mut acc = 0;
    for (k, x) in v.iter().enumerate() {
        acc += x;
        if 2 * acc >= total {
            return Ok((k + 1, 2 * acc == total));
        }
    }
    unreachable!("the full sum always reaches half the total")
}

pub fn weight(p: &[i64], channel: Channel) -> Result<Rational> {
    nonzero(p)?;
    Ok(match channel {
        Channel::Bec => rat(p.iter().filter(|&&x| x > 0).count() as i64),
        Channel::Bsc => {
            let (e, exact) = bsc_median(p)?;
            rat(if exact { 2 * e as i64 } else { 2 * e as i64 - 1 })
        }
        Channel::Awgn => {
            let s: i64 = p.iter().sum();
            let q: i64 = p.iter().map(|x| x * x).sum();
            ratio(s * s, q)
        }
    })
}

pub fn max_frac_weight(p: &[i64]) -> Result<Rational> {
    nonzero(p)?;
    Ok(ratio(p.iter().sum(), *p.iter().max().expect("nonempty")))
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightReport {
    pub w_bec: i64,
    pub w_bsc: i64,
    #[serde(with = "serde_rat")]
    pub w_awgn: Rational,
    #[serde(with = "serde_rat")]
    pub w_maxfrac: Rational,
    pub e: usize,
}

pub fn weight_report(p: &[i64]) -> Result<WeightReport> {
    let (e, _) = bsc_median(p)?;
    let whole = |r: Rational| r.to_integer().to_i64().expect("small integer");
    Ok(WeightReport {
        w_bec: whole(weight(p, Channel::Bec)?),
        w_bsc: whole(weight(p, Channel::Bsc)?),
        w_awgn: weight(p, Channel::Awgn)?,
        w_maxfrac: max_frac_weight(p)?,
        e,
    })
}

/// Tree bound on the minimum BSC/AWGN pseudo-weight for a `d`-left-regular
/// graph of girth `g`.
///
/// For `g/2` odd the series is `1 + Σ_{i=0}^{(g-6)/4} d(d-1)^i`: the leading
/// `1` and the `i = 0` term `d` are counted once each. For `g/2` even it is
/// `1 + Σ_{i=0}^{(g-8)/4} d(d-1)^i + (d-1)^{(g-4)/4}`.
pub fn tree_bound(d: u64, g: u64) -> Result<u64> {
    tree_bound_generalized(d, g, 1)
}

/// Same series with the `i`-th term multiplied by `x^{i+1}` and the final
/// even-case term by `x^{g/4}`, where `x = εk - 1`.
pub fn tree_bound_generalized(d: u64, g: u64, x: u64) -> Result<u64> {
    if g < 6 || g % 2 == 1 {
        return pre(format!("tree bound needs an even girth of at least 6, got {g}"));
    }
    if d < 2 {
        return pre("tree bound needs left degree at least 2");
    }
    if x < 1 {
        return pre("x = εk - 1 must be at least 1");
    }
    let mut total: u64 = 1;
    if (g / 2) % 2 == 1 {
        for i in 0..=(g - 6) / 4 {
            total += d * (d - 1).pow(i as u32) * x.pow(i as u32 + 1);
        }
    } else {
        if g >= 8 {
            for i in 0..=(g - 8) / 4 {
                total += d * (d - 1).pow(i as u32) * x.pow(i as u32 + 1);
            }
        }
        total += (d - 1).pow(((g - 4) / 4) as u32) * x.pow((g / 4) as u32);
    }
    Ok(total)
}

/// `(deg_l^- - 1)^{⌈g/4⌉ - 1}`, a lower bound on the max-fractional weight.
pub fn feldman_bound(deg_l_min: u64, deg_r_min: u64, g: u64) -> Result<u64> {
    if deg_l_min < 3 || deg_r_min < 2 || g <= 4 {
        return pre("requires left degree >= 3, right degree >= 2 and girth > 4");
    }
    Ok((deg_l_min - 1).pow((g.div_ceil(4) - 1) as u32))
}

#[derive(Clone, Debug, Serialize)]
pub struct SupportBounds {
    #[serde(with = "serde_rat")]
    pub awgn_lb: Rational,
    #[serde(with = "serde_rat")]
    pub bsc_lb: Rational,
}

/// Lower bounds for a pseudocodeword with maximum component `t` on a support
/// of size `support`.
pub fn t_support_bounds(t: i64, support: i64) -> Result<SupportBounds> {
    if t < 1 || support < 1 {
        return pre("t and the support size must be positive");
    }
    let awgn = ratio(2 * t * t, (1 + t * t) * (t - 1) + 2 * t) * rat(support);
    Ok(SupportBounds { awgn_lb: awgn, bsc_lb: ratio(support, t) })
}

/// Minimum weight over a list of pseudocodewords.
pub fn min_weight(ps: &[Vec<i64>], channel: Channel) -> Result<Option<Rational>> {
    let mut best: Option<Rational> = None;
    for p in ps {
        let w = weight(p, channel)?;
        if best.as_ref().map_or(true, |b| w < *b) {
            best = Some(w);
        }
    }
    Ok(best)
}

/// Minimum pseudo-weight of the graph, taken over the irreducible set.
pub fn w_min(g: &TannerGraph, channel: Channel) -> Result<Option<Rational>> {
    min_weight(&enumerate_irreducible(g)?.irreducible, channel)
}

#[derive(Clone, Debug, Serialize)]
pub struct HistogramBin {
    pub bin_low: f64,
    pub bin_high: f64,
    pub count: u64,
}

pub const HISTOGRAM_BIN: f64 = 0.5;

/// Counts pseudocodewords with largest component at most 3: every irreducible
/// `p` together with its multiples `k p` that stay within that cap.
pub fn weight_histogram(set: &IrreducibleSet, channel: Channel) -> Result<Vec<HistogramBin>> {
    let mut counts: std::collections::BTreeMap<i64, u64> = Default::default();
    for p in &set.irreducible {
        let max = *p.iter().max().unwrap_or(&0);
        if max == 0 || max > 3 {
            continue;
        }
        let w = weight(p, channel)?;
        let bin = (w * rat(2)).floor().to_integer();
        let bin = bin.to_i64().unwrap_or(i64::MAX);
        *counts.entry(bin).or_default() += (3 / max) as u64;
    }
    Ok(counts
        .into_iter()
        .map(|(k, c)| HistogramBin { bin_low: k as f64 * HISTOGRAM_BIN, bin_high: (k + 1) as f64 * HISTOGRAM_BIN, count: c })
        .collect())
}

pub fn histogram_csv(bins: &[HistogramBin]) -> String {
    let mut s = String::from("bin_low,bin_high,count\n");
    for b in bins {
        s.push_str(&format!("{},{},{}\n", b.bin_low, b.bin_high, b.count));
    }
    s
}

/// Rounds a rational weight for display.
pub fn approx(r: &Rational) -> f64 {
    if r.is_zero() {
        0.0
    } else {
        r.to_f64().unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codeword_weights_are_hamming_weight() {
        for ch in Channel::ALL {
            assert_eq!(weight(&[1, 1, 1, 1], ch).unwrap(), rat(4));
        }
    }

    #[test]
    fn bsc_exact_half_gives_even_weight() {
        assert_eq!(bsc_median(&[2, 1, 1]).unwrap(), (1, true));
        assert_eq!(weight(&[2, 1, 1], Channel::Bsc).unwrap(), rat(2));
        assert_eq!(weight(&[3, 1, 1], Channel::Bsc).unwrap(), rat(1));
    }

    #[test]
    fn zero_vector_rejected() {
        assert!(weight(&[0, 0], Channel::Awgn).is_err());
        assert!(max_frac_weight(&[0]).is_err());
    }

    #[test]
    fn tree_bound_values() {
        assert_eq!(tree_bound(3, 6).unwrap(), 4);
        assert_eq!(tree_bound(3, 8).unwrap(), 6);
        assert_eq!(tree_bound(2, 10).unwrap(), 5);
        assert!(tree_bound(3, 4).is_err());
        assert_eq!(tree_bound_generalized(3, 6, 2).unwrap(), 7);
        assert_eq!(tree_bound_generalized(2, 8, 2).unwrap(), 9);
        for (d, g) in [(2, 6), (3, 10), (4, 12), (5, 16)] {
            assert_eq!(tree_bound_generalized(d, g, 1).unwrap(), tree_bound(d, g).unwrap());
        }
    }

    #[test]
    fn feldman_values() {
        assert_eq!(feldman_bound(3, 2, 6).unwrap(), 2);
        assert_eq!(feldman_bound(3, 2, 8).unwrap(), 2);
        assert_eq!(feldman_bound(4, 2, 12).unwrap(), 9);
        assert!(feldman_bound(2, 2, 8).is_err());
    }

    #[test]
    fn support_bounds() {
        let b = t_support_bounds(1, 5).unwrap();
        assert_eq!((b.awgn_lb, b.bsc_lb), (rat(5), rat(5)));
        assert_eq!(t_support_bounds(2, 9).unwrap().awgn_lb, rat(8));
        assert_eq!(t_support_bounds(8, 10).unwrap().bsc_lb, ratio(10, 8));
    }
}
