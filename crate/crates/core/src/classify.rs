//! Good/bad classification of pseudocodewords.
//!
//! Under the all-zeros convention `p` is bad when some cost vector `w` makes
//! every nonzero codeword cost at least zero while `p·w < 0`. Feasibility is
//! decided exactly with a rational simplex; every witness is re-checked with
//! plain dot products against the whole codebook.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{limit, pre, Result};
use crate::graph::{enumerate_codewords, Codebook, TannerGraph};
use crate::linalg::{rat, serde_rat, solve, Rational};
use crate::lp::{maximize, LpOutcome};
use crate::polytope::{
    check_cone_inequalities, decompose, enumerate_irreducible, is_irreducible, DecomposeOrder, Lattice,
};
use crate::weights::{weight, Channel, WeightReport};

/// Where the cost vector may live.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "domain", rename_all = "lowercase")]
pub enum Domain {
    /// `w ∈ {+1, -1}^n`.
    Bsc,
    /// `w ∈ [-L, L]^n`.
    Tawgn { l: i64 },
    /// `w ∈ R^n`.
    Awgn,
}

#[derive(Clone, Debug, Serialize)]
pub struct BadWitness {
    pub domain: Domain,
    #[serde(with = "crate::linalg::serde_rat::vec")]
    pub w: Vec<Rational>,
    #[serde(with = "serde_rat")]
    pub p_dot_w: Rational,
    /// Smallest `c·w` over nonzero codewords.
    #[serde(with = "crate::linalg::serde_rat::opt")]
    pub margin: Option<Rational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BadDecision {
    pub bad: bool,
    pub witness: Option<BadWitness>,
}

fn rdot(x: &[u8], w: &[Rational]) -> Rational {
    x.iter().zip(w).filter(|(&b, _)| b == 1).fold(Rational::zero(), |a, (_, v)| a + v)
}

fn pdot(p: &[i64], w: &[Rational]) -> Rational {
    p.iter().zip(w).fold(Rational::zero(), |a, (&x, v)| a + rat(x) * v)
}

fn in_domain(w: &[Rational], d: Domain) -> bool {
    match d {
        Domain::Awgn => true,
        Domain::Tawgn { l } => w.iter().all(|v| v.abs() <= rat(l)),
        Domain::Bsc => w.iter().all(|v| v.abs().is_one()),
    }
}

/// Independent check of a witness: domain membership, `p·w < 0`, and
/// `c·w >= 0` for every nonzero codeword.
pub fn verify_witness(cb: &Codebook, p: &[i64], w: &[Rational], domain: Domain) -> Option<BadWitness> {
    if w.len() != p.len() || !in_domain(w, domain) {
        return None;
    }
    let pw = pdot(p, w);
    if !pw.is_negative() {
        return None;
    }
    let mut margin: Option<Rational> = None;
    for c in cb.nonzero() {
        let v = rdot(c, w);
        if v.is_negative() {
            return None;
        }
        if margin.as_ref().map_or(true, |m| v < *m) {
            margin = Some(v);
        }
    }
    Some(BadWitness { domain, w: w.to_vec(), p_dot_w: pw, margin })
}

/// Largest codebook used in an LP.
pub const MAX_LP_CODEWORDS: usize = 1 << 12;

fn lp_bad(cb: &Codebook, p: &[i64], domain: Domain) -> Result<BadDecision> {
    if cb.words.len() > MAX_LP_CODEWORDS {
        return limit(format!("codebook of {} words exceeds the LP limit", cb.words.len()));
    }
    let n = p.len();
    // w = u - v with u, v >= 0; maximize -p·w.
    let mut a: Vec<Vec<Rational>> = Vec::new();
    let mut b: Vec<Rational> = Vec::new();
    for c in cb.nonzero() {
        let row: Vec<Rational> = (0..2 * n).map(|k| if k < n { rat(-(c[k] as i64)) } else { rat(c[k - n] as i64) }).collect();
        a.push(row);
        b.push(Rational::zero());
    }
    match domain {
        Domain::Awgn => {
            // p·w >= -1 keeps the problem bounded; the constraints are
            // homogeneous so any negative optimum scales to -1.
            a.push((0..2 * n).map(|k| if k < n { rat(-p[k]) } else { rat(p[k - n]) }).collect());
            b.push(Rational::one());
        }
        Domain::Tawgn { l } => {
            for k in 0..2 * n {
                let mut row = vec![Rational::zero(); 2 * n];
                row[k] = Rational::one();
                a.push(row);
                b.push(rat(l));
            }
        }
        Domain::Bsc => unreachable!("BSC domain is decided by enumeration"),
    }
    let obj: Vec<Rational> = (0..2 * n).map(|k| if k < n { rat(-p[k]) } else { rat(p[k - n]) }).collect();
    let LpOutcome::Optimal { value, x } = maximize(&a, &b, &obj) else {
        unreachable!("the LP is bounded by construction")
    };
    if !value.is_positive() {
        return Ok(BadDecision { bad: false, witness: None });
    }
    let w: Vec<Rational> = (0..n).map(|k| &x[k] - &x[k + n]).collect();
    let wit = verify_witness(cb, p, &w, domain).expect("LP witness must verify");
    Ok(BadDecision { bad: true, witness: Some(wit) })
}

/// Exact LP over unrestricted `w`.
pub fn is_bad_awgn(g: &TannerGraph, p: &[i64]) -> Result<BadDecision> {
    let cb = enumerate_codewords(g)?;
    is_bad_with(&cb, p, Domain::Awgn)
}

pub fn is_bad_restricted(g: &TannerGraph, p: &[i64], domain: Domain) -> Result<BadDecision> {
    let cb = enumerate_codewords(g)?;
    is_bad_with(&cb, p, domain)
}

/// Largest `n` for the exhaustive BSC sweep.
pub const MAX_BSC_SWEEP_N: usize = 20;

pub fn is_bad_with(cb: &Codebook, p: &[i64], domain: Domain) -> Result<BadDecision> {
    if p.len() != cb.n {
        return pre("length mismatch");
    }
    match domain {
        Domain::Awgn => lp_bad(cb, p, domain),
        Domain::Tawgn { l } => {
            if l < 1 {
                return pre("TAWGN limit L must be at least 1");
            }
            lp_bad(cb, p, domain)
        }
        Domain::Bsc => {
            let n = cb.n;
            if n > MAX_BSC_SWEEP_N {
                return limit(format!("n = {n} exceeds the exhaustive BSC sweep limit"));
            }
            let masks: Vec<u64> = cb
                .nonzero()
                .map(|c| c.iter().enumerate().fold(0u64, |m, (i, &b)| m | ((b as u64) << i)))
                .collect();
            let total: i64 = p.iter().sum();
            for neg in 0u64..(1 << n) {
                // p·w = Σp - 2 Σ_{neg} p_i must be negative.
                let pneg: i64 = (0..n).filter(|i| neg >> i & 1 == 1).map(|i| p[i]).sum();
                if total - 2 * pneg >= 0 {
                    continue;
                }
                if masks.iter().all(|&c| 2 * (c & neg).count_ones() <= c.count_ones()) {
                    let w: Vec<Rational> = (0..n).map(|i| if neg >> i & 1 == 1 { rat(-1) } else { rat(1) }).collect();
                    let wit = verify_witness(cb, p, &w, domain).expect("sweep witness must verify");
                    return Ok(BadDecision { bad: true, witness: Some(wit) });
                }
            }
            Ok(BadDecision { bad: false, witness: None })
        }
    }
}

/// `M` large enough that any codeword leaving the support pays more than the
/// support can refund: `1 + Σp_i · max|w_i|`, rounded up.
pub fn big_m(p: &[i64], w_support: &[Rational]) -> Rational {
    let maxw = w_support.iter().map(|v| v.abs()).max().unwrap_or_else(Rational::one);
    let s: i64 = p.iter().sum();
    (Rational::one() + rat(s) * maxw).ceil()
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Condition3 {
    NotApplicable { reason: String },
    Fired { witness: BadWitness },
    ConstructionFailed,
}

#[derive(Clone, Debug, Serialize)]
pub struct SufficientChecks {
    /// BSC weight below `d_min`.
    pub bsc_weight_below_dmin: bool,
    /// AWGN weight below `d_min`.
    pub awgn_weight_below_dmin: bool,
    pub support_below_dmin: Option<BadWitness>,
    pub condition3: Condition3,
}

impl SufficientChecks {
    pub fn any_fired(&self) -> bool {
        self.bsc_weight_below_dmin
            || self.awgn_weight_below_dmin
            || self.support_below_dmin.is_some()
            || matches!(self.condition3, Condition3::Fired { .. })
    }
}

/// Codewords whose support lies inside `supp`.
pub fn codewords_inside<'a>(cb: &'a Codebook, supp: &[bool]) -> Vec<&'a Vec<u8>> {
    cb.nonzero().filter(|c| c.iter().zip(supp).all(|(&b, &s)| b == 0 || s)).collect()
}

fn support_witness(cb: &Codebook, p: &[i64], on_support: &[Rational]) -> Option<BadWitness> {
    let m = big_m(p, on_support);
    let mut w = Vec::with_capacity(p.len());
    let mut it = on_support.iter();
    for &x in p {
        w.push(if x > 0 { it.next().expect("support length").clone() } else { m.clone() });
    }
    verify_witness(cb, p, &w, Domain::Awgn)
}

/// Evaluates the three sufficient conditions for badness.
pub fn sufficient_bad_checks(g: &TannerGraph, p: &[i64]) -> Result<SufficientChecks> {
    if !check_cone_inequalities(g, p)? {
        return pre("vector violates the cone inequalities");
    }
    let cb = enumerate_codewords(g)?;
    let d = rat(cb.d_min.map_or(i64::MAX, |d| d as i64));
    let supp: Vec<bool> = p.iter().map(|&x| x > 0).collect();
    let s: Vec<usize> = (0..p.len()).filter(|&i| supp[i]).collect();
    let support_below_dmin = if (s.len() as i64) < cb.d_min.map_or(i64::MAX, |d| d as i64) {
        support_witness(&cb, p, &vec![rat(-1); s.len()])
    } else {
        None
    };
    let inside = codewords_inside(&cb, &supp);
    let nc = p.iter().any(|&x| x > 1);
    let condition3 = if !nc {
        Condition3::NotApplicable { reason: "p is a codeword multiple of a 0/1 vector".into() }
    } else if !is_irreducible(g, p, Lattice::Parity)? {
        Condition3::NotApplicable { reason: "p is not irreducible".into() }
    } else if s.len() < inside.len() + 1 {
        Condition3::NotApplicable { reason: "support smaller than l + 1".into() }
    } else {
        condition3_witness(&cb, p, &s, &inside)
    };
    Ok(SufficientChecks {
        bsc_weight_below_dmin: weight(p, Channel::Bsc)? < d,
        awgn_weight_below_dmin: weight(p, Channel::Awgn)? < d,
        support_below_dmin,
        condition3,
    })
}

/// Solves `c^(k)·w = +1` for the codewords inside the support and
/// `p·w = -2`, on a nonsingular choice of `l + 1` support coordinates.
fn condition3_witness(cb: &Codebook, p: &[i64], s: &[usize], inside: &[&Vec<u8>]) -> Condition3 {
    let mut eqs: Vec<Vec<i64>> = inside.iter().map(|c| s.iter().map(|&i| c[i] as i64).collect()).collect();
    eqs.push(s.iter().map(|&i| p[i]).collect());
    let rhs: Vec<i64> = inside.iter().map(|_| 1).chain(std::iter::once(-2)).collect();
    let k = eqs.len();
    // Greedily pick independent columns.
    let mut cols: Vec<usize> = Vec::new();
    for j in 0..s.len() {
        let mut trial = cols.clone();
        trial.push(j);
        let sub: Vec<Vec<i64>> = trial.iter().map(|&c| eqs.iter().map(|r| r[c]).collect()).collect();
        if crate::linalg::rank(&sub) == trial.len() {
            cols = trial;
            if cols.len() == k {
                break;
            }
        }
    }
    if cols.len() < k {
        return Condition3::ConstructionFailed;
    }
    let a: Vec<Vec<i64>> = eqs.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
    let Some((x, den)) = solve(&a, &rhs) else { return Condition3::ConstructionFailed };
    let mut on_support = vec![Rational::zero(); s.len()];
    for (t, &c) in cols.iter().enumerate() {
        on_support[c] = Rational::new((x[t] as i64).into(), (den as i64).into());
    }
    match support_witness(cb, p, &on_support) {
        Some(w) => Condition3::Fired { witness: w },
        None => Condition3::ConstructionFailed,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Classified {
    pub p: Vec<i64>,
    pub bad: bool,
    pub weights: WeightReport,
    /// Greedy decomposition into codewords left no residual.
    pub codeword_sum: bool,
    pub witness: Option<BadWitness>,
}

/// Labels every irreducible pseudocodeword with the AWGN LP.
pub fn classify_all(g: &TannerGraph) -> Result<Vec<Classified>> {
    let cb = enumerate_codewords(g)?;
    let set = enumerate_irreducible(g)?;
    let mut out = Vec::with_capacity(set.irreducible.len());
    for p in &set.irreducible {
        let dec = is_bad_with(&cb, p, Domain::Awgn)?;
        let codeword_sum = decompose(g, p, DecomposeOrder::HeaviestFirst)?.complete;
        out.push(Classified {
            p: p.clone(),
            bad: dec.bad,
            weights: crate::weights::weight_report(p)?,
            codeword_sum,
            witness: dec.witness,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn codewords_are_good() {
        let g = fixtures::hamming7_a();
        assert!(!is_bad_awgn(&g, &[1, 0, 1, 0, 0, 0, 1]).unwrap().bad);
    }

    #[test]
    fn small_support_fires_condition_two() {
        // d_min = 6 on the ring of five, but the ring alone carries (0,2,...,2).
        let g = fixtures::star_ring(5);
        let s = sufficient_bad_checks(&g, &[0, 2, 2, 2, 2, 2]).unwrap();
        assert!(s.support_below_dmin.is_some());
        assert!(is_bad_awgn(&g, &[0, 2, 2, 2, 2, 2]).unwrap().bad);
    }
}
