//! Finite-degree covers, reduction of lift codewords, and realization of a
//! pseudocodeword as a lift codeword.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{input, pre, Result};
use crate::graph::TannerGraph;
use crate::polytope::check_cone_inequalities;

/// An `ℓ`-cover of a base graph. Edges are numbered check by check in the
/// order of `base.checks()`; `perms[e][k]` is the check copy that variable
/// copy `k` is wired to along edge `e`.
#[derive(Clone, Debug, Serialize)]
pub struct LiftGraph {
    #[serde(skip)]
    pub base: TannerGraph,
    pub degree: usize,
    pub perms: Vec<Vec<usize>>,
}

/// Base edges as `(variable, check)` pairs in lift numbering order.
pub fn base_edges(g: &TannerGraph) -> Vec<(usize, usize)> {
    g.checks().iter().enumerate().flat_map(|(j, c)| c.iter().map(move |&i| (i, j))).collect()
}

pub fn build_lift(g: &TannerGraph, degree: usize, perms: Vec<Vec<usize>>) -> Result<LiftGraph> {
    if degree == 0 {
        return pre("lift degree must be at least 1");
    }
    let e = g.edge_count();
    if perms.len() != e {
        return input(format!("expected {e} permutations, got {}", perms.len()));
    }
    for (k, p) in perms.iter().enumerate() {
        if p.len() != degree {
            return input(format!("permutation {k} has size {} but degree is {degree}", p.len()));
        }
        let mut seen = vec![false; degree];
        for &x in p {
            if x >= degree || std::mem::replace(&mut seen[x], true) {
                return input(format!("edge {k}: not a permutation"));
            }
        }
    }
    Ok(LiftGraph { base: g.clone(), degree, perms })
}

pub fn identity_lift(g: &TannerGraph, degree: usize) -> LiftGraph {
    LiftGraph { base: g.clone(), degree, perms: vec![(0..degree).collect(); g.edge_count()] }
}

pub fn random_lift<R: Rng>(g: &TannerGraph, degree: usize, rng: &mut R) -> LiftGraph {
    let perms = (0..g.edge_count())
        .map(|_| {
            let mut p: Vec<usize> = (0..degree).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    LiftGraph { base: g.clone(), degree, perms }
}

impl LiftGraph {
    /// Lift variable `(i, k)` is index `i * ℓ + k`; lift check `(j, c)` is
    /// index `j * ℓ + c`.
    pub fn to_tanner(&self) -> TannerGraph {
        let l = self.degree;
        let mut checks = vec![Vec::new(); self.base.m() * l];
        for (e, &(i, j)) in base_edges(&self.base).iter().enumerate() {
            for k in 0..l {
                checks[j * l + self.perms[e][k]].push(i * l + k);
            }
        }
        for c in &mut checks {
            c.sort_unstable();
        }
        TannerGraph::new(self.base.n() * l, checks).expect("lift checks are distinct")
    }

    pub fn is_codeword(&self, chat: &[u8]) -> bool {
        let l = self.degree;
        if chat.len() != self.base.n() * l {
            return false;
        }
        let mut parity = vec![0u8; self.base.m() * l];
        for (e, &(i, j)) in base_edges(&self.base).iter().enumerate() {
            for k in 0..l {
                parity[j * l + self.perms[e][k]] ^= chat[i * l + k] & 1;
            }
        }
        parity.iter().all(|&x| x == 0)
    }
}

/// Counts active copies per cloud.
pub fn reduce_lift_codeword(lift: &LiftGraph, chat: &[u8]) -> Result<Vec<i64>> {
    if !lift.is_codeword(chat) {
        return pre("vector is not a codeword of the lift");
    }
    let l = lift.degree;
    Ok((0..lift.base.n()).map(|i| chat[i * l..(i + 1) * l].iter().map(|&b| b as i64).sum()).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct Realization {
    pub degree: usize,
    pub perms: Vec<Vec<usize>>,
    pub lift_codeword: Vec<u8>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RealizeOutcome {
    Realized(Realization),
    NotFoundWithinBound { max_degree: usize },
}

impl Realization {
    pub fn lift(&self, g: &TannerGraph) -> LiftGraph {
        LiftGraph { base: g.clone(), degree: self.degree, perms: self.perms.clone() }
    }
}

/// Splits `q` into exactly `slots` even-weight 0/1 vectors.
fn split_even(q: &[i64], slots: usize, failed: &mut HashSet<(Vec<i64>, usize)>) -> Option<Vec<Vec<u8>>> {
    let d = q.len();
    let sum: i64 = q.iter().sum();
    if sum == 0 {
        return Some(vec![vec![0; d]; slots]);
    }
    let max = *q.iter().max().unwrap_or(&0);
    if slots == 0 || sum % 2 == 1 || max > slots as i64 || 2 * max > sum {
        return None;
    }
    if failed.contains(&(q.to_vec(), slots)) {
        return None;
    }
    let forced: u32 = (0..d).filter(|&i| q[i] == slots as i64).fold(0, |m, i| m | 1 << i);
    let live: u32 = (0..d).filter(|&i| q[i] > 0).fold(0, |m, i| m | 1 << i);
    let mut subsets: Vec<u32> = (1..1u32 << d)
        .filter(|&s| s & !live == 0 && s & forced == forced && s.count_ones() % 2 == 0)
        .collect();
    subsets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    for s in subsets {
        let rest: Vec<i64> = (0..d).map(|i| q[i] - (s >> i & 1) as i64).collect();
        if let Some(mut tail) = split_even(&rest, slots - 1, failed) {
            tail.insert(0, (0..d).map(|i| (s >> i & 1) as u8).collect());
            return Some(tail);
        }
    }
    failed.insert((q.to_vec(), slots));
    None
}

/// Searches degrees `max p_i, ..., max_degree` for a lift and lift codeword
/// reducing to `p`. Permutations are private to one check, so each check is
/// solved on its own: its ℓ copies must each see an even set of active
/// variable copies.
pub fn realize_pseudocodeword(g: &TannerGraph, p: &[i64], max_degree: Option<usize>) -> Result<RealizeOutcome> {
    if !check_cone_inequalities(g, p)? {
        return pre("vector violates the cone inequalities");
    }
    let bound = crate::polytope::min_lift_degree_bound(g, p)?.check_sum_bound as usize;
    let max_degree = max_degree.unwrap_or(bound);
    let start = (p.iter().copied().max().unwrap_or(0) as usize).max(1);
    'degree: for l in start..=max_degree {
        let mut perms = Vec::with_capacity(g.edge_count());
        for c in g.checks() {
            let q: Vec<i64> = c.iter().map(|&i| p[i]).collect();
            let Some(parts) = split_even(&q, l, &mut HashSet::new()) else { continue 'degree };
            for (pos, &i) in c.iter().enumerate() {
                let (active, idle): (Vec<usize>, Vec<usize>) = (0..l).partition(|&cc| parts[cc][pos] == 1);
                debug_assert_eq!(active.len() as i64, p[i]);
                perms.push(active.into_iter().chain(idle).collect());
            }
        }
        let lift_codeword = (0..g.n()).flat_map(|i| (0..l).map(move |k| ((k as i64) < p[i]) as u8)).collect();
        return Ok(RealizeOutcome::Realized(Realization { degree: l, perms, lift_codeword }));
    }
    Ok(RealizeOutcome::NotFoundWithinBound { max_degree })
}
