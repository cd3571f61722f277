//! Stopping sets, property Θ, problematic nodes, and the case analysis that
//! decides whether bad pseudocodewords with a given support exist.

use serde::Serialize;

use crate::classify::{big_m, codewords_inside, is_bad_with, verify_witness, BadWitness, Domain};
use crate::error::{limit, pre, Result};
use crate::graph::{enumerate_codewords, Codebook, TannerGraph};
use crate::linalg::{rat, Rational};
use crate::polytope::is_pseudocodeword;

/// Largest `n` for exhaustive stopping-set scans.
pub const MAX_SCAN_N: usize = 24;

fn mask_of(s: &[usize]) -> u64 {
    s.iter().fold(0, |m, &i| m | 1 << i)
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// No check sees exactly one member. The empty set qualifies vacuously.
pub fn is_stopping_set(g: &TannerGraph, s: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    s.iter().for_each(|&i| inside[i] = true);
    g.checks().iter().all(|c| c.iter().filter(|&&i| inside[i]).count() != 1)
}

fn is_stopping_mask(rows: &[u64], s: u64) -> bool {
    rows.iter().all(|&r| (r & s).count_ones() != 1)
}

/// Largest stopping set inside `s`: repeatedly drop a variable that is the
/// only member seen by some check. This is also what BEC peeling leaves.
pub fn max_stopping_subset(rows: &[u64], mut s: u64) -> u64 {
    loop {
        let mut changed = false;
        for &r in rows {
            let hit = r & s;
            if hit.count_ones() == 1 {
                s &= !hit;
                changed = true;
            }
        }
        if !changed {
            return s;
        }
    }
}

fn rows(g: &TannerGraph) -> Result<Vec<u64>> {
    if g.n() > MAX_SCAN_N {
        return limit(format!("n = {} exceeds the stopping-set scan limit {MAX_SCAN_N}", g.n()));
    }
    g.row_masks()
}

/// All minimal nonempty stopping sets of size at most `max_size`, in order
/// of size then lexicographically. Sets containing degree-0 variables are
/// skipped unless `include_isolated`.
pub fn enumerate_minimal_stopping_sets(g: &TannerGraph, max_size: usize, include_isolated: bool) -> Result<Vec<Vec<usize>>> {
    let rows = rows(g)?;
    let n = g.n();
    let isolated: u64 = g.var_degrees().iter().enumerate().filter(|(_, &d)| d == 0).fold(0, |m, (i, _)| m | 1 << i);
    let mut found: Vec<u64> = Vec::new();
    for size in 1..=max_size.min(n) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let s = mask_of(&combo);
            if (include_isolated || s & isolated == 0)
                && is_stopping_mask(&rows, s)
                && !found.iter().any(|&f| f & s == f)
            {
                found.push(s);
            }
            let Some(pos) = (0..size).rev().find(|&p| combo[p] < n - size + p) else { break };
            combo[pos] += 1;
            for q in pos + 1..size {
                combo[q] = combo[q - 1] + 1;
            }
        }
    }
    Ok(found.into_iter().map(|m| members(m, n)).collect())
}

/// Every nonempty stopping set, as bit masks.
pub fn all_stopping_sets(g: &TannerGraph) -> Result<Vec<u64>> {
    let rows = rows(g)?;
    Ok((1u64..1 << g.n()).filter(|&s| is_stopping_mask(&rows, s)).collect())
}

/// Size of the smallest nonempty stopping set without isolated variables.
pub fn s_min(g: &TannerGraph) -> Result<Option<usize>> {
    Ok(enumerate_minimal_stopping_sets(g, g.n(), false)?.first().map(Vec::len))
}

pub fn is_minimal(g: &TannerGraph, s: &[usize]) -> Result<bool> {
    let rows = rows(g)?;
    let m = mask_of(s);
    if m == 0 || !is_stopping_mask(&rows, m) {
        return Ok(false);
    }
    // A proper stopping subset exists iff dropping some single member still
    // leaves a nonempty stopping set inside.
    Ok(s.iter().all(|&v| max_stopping_subset(&rows, m & !(1 << v)) == 0))
}

/// Classes of `s` joined through checks that meet `s` exactly twice.
pub fn theta_classes(g: &TannerGraph, s: &[usize]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nxt = p[y];
            p[y] = r;
            y = nxt;
        }
        r
    }
    let mut inside = vec![false; g.n()];
    s.iter().for_each(|&i| inside[i] = true);
    for c in g.checks() {
        let hit: Vec<usize> = c.iter().copied().filter(|&i| inside[i]).collect();
        if hit.len() == 2 {
            let (a, b) = (find(&mut parent, hit[0]), find(&mut parent, hit[1]));
            parent[a] = b;
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    for &v in &sorted {
        let r = find(&mut parent, v);
        classes.entry(r).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort();
    out
}

/// At least two classes under degree-two contraction inside `G|_S`.
pub fn has_property_theta(g: &TannerGraph, s: &[usize]) -> bool {
    theta_classes(g, s).len() >= 2
}

/// Members of the non-minimal stopping set `s` that lie in no proper
/// stopping subset of `s`.
pub fn problematic_in(g: &TannerGraph, s: &[usize]) -> Result<Vec<usize>> {
    let rows = rows(g)?;
    let m = mask_of(s);
    let covered = s.iter().fold(0u64, |acc, &u| acc | max_stopping_subset(&rows, m & !(1 << u)));
    if covered == 0 {
        return Ok(vec![]);
    }
    Ok(members(m & !covered, g.n()))
}

/// Variables that are problematic for at least one stopping set.
pub fn find_problematic_nodes(g: &TannerGraph) -> Result<Vec<usize>> {
    let rows = rows(g)?;
    let mut out = 0u64;
    for s in all_stopping_sets(g)? {
        let covered = members(s, g.n()).iter().fold(0u64, |acc, &u| acc | max_stopping_subset(&rows, s & !(1 << u)));
        if covered != 0 {
            out |= s & !covered;
        }
    }
    Ok(members(out, g.n()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    /// No nonzero codeword has support inside `S`.
    #[serde(rename = "1")]
    NoCodeword,
    /// `S` is minimal and contains a codeword support.
    #[serde(rename = "2a")]
    MinimalWithCodeword,
    /// Not minimal, contains a codeword support, has a problematic node.
    #[serde(rename = "2b-i")]
    Problematic,
    /// Not minimal, contains a codeword support, no problematic node.
    #[serde(rename = "2b-ii")]
    Covered,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub p: Vec<i64>,
    pub bad: BadWitness,
    /// The direct construction failed verification and the LP supplied `w`.
    pub from_lp: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StoppingSetReport {
    pub members: Vec<usize>,
    pub minimal: bool,
    pub theta: bool,
    pub codewords_inside: Vec<Vec<u8>>,
    pub problematic: Vec<usize>,
    pub case: Case,
    /// A bad pseudocodeword with support exactly `S` exists.
    pub bad_exists: bool,
    pub conclusion: String,
    pub witness: Option<Witness>,
}

fn indicator(n: usize, s: &[usize], v: i64) -> Vec<i64> {
    let mut p = vec![0; n];
    s.iter().for_each(|&i| p[i] = v);
    p
}

/// `w` that is `entries` on chosen coordinates, `M` off `S`, zero elsewhere.
fn sparse_witness(cb: &Codebook, p: &[i64], s: &[usize], entries: &[(usize, i64)]) -> Option<BadWitness> {
    let vals: Vec<Rational> = entries.iter().map(|&(_, v)| rat(v)).collect();
    let m = big_m(p, &vals);
    let mut w: Vec<Rational> = (0..p.len()).map(|_| m.clone()).collect();
    s.iter().for_each(|&i| w[i] = rat(0));
    for &(i, v) in entries {
        w[i] = rat(v);
    }
    verify_witness(cb, p, &w, Domain::Awgn)
}

fn certify(g: &TannerGraph, cb: &Codebook, p: Vec<i64>, direct: Option<BadWitness>) -> Result<Option<Witness>> {
    if !is_pseudocodeword(g, &p)? {
        return Ok(None);
    }
    if let Some(bad) = direct {
        return Ok(Some(Witness { p, bad, from_lp: false }));
    }
    let d = is_bad_with(cb, &p, Domain::Awgn)?;
    Ok(d.witness.map(|bad| Witness { p, bad, from_lp: true }))
}

/// Smallest set of coordinates outside `avoid` meeting every listed word.
fn hitting_set(words: &[&Vec<u8>], avoid: &[bool]) -> Vec<usize> {
    let n = avoid.len();
    let cand: Vec<usize> = (0..n).filter(|&i| !avoid[i] && words.iter().any(|c| c[i] == 1)).collect();
    for k in 0..=cand.len() {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let pick: Vec<usize> = combo.iter().map(|&j| cand[j]).collect();
            if words.iter().all(|c| pick.iter().any(|&i| c[i] == 1)) {
                return pick;
            }
            let Some(pos) = (0..k).rev().find(|&p| combo[p] < cand.len() - k + p) else { break };
            combo[pos] += 1;
            for q in pos + 1..k {
                combo[q] = combo[q - 1] + 1;
            }
        }
    }
    cand
}

/// Case analysis for a stopping set, with a verified witness when a bad
/// pseudocodeword with support `S` exists.
pub fn classify_stopping_set(g: &TannerGraph, s: &[usize]) -> Result<StoppingSetReport> {
    if s.is_empty() || !is_stopping_set(g, s) {
        return pre("not a nonempty stopping set");
    }
    let n = g.n();
    let mut s = s.to_vec();
    s.sort_unstable();
    let cb = enumerate_codewords(g)?;
    let mut in_s = vec![false; n];
    s.iter().for_each(|&i| in_s[i] = true);
    let inside: Vec<Vec<u8>> = codewords_inside(&cb, &in_s).into_iter().cloned().collect();
    let minimal = is_minimal(g, &s)?;
    let theta = has_property_theta(g, &s);
    let problematic = if minimal { vec![] } else { problematic_in(g, &s)? };

    let (case, bad_exists, conclusion, witness) = if inside.is_empty() {
        let p = indicator(n, &s, 2);
        let entries: Vec<(usize, i64)> = s.iter().map(|&i| (i, -1)).collect();
        let w = sparse_witness(&cb, &p, &s, &entries);
        (Case::NoCodeword, true, "every pseudocodeword with support S is bad".to_string(), certify(g, &cb, p, w)?)
    } else if minimal {
        if theta {
            let classes = theta_classes(g, &s);
            let first = &classes[0];
            let mut p = indicator(n, &s, 1);
            first.iter().for_each(|&i| p[i] = 3);
            let hat = first[0];
            let star = *s.iter().find(|i| !first.contains(i)).expect("two classes");
            let w = sparse_witness(&cb, &p, &s, &[(hat, -1), (star, 1)]);
            let text = "non-codeword pseudocodewords with support S exist and all are bad";
            (Case::MinimalWithCodeword, true, text.to_string(), certify(g, &cb, p, w)?)
        } else {
            let text = "only multiples of the codeword have support S; no bad pseudocodeword";
            (Case::MinimalWithCodeword, false, text.to_string(), None)
        }
    } else if let Some(&v) = problematic.first() {
        let class = theta_classes(g, &s).into_iter().find(|c| c.contains(&v)).expect("v in S");
        let mut p = indicator(n, &s, 2);
        class.iter().for_each(|&i| p[i] = 4);
        let other = s.iter().copied().find(|i| !class.contains(i));
        let w = other.and_then(|o| sparse_witness(&cb, &p, &s, &[(v, -1), (o, 1)]));
        let text = "S contains a problematic node; a bad pseudocodeword with support S exists";
        (Case::Problematic, true, text.to_string(), certify(g, &cb, p, w)?)
    } else {
        covered_case(g, &cb, &s)?
    };
    Ok(StoppingSetReport {
        members: s,
        minimal,
        theta,
        codewords_inside: inside,
        problematic,
        case,
        bad_exists,
        conclusion,
        witness,
    })
}

/// Every node of `S` lies in a minimal stopping set inside `S`. A bad
/// pseudocodeword with support `S` exists iff one of those minimal sets is not
/// a codeword support or has property Θ.
fn covered_case(g: &TannerGraph, cb: &Codebook, s: &[usize]) -> Result<(Case, bool, String, Option<Witness>)> {
    let n = g.n();
    let minimal_inside: Vec<Vec<usize>> = enumerate_minimal_stopping_sets(g, s.len(), true)?
        .into_iter()
        .filter(|m| m.iter().all(|i| s.contains(i)))
        .collect();
    for sj in &minimal_inside {
        let mut in_sj = vec![false; n];
        sj.iter().for_each(|&i| in_sj[i] = true);
        let is_support = cb.nonzero().any(|c| (0..n).all(|i| (c[i] == 1) == in_sj[i]));
        if !is_support {
            let v = sj[0];
            let mut in_s = vec![false; n];
            s.iter().for_each(|&i| in_s[i] = true);
            let through_v: Vec<&Vec<u8>> = codewords_inside(cb, &in_s).into_iter().filter(|c| c[v] == 1).collect();
            let hits = hitting_set(&through_v, &in_sj);
            let x = (2 * hits.len() as i64 + 2).max(4);
            let mut p = indicator(n, s, 2);
            sj.iter().for_each(|&i| p[i] = x);
            let mut entries = vec![(v, -1)];
            entries.extend(hits.iter().map(|&i| (i, 1)));
            let w = sparse_witness(cb, &p, s, &entries);
            let text = "a minimal stopping set inside S is not a codeword support; a bad pseudocodeword exists";
            return Ok((Case::Covered, true, text.to_string(), certify(g, cb, p, w)?));
        }
        if has_property_theta(g, sj) {
            let classes = theta_classes(g, sj);
            let mut p = indicator(n, s, 2);
            sj.iter().for_each(|&i| p[i] = 1);
            classes[0].iter().for_each(|&i| p[i] = 3);
            let text = "a minimal stopping set inside S has property Θ; a bad pseudocodeword exists";
            return Ok((Case::Covered, true, text.to_string(), certify(g, cb, p, None)?));
        }
    }
    let text = "every minimal stopping set inside S is a codeword support without Θ; no bad pseudocodeword";
    Ok((Case::Covered, false, text.to_string(), None))
}

/// Largest component of an irreducible pseudocodeword supported on a minimal
/// stopping set without property Θ.
pub fn t_s_bound(g: &TannerGraph, s: &[usize]) -> Result<i64> {
    if !is_minimal(g, s)? || has_property_theta(g, s) {
        return pre("requires a minimal stopping set without property Θ");
    }
    let cb = enumerate_codewords(g)?;
    let mut in_s = vec![false; g.n()];
    s.iter().for_each(|&i| in_s[i] = true);
    let is_support = cb.nonzero().any(|c| c.iter().zip(&in_s).all(|(&b, &t)| (b == 1) == t));
    Ok(if is_support { 1 } else { 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn singletons_are_not_stopping() {
        let g = fixtures::hamming7_a();
        assert!(!is_stopping_set(&g, &[0]));
        assert!(is_stopping_set(&g, &[]));
    }

    #[test]
    fn repetition_cycle_has_one_minimal_set() {
        let g = fixtures::repetition_cycle();
        assert_eq!(enumerate_minimal_stopping_sets(&g, 4, false).unwrap(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn isolated_variable_is_a_stopping_set() {
        let g = TannerGraph::new(3, vec![vec![0, 1]]).unwrap();
        assert_eq!(enumerate_minimal_stopping_sets(&g, 3, true).unwrap()[0], vec![2]);
        assert!(enumerate_minimal_stopping_sets(&g, 3, false).unwrap().iter().all(|s| !s.contains(&2)));
    }

    #[test]
    fn hamming_s_min_is_three() {
        for g in [fixtures::hamming7_a(), fixtures::hamming7_b(), fixtures::hamming7_c()] {
            assert_eq!(s_min(&g).unwrap(), Some(3));
        }
    }

    #[test]
    fn cycle_has_no_theta() {
        assert!(!has_property_theta(&fixtures::repetition_cycle(), &[0, 1, 2, 3]));
    }

    #[test]
    fn tree_has_no_problematic_nodes() {
        assert!(find_problematic_nodes(&fixtures::tree_graph()).unwrap().is_empty());
    }

    #[test]
    fn star_node_is_problematic() {
        let g = fixtures::star_ring(5);
        assert_eq!(find_problematic_nodes(&g).unwrap(), vec![0]);
    }

    #[test]
    fn t_s_bound_precondition() {
        let g = fixtures::repetition_cycle();
        assert_eq!(t_s_bound(&g, &[0, 1, 2, 3]).unwrap(), 1);
    }
}
