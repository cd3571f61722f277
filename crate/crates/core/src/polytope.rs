//! Fundamental cone, its extreme rays, and irreducible pseudocodewords.
//!
//! A pseudocodeword is an integer point `p >= 0` of the fundamental cone with
//! `H p ≡ 0 (mod 2)`; these are exactly the reductions of lift codewords.
//! Extreme rays of the cone are computed by the double description method.
//! The irreducible pseudocodewords are the minimal generators of the monoid
//! `cone ∩ lattice`, found by triangulating the cone and scanning the
//! fundamental parallelepiped of every simplicial piece.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{input, limit, pre, Result};
use crate::graph::{enumerate_codewords, TannerGraph};
use crate::linalg::{dot, inverse_scaled, primitive, rank, solve};

/// Lattice in which irreducibility is measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Lattice {
    /// Integer vectors with `H p ≡ 0 (mod 2)`: lift-realizable points.
    Parity,
    /// All integer vectors of the cone, ignoring parity.
    Integer,
}

impl Lattice {
    fn contains(self, g: &TannerGraph, p: &[i64]) -> bool {
        match self {
            Lattice::Parity => g.parity_ok(p),
            Lattice::Integer => true,
        }
    }
}

/// Linear description `A x >= 0` of the fundamental cone.
#[derive(Clone, Debug, Serialize)]
pub struct ConeSystem {
    pub n: usize,
    /// Nonnegativity rows first, then one row per (check, neighbor) pair.
    pub rows: Vec<Vec<i64>>,
}

impl ConeSystem {
    pub fn new(g: &TannerGraph) -> Self {
        let n = g.n();
        let mut rows = Vec::with_capacity(n + g.edge_count());
        for i in 0..n {
            let mut r = vec![0; n];
            r[i] = 1;
            rows.push(r);
        }
        for c in g.checks() {
            for &i in c {
                let mut r = vec![0; n];
                for &k in c {
                    r[k] = 1;
                }
                r[i] = -1;
                rows.push(r);
            }
        }
        ConeSystem { n, rows }
    }

    /// Rows with duplicates removed, order preserved.
    pub fn distinct_rows(&self) -> Vec<Vec<i64>> {
        let mut seen = HashSet::new();
        self.rows.iter().filter(|r| seen.insert((*r).clone())).cloned().collect()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.rows.iter().all(|r| dot(r, x) >= 0)
    }
}

/// `p_i <= sum of the other neighbors` at every check, and `p >= 0`.
pub fn check_cone_inequalities(g: &TannerGraph, p: &[i64]) -> Result<bool> {
    if p.len() != g.n() {
        return input(format!("vector has length {} but n = {}", p.len(), g.n()));
    }
    if p.iter().any(|&x| x < 0) {
        return Ok(false);
    }
    Ok(g.checks().iter().all(|c| {
        let s: i64 = c.iter().map(|&i| p[i]).sum();
        c.iter().all(|&i| 2 * p[i] <= s)
    }))
}

/// Cone-valid and parity-consistent.
pub fn is_pseudocodeword(g: &TannerGraph, p: &[i64]) -> Result<bool> {
    Ok(check_cone_inequalities(g, p)? && g.parity_ok(p))
}

fn in_monoid(g: &TannerGraph, p: &[i64], lattice: Lattice) -> bool {
    check_cone_inequalities(g, p).unwrap_or(false) && lattice.contains(g, p)
}

/// Direct test: `p` is a nonzero monoid element that is not the sum of two
/// nonzero monoid elements. Scans every `q <= p`.
pub fn is_irreducible(g: &TannerGraph, p: &[i64], lattice: Lattice) -> Result<bool> {
    if !in_monoid(g, p, lattice) || p.iter().all(|&x| x == 0) {
        return Ok(false);
    }
    let boxes: f64 = p.iter().map(|&x| (x + 1) as f64).product();
    if boxes > 5e7 {
        return limit("component box too large for the direct irreducibility test");
    }
    let mut q = vec![0i64; p.len()];
    loop {
        let mut k = 0;
        while k < q.len() {
            if q[k] < p[k] {
                q[k] += 1;
                break;
            }
            q[k] = 0;
            k += 1;
        }
        if k == q.len() || q == p {
            return Ok(true);
        }
        let r: Vec<i64> = p.iter().zip(&q).map(|(a, b)| a - b).collect();
        if in_monoid(g, &q, lattice) && in_monoid(g, &r, lattice) {
            return Ok(false);
        }
    }
}

/// Resource limits for enumeration.
#[derive(Clone, Debug, Serialize)]
pub struct EnumLimits {
    pub max_n: usize,
    pub max_rays: usize,
    /// Ceiling on the index of any simplicial piece.
    pub max_group: i64,
    pub max_candidates: usize,
    /// Simplicial pieces produced while triangulating, memoized ones included.
    pub max_simplices: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits { max_n: 20, max_rays: 200_000, max_group: 2_000_000, max_candidates: 2_000_000, max_simplices: 500_000 }
    }
}

#[derive(Clone, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, k: usize) {
        self.0[k / 64] |= 1 << (k % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn subset_of(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

/// Extreme rays of `{x : A x >= 0}` for the fundamental cone, each as a
/// primitive integer vector, sorted lexicographically.
pub fn extreme_rays(g: &TannerGraph) -> Result<Vec<Vec<i64>>> {
    extreme_rays_limited(g, &EnumLimits::default())
}

pub fn extreme_rays_limited(g: &TannerGraph, lim: &EnumLimits) -> Result<Vec<Vec<i64>>> {
    let n = g.n();
    if n > lim.max_n {
        return limit(format!("n = {n} exceeds the enumeration limit {}", lim.max_n));
    }
    let sys = ConeSystem::new(g);
    let rows: Vec<Vec<i64>> = sys.distinct_rows().into_iter().filter(|r| r.iter().filter(|&&x| x != 0).count() > 1 || r.iter().any(|&x| x < 0)).collect();
    // Start from the nonnegative orthant; its rays are the unit vectors and
    // its constraints are rows 0..n of `all`.
    let mut all: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|k| (k == i) as i64).collect()).collect();
    all.extend(rows);
    let total = all.len();
    let mut rays: Vec<(Vec<i64>, Bits)> = (0..n)
        .map(|i| {
            let mut z = Bits::new(total);
            (0..n).filter(|&k| k != i).for_each(|k| z.set(k));
            (all[i].clone(), z)
        })
        .collect();
    for k in n..total {
        let a = &all[k];
        let vals: Vec<i64> = rays.iter().map(|(r, _)| dot(a, r)).collect();
        let mut next: Vec<(Vec<i64>, Bits)> = Vec::new();
        for (idx, (r, z)) in rays.iter().enumerate() {
            if vals[idx] >= 0 {
                let mut z = z.clone();
                if vals[idx] == 0 {
                    z.set(k);
                }
                next.push((r.clone(), z));
            }
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] < 0).collect();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].1.and(&rays[q].1);
                let adjacent = !(0..rays.len()).any(|o| o != p && o != q && common.subset_of(&rays[o].1));
                if !adjacent {
                    continue;
                }
                let (vp, vq) = (vals[p], -vals[q]);
                let mut r: Vec<i64> = rays[p].0.iter().zip(&rays[q].0).map(|(x, y)| vq * x + vp * y).collect();
                primitive(&mut r);
                let mut z = common;
                z.set(k);
                next.push((r, z));
            }
        }
        if next.len() > lim.max_rays {
            return limit(format!("double description exceeded {} intermediate rays", lim.max_rays));
        }
        rays = next;
    }
    let mut out: Vec<Vec<i64>> = rays.into_iter().map(|(r, _)| r).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Independent route to the same rays: every choice of `n - 1` distinct
/// inequality rows plus the normalization `Σx = 1` is solved exactly and kept
/// if feasible. Exponential; meant for cross-checking on small graphs.
pub fn extreme_rays_by_subsets(g: &TannerGraph, max_systems: u64) -> Result<Vec<Vec<i64>>> {
    let n = g.n();
    if n == 0 {
        return Ok(vec![]);
    }
    let sys = ConeSystem::new(g);
    let rows = sys.distinct_rows();
    let k = n - 1;
    let count = binomial(rows.len() as u64, k as u64);
    if count > max_systems {
        return limit(format!("{count} subsets exceed the limit {max_systems}"));
    }
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut combo: Vec<usize> = (0..k).collect();
    let m = rows.len();
    if k > m {
        return Ok(vec![]);
    }
    loop {
        let mut a: Vec<Vec<i64>> = combo.iter().map(|&j| rows[j].clone()).collect();
        a.push(vec![1; n]);
        let mut b = vec![0i64; k];
        b.push(1);
        if let Some((x, _den)) = solve(&a, &b) {
            // Denominator is positive, so the numerators carry the direction.
            let mut v: Vec<i64> = x.iter().map(|&t| t as i64).collect();
            if rows.iter().all(|r| dot(r, &v) >= 0) {
                primitive(&mut v);
                found.insert(v);
            }
        }
        let Some(pos) = (0..k).rev().find(|&p| combo[p] < m - k + p) else { break };
        combo[pos] += 1;
        for q in pos + 1..k {
            combo[q] = combo[q - 1] + 1;
        }
        if k == 0 {
            break;
        }
    }
    Ok(found.into_iter().collect())
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Pulling triangulation of the cone spanned by `gens`, using the faces cut
/// out by the inequality rows. Returns index sets of simplicial cones.
fn triangulate(gens: &[Vec<i64>], rows: &[Vec<i64>], max_simplices: usize) -> Result<Vec<Vec<usize>>> {
    let all: Vec<usize> = (0..gens.len()).collect();
    let dim = rank(gens);
    let tight: Vec<Vec<bool>> = rows.iter().map(|r| gens.iter().map(|g| dot(r, g) == 0).collect()).collect();
    let mut memo: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
    fn rec(
        face: &[usize],
        dim: usize,
        gens: &[Vec<i64>],
        tight: &[Vec<bool>],
        memo: &mut HashMap<Vec<usize>, Vec<Vec<usize>>>,
        budget: &mut usize,
    ) -> Result<Vec<Vec<usize>>> {
        if face.len() == dim {
            return Ok(vec![face.to_vec()]);
        }
        if let Some(t) = memo.get(face) {
            return Ok(t.clone());
        }
        let v = face[0];
        let mut facets: BTreeSet<Vec<usize>> = BTreeSet::new();
        for t in tight {
            if t[v] {
                continue;
            }
            let f: Vec<usize> = face.iter().copied().filter(|&u| t[u]).collect();
            if f.len() + 1 < dim || facets.contains(&f) {
                continue;
            }
            let sub: Vec<&Vec<i64>> = f.iter().map(|&u| &gens[u]).collect();
            if rank(&sub) == dim - 1 {
                facets.insert(f);
            }
        }
        let mut out = Vec::new();
        for f in facets {
            for mut s in rec(&f, dim - 1, gens, tight, memo, budget)? {
                s.insert(0, v);
                out.push(s);
            }
        }
        // Memoized pieces count against the budget too.
        *budget = match budget.checked_sub(out.len()) {
            Some(b) => b,
            None => return limit("triangulation exceeded the simplex limit"),
        };
        memo.insert(face.to_vec(), out.clone());
        Ok(out)
    }
    if dim == 0 {
        return Ok(vec![]);
    }
    let mut budget = max_simplices;
    rec(&all, dim, gens, &tight, &mut memo, &mut budget)
}

/// Lattice points of the half-open parallelepiped of a simplicial cone,
/// excluding the origin.
fn parallelepiped_points(
    g: &TannerGraph,
    gens: &[&Vec<i64>],
    lattice: Lattice,
    lim: &EnumLimits,
) -> Result<Vec<Vec<i64>>> {
    let r = gens.len();
    let n = g.n();
    // Pick r coordinates on which the generators are independent.
    let mut coords: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut trial = coords.clone();
        trial.push(i);
        let sub: Vec<Vec<i64>> = trial.iter().map(|&c| gens.iter().map(|v| v[c]).collect()).collect();
        if rank(&sub) == trial.len() {
            coords = trial;
            if coords.len() == r {
                break;
            }
        }
    }
    let gj: Vec<Vec<i64>> = coords.iter().map(|&c| gens.iter().map(|v| v[c]).collect()).collect();
    let (adj, d) = inverse_scaled(&gj).ok_or_else(|| crate::Error::Limit("singular simplicial cone".into()))?;
    if d > lim.max_group {
        return limit(format!("simplicial cone index {d} exceeds {}", lim.max_group));
    }
    // The group Z^r / G_J Z^r, as coefficient vectors λ scaled by d.
    let steps: Vec<Vec<i64>> = (0..r).map(|j| (0..r).map(|i| adj[i][j].rem_euclid(d)).collect()).collect();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let zero = vec![0i64; r];
    seen.insert(zero.clone());
    let mut queue = VecDeque::from([zero]);
    let mut out = Vec::new();
    while let Some(lam) = queue.pop_front() {
        for s in &steps {
            let nxt: Vec<i64> = lam.iter().zip(s).map(|(a, b)| (a + b) % d).collect();
            if seen.insert(nxt.clone()) {
                if seen.len() as i64 > lim.max_group {
                    return limit("parallelepiped scan exceeded the group limit");
                }
                queue.push_back(nxt);
            }
        }
        if lam.iter().all(|&x| x == 0) {
            continue;
        }
        let mut x = vec![0i64; n];
        let mut ok = true;
        for (c, xc) in x.iter_mut().enumerate() {
            let s: i128 = gens.iter().zip(&lam).map(|(v, &l)| v[c] as i128 * l as i128).sum();
            if s % d as i128 != 0 {
                ok = false;
                break;
            }
            *xc = (s / d as i128) as i64;
        }
        if ok && lattice.contains(g, &x) {
            out.push(x);
        }
    }
    Ok(out)
}

/// Extreme rays and the irreducible elements of `cone ∩ lattice`.
#[derive(Clone, Debug, Serialize)]
pub struct IrreducibleSet {
    pub lattice: Lattice,
    /// Primitive integer direction of every polytope vertex.
    pub vertices: Vec<Vec<i64>>,
    /// Irreducible pseudocodewords, sorted by (sum, lexicographic).
    pub irreducible: Vec<Vec<i64>>,
    pub t_value: i64,
    pub counts: IrreducibleCounts,
}

#[derive(Clone, Debug, Serialize)]
pub struct IrreducibleCounts {
    pub vertices: usize,
    pub irreducible: usize,
    /// Irreducibles with a component above one (not codewords).
    pub non_codeword: usize,
    pub simplices: usize,
}

impl IrreducibleSet {
    pub fn contains(&self, p: &[i64]) -> bool {
        self.irreducible.iter().any(|q| q == p)
    }
}

pub fn enumerate_irreducible(g: &TannerGraph) -> Result<IrreducibleSet> {
    enumerate_irreducible_with(g, Lattice::Parity, &EnumLimits::default())
}

pub fn enumerate_irreducible_with(g: &TannerGraph, lattice: Lattice, lim: &EnumLimits) -> Result<IrreducibleSet> {
    let rays = extreme_rays_limited(g, lim)?;
    // Smallest lattice multiple of each ray.
    let gens: Vec<Vec<i64>> = rays
        .iter()
        .map(|r| if lattice.contains(g, r) { r.clone() } else { r.iter().map(|x| 2 * x).collect() })
        .collect();
    log::debug!("{} extreme rays", rays.len());
    let rows = ConeSystem::new(g).distinct_rows();
    let simplices = triangulate(&gens, &rows, lim.max_simplices)?;
    log::debug!("{} simplicial cones", simplices.len());
    let mut cands: BTreeSet<Vec<i64>> = gens.iter().cloned().collect();
    for s in &simplices {
        let sub: Vec<&Vec<i64>> = s.iter().map(|&i| &gens[i]).collect();
        cands.extend(parallelepiped_points(g, &sub, lattice, lim)?);
        if cands.len() > lim.max_candidates {
            return limit("too many Hilbert basis candidates");
        }
    }
    let mut cands: Vec<Vec<i64>> = cands.into_iter().collect();
    cands.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    let mut irr: Vec<Vec<i64>> = Vec::new();
    for p in cands {
        let reducible = irr.iter().any(|h| {
            h.iter().zip(&p).all(|(a, b)| a <= b) && {
                let r: Vec<i64> = p.iter().zip(h).map(|(a, b)| a - b).collect();
                r.iter().any(|&x| x != 0) && in_monoid(g, &r, lattice)
            }
        });
        if !reducible {
            irr.push(p);
        }
    }
    let t_value = irr.iter().flatten().copied().max().unwrap_or(0);
    let counts = IrreducibleCounts {
        vertices: rays.len(),
        irreducible: irr.len(),
        non_codeword: irr.iter().filter(|p| p.iter().any(|&x| x > 1)).count(),
        simplices: simplices.len(),
    };
    Ok(IrreducibleSet { lattice, vertices: rays, irreducible: irr, t_value, counts })
}

/// Largest component over the irreducible pseudocodewords.
pub fn t_value(g: &TannerGraph) -> Result<i64> {
    Ok(enumerate_irreducible(g)?.t_value)
}

/// Degree bounds for realizing `p` in a lift.
#[derive(Clone, Debug, Serialize)]
pub struct LiftDegreeBound {
    /// `ceil(max_j Σ_{i∈N(j)} p_i / 2)`, at least `max p_i`.
    pub check_sum_bound: i64,
    /// `ceil(b · d_r^+ / 2)` with `b = max p_i`.
    pub component_bound: i64,
}

pub fn min_lift_degree_bound(g: &TannerGraph, p: &[i64]) -> Result<LiftDegreeBound> {
    if !check_cone_inequalities(g, p)? {
        return pre("vector violates the cone inequalities");
    }
    let b = p.iter().copied().max().unwrap_or(0);
    let best = g.checks().iter().map(|c| c.iter().map(|&i| p[i]).sum::<i64>()).max().unwrap_or(0);
    let check_sum_bound = ((best + 1) / 2).max(b).max(1);
    let component_bound = ((b * g.max_check_degree() as i64 + 1) / 2).max(1);
    Ok(LiftDegreeBound { check_sum_bound, component_bound })
}

/// `p mod 2`, verified to be a codeword.
pub fn mod2_reduce(g: &TannerGraph, p: &[i64]) -> Result<Vec<u8>> {
    if p.len() != g.n() {
        return input("length mismatch");
    }
    let x: Vec<u8> = p.iter().map(|v| v.rem_euclid(2) as u8).collect();
    if !g.is_codeword(&x) {
        return pre("p mod 2 is not a codeword; p is not a pseudocodeword");
    }
    Ok(x)
}

/// Order in which the greedy decomposition tries codewords.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecomposeOrder {
    HeaviestFirst,
    LightestFirst,
}

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub codewords: Vec<Vec<u8>>,
    pub residual: Vec<i64>,
    /// Residual vanished, so `p` is a sum of codewords.
    pub complete: bool,
}

/// Greedy split `p = Σ c + r`. Codewords are tried by weight (ties broken
/// lexicographically); the first that fits under the remainder is removed.
pub fn decompose(g: &TannerGraph, p: &[i64], order: DecomposeOrder) -> Result<Decomposition> {
    if !check_cone_inequalities(g, p)? {
        return pre("vector violates the cone inequalities");
    }
    let cb = enumerate_codewords(g)?;
    let mut words: Vec<&Vec<u8>> = cb.nonzero().collect();
    words.sort_by(|a, b| {
        let (wa, wb) = (a.iter().filter(|&&x| x == 1).count(), b.iter().filter(|&&x| x == 1).count());
        let by_weight = match order {
            DecomposeOrder::HeaviestFirst => wb.cmp(&wa),
            DecomposeOrder::LightestFirst => wa.cmp(&wb),
        };
        by_weight.then_with(|| a.cmp(b))
    });
    let mut r = p.to_vec();
    let mut used = Vec::new();
    while let Some(c) = words.iter().find(|c| c.iter().zip(&r).all(|(&ci, &ri)| (ci as i64) <= ri)) {
        for (ri, &ci) in r.iter_mut().zip(c.iter()) {
            *ri -= ci as i64;
        }
        used.push((*c).clone());
    }
    let complete = r.iter().all(|&x| x == 0);
    Ok(Decomposition { codewords: used, residual: r, complete })
}

/// Independent brute force: all monoid points with components `<= cap`,
/// filtered to the irreducible ones by increasing component sum.
pub fn brute_force_irreducible(g: &TannerGraph, cap: i64, lattice: Lattice) -> Vec<Vec<i64>> {
    let n = g.n();
    let mut pts: Vec<Vec<i64>> = Vec::new();
    let mut x = vec![0i64; n];
    'outer: loop {
        let mut k = 0;
        loop {
            if k == n {
                break 'outer;
            }
            if x[k] < cap {
                x[k] += 1;
                break;
            }
            x[k] = 0;
            k += 1;
        }
        if in_monoid(g, &x, lattice) {
            pts.push(x.clone());
        }
    }
    pts.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    let mut irr: Vec<Vec<i64>> = Vec::new();
    for p in pts {
        let red = irr.iter().any(|h| {
            h.iter().zip(&p).all(|(a, b)| a <= b) && {
                let r: Vec<i64> = p.iter().zip(h).map(|(a, b)| a - b).collect();
                r.iter().any(|&v| v != 0) && in_monoid(g, &r, lattice)
            }
        });
        if !red {
            irr.push(p);
        }
    }
    irr
}

/// Runs the brute force with caps 4, 5, ... until the top three levels
/// `cap-2..=cap` hold no component of any irreducible. Parity can make
/// components jump by two, so one empty level is not enough.
pub fn brute_force_oracle(g: &TannerGraph, lattice: Lattice, max_cap: i64) -> Result<Vec<Vec<i64>>> {
    let mut cap = 4;
    loop {
        let irr = brute_force_irreducible(g, cap, lattice);
        if irr.iter().flatten().all(|&x| x < cap - 2) {
            return Ok(irr);
        }
        if cap >= max_cap {
            return limit(format!("oracle cap {max_cap} reached before stabilizing"));
        }
        cap += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn single_check_violation() {
        let g = TannerGraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(!check_cone_inequalities(&g, &[2, 1, 0]).unwrap());
        assert!(check_cone_inequalities(&g, &[1, 1, 0]).unwrap());
        assert!(check_cone_inequalities(&g, &[1]).is_err());
    }

    #[test]
    fn three_cycle_has_only_all_ones() {
        let s = enumerate_irreducible(&fixtures::three_cycle()).unwrap();
        assert_eq!(s.irreducible, vec![vec![1, 1, 1]]);
        assert_eq!(s.t_value, 1);
    }

    #[test]
    fn tree_irreducibles_are_codewords() {
        let g = fixtures::tree_graph();
        let s = enumerate_irreducible(&g).unwrap();
        assert_eq!(s.t_value, 1);
        for p in &s.irreducible {
            let c: Vec<u8> = p.iter().map(|&x| x as u8).collect();
            assert!(g.is_codeword(&c));
        }
    }

    #[test]
    fn ddm_matches_subsets_on_hamming_a() {
        let g = fixtures::hamming7_a();
        assert_eq!(extreme_rays(&g).unwrap(), extreme_rays_by_subsets(&g, 10_000_000).unwrap());
    }

    #[test]
    fn hamming_a_matches_oracle() {
        let g = fixtures::hamming7_a();
        let mut fast = enumerate_irreducible(&g).unwrap().irreducible;
        let mut slow = brute_force_oracle(&g, Lattice::Parity, 6).unwrap();
        fast.sort();
        slow.sort();
        assert_eq!(fast, slow);
    }

    #[test]
    fn decompose_twice_codeword() {
        let g = fixtures::hamming7_a();
        let d = decompose(&g, &[2, 0, 2, 2, 2, 0, 0], DecomposeOrder::HeaviestFirst).unwrap();
        assert_eq!(d.codewords.len(), 2);
        assert!(d.complete);
    }

    #[test]
    fn lift_degree_bound_on_three_cycle() {
        let b = min_lift_degree_bound(&fixtures::three_cycle(), &[1, 1, 1]).unwrap();
        assert_eq!(b.check_sum_bound, 1);
    }

    #[test]
    fn even_vector_reduces_to_zero() {
        let g = fixtures::hamming7_a();
        assert_eq!(mod2_reduce(&g, &[2, 2, 0, 0, 0, 0, 0]).unwrap(), vec![0; 7]);
    }
}
