//! Tanner graphs, parity-check matrix formats and structural parameters.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{input, limit, pre, Result};

/// Bipartite graph between `n` variable nodes and `m` check nodes.
///
/// Check `j` is adjacent to the variables listed in `checks[j]`, which is kept
/// in the order it was given.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TannerGraph {
    n: usize,
    checks: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TannerGraph {
    /// Builds a graph from check neighborhoods. Duplicate checks are dropped
    /// with a warning; they do not change any constraint.
    pub fn new(n: usize, checks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut kept = Vec::with_capacity(checks.len());
        for (j, row) in checks.into_iter().enumerate() {
            let mut sorted = row.clone();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return input(format!("check {j} lists variable {} twice", w[0]));
                }
            }
            if let Some(&bad) = sorted.iter().find(|&&i| i >= n) {
                return input(format!("check {j} references variable {bad} but n = {n}"));
            }
            if !seen.insert(sorted) {
                log::warn!("dropping duplicate check {j}");
                continue;
            }
            kept.push(row);
        }
        Ok(TannerGraph { n, checks: kept, labels: None })
    }

    /// Builds a graph from the rows of a 0/1 parity-check matrix.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        let mut checks = Vec::with_capacity(rows.len());
        for (j, r) in rows.iter().enumerate() {
            if r.len() != n {
                return input(format!("row {j} has length {} but expected {n}", r.len()));
            }
            checks.push(r.iter().enumerate().filter(|(_, &b)| b != 0).map(|(i, _)| i).collect());
        }
        Self::new(n, checks)
    }

    /// Parses strings such as `"1110100"`, one per row.
    pub fn from_bit_strings(rows: &[&str]) -> Result<Self> {
        let parsed: Vec<Vec<u8>> = rows
            .iter()
            .map(|s| s.bytes().filter(|b| !b.is_ascii_whitespace()).map(|b| (b == b'1') as u8).collect())
            .collect();
        Self::from_rows(&parsed)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.checks.len()
    }

    pub fn checks(&self) -> &[Vec<usize>] {
        &self.checks
    }

    pub fn check(&self, j: usize) -> &[usize] {
        &self.checks[j]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn edge_count(&self) -> usize {
        self.checks.iter().map(Vec::len).sum()
    }

    /// Checks adjacent to each variable, in increasing check order.
    pub fn var_neighbors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for (j, c) in self.checks.iter().enumerate() {
            for &i in c {
                out[i].push(j);
            }
        }
        out
    }

    pub fn var_degrees(&self) -> Vec<usize> {
        self.var_neighbors().iter().map(Vec::len).collect()
    }

    pub fn check_degrees(&self) -> Vec<usize> {
        self.checks.iter().map(Vec::len).collect()
    }

    /// Dense parity-check matrix, `H[j][i] = 1` iff `i ∈ N(j)`.
    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.checks
            .iter()
            .map(|c| {
                let mut r = vec![0u8; self.n];
                for &i in c {
                    r[i] = 1;
                }
                r
            })
            .collect()
    }

    /// Syndrome-zero test over GF(2).
    pub fn is_codeword(&self, x: &[u8]) -> bool {
        x.len() == self.n && self.checks.iter().all(|c| c.iter().filter(|&&i| x[i] & 1 == 1).count() % 2 == 0)
    }

    /// Parity test for integer vectors: `H p ≡ 0 (mod 2)`.
    pub fn parity_ok(&self, p: &[i64]) -> bool {
        self.checks.iter().all(|c| c.iter().map(|&i| p[i]).sum::<i64>().rem_euclid(2) == 0)
    }

    /// Returns a copy with one extra check over `vars`.
    pub fn with_check(&self, vars: Vec<usize>) -> Result<Self> {
        let mut checks = self.checks.clone();
        checks.push(vars);
        let mut g = Self::new(self.n, checks)?;
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Smallest left degree `deg_l^-`.
    pub fn min_var_degree(&self) -> usize {
        self.var_degrees().into_iter().min().unwrap_or(0)
    }

    /// Smallest right degree `deg_r^-`.
    pub fn min_check_degree(&self) -> usize {
        self.check_degrees().into_iter().min().unwrap_or(0)
    }

    /// Largest right degree `d_r^+`.
    pub fn max_check_degree(&self) -> usize {
        self.check_degrees().into_iter().max().unwrap_or(0)
    }

    /// Rows as bit masks; requires `n <= 64`.
    pub(crate) fn row_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return limit(format!("n = {} exceeds the 64-variable bitmask limit", self.n));
        }
        Ok(self.checks.iter().map(|c| c.iter().fold(0u64, |m, &i| m | (1 << i))).collect())
    }

    /// Content hash of the parity-check matrix, used to tag reports.
    pub fn content_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(emit_alist(self).as_bytes());
        hex::encode(h.finalize())
    }
}

/// Length of the shortest cycle, or `None` for a forest.
pub fn girth(g: &TannerGraph) -> Option<usize> {
    // Nodes 0..n are variables, n..n+m are checks.
    let n = g.n();
    let total = n + g.m();
    let mut adj = vec![Vec::new(); total];
    for (j, c) in g.checks().iter().enumerate() {
        for &i in c {
            adj[i].push(n + j);
            adj[n + j].push(i);
        }
    }
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; total];
    let mut parent = vec![usize::MAX; total];
    for root in 0..total {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut q = VecDeque::from([root]);
        while let Some(u) = q.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] + 1 >= b {
                    break;
                }
            }
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Exhaustive list of codewords, sorted lexicographically.
#[derive(Clone, Debug, Serialize)]
pub struct Codebook {
    pub n: usize,
    pub rank: usize,
    pub words: Vec<Vec<u8>>,
    /// Minimum nonzero weight; `None` when the code is `{0}`.
    pub d_min: Option<usize>,
}

impl Codebook {
    pub fn dimension(&self) -> usize {
        self.n - self.rank
    }

    pub fn rate(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.dimension() as f64 / self.n as f64
        }
    }

    pub fn contains(&self, x: &[u8]) -> bool {
        self.words.binary_search_by(|w| w.as_slice().cmp(x)).is_ok()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &Vec<u8>> {
        self.words.iter().filter(|w| w.iter().any(|&b| b != 0))
    }
}

/// Largest codebook that `enumerate_codewords` will materialize.
pub const MAX_CODEWORDS_LOG2: usize = 22;

/// Row-reduces masks over GF(2); returns the reduced rows and pivot columns.
pub(crate) fn gf2_echelon(rows: &[u64], n: usize) -> (Vec<u64>, Vec<usize>) {
    let mut rows: Vec<u64> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let bit = 1u64 << col;
        let Some(p) = (r..rows.len()).find(|&k| rows[k] & bit != 0) else { continue };
        rows.swap(r, p);
        for k in 0..rows.len() {
            if k != r && rows[k] & bit != 0 {
                rows[k] ^= rows[r];
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn gf2_rank(g: &TannerGraph) -> Result<usize> {
    Ok(gf2_echelon(&g.row_masks()?, g.n()).1.len())
}

/// Enumerates the code through a null-space basis, `2^(n - rank)` words.
pub fn enumerate_codewords(g: &TannerGraph) -> Result<Codebook> {
    let n = g.n();
    let (rows, pivots) = gf2_echelon(&g.row_masks()?, n);
    let k = n - pivots.len();
    if k > MAX_CODEWORDS_LOG2 {
        return limit(format!("code dimension {k} exceeds 2^{MAX_CODEWORDS_LOG2} codewords"));
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<u64> = free
        .iter()
        .map(|&f| {
            let mut v = 1u64 << f;
            for (r, &p) in rows.iter().zip(&pivots) {
                if r & (1 << f) != 0 {
                    v |= 1 << p;
                }
            }
            v
        })
        .collect();
    let mut masks = Vec::with_capacity(1 << k);
    for sel in 0u64..(1u64 << k) {
        let mut w = 0u64;
        for (b, v) in basis.iter().enumerate() {
            if sel >> b & 1 == 1 {
                w ^= v;
            }
        }
        masks.push(w);
    }
    let mut words: Vec<Vec<u8>> = masks.iter().map(|&w| (0..n).map(|i| (w >> i & 1) as u8).collect()).collect();
    words.sort();
    let d_min = masks.iter().filter(|&&w| w != 0).map(|w| w.count_ones() as usize).min();
    Ok(Codebook { n, rank: pivots.len(), words, d_min })
}

/// Default ceiling on the number of checks after augmentation.
pub const MAX_AUGMENTED_CHECKS: usize = 4096;

/// Appends every nonzero GF(2) sum of between 2 and `order` distinct original
/// rows, skipping sums that duplicate an existing row.
pub fn add_redundant_checks(g: &TannerGraph, order: usize) -> Result<TannerGraph> {
    add_redundant_checks_limited(g, order, MAX_AUGMENTED_CHECKS)
}

pub fn add_redundant_checks_limited(g: &TannerGraph, order: usize, max_checks: usize) -> Result<TannerGraph> {
    if order == 0 {
        return pre("order must be at least 1");
    }
    let masks = g.row_masks()?;
    let mut seen: HashSet<u64> = masks.iter().copied().collect();
    let mut out = g.checks().to_vec();
    let m = masks.len();
    for size in 2..=order.min(m) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let s = combo.iter().fold(0u64, |a, &j| a ^ masks[j]);
            if s != 0 && seen.insert(s) {
                if out.len() >= max_checks {
                    return limit(format!("augmented graph would exceed {max_checks} checks"));
                }
                out.push((0..g.n()).filter(|&i| s >> i & 1 == 1).collect());
            }
            // Next combination in lexicographic order.
            let Some(pos) = (0..size).rev().find(|&p| combo[p] < m - size + p) else { break };
            combo[pos] += 1;
            for q in pos + 1..size {
                combo[q] = combo[q - 1] + 1;
            }
        }
    }
    let mut h = TannerGraph::new(g.n(), out)?;
    h.labels = g.labels.clone();
    Ok(h)
}

/// Parses MacKay's alist format. Zero padding in the neighbor lists is
/// accepted but not required.
pub fn parse_alist(text: &str) -> Result<TannerGraph> {
    let mut toks = text.split_whitespace().map(|t| {
        t.parse::<usize>().map_err(|_| crate::Error::Input(format!("non-numeric token {t:?}")))
    });
    let mut next = || -> Result<usize> {
        match toks.next() {
            Some(t) => t,
            None => input("unexpected end of input"),
        }
    };
    let n = next()?;
    let m = next()?;
    let _max_col = next()?;
    let _max_row = next()?;
    let col_w: Vec<usize> = (0..n).map(|_| next()).collect::<Result<_>>()?;
    let row_w: Vec<usize> = (0..m).map(|_| next()).collect::<Result<_>>()?;
    // Read `w` nonzero entries, skipping zero padding between them.
    let mut read_list = |w: usize, bound: usize, what: &str, idx: usize| -> Result<Vec<usize>> {
        let mut v = Vec::with_capacity(w);
        while v.len() < w {
            let t = next()?;
            if t == 0 {
                continue;
            }
            if t > bound {
                return input(format!("{what} {idx}: index {t} out of range 1..={bound}"));
            }
            v.push(t - 1);
        }
        Ok(v)
    };
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        cols.push(read_list(col_w[i], m, "column", i + 1)?);
    }
    let mut rows = Vec::with_capacity(m);
    for j in 0..m {
        rows.push(read_list(row_w[j], n, "row", j + 1)?);
    }
    // Both halves must describe the same edge set.
    let mut from_cols: Vec<(usize, usize)> =
        cols.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |&j| (j, i))).collect();
    let mut from_rows: Vec<(usize, usize)> =
        rows.iter().enumerate().flat_map(|(j, r)| r.iter().map(move |&i| (j, i))).collect();
    from_cols.sort_unstable();
    from_rows.sort_unstable();
    if from_cols != from_rows {
        return input("degree/neighbor-count mismatch between column and row lists");
    }
    TannerGraph::new(n, rows)
}

/// Emits alist with zero padding up to the maximum degrees.
pub fn emit_alist(g: &TannerGraph) -> String {
    let cols = g.var_neighbors();
    let max_col = cols.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = g.max_check_degree();
    let mut s = String::new();
    let line = |v: &[usize], pad: usize| -> String {
        let mut items: Vec<String> = v.iter().map(|x| (x + 1).to_string()).collect();
        items.resize(pad.max(v.len()), "0".to_string());
        items.join(" ")
    };
    let _ = writeln!(s, "{} {}", g.n(), g.m());
    let _ = writeln!(s, "{max_col} {max_row}");
    let _ = writeln!(s, "{}", cols.iter().map(|c| c.len().to_string()).collect::<Vec<_>>().join(" "));
    let _ = writeln!(s, "{}", g.checks().iter().map(|c| c.len().to_string()).collect::<Vec<_>>().join(" "));
    for c in &cols {
        let _ = writeln!(s, "{}", line(c, max_col));
    }
    for r in g.checks() {
        let _ = writeln!(s, "{}", line(r, max_row));
    }
    s
}

/// Parses a dense 0/1 matrix, one row per line. Separators are optional and
/// `#` starts a comment.
pub fn parse_dense(text: &str) -> Result<TannerGraph> {
    let mut rows = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let mut row = Vec::new();
        for ch in line.chars() {
            match ch {
                '0' => row.push(0u8),
                '1' => row.push(1u8),
                c if c.is_whitespace() || c == ',' => {}
                c => return input(format!("line {}: unexpected character {c:?}", ln + 1)),
            }
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return input("empty matrix");
    }
    TannerGraph::from_rows(&rows)
}

pub fn emit_dense(g: &TannerGraph) -> String {
    g.to_rows()
        .iter()
        .map(|r| r.iter().map(|b| if *b == 1 { '1' } else { '0' }).collect::<String>() + "\n")
        .collect()
}

/// Matrix interchange formats accepted on input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixFormat {
    Alist,
    Dense,
}

pub fn parse(text: &str, format: MatrixFormat) -> Result<TannerGraph> {
    match format {
        MatrixFormat::Alist => parse_alist(text),
        MatrixFormat::Dense => parse_dense(text),
    }
}

/// Summary emitted by `analyze`.
#[derive(Clone, Debug, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub edges: usize,
    /// `null` for forests.
    pub girth: Option<usize>,
    pub var_degrees: Vec<usize>,
    pub check_degrees: Vec<usize>,
    pub rank: usize,
    pub dimension: usize,
    pub d_min: Option<usize>,
}

pub fn stats(g: &TannerGraph) -> Result<GraphStats> {
    let cb = enumerate_codewords(g)?;
    Ok(GraphStats {
        n: g.n(),
        m: g.m(),
        edges: g.edge_count(),
        girth: girth(g),
        var_degrees: g.var_degrees(),
        check_degrees: g.check_degrees(),
        rank: cb.rank,
        dimension: cb.dimension(),
        d_min: cb.d_min,
    })
}
