//! Computation trees under the flooding schedule, their valid assignments,
//! and the consistency test that maps an assignment back to a base-graph
//! vector.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::ControlFlow;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{limit, pre, Result};
use crate::graph::{girth, TannerGraph};
use crate::linalg::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Var,
    Check,
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeNode {
    pub kind: NodeKind,
    /// Index of the base-graph node this copy stands for.
    pub base: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub layer: usize,
}

/// `C_i(G)_ℓ`: root variable `i`, `ℓ` iterations, so `2ℓ + 1` layers ending
/// in variable nodes.
#[derive(Clone, Debug, Serialize)]
pub struct ComputationTree {
    pub root: usize,
    pub iterations: usize,
    pub nodes: Vec<TreeNode>,
    #[serde(skip)]
    base_checks: Vec<Vec<usize>>,
}

pub const DEFAULT_NODE_CAP: usize = 100_000;

pub fn build_tree(g: &TannerGraph, root: usize, iterations: usize) -> Result<ComputationTree> {
    build_tree_capped(g, root, iterations, DEFAULT_NODE_CAP)
}

pub fn build_tree_capped(g: &TannerGraph, root: usize, iterations: usize, cap: usize) -> Result<ComputationTree> {
    if iterations == 0 {
        return pre("iterations must be at least 1");
    }
    if root >= g.n() {
        return pre(format!("root {root} out of range"));
    }
    let var_nb = g.var_neighbors();
    let mut nodes = vec![TreeNode { kind: NodeKind::Var, base: root, parent: None, children: vec![], layer: 0 }];
    let mut frontier = vec![0usize];
    for it in 0..iterations {
        let mut next = Vec::new();
        for &v in &frontier {
            let parent_check = nodes[v].parent.map(|p| nodes[p].base);
            for &j in &var_nb[nodes[v].base] {
                if Some(j) == parent_check {
                    continue;
                }
                let c = nodes.len();
                nodes.push(TreeNode { kind: NodeKind::Check, base: j, parent: Some(v), children: vec![], layer: 2 * it + 1 });
                nodes[v].children.push(c);
                for &i in g.check(j) {
                    if i == nodes[v].base {
                        continue;
                    }
                    let x = nodes.len();
                    nodes.push(TreeNode { kind: NodeKind::Var, base: i, parent: Some(c), children: vec![], layer: 2 * it + 2 });
                    nodes[c].children.push(x);
                    next.push(x);
                }
                if nodes.len() > cap {
                    return limit(format!("computation tree exceeds {cap} nodes"));
                }
            }
        }
        frontier = next;
    }
    Ok(ComputationTree { root, iterations, nodes, base_checks: g.checks().to_vec() })
}

impl ComputationTree {
    pub fn check_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&k| self.nodes[k].kind == NodeKind::Check)
    }

    /// Number of copies of each base check.
    pub fn check_copies(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for k in self.check_nodes() {
            *m.entry(self.nodes[k].base).or_default() += 1;
        }
        m
    }

    /// Number of valid assignments, saturating.
    pub fn assignment_count(&self) -> u128 {
        let mut total: u128 = 2;
        for k in self.check_nodes() {
            let c = self.nodes[k].children.len() as u32;
            total = if c == 0 { total } else { total.saturating_mul(1u128 << (c - 1).min(100)) };
        }
        total
    }

    pub fn to_dot(&self, g: &TannerGraph) -> String {
        let name = |k: usize| -> String {
            let n = &self.nodes[k];
            match (n.kind, g.labels()) {
                (NodeKind::Var, Some(l)) => l[n.base].clone(),
                (NodeKind::Var, None) => format!("v{}", n.base + 1),
                (NodeKind::Check, _) => format!("u{}", n.base + 1),
            }
        };
        let mut s = String::from("graph computation_tree {\n");
        for (k, n) in self.nodes.iter().enumerate() {
            let shape = if n.kind == NodeKind::Var { "circle" } else { "box" };
            let _ = writeln!(s, "  n{k} [label=\"{}\", shape={shape}];", name(k));
        }
        for (k, n) in self.nodes.iter().enumerate() {
            for &c in &n.children {
                let _ = writeln!(s, "  n{k} -- n{c};");
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Calls `f` on every 0/1 labeling of the tree's variable nodes with even
/// parity at every check node, stopping early on `Break`. Entries for check
/// nodes are left at zero.
pub fn for_each_valid_assignment<F>(tree: &ComputationTree, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[u8]) -> ControlFlow<()>,
{
    let checks: Vec<usize> = tree.check_nodes().collect();
    let mut a = vec![0u8; tree.nodes.len()];
    fn rec<F: FnMut(&[u8]) -> ControlFlow<()>>(
        tree: &ComputationTree,
        checks: &[usize],
        k: usize,
        a: &mut Vec<u8>,
        f: &mut F,
    ) -> ControlFlow<()> {
        if k == checks.len() {
            return f(a);
        }
        let c = checks[k];
        let node = &tree.nodes[c];
        let parent = a[node.parent.expect("checks have parents")];
        let kids = &node.children;
        if kids.is_empty() {
            return if parent == 0 { rec(tree, checks, k + 1, a, f) } else { ControlFlow::Continue(()) };
        }
        for bits in 0u64..(1 << kids.len()) {
            if (bits.count_ones() as u8 + parent) % 2 != 0 {
                continue;
            }
            for (t, &x) in kids.iter().enumerate() {
                a[x] = (bits >> t & 1) as u8;
            }
            rec(tree, checks, k + 1, a, f)?;
        }
        ControlFlow::Continue(())
    }
    // Check nodes appear after their parent variable in construction order.
    for r in 0..2u8 {
        a[0] = r;
        rec(tree, &checks, 0, &mut a, &mut f)?;
    }
    ControlFlow::Continue(())
}

pub fn enumerate_valid_assignments(tree: &ComputationTree, cap: usize) -> Result<Vec<Vec<u8>>> {
    if tree.assignment_count() > cap as u128 {
        return limit(format!("{} valid assignments exceed the cap {cap}", tree.assignment_count()));
    }
    let mut out = Vec::new();
    let _ = for_each_valid_assignment(tree, |a| {
        out.push(a.to_vec());
        ControlFlow::Continue(())
    });
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalConfig {
    pub check: usize,
    pub copies: usize,
    /// Average over copies, indexed like the base check's neighbor list.
    #[serde(with = "crate::linalg::serde_rat::vec")]
    pub average: Vec<Rational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Consistency {
    pub consistent: bool,
    pub local_configs: Vec<LocalConfig>,
    /// Shared per-variable value when consistent.
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_vec")]
    pub p: Option<Vec<Rational>>,
}

mod opt_vec {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => crate::linalg::serde_rat::vec::serialize(v, s),
            None => s.serialize_none(),
        }
    }
}

pub fn local_configs(tree: &ComputationTree, assignment: &[u8]) -> Vec<LocalConfig> {
    let mut sums: BTreeMap<usize, (usize, Vec<i64>)> = BTreeMap::new();
    for k in tree.check_nodes() {
        let node = &tree.nodes[k];
        let nb = &tree.base_checks[node.base];
        let entry = sums.entry(node.base).or_insert_with(|| (0, vec![0; nb.len()]));
        entry.0 += 1;
        let vars = node.parent.into_iter().chain(node.children.iter().copied());
        for x in vars {
            let pos = nb.iter().position(|&i| i == tree.nodes[x].base).expect("neighbor");
            entry.1[pos] += assignment[x] as i64;
        }
    }
    sums.into_iter()
        .map(|(check, (copies, s))| LocalConfig {
            check,
            copies,
            average: s.iter().map(|&v| Rational::new(v.into(), (copies as i64).into())).collect(),
        })
        .collect()
}

/// Consistent when every variable shared by several checks gets the same
/// averaged value from each of them.
pub fn consistency_check(tree: &ComputationTree, assignment: &[u8], n: usize) -> Consistency {
    let configs = local_configs(tree, assignment);
    let mut value: Vec<Option<Rational>> = vec![None; n];
    let mut consistent = true;
    for lc in &configs {
        for (pos, &i) in tree.base_checks[lc.check].iter().enumerate() {
            let v = &lc.average[pos];
            match &value[i] {
                None => value[i] = Some(v.clone()),
                Some(old) if old != v => consistent = false,
                _ => {}
            }
        }
    }
    let p = consistent.then(|| {
        (0..n)
            .map(|i| {
                value[i].clone().unwrap_or_else(|| {
                    // Variable with no check copy: average its own copies.
                    let copies: Vec<u8> = tree
                        .nodes
                        .iter()
                        .enumerate()
                        .filter(|(_, nd)| nd.kind == NodeKind::Var && nd.base == i)
                        .map(|(k, _)| assignment[k])
                        .collect();
                    if copies.is_empty() {
                        Rational::zero()
                    } else {
                        Rational::new((copies.iter().map(|&b| b as i64).sum::<i64>()).into(), (copies.len() as i64).into())
                    }
                })
            })
            .collect()
    });
    Consistency { consistent, local_configs: configs, p }
}

/// First valid assignment whose averaged local configuration at `check`
/// equals `target`.
pub fn find_assignment_with_local_config(tree: &ComputationTree, check: usize, target: &[Rational]) -> Option<Vec<u8>> {
    let mut found = None;
    let _ = for_each_valid_assignment(tree, |a| {
        let lc = local_configs(tree, a);
        if lc.iter().any(|c| c.check == check && c.average == target) {
            found = Some(a.to_vec());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

#[derive(Clone, Debug, Serialize)]
pub struct Claims {
    pub is_tree: bool,
    /// Tree, or every check has degree two.
    pub claim1: bool,
    /// Tree, or all variables are joined through degree-two checks.
    pub claim2: bool,
}

pub fn check_claims(g: &TannerGraph) -> Claims {
    let is_tree = girth(g).is_none();
    let all_deg2 = g.checks().iter().all(|c| c.len() == 2);
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in g.checks().iter().filter(|c| c.len() == 2) {
        let (a, b) = (find(&mut parent, c[0]), find(&mut parent, c[1]));
        parent[a] = b;
    }
    let joined = (0..g.n()).map(|i| find(&mut parent, i)).collect::<std::collections::HashSet<_>>().len() <= 1;
    Claims { is_tree, claim1: is_tree || all_deg2, claim2: is_tree || joined }
}

/// Local configuration vector helper for tests and examples.
pub fn rats(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(a, b)| Rational::new(a.into(), b.into())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn single_check_depth_one() {
        let g = TannerGraph::new(2, vec![vec![0, 1]]).unwrap();
        let t = build_tree(&g, 0, 1).unwrap();
        let a = enumerate_valid_assignments(&t, 100).unwrap();
        let vars: Vec<Vec<u8>> = a.iter().map(|x| vec![x[0], x[2]]).collect();
        assert_eq!(vars, vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn cycle_tree_only_constant_assignments() {
        let g = fixtures::repetition_cycle();
        let t = build_tree(&g, 0, 3).unwrap();
        let all = enumerate_valid_assignments(&t, 1000).unwrap();
        assert_eq!(all.len(), 2);
        for a in &all {
            let c = consistency_check(&t, a, 4);
            assert!(c.consistent);
        }
    }

    #[test]
    fn augmented_two_iterations_gives_inconsistent_thirds() {
        let g = fixtures::repetition_augmented();
        let t = build_tree(&g, 0, 2).unwrap();
        let copies: Vec<usize> = t.check_copies().values().copied().collect();
        assert_eq!(copies, vec![2, 3, 3, 2, 3]);
        let target = rats(&[(1, 3), (1, 1), (0, 1), (2, 3)]);
        let a = find_assignment_with_local_config(&t, 4, &target).expect("reachable");
        let c = consistency_check(&t, &a, 4);
        assert!(!c.consistent && c.p.is_none());
    }

    #[test]
    fn augmented_three_iterations_has_eleven_copies_of_the_long_check() {
        // Averages over 11 copies cannot equal 1/3.
        let t = build_tree(&fixtures::repetition_augmented(), 0, 3).unwrap();
        assert_eq!(t.check_copies()[&4], 11);
        assert_eq!(t.assignment_count(), 1 << 23);
    }

    #[test]
    fn claims_on_fixtures() {
        let c = check_claims(&fixtures::repetition_cycle());
        assert!(c.claim1 && c.claim2);
        let c = check_claims(&fixtures::repetition_augmented());
        assert!(!c.claim1 && c.claim2);
        let c = check_claims(&fixtures::hamming7_b());
        assert!(!c.claim1 && !c.claim2);
    }
}
