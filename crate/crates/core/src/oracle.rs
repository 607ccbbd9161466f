//! Brute-force reference enumerations.
//!
//! Nothing here goes through the descent or the bijection: the genus tree
//! removes minimal generators one at a time, Frobenius enumeration decides
//! membership element by element, and PF sets are found by the
//! `≤_S`-maximality definition. These are exponential and only meant for
//! small parameters, bounded by [`OracleConfig`].

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::semigroup::{NumericalSemigroup, PseudoFrobeniusSet};

pub const DEFAULT_TREE_GENUS_CEILING: usize = 22;
pub const DEFAULT_FROBENIUS_CEILING: i64 = 26;

pub const GENUS_CEILING_VAR: &str = "GAPSET_CEILING_GENUS";
pub const FROBENIUS_CEILING_VAR: &str = "GAPSET_CEILING_FROBENIUS";

/// Ceilings for the exponential enumerations.
///
/// At the defaults, the genus tree to 22 takes a few seconds and Frobenius
/// enumeration at 26 a few seconds more in release builds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_genus: usize,
    pub max_frobenius: i64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_genus: DEFAULT_TREE_GENUS_CEILING,
            max_frobenius: DEFAULT_FROBENIUS_CEILING,
        }
    }
}

impl OracleConfig {
    /// Defaults overridden by `GAPSET_CEILING_GENUS` and
    /// `GAPSET_CEILING_FROBENIUS`.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(v) = std::env::var(GENUS_CEILING_VAR) {
            cfg.max_genus = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{GENUS_CEILING_VAR}={v:?}")))?;
        }
        if let Ok(v) = std::env::var(FROBENIUS_CEILING_VAR) {
            cfg.max_frobenius = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{FROBENIUS_CEILING_VAR}={v:?}")))?;
        }
        Ok(cfg)
    }

    fn check_genus(&self, g: usize) -> Result<()> {
        if g > self.max_genus {
            return Err(Error::Ceiling {
                what: "oracle genus",
                value: g as i64,
                max: self.max_genus as i64,
            });
        }
        Ok(())
    }

    fn check_frobenius(&self, f: i64) -> Result<()> {
        if f < 1 {
            return Err(Error::Domain(format!(
                "Frobenius number {f} must be positive"
            )));
        }
        if f > self.max_frobenius {
            return Err(Error::Ceiling {
                what: "oracle Frobenius number",
                value: f,
                max: self.max_frobenius,
            });
        }
        Ok(())
    }
}

/// Genus-tree node. `gap[x]` for `x < gap.len()`; everything past the
/// table is a member.
#[derive(Clone)]
struct TreeNode {
    gap: Vec<bool>,
    frobenius: usize,
}

impl TreeNode {
    fn is_member(&self, x: usize) -> bool {
        x >= self.gap.len() || !self.gap[x]
    }

    /// Minimal generators greater than the Frobenius number. Generators are
    /// at most `F + m`, and `F + m` stays inside the table.
    fn removable(&self) -> Vec<usize> {
        let m = (1..).find(|&x| self.is_member(x)).unwrap();
        let lo = if self.frobenius == 0 {
            1
        } else {
            self.frobenius + 1
        };
        (lo..=self.frobenius + m)
            .filter(|&x| (1..=x / 2).all(|a| !(self.is_member(a) && self.is_member(x - a))))
            .collect()
    }

    fn gaps(&self) -> Vec<i64> {
        (1..self.gap.len())
            .filter(|&x| self.gap[x])
            .map(|x| x as i64)
            .collect()
    }
}

fn walk_tree(
    node: &TreeNode,
    depth: usize,
    target: usize,
    counts: &mut [u64],
    sink: &mut Option<&mut Vec<Vec<i64>>>,
) {
    counts[depth] += 1;
    if depth == target {
        if let Some(out) = sink.as_deref_mut() {
            out.push(node.gaps());
        }
        return;
    }
    for x in node.removable() {
        let mut child = node.clone();
        child.gap[x] = true;
        child.frobenius = x;
        walk_tree(&child, depth + 1, target, counts, sink);
    }
}

fn tree_root(g: usize) -> TreeNode {
    // F <= 2g - 1 and every minimal generator of a genus-g semigroup is
    // at most F + m <= 3g, so 3g + 2 entries cover all children
    TreeNode {
        gap: vec![false; 3 * g + 2],
        frobenius: 0,
    }
}

/// `n_0, …, n_g` by walking the genus tree, without materializing
/// semigroups. `frobenius: 0` in the root stands for the full monoid.
pub fn tree_counts(g: usize, cfg: &OracleConfig) -> Result<Vec<u64>> {
    cfg.check_genus(g)?;
    let mut counts = vec![0u64; g + 1];
    walk_tree(&tree_root(g), 0, g, &mut counts, &mut None);
    Ok(counts)
}

/// All numerical semigroups of genus `g`, in canonical order.
pub fn tree_enumerate_by_genus(g: usize, cfg: &OracleConfig) -> Result<Vec<NumericalSemigroup>> {
    cfg.check_genus(g)?;
    let mut counts = vec![0u64; g + 1];
    let mut leaves = Vec::new();
    walk_tree(&tree_root(g), 0, g, &mut counts, &mut Some(&mut leaves));
    let mut out = leaves
        .into_iter()
        .map(NumericalSemigroup::from_gaps)
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Decides membership of `1, …, F-1` in increasing order. `member[x]` for
/// decided `x`; sums of two decided members are forced in, and nothing may
/// pair up to `F`.
fn frobenius_dfs(x: usize, f: usize, member: &mut Vec<bool>, out: &mut Vec<Vec<i64>>) {
    if x == f {
        out.push((1..=f).filter(|&y| !member[y]).map(|y| y as i64).collect());
        return;
    }
    let forced_in = (1..=x / 2).any(|a| member[a] && member[x - a]);
    // x cannot join when F - x is already a member (or x itself pairs to F)
    let blocked = 2 * x == f || (f - x < x && member[f - x]);
    if forced_in && blocked {
        return;
    }
    if forced_in {
        member[x] = true;
        frobenius_dfs(x + 1, f, member, out);
        member[x] = false;
        return;
    }
    frobenius_dfs(x + 1, f, member, out);
    if !blocked {
        member[x] = true;
        frobenius_dfs(x + 1, f, member, out);
        member[x] = false;
    }
}

/// All numerical semigroups with Frobenius number exactly `F`, in
/// canonical order.
pub fn enumerate_by_frobenius(f: i64, cfg: &OracleConfig) -> Result<Vec<NumericalSemigroup>> {
    cfg.check_frobenius(f)?;
    let f = f as usize;
    let mut member = vec![false; f + 1];
    member[0] = true;
    let mut gapsets = Vec::new();
    frobenius_dfs(1, f, &mut member, &mut gapsets);
    let mut out = gapsets
        .into_iter()
        .map(NumericalSemigroup::from_gaps)
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Almost symmetric semigroups with Frobenius number `F` (by the gap-wise
/// definition), optionally restricted to type `t`.
pub fn enumerate_as_by_frobenius(
    f: i64,
    t_filter: Option<usize>,
    cfg: &OracleConfig,
) -> Result<Vec<NumericalSemigroup>> {
    let mut out = Vec::new();
    for s in enumerate_by_frobenius(f, cfg)? {
        if !s.is_almost_symmetric_definitional()? {
            continue;
        }
        if let Some(t) = t_filter {
            if pf_bruteforce(&s)?.len() != t {
                continue;
            }
        }
        out.push(s);
    }
    Ok(out)
}

/// Number of distinct PF sets among `semigroups`.
pub fn distinct_pf_count(semigroups: &[NumericalSemigroup]) -> Result<usize> {
    let sets: BTreeSet<PseudoFrobeniusSet> = semigroups
        .iter()
        .map(pf_bruteforce)
        .collect::<Result<_>>()?;
    Ok(sets.len())
}

/// Gaps `x` such that no other gap `y` has `y - x ∈ S`.
pub fn pf_bruteforce(s: &NumericalSemigroup) -> Result<PseudoFrobeniusSet> {
    let gaps = s.gaps();
    if gaps.is_empty() {
        return Err(Error::EmptyPseudoFrobenius);
    }
    let maximal: Vec<i64> = gaps
        .iter()
        .copied()
        .filter(|&x| !gaps.iter().any(|&y| y != x && s.contains(y - x)))
        .collect();
    PseudoFrobeniusSet::new(maximal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn tree_examples() {
        assert_eq!(
            tree_enumerate_by_genus(0, &cfg()).unwrap(),
            vec![NumericalSemigroup::natural()]
        );
        let g2 = tree_enumerate_by_genus(2, &cfg()).unwrap();
        assert_eq!(
            g2.iter().map(|s| s.gaps().to_vec()).collect::<Vec<_>>(),
            vec![vec![1, 2], vec![1, 3]]
        );
        assert_eq!(tree_enumerate_by_genus(5, &cfg()).unwrap().len(), 12);
    }

    #[test]
    fn tree_counts_match_reference() {
        // computed independently by a separate brute-force script
        let expected = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001];
        assert_eq!(tree_counts(13, &cfg()).unwrap(), expected);
    }

    #[test]
    fn frobenius_examples() {
        let f1 = enumerate_by_frobenius(1, &cfg()).unwrap();
        assert_eq!(
            f1,
            vec![NumericalSemigroup::from_generators(&[2, 3]).unwrap()]
        );
        let f3 = enumerate_by_frobenius(3, &cfg()).unwrap();
        assert_eq!(
            f3.iter().map(|s| s.gaps().to_vec()).collect::<Vec<_>>(),
            vec![vec![1, 2, 3], vec![1, 3]]
        );
        // counts of semigroups with Frobenius number F, F = 1..9
        let counts: Vec<usize> = (1..=9)
            .map(|f| enumerate_by_frobenius(f, &cfg()).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 2, 5, 4, 11, 10, 21]);
    }

    #[test]
    fn as_by_frobenius_small() {
        let counts: Vec<usize> = (1..=15)
            .map(|f| enumerate_as_by_frobenius(f, None, &cfg()).unwrap().len())
            .collect();
        assert_eq!(
            counts,
            vec![1, 1, 2, 2, 4, 3, 7, 6, 11, 9, 20, 15, 32, 24, 47]
        );
        let v = enumerate_as_by_frobenius(7, Some(5), &cfg()).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].gaps(), &[1, 2, 3, 4, 5, 7]);
    }

    #[test]
    fn pf_bruteforce_examples() {
        let s = |g: &[i64]| NumericalSemigroup::from_gaps(g.to_vec()).unwrap();
        assert_eq!(pf_bruteforce(&s(&[1])).unwrap().as_slice(), &[1]);
        assert_eq!(
            pf_bruteforce(&s(&[1, 2, 3, 6, 7])).unwrap().as_slice(),
            &[6, 7]
        );
        assert_eq!(
            pf_bruteforce(&s(&[1, 2, 3, 5, 7])).unwrap().as_slice(),
            &[2, 5, 7]
        );
        assert!(pf_bruteforce(&NumericalSemigroup::natural()).is_err());
    }

    #[test]
    fn ceilings_are_enforced() {
        let small = OracleConfig {
            max_genus: 3,
            max_frobenius: 5,
        };
        assert!(tree_enumerate_by_genus(4, &small).is_err());
        assert!(enumerate_by_frobenius(6, &small).is_err());
        assert!(enumerate_by_frobenius(0, &small).is_err());
    }
}
