//! Self-check suites run by `gapset verify`.
//!
//! Each suite compares two independent routes over every case within the
//! given bounds and stops at the first counterexample.

use std::collections::BTreeSet;
use std::fmt;

use crate::bijection::{
    forward, high_type_as_characterization, image_pf, inverse, recover_from_pf,
};
use crate::descent::{
    count_by_genus, descent_step, descent_step_general, enumerate_almost_symmetric_high_type,
    run_descent, DescentConfig, DescentState, Frontier,
};
use crate::error::Result;
use crate::ideals::star_dual;
use crate::oracle::{
    distinct_pf_count, enumerate_as_by_frobenius, enumerate_by_frobenius, pf_bruteforce,
    tree_counts, tree_enumerate_by_genus, OracleConfig,
};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyBounds {
    pub max_genus: usize,
    pub max_frobenius: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(c) => write!(f, "FAIL {} after {} cases: {c}", self.name, self.cases),
        }
    }
}

struct Suite {
    name: &'static str,
    cases: usize,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, cases: 0 }
    }

    fn pass(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            cases: self.cases,
            counterexample: None,
        }
    }

    fn fail(self, what: String) -> SuiteResult {
        SuiteResult {
            name: self.name,
            cases: self.cases,
            counterexample: Some(what),
        }
    }
}

/// Frobenius numbers used for the round trip at genus `g`.
fn round_trip_frobenius(g: usize) -> impl Iterator<Item = i64> {
    let g = g as i64;
    [4 * g - 1, 4 * g, 4 * g + 1, 4 * g + 5]
        .into_iter()
        .filter(|&f| f >= 1)
}

fn bijection_round_trip(b: &VerifyBounds, oracle: &OracleConfig) -> Result<SuiteResult> {
    let mut suite = Suite::new("bijection-round-trip");
    for g in 0..=b.max_genus {
        for s in tree_enumerate_by_genus(g, oracle)? {
            for f in round_trip_frobenius(g) {
                suite.cases += 1;
                let t = forward(&s, f)?;
                let inv = t.invariants();
                let depth_ok = if g == 0 {
                    inv.depth == 1
                } else {
                    inv.depth == 2
                };
                let ok = inv.frobenius == f
                    && inv.genus as i64 == f - g as i64
                    && inv.type_ as i64 == f - 2 * g as i64
                    && inv.multiplicity == f - s.frobenius()
                    && depth_ok
                    && t.is_almost_symmetric_definitional()?
                    && inverse(&t)? == s
                    && forward(&inverse(&t)?, f)? == t;
                if !ok {
                    return Ok(suite.fail(format!("{s} at F={f} (image {t})")));
                }
            }
        }
    }
    Ok(suite.pass())
}

fn pf_formula(b: &VerifyBounds, oracle: &OracleConfig) -> Result<SuiteResult> {
    let mut suite = Suite::new("pf-formula");
    for g in 0..=b.max_genus {
        for s in tree_enumerate_by_genus(g, oracle)? {
            for f in round_trip_frobenius(g) {
                suite.cases += 1;
                let t = forward(&s, f)?;
                let formula = image_pf(&s, f)?;
                if formula != pf_bruteforce(&t)? || formula != t.pseudo_frobenius()? {
                    return Ok(suite.fail(format!("{s} at F={f}: formula gives {formula}")));
                }
            }
        }
    }
    Ok(suite.pass())
}

fn counting_identity(
    b: &VerifyBounds,
    oracle: &OracleConfig,
    descent: &DescentConfig,
) -> Result<SuiteResult> {
    let mut suite = Suite::new("descent-vs-tree-counts");
    if b.max_genus == 0 {
        return Ok(suite.pass());
    }
    let tree = tree_counts(b.max_genus, oracle)?;
    let report = count_by_genus(b.max_genus, descent)?;
    for (g, &n) in tree.iter().enumerate().skip(1) {
        suite.cases += 1;
        if report.count_at(g) != Some(n) {
            return Ok(suite.fail(format!(
                "genus {g}: descent {:?}, tree {n}",
                report.count_at(g)
            )));
        }
    }
    Ok(suite.pass())
}

/// Valid high types `t` at Frobenius number `F`.
fn high_types(f: i64) -> impl Iterator<Item = i64> {
    (0..=f).filter(move |&t| 2 * t >= f - 1 && (f - t) % 2 == 0)
}

fn surjectivity(
    b: &VerifyBounds,
    oracle: &OracleConfig,
    descent: &DescentConfig,
) -> Result<SuiteResult> {
    let mut suite = Suite::new("surjectivity");
    for f in 1..=b.max_frobenius {
        let all_as = enumerate_as_by_frobenius(f, None, oracle)?;
        for t in high_types(f) {
            suite.cases += 1;
            let g = ((f - t) / 2) as usize;
            let from_oracle: BTreeSet<NumericalSemigroup> = all_as
                .iter()
                .filter(|s| s.semigroup_type().map(|x| x as i64 == t).unwrap_or(false))
                .cloned()
                .collect();
            let from_bijection: BTreeSet<NumericalSemigroup> = tree_enumerate_by_genus(g, oracle)?
                .iter()
                .map(|s| forward(s, f))
                .collect::<Result<_>>()?;
            let from_descent: BTreeSet<NumericalSemigroup> =
                enumerate_almost_symmetric_high_type(f, t, descent)?
                    .into_iter()
                    .collect();
            if from_oracle != from_bijection || from_oracle != from_descent {
                let witness = from_oracle
                    .symmetric_difference(&from_bijection)
                    .chain(from_oracle.symmetric_difference(&from_descent))
                    .next()
                    .map(|s| s.to_string())
                    .unwrap_or_default();
                return Ok(suite.fail(format!("F={f} t={t}: sets differ at {witness}")));
            }
        }
    }
    Ok(suite.pass())
}

fn pf_uniqueness(b: &VerifyBounds, oracle: &OracleConfig) -> Result<SuiteResult> {
    let mut suite = Suite::new("pf-uniqueness");
    for f in 1..=b.max_frobenius {
        let all_as = enumerate_as_by_frobenius(f, None, oracle)?;
        for t in high_types(f) {
            let g = ((f - t) / 2) as usize;
            let mut seen = BTreeSet::new();
            for s in all_as
                .iter()
                .filter(|s| s.semigroup_type().map(|x| x as i64 == t).unwrap_or(false))
            {
                suite.cases += 1;
                let pf = s.pseudo_frobenius()?;
                if !seen.insert(pf.clone()) {
                    return Ok(suite.fail(format!("{s} shares PF set {pf}")));
                }
                let recovered = recover_from_pf(&pf, g)?;
                if forward(&recovered, f)? != *s {
                    return Ok(suite.fail(format!("{s}: recovered {recovered} does not map back")));
                }
            }
        }
    }
    Ok(suite.pass())
}

fn all_levels(g_max: usize, descent: &DescentConfig) -> Result<Vec<Frontier>> {
    let mut levels = vec![Frontier::root(4 * g_max as u32 - 1)?];
    run_descent(levels[0].clone(), g_max, descent, |fr, _| {
        levels.push(fr.clone());
        Ok(())
    })?;
    Ok(levels)
}

fn sorted_children(st: &DescentState, full_check: bool) -> Result<Vec<DescentState>> {
    let mut kids = descent_step(st, full_check)?;
    kids.sort();
    Ok(kids)
}

fn optimization_soundness(b: &VerifyBounds, descent: &DescentConfig) -> Result<SuiteResult> {
    let mut suite = Suite::new("prefix-check-soundness");
    for g_max in 1..=b.max_genus {
        for fr in &all_levels(g_max, descent)?[..g_max] {
            for st in &fr.states {
                suite.cases += 1;
                if sorted_children(st, false)? != sorted_children(st, true)? {
                    return Ok(suite.fail(format!("F={} state {}", fr.frobenius, st.pf_set())));
                }
            }
        }
    }
    Ok(suite.pass())
}

/// Children of `st` at `level` via the general step, as `(PF, i)` pairs.
pub fn general_children(st: &DescentState, level: usize) -> Result<Vec<DescentState>> {
    let s = st.semigroup(level)?;
    let t = s.semigroup_type()? as i64 - 2;
    let mut out = Vec::new();
    for i in t + 1..s.multiplicity().min(s.frobenius()) {
        if let Some(child) = descent_step_general(&s, i)? {
            out.push(DescentState::new(&child.pseudo_frobenius()?, i as u32)?);
        }
    }
    out.sort();
    Ok(out)
}

fn general_step_agreement(b: &VerifyBounds, descent: &DescentConfig) -> Result<SuiteResult> {
    let mut suite = Suite::new("general-step-agreement");
    // the general step needs F >= 5
    for g_max in 2..=b.max_genus.min(8) {
        for fr in &all_levels(g_max, descent)?[..g_max] {
            for st in &fr.states {
                suite.cases += 1;
                if sorted_children(st, false)? != general_children(st, fr.level)? {
                    return Ok(suite.fail(format!("F={} state {}", fr.frobenius, st.pf_set())));
                }
            }
        }
    }
    Ok(suite.pass())
}

fn oracle_equivalence(b: &VerifyBounds, oracle: &OracleConfig) -> Result<SuiteResult> {
    let mut suite = Suite::new("pf-and-almost-symmetric-definitions");
    for f in 1..=b.max_frobenius {
        for s in enumerate_by_frobenius(f, oracle)? {
            suite.cases += 1;
            let pf = s.pseudo_frobenius()?;
            let is_as = s.is_almost_symmetric()?;
            let t = pf.len() as i64;
            let ok = pf == pf_bruteforce(&s)?
                && is_as == s.is_almost_symmetric_definitional()?
                && 2 * s.genus() as i64 >= f + t
                && f < 2 * s.genus() as i64
                && (t == 1) == (2 * s.genus() as i64 == f + 1)
                && pf.largest() == Some(f);
            let ok = ok
                && (2 * t < f - 1
                    || (f - t) % 2 != 0
                    || high_type_as_characterization(&s)? == is_as)
                && star_dual(&s)?.complement_in_naturals().len() == s.genus() - pf.len();
            if !ok {
                return Ok(suite.fail(s.to_string()));
            }
        }
    }
    Ok(suite.pass())
}

fn frobenius_20_example(b: &VerifyBounds, oracle: &OracleConfig) -> Result<Option<SuiteResult>> {
    if b.max_frobenius < 20 {
        return Ok(None);
    }
    let mut suite = Suite::new("frobenius-20-count");
    suite.cases = 1;
    let all = enumerate_as_by_frobenius(20, None, oracle)?;
    let distinct = distinct_pf_count(&all)?;
    Ok(Some(if (all.len(), distinct) == (103, 62) {
        suite.pass()
    } else {
        suite.fail(format!("count={} distinct_pf={distinct}", all.len()))
    }))
}

/// Runs every suite within `bounds`.
pub fn run_all(
    bounds: &VerifyBounds,
    oracle: &OracleConfig,
    descent: &DescentConfig,
) -> Result<Vec<SuiteResult>> {
    let mut out = vec![
        bijection_round_trip(bounds, oracle)?,
        pf_formula(bounds, oracle)?,
        counting_identity(bounds, oracle, descent)?,
        optimization_soundness(bounds, descent)?,
        general_step_agreement(bounds, descent)?,
        oracle_equivalence(bounds, oracle)?,
        surjectivity(bounds, oracle, descent)?,
        pf_uniqueness(bounds, oracle)?,
    ];
    out.extend(frobenius_20_example(bounds, oracle)?);
    Ok(out)
}
