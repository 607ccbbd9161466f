//! Counting and enumerating numerical semigroups by genus through the
//! pseudo-Frobenius descent.
//!
//! An almost symmetric semigroup of Frobenius number `F` and type
//! `t >= (F - 1) / 2` is determined by its PF set, so the descent only
//! carries PF sets. Starting from `{1, …, F}` (the semigroup
//! `{0, F+1, F+2, …}`), each step adjoins some `i` to the semigroup, which
//! removes the pair `{i, F - i}` from the PF set. After `j` levels at
//! `F = 4g - 1` the frontier has exactly `n_j` states, one per numerical
//! semigroup of genus `j`.
//!
//! States are `u128` bitsets over `[1, F]`, so `F` is capped at 127
//! (genus 32).

use std::cmp::Ordering;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{forward, recover_from_pf};
use crate::error::{domain, Error, Result};
use crate::semigroup::{NumericalSemigroup, PseudoFrobeniusSet};

/// Largest Frobenius number a [`DescentState`] can carry.
pub const MAX_DESCENT_FROBENIUS: u32 = 127;

/// Default ceiling on `g_max` for [`count_by_genus`].
pub const DEFAULT_GENUS_CEILING: usize = 30;

const CHUNK: usize = 512;

#[inline]
fn bit(x: u32) -> u128 {
    1u128 << x
}

/// Mask with the lowest `k` set bits of `x`.
#[inline]
fn lowest_bits(x: u128, k: u32) -> u128 {
    let mut rest = x;
    for _ in 0..k {
        rest &= rest.wrapping_sub(1);
    }
    x ^ rest
}

/// A frontier node: a PF set together with the multiplicity of the
/// semigroup it describes. Only `i < mult` are tried when descending, so
/// every semigroup is reached exactly once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentState {
    pf: u128,
    mult: u32,
}

impl DescentState {
    /// Builds a state from an explicit PF set. The set must be nonempty and
    /// fit below [`MAX_DESCENT_FROBENIUS`].
    pub fn new(pf: &PseudoFrobeniusSet, mult: u32) -> Result<Self> {
        let Some(f) = pf.largest() else {
            return domain("empty pseudo-Frobenius set");
        };
        if f > MAX_DESCENT_FROBENIUS as i64 {
            return Err(Error::Ceiling {
                what: "descent Frobenius number",
                value: f,
                max: MAX_DESCENT_FROBENIUS as i64,
            });
        }
        if mult == 0 || mult as i64 > f {
            return domain(format!("multiplicity {mult} outside [1, {f}]"));
        }
        let bits = pf
            .as_slice()
            .iter()
            .fold(0u128, |acc, &x| acc | bit(x as u32));
        Ok(DescentState { pf: bits, mult })
    }

    pub(crate) fn from_raw(pf: u128, mult: u32) -> Self {
        DescentState { pf, mult }
    }

    pub fn pf_bits(&self) -> u128 {
        self.pf
    }

    pub fn mult(&self) -> u32 {
        self.mult
    }

    pub fn frobenius(&self) -> u32 {
        127 - self.pf.leading_zeros()
    }

    /// Type of the semigroup this state describes.
    pub fn type_count(&self) -> u32 {
        self.pf.count_ones()
    }

    pub fn pf_set(&self) -> PseudoFrobeniusSet {
        let mut out = Vec::with_capacity(self.pf.count_ones() as usize);
        let mut w = self.pf;
        while w != 0 {
            out.push(w.trailing_zeros() as i64);
            w &= w - 1;
        }
        PseudoFrobeniusSet::from_sorted_unchecked(out)
    }

    /// The almost symmetric semigroup with this PF set, given how many
    /// descent steps separate it from the root.
    pub fn semigroup(&self, level: usize) -> Result<NumericalSemigroup> {
        forward(&self.preimage(level)?, self.frobenius() as i64)
    }

    /// The genus-`level` numerical semigroup matching this state.
    pub fn preimage(&self, level: usize) -> Result<NumericalSemigroup> {
        recover_from_pf(&self.pf_set(), level)
    }

    /// Appends the children of this state. `t = |pf| - 2` and
    /// `i` ranges over `[t + 1, mult - 1]`; the pair `{i, F - i}` is
    /// removed and the child is kept when no checked element `a` of the
    /// remaining set has `a + i` in it.
    ///
    /// The prefix check looks at the `⌊t/2⌋` smallest elements only; the
    /// full check looks at all `t`.
    #[inline]
    fn push_children(&self, full_check: bool, out: &mut Vec<DescentState>) {
        let f = self.frobenius();
        let t = self.pf.count_ones() - 2;
        for i in t + 1..self.mult {
            debug_assert!(2 * i > f);
            let pair = bit(i) | bit(f - i);
            debug_assert_eq!(self.pf & pair, pair);
            let rest = self.pf & !pair;
            let checked = if full_check {
                rest
            } else {
                lowest_bits(rest, t / 2)
            };
            if (checked << i) & rest == 0 {
                out.push(DescentState { pf: rest, mult: i });
            }
        }
    }

    fn check_invariants(&self) -> Result<()> {
        let f = self.frobenius();
        let inner = self.pf & !bit(f);
        let mut w = inner;
        while w != 0 {
            let a = w.trailing_zeros();
            if inner & bit(f - a) == 0 {
                return domain(format!(
                    "PF set {} is not symmetric about F/2",
                    self.pf_set()
                ));
            }
            w &= w - 1;
        }
        if self.mult > f {
            return domain(format!("multiplicity {} exceeds F = {f}", self.mult));
        }
        Ok(())
    }
}

/// `({1, …, F}, F)`: the PF set of `{0, F+1, F+2, …}`.
pub fn initial_state(frobenius: u32) -> Result<DescentState> {
    if frobenius < 1 {
        return domain("descent needs F >= 1");
    }
    if frobenius > MAX_DESCENT_FROBENIUS {
        return Err(Error::Ceiling {
            what: "descent Frobenius number",
            value: frobenius as i64,
            max: MAX_DESCENT_FROBENIUS as i64,
        });
    }
    let pf = (u128::MAX >> (127 - frobenius)) & !1;
    Ok(DescentState {
        pf,
        mult: frobenius,
    })
}

/// One descent step from `state`.
///
/// Requires `|pf| >= 3` and `t = |pf| - 2` with `2t >= F - 1`.
pub fn descent_step(state: &DescentState, full_check: bool) -> Result<Vec<DescentState>> {
    let size = state.type_count();
    if size < 3 {
        return domain(format!(
            "PF set {} has fewer than 3 elements",
            state.pf_set()
        ));
    }
    let t = size - 2;
    if 2 * t + 1 < state.frobenius() {
        return domain(format!(
            "t = {t} is below (F - 1) / 2 for F = {}",
            state.frobenius()
        ));
    }
    state.check_invariants()?;
    let mut out = Vec::new();
    state.push_children(full_check, &mut out);
    Ok(out)
}

/// Adjoins `i` to `S` when the general conditions hold:
/// every gap `z` of `S' = S ∪ {i}` has `z - i ∉ S'`, and
/// `i + (PF(S) \ {i, F - i}) ⊆ S'`.
///
/// Requires `S` almost symmetric with `F >= 5`, type `t + 2 <= F` for some
/// `t >= 1` with `F + t` even, and `t + 1 <= i <= m(S) - 1`.
pub fn descent_step_general(s: &NumericalSemigroup, i: i64) -> Result<Option<NumericalSemigroup>> {
    let f = s.frobenius();
    if f < 5 {
        return domain(format!("F = {f} is below 5"));
    }
    if !s.is_almost_symmetric()? {
        return domain(format!("{s} is not almost symmetric"));
    }
    let pf = s.pseudo_frobenius()?;
    let t = pf.len() as i64 - 2;
    if t < 1 || (f + t) % 2 != 0 {
        return domain(format!(
            "type {} does not allow a step at F = {f}",
            pf.len()
        ));
    }
    let hi = s.multiplicity().min(f) - 1;
    if i < t + 1 || i > hi {
        return domain(format!("i = {i} outside [{}, {hi}]", t + 1));
    }

    let new_gaps: Vec<i64> = s.gaps().iter().copied().filter(|&z| z != i).collect();
    let in_new = |x: i64| x == i || s.contains(x);

    let shift_ok = new_gaps.iter().all(|&z| !in_new(z - i));
    let pf_ok = pf
        .as_slice()
        .iter()
        .filter(|&&p| p != i && p != f - i)
        .all(|&p| in_new(p + i));
    if !(shift_ok && pf_ok) {
        return Ok(None);
    }
    NumericalSemigroup::from_gaps(new_gaps)
        .map(Some)
        .map_err(|e| Error::Internal(format!("{s} ∪ {{{i}}} is not a semigroup: {e}")))
}

/// Worker count and check mode for a descent run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DescentConfig {
    pub workers: usize,
    pub full_check: bool,
    pub genus_ceiling: usize,
}

impl Default for DescentConfig {
    fn default() -> Self {
        DescentConfig {
            workers: 1,
            full_check: false,
            genus_ceiling: DEFAULT_GENUS_CEILING,
        }
    }
}

impl DescentConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_full_check(mut self, full_check: bool) -> Self {
        self.full_check = full_check;
        self
    }

    fn check_genus(&self, genus: usize) -> Result<()> {
        let hard = (MAX_DESCENT_FROBENIUS as usize + 1) / 4;
        let max = self.genus_ceiling.min(hard);
        if genus > max {
            return Err(Error::Ceiling {
                what: "genus",
                value: genus as i64,
                max: max as i64,
            });
        }
        if self.workers == 0 {
            return domain("worker count must be positive");
        }
        Ok(())
    }

    fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> Result<R> {
        if self.workers == 1 {
            return Ok(job());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        Ok(pool.install(job))
    }
}

/// The states reached after `level` descent steps at a fixed `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frontier {
    pub frobenius: u32,
    pub level: usize,
    pub states: Vec<DescentState>,
}

impl Frontier {
    pub fn root(frobenius: u32) -> Result<Self> {
        Ok(Frontier {
            frobenius,
            level: 0,
            states: vec![initial_state(frobenius)?],
        })
    }

    /// Expands every state once. Children are sorted by PF bitset, so the
    /// result does not depend on how the work was split. Must run inside the
    /// intended thread pool when `parallel` is set.
    fn expand(&self, full_check: bool, parallel: bool) -> Frontier {
        let mut next: Vec<DescentState> = if parallel {
            self.states
                .par_chunks(CHUNK)
                .map(|chunk| {
                    let mut local = Vec::with_capacity(chunk.len() * 2);
                    for st in chunk {
                        st.push_children(full_check, &mut local);
                    }
                    local
                })
                .collect::<Vec<_>>()
                .concat()
        } else {
            let mut out = Vec::with_capacity(self.states.len() * 2);
            for st in &self.states {
                st.push_children(full_check, &mut out);
            }
            out
        };
        if parallel {
            next.par_sort_unstable();
        } else {
            next.sort_unstable();
        }
        Frontier {
            frobenius: self.frobenius,
            level: self.level + 1,
            states: next,
        }
    }

    /// Sorts states so that their genus-`level` preimages come out in
    /// lexicographic gap order. Both gap sets have the same size, so the
    /// one holding the smallest element of the symmetric difference is
    /// smaller.
    fn sort_by_preimage_gaps(&mut self) {
        let level = self.level as u32;
        let band = if level == 0 {
            0
        } else {
            (u128::MAX >> (128 - 2 * level)) & !1
        };
        self.states.sort_unstable_by(|a, b| {
            let ga = band & !a.pf;
            let gb = band & !b.pf;
            let diff = ga ^ gb;
            if diff == 0 {
                Ordering::Equal
            } else if ga & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        });
    }
}

/// Per-level counts `n_1, …, n_g` from one descent run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    #[serde(rename = "F")]
    pub frobenius: u32,
    /// Level of `counts[0]`; 1 unless the run resumed from a checkpoint.
    #[serde(skip_serializing_if = "is_one")]
    pub start_level: usize,
    pub counts: Vec<u64>,
    /// Wall time per level; empty for depth-first runs.
    #[serde(skip)]
    pub elapsed: Vec<Duration>,
}

fn is_one(x: &usize) -> bool {
    *x == 1
}

impl CountReport {
    /// `n_level`, if this report covers that level.
    pub fn count_at(&self, level: usize) -> Option<u64> {
        level
            .checked_sub(self.start_level)
            .and_then(|k| self.counts.get(k).copied())
    }
}

fn check_count_args(g_max: usize, config: &DescentConfig) -> Result<()> {
    if g_max < 1 {
        return domain("g_max must be at least 1");
    }
    config.check_genus(g_max)
}

/// Expands `frontier` until `target_level`, calling `on_level` after each
/// level with the new frontier and its wall time.
pub fn run_descent(
    mut frontier: Frontier,
    target_level: usize,
    config: &DescentConfig,
    mut on_level: impl FnMut(&Frontier, Duration) -> Result<()> + Send,
) -> Result<Frontier> {
    let parallel = config.workers > 1;
    let full_check = config.full_check;
    config.run(move || {
        while frontier.level < target_level {
            let start = Instant::now();
            frontier = frontier.expand(full_check, parallel);
            on_level(&frontier, start.elapsed())?;
        }
        Ok(frontier)
    })?
}

/// `n_1, …, n_{g_max}` by breadth-first descent at `F = 4 g_max - 1`.
pub fn count_by_genus(g_max: usize, config: &DescentConfig) -> Result<CountReport> {
    check_count_args(g_max, config)?;
    let frobenius = 4 * g_max as u32 - 1;
    let mut counts = Vec::with_capacity(g_max);
    let mut elapsed = Vec::with_capacity(g_max);
    run_descent(Frontier::root(frobenius)?, g_max, config, |fr, dt| {
        counts.push(fr.states.len() as u64);
        elapsed.push(dt);
        Ok(())
    })?;
    Ok(CountReport {
        frobenius,
        start_level: 1,
        counts,
        elapsed,
    })
}

/// Like [`count_by_genus`], saving a checkpoint after every level and
/// resuming from `path` when it already holds one for the same `F`.
pub fn count_by_genus_checkpointed(
    g_max: usize,
    config: &DescentConfig,
    path: &Path,
) -> Result<CountReport> {
    check_count_args(g_max, config)?;
    let frobenius = 4 * g_max as u32 - 1;
    let frontier = if path.exists() {
        let cp = Checkpoint::load(path)?;
        if cp.frobenius != frobenius {
            return domain(format!(
                "checkpoint is for F = {}, this run needs F = {frobenius}",
                cp.frobenius
            ));
        }
        if cp.level > g_max {
            return domain(format!("checkpoint level {} is past g = {g_max}", cp.level));
        }
        cp
    } else {
        Frontier::root(frobenius)?
    };

    let start_level = frontier.level.max(1);
    let mut counts = Vec::new();
    let mut elapsed = Vec::new();
    if frontier.level >= 1 {
        counts.push(frontier.states.len() as u64);
        elapsed.push(Duration::ZERO);
    }
    run_descent(frontier, g_max, config, |fr, dt| {
        counts.push(fr.states.len() as u64);
        elapsed.push(dt);
        fr.save(path)
    })?;
    Ok(CountReport {
        frobenius,
        start_level,
        counts,
        elapsed,
    })
}

fn dfs_count(
    state: &DescentState,
    level: usize,
    g_max: usize,
    full_check: bool,
    counts: &mut [u64],
) {
    counts[level - 1] += 1;
    if level == g_max {
        return;
    }
    let mut children = Vec::new();
    state.push_children(full_check, &mut children);
    for child in &children {
        dfs_count(child, level + 1, g_max, full_check, counts);
    }
}

/// Depth-first variant of [`count_by_genus`]: only counts, memory bounded
/// by the tree depth. Subtrees below a shallow breadth-first frontier are
/// spread over the workers and their counts summed.
pub fn count_by_genus_dfs(g_max: usize, config: &DescentConfig) -> Result<CountReport> {
    check_count_args(g_max, config)?;
    let frobenius = 4 * g_max as u32 - 1;
    let split = g_max.min(6);
    let mut counts = vec![0u64; g_max];
    let top = run_descent(Frontier::root(frobenius)?, split, config, |fr, _| {
        counts[fr.level - 1] = fr.states.len() as u64;
        Ok(())
    })?;
    if split < g_max {
        let full_check = config.full_check;
        let states = top.states;
        let deeper = config.run(move || {
            states
                .par_iter()
                .map(|st| {
                    let mut local = vec![0u64; g_max];
                    let mut children = Vec::new();
                    st.push_children(full_check, &mut children);
                    for child in &children {
                        dfs_count(child, split + 1, g_max, full_check, &mut local);
                    }
                    local
                })
                .reduce(
                    || vec![0u64; g_max],
                    |mut a, b| {
                        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                        a
                    },
                )
        })?;
        for (c, d) in counts.iter_mut().zip(deeper).skip(split) {
            *c = d;
        }
    }
    Ok(CountReport {
        frobenius,
        start_level: 1,
        counts,
        elapsed: Vec::new(),
    })
}

/// Final frontier of a genus-`g` run at `F = 4g - 1`, ordered so that the
/// preimages come out in canonical gap order.
pub fn genus_frontier(genus: usize, config: &DescentConfig) -> Result<Frontier> {
    check_count_args(genus, config)?;
    let frobenius = 4 * genus as u32 - 1;
    let mut fr = run_descent(Frontier::root(frobenius)?, genus, config, |_, _| Ok(()))?;
    fr.sort_by_preimage_gaps();
    Ok(fr)
}

/// Lazily maps a genus frontier to its numerical semigroups.
pub fn enumerate_genus_iter(
    genus: usize,
    config: &DescentConfig,
) -> Result<impl Iterator<Item = Result<NumericalSemigroup>>> {
    let fr = genus_frontier(genus, config)?;
    Ok(fr.states.into_iter().map(move |st| st.preimage(genus)))
}

/// Every numerical semigroup of genus `g`, in canonical order.
pub fn enumerate_genus(genus: usize, config: &DescentConfig) -> Result<Vec<NumericalSemigroup>> {
    enumerate_genus_iter(genus, config)?.collect()
}

/// Almost symmetric semigroups with Frobenius number `F` and type `t`, for
/// `t >= (F - 1) / 2` and `F - t` even, by descending `(F - t) / 2` levels
/// at `F` itself.
pub fn enumerate_almost_symmetric_high_type(
    frobenius: i64,
    t: i64,
    config: &DescentConfig,
) -> Result<Vec<NumericalSemigroup>> {
    if frobenius < 1 || t < 0 || t > frobenius {
        return domain(format!(
            "need 0 <= t <= F and F >= 1, got F = {frobenius}, t = {t}"
        ));
    }
    if 2 * t < frobenius - 1 || (frobenius - t) % 2 != 0 {
        return domain(format!(
            "need t >= (F - 1) / 2 and F - t even, got F = {frobenius}, t = {t}"
        ));
    }
    if frobenius > MAX_DESCENT_FROBENIUS as i64 {
        return Err(Error::Ceiling {
            what: "descent Frobenius number",
            value: frobenius,
            max: MAX_DESCENT_FROBENIUS as i64,
        });
    }
    let genus = ((frobenius - t) / 2) as usize;
    config.check_genus(genus)?;
    let fr = run_descent(Frontier::root(frobenius as u32)?, genus, config, |_, _| {
        Ok(())
    })?;
    let mut out = fr
        .states
        .iter()
        .map(|st| st.semigroup(genus))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// A frontier on disk: header `F=<int> level=<int>`, then one
/// `pf_bits_hex,mult` line per state.
pub type Checkpoint = Frontier;

impl Frontier {
    pub fn write_to(&self, w: impl Write) -> Result<()> {
        let mut w = BufWriter::new(w);
        writeln!(w, "F={} level={}", self.frobenius, self.level)?;
        for st in &self.states {
            writeln!(w, "{:x},{}", st.pf, st.mult)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_from(r: impl Read) -> Result<Self> {
        let mut lines = BufReader::new(r).lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty checkpoint".into()))??;
        let (frobenius, level) = parse_header(&header)?;
        let mut states = Vec::new();
        for (n, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = || Error::Parse(format!("checkpoint line {}: {line:?}", n + 2));
            let (hex, mult) = line.trim().split_once(',').ok_or_else(bad)?;
            let pf = u128::from_str_radix(hex, 16).map_err(|_| bad())?;
            let mult: u32 = mult.parse().map_err(|_| bad())?;
            let st = DescentState::from_raw(pf, mult);
            if pf == 0 || st.frobenius() != frobenius {
                return Err(bad());
            }
            st.check_invariants().map_err(|_| bad())?;
            states.push(st);
        }
        Ok(Frontier {
            frobenius,
            level,
            states,
        })
    }

    /// Writes to a sibling temporary file and renames it into place.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        self.write_to(fs::File::create(&tmp)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::read_from(fs::File::open(path)?)
    }
}

fn parse_header(header: &str) -> Result<(u32, usize)> {
    let bad = || Error::Parse(format!("checkpoint header {header:?}"));
    let mut parts = header.split_whitespace();
    let f = parts
        .next()
        .and_then(|p| p.strip_prefix("F="))
        .and_then(|v| v.parse().ok())
        .ok_or_else(bad)?;
    let level = parts
        .next()
        .and_then(|p| p.strip_prefix("level="))
        .and_then(|v| v.parse().ok())
        .ok_or_else(bad)?;
    if parts.next().is_some() || !(1..=MAX_DESCENT_FROBENIUS).contains(&f) {
        return Err(bad());
    }
    Ok((f, level))
}
