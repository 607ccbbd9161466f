//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p gapset --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gapset::bijection::{
    forward, high_type_as_characterization, image_pf, inverse, recover_from_pf,
};
use gapset::descent::{count_by_genus, descent_step, run_descent, Frontier};
use gapset::oracle::{
    enumerate_as_by_frobenius, enumerate_by_frobenius, pf_bruteforce, tree_counts,
    tree_enumerate_by_genus,
};
use gapset::verify::general_children;
use gapset::{DescentConfig, NumericalSemigroup, OracleConfig};

const FROBENIUS_20_LIMIT: Duration = Duration::from_secs(60);
const COUNTING_LIMIT: Duration = Duration::from_secs(120);
const ROUND_TRIP_LIMIT: Duration = Duration::from_secs(60);
const GENUS_22_LIMIT: Duration = Duration::from_secs(60);

const FROBENIUS_20_COUNT: usize = 103;
const FROBENIUS_20_DISTINCT_PF: usize = 62;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let dt = start.elapsed();
    if dt > limit {
        return Err(format!("{detail}; took {dt:.2?}, limit {limit:?}"));
    }
    Ok(format!("{detail}; {dt:.2?}"))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn high_types(f: i64) -> impl Iterator<Item = i64> {
    (0..=f).filter(move |&t| 2 * t >= f - 1 && (f - t) % 2 == 0)
}

fn type_of(s: &NumericalSemigroup) -> Result<i64, String> {
    Ok(pf_bruteforce(s).map_err(err)?.len() as i64)
}

fn frobenius_20_example() -> Outcome {
    timed(FROBENIUS_20_LIMIT, || {
        let mut out = Vec::new();
        let code = gapset::cli::run(
            ["gapset", "almost-symmetric", "--frobenius", "20"],
            &mut out,
            &mut Vec::new(),
        );
        let text = String::from_utf8(out).map_err(err)?;
        let summary = text.lines().last().unwrap_or_default().to_string();
        let expected = format!("count={FROBENIUS_20_COUNT} distinct_pf={FROBENIUS_20_DISTINCT_PF}");
        if code != 0 || summary != expected {
            return Err(format!(
                "exit {code}, got `{summary}`, expected `{expected}`"
            ));
        }
        let listed = text.lines().filter(|l| l.starts_with("gaps:")).count();
        if listed != FROBENIUS_20_COUNT {
            return Err(format!("listed {listed} semigroups"));
        }
        Ok(summary)
    })
}

fn counting_identity() -> Outcome {
    timed(COUNTING_LIMIT, || {
        let oracle = OracleConfig::default();
        let tree = tree_counts(15, &oracle).map_err(err)?;
        for g in 1..=15 {
            let report = count_by_genus(g, &DescentConfig::default()).map_err(err)?;
            for (j, &n) in tree.iter().enumerate().take(g + 1).skip(1) {
                if report.count_at(j) != Some(n) {
                    return Err(format!(
                        "g_max={g} level {j}: descent {:?}, tree {n}",
                        report.count_at(j)
                    ));
                }
            }
        }
        let mut cases = 0;
        for g in 0..=6i64 {
            for f in [4 * g - 1, 4 * g + 1, 4 * g + 3] {
                if !(1..=23).contains(&f) {
                    continue;
                }
                cases += 1;
                let n = enumerate_as_by_frobenius(f, Some((f - 2 * g) as usize), &oracle)
                    .map_err(err)?
                    .len() as u64;
                if n != tree[g as usize] {
                    return Err(format!(
                        "F={f}, type {}: {n} almost symmetric, n_{g} = {}",
                        f - 2 * g,
                        tree[g as usize]
                    ));
                }
            }
        }
        Ok(format!(
            "n_1..n_15 agree; {cases} (F, type) pairs match n_g"
        ))
    })
}

/// Genus-`g` semigroups with the Frobenius numbers used for the round trip.
fn round_trip_cases() -> Result<Vec<(NumericalSemigroup, i64)>, String> {
    let mut out = Vec::new();
    for g in 0..=8usize {
        for s in tree_enumerate_by_genus(g, &OracleConfig::default()).map_err(err)? {
            let gi = g as i64;
            for f in [4 * gi - 1, 4 * gi, 4 * gi + 5]
                .into_iter()
                .filter(|&f| f >= 1)
            {
                out.push((s.clone(), f));
            }
        }
    }
    Ok(out)
}

fn bijection_round_trip() -> Outcome {
    timed(ROUND_TRIP_LIMIT, || {
        let cases = round_trip_cases()?;
        for (s, f) in &cases {
            let g = s.genus() as i64;
            let t = forward(s, *f).map_err(err)?;
            let inv = t.invariants();
            let depth = if g == 0 { 1 } else { 2 };
            let ok = inverse(&t).map_err(err)? == *s
                && inv.frobenius == *f
                && inv.genus as i64 == f - g
                && inv.type_ as i64 == f - 2 * g
                && inv.multiplicity == f - s.frobenius()
                && inv.depth == depth
                && t.is_almost_symmetric_definitional().map_err(err)?;
            if !ok {
                return Err(format!("{s} at F={f}: image {t}, invariants {inv:?}"));
            }
        }
        Ok(format!("{} cases", cases.len()))
    })
}

fn pf_formula() -> Outcome {
    let cases = round_trip_cases()?;
    for (s, f) in &cases {
        let formula = image_pf(s, *f).map_err(err)?;
        let t = forward(s, *f).map_err(err)?;
        let direct = pf_bruteforce(&t).map_err(err)?;
        if formula != direct {
            return Err(format!(
                "{s} at F={f}: formula {formula}, definition {direct}"
            ));
        }
    }
    Ok(format!("{} cases", cases.len()))
}

fn pf_uniqueness() -> Outcome {
    let oracle = OracleConfig::default();
    let mut cases = 0;
    for f in 1..=23 {
        let all = enumerate_as_by_frobenius(f, None, &oracle).map_err(err)?;
        for t in high_types(f) {
            let mut seen = BTreeSet::new();
            for s in &all {
                if type_of(s)? != t {
                    continue;
                }
                cases += 1;
                let pf = pf_bruteforce(s).map_err(err)?;
                if !seen.insert(pf.clone()) {
                    return Err(format!("F={f} t={t}: PF set {pf} repeats at {s}"));
                }
                let g = ((f - t) / 2) as usize;
                let back = forward(&recover_from_pf(&pf, g).map_err(err)?, f).map_err(err)?;
                if back != *s {
                    return Err(format!("{s}: recovered image {back}"));
                }
            }
        }
    }
    Ok(format!("{cases} semigroups"))
}

fn descent_equivalences() -> Outcome {
    let cfg = DescentConfig::default();
    let mut prefix_cases = 0;
    let mut general_cases = 0;
    for g_max in 1..=12usize {
        let mut levels = vec![Frontier::root(4 * g_max as u32 - 1).map_err(err)?];
        run_descent(levels[0].clone(), g_max - 1, &cfg, |fr, _| {
            levels.push(fr.clone());
            Ok(())
        })
        .map_err(err)?;
        for fr in &levels {
            for st in &fr.states {
                let mut prefix = descent_step(st, false).map_err(err)?;
                let mut full = descent_step(st, true).map_err(err)?;
                prefix.sort();
                full.sort();
                prefix_cases += 1;
                if prefix != full {
                    return Err(format!(
                        "F={} state {}: prefix and full check differ",
                        fr.frobenius,
                        st.pf_set()
                    ));
                }
                if (2..=8).contains(&g_max) {
                    general_cases += 1;
                    if general_children(st, fr.level).map_err(err)? != full {
                        return Err(format!(
                            "F={} state {}: general step differs",
                            fr.frobenius,
                            st.pf_set()
                        ));
                    }
                }
            }
        }
    }
    Ok(format!(
        "{prefix_cases} prefix/full states, {general_cases} general-step states"
    ))
}

fn high_type_characterization() -> Outcome {
    let oracle = OracleConfig::default();
    let mut cases = 0;
    for f in 1..=20 {
        for s in enumerate_by_frobenius(f, &oracle).map_err(err)? {
            let t = type_of(&s)?;
            if 2 * t < f - 1 || (f - t) % 2 != 0 {
                continue;
            }
            cases += 1;
            let by_definition = s.is_almost_symmetric_definitional().map_err(err)?;
            if high_type_as_characterization(&s).map_err(err)? != by_definition
                || s.is_almost_symmetric().map_err(err)? != by_definition
            {
                return Err(format!("{s}: characterization disagrees"));
            }
        }
    }
    Ok(format!("{cases} semigroups"))
}

fn deterministic_parallelism() -> Outcome {
    let base = count_by_genus(18, &DescentConfig::default()).map_err(err)?;
    for w in [2, 8] {
        let other = count_by_genus(18, &DescentConfig::default().with_workers(w)).map_err(err)?;
        if other.counts != base.counts {
            return Err(format!(
                "{w} workers: {:?} vs {:?}",
                other.counts, base.counts
            ));
        }
    }
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    timed(GENUS_22_LIMIT, || {
        let r = count_by_genus(22, &DescentConfig::default().with_workers(workers)).map_err(err)?;
        Ok(format!(
            "g=18 identical for 1, 2, 8 workers; n_22 = {} with {workers} workers",
            r.counts[21]
        ))
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 frobenius-20 example", frobenius_20_example),
        ("2 counting identity", counting_identity),
        ("3 bijection round trip", bijection_round_trip),
        ("4 image PF formula", pf_formula),
        ("5 PF uniqueness", pf_uniqueness),
        ("6 descent equivalences", descent_equivalences),
        ("7 high-type characterization", high_type_characterization),
        ("8 determinism under parallelism", deterministic_parallelism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
