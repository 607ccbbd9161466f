//! Command-line front end: `count`, `enumerate`, `almost-symmetric`,
//! `verify` and `bench`.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 for
//! usage and domain errors.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::descent::{
    count_by_genus, count_by_genus_checkpointed, count_by_genus_dfs,
    enumerate_almost_symmetric_high_type, enumerate_genus_iter, CountReport, DescentConfig,
};
use crate::error::{Error, Result};
use crate::oracle::{
    enumerate_as_by_frobenius, tree_counts, tree_enumerate_by_genus, OracleConfig,
};
use crate::semigroup::NumericalSemigroup;
use crate::verify::{run_all, VerifyBounds};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Descent,
    Tree,
    Oracle,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "gapset",
    version,
    about = "Numerical semigroups by genus and almost symmetric semigroups of high type"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for the descent.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: u32,
    /// Check every remaining PF element in each descent step instead of
    /// the smallest half.
    #[arg(long)]
    pub full_check: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print n_1, ..., n_g.
    Count {
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value_t = Method::Descent)]
        method: Method,
        /// Save the frontier after each level and resume from it.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Depth-first counting with memory bounded by the depth.
        #[arg(long, conflicts_with = "checkpoint")]
        dfs: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print every numerical semigroup of the given genus.
    Enumerate {
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value_t = Method::Descent)]
        method: Method,
        #[command(flatten)]
        common: Common,
    },
    /// Print almost symmetric semigroups with a given Frobenius number.
    AlmostSymmetric {
        #[arg(long)]
        frobenius: i64,
        #[arg(long = "type")]
        type_: Option<i64>,
        /// Defaults to the descent for high types and the oracle otherwise.
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the cross-validation suites.
    Verify {
        #[arg(long, default_value_t = 0)]
        max_genus: usize,
        #[arg(long, default_value_t = 0)]
        max_frobenius: i64,
        #[command(flatten)]
        common: Common,
    },
    /// Time the descent for 1..=workers threads.
    Bench {
        #[arg(long)]
        genus: usize,
        #[command(flatten)]
        common: Common,
    },
}

/// A parsed and validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub genus: usize,
    pub frobenius: i64,
    pub type_: Option<i64>,
    pub method: Method,
    pub format: Format,
    pub workers: usize,
    pub full_check: bool,
    pub checkpoint: Option<PathBuf>,
    pub dfs: bool,
    pub oracle: OracleConfig,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Count,
    Enumerate,
    AlmostSymmetric,
    Verify,
    Bench,
}

impl RunConfig {
    pub fn from_cli(cli: Cli, oracle: OracleConfig) -> Result<Self> {
        let blank = |command, common: &Common| RunConfig {
            command,
            genus: 0,
            frobenius: 0,
            type_: None,
            method: Method::Descent,
            format: common.format,
            workers: common.workers as usize,
            full_check: common.full_check,
            checkpoint: None,
            dfs: false,
            oracle,
        };
        let cfg = match cli.command {
            Command::Count {
                genus,
                method,
                checkpoint,
                dfs,
                common,
            } => {
                if method != Method::Descent && (checkpoint.is_some() || dfs) {
                    return Err(Error::Domain(
                        "--checkpoint and --dfs need --method descent".into(),
                    ));
                }
                RunConfig {
                    genus,
                    method,
                    checkpoint,
                    dfs,
                    ..blank(CommandKind::Count, &common)
                }
            }
            Command::Enumerate {
                genus,
                method,
                common,
            } => RunConfig {
                genus,
                method,
                ..blank(CommandKind::Enumerate, &common)
            },
            Command::AlmostSymmetric {
                frobenius,
                type_,
                method,
                common,
            } => {
                if frobenius < 1 {
                    return Err(Error::Domain(format!(
                        "--frobenius {frobenius} must be positive"
                    )));
                }
                if let Some(t) = type_ {
                    if t < 1 || t > frobenius {
                        return Err(Error::Domain(format!(
                            "--type {t} must lie in [1, {frobenius}]"
                        )));
                    }
                    if (frobenius - t) % 2 != 0 {
                        return Err(Error::Domain(format!(
                            "F - t = {} is odd: no almost symmetric semigroup has F = {frobenius}, t = {t}",
                            frobenius - t
                        )));
                    }
                }
                let high = type_.is_some_and(|t| 2 * t >= frobenius - 1);
                let method = match method {
                    Some(Method::Tree) => {
                        return Err(Error::Domain(
                            "almost-symmetric takes --method descent or oracle".into(),
                        ))
                    }
                    Some(Method::Descent) if !high => {
                        return Err(Error::Domain(
                            "--method descent needs --type t with t >= (F - 1) / 2".into(),
                        ))
                    }
                    Some(m) => m,
                    None if high => Method::Descent,
                    None => Method::Oracle,
                };
                RunConfig {
                    frobenius,
                    type_,
                    method,
                    ..blank(CommandKind::AlmostSymmetric, &common)
                }
            }
            Command::Verify {
                max_genus,
                max_frobenius,
                common,
            } => RunConfig {
                genus: max_genus,
                frobenius: max_frobenius,
                ..blank(CommandKind::Verify, &common)
            },
            Command::Bench { genus, common } => RunConfig {
                genus,
                ..blank(CommandKind::Bench, &common)
            },
        };
        if matches!(
            cfg.command,
            CommandKind::Count | CommandKind::Enumerate | CommandKind::Bench
        ) && cfg.genus < 1
        {
            return Err(Error::Domain("--genus must be at least 1".into()));
        }
        Ok(cfg)
    }

    fn descent(&self) -> DescentConfig {
        DescentConfig::default()
            .with_workers(self.workers)
            .with_full_check(self.full_check)
    }
}

fn join(values: &[i64], sep: &str) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

const CSV_HEADER: &str = "frobenius,genus,multiplicity,type,depth,gaps,pf,min_gens";

fn csv_row(s: &NumericalSemigroup) -> String {
    let r = s.record();
    format!(
        "{},{},{},{},{},{},{},{}",
        r.frobenius,
        r.genus,
        r.multiplicity,
        r.type_,
        r.depth,
        join(&r.gaps, ";"),
        join(&r.pf, ";"),
        join(&r.min_gens, ";")
    )
}

fn ms(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e3)
}

fn cmd_count(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let report = match cfg.method {
        Method::Descent => {
            let descent = cfg.descent();
            match (&cfg.checkpoint, cfg.dfs) {
                (Some(path), _) => count_by_genus_checkpointed(cfg.genus, &descent, path)?,
                (None, true) => count_by_genus_dfs(cfg.genus, &descent)?,
                (None, false) => count_by_genus(cfg.genus, &descent)?,
            }
        }
        Method::Tree | Method::Oracle => {
            let counts = tree_counts(cfg.genus, &cfg.oracle)?;
            CountReport {
                frobenius: 4 * cfg.genus as u32 - 1,
                start_level: 1,
                counts: counts[1..].to_vec(),
                elapsed: Vec::new(),
            }
        }
    };
    match cfg.format {
        Format::Text => {
            for (k, n) in report.counts.iter().enumerate() {
                writeln!(out, "n{} = {n}", report.start_level + k)?;
            }
        }
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&report).map_err(|e| Error::Internal(e.to_string()))?
        )?,
        Format::Csv => {
            writeln!(out, "genus,count,elapsed_ms")?;
            for (k, n) in report.counts.iter().enumerate() {
                let dt = report.elapsed.get(k).map(|d| ms(*d)).unwrap_or_default();
                writeln!(out, "{},{n},{dt}", report.start_level + k)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_list(
    cfg: &RunConfig,
    semigroups: impl Iterator<Item = Result<NumericalSemigroup>>,
    out: &mut dyn Write,
) -> Result<Vec<NumericalSemigroup>> {
    let mut kept = Vec::new();
    match cfg.format {
        Format::Text => {
            for s in semigroups {
                writeln!(out, "{}", s?)?;
            }
        }
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for s in semigroups {
                writeln!(out, "{}", csv_row(&s?))?;
            }
        }
        Format::Json => {
            kept = semigroups.collect::<Result<_>>()?;
        }
    }
    Ok(kept)
}

fn to_json(value: &serde_json::Value) -> Result<String> {
    serde_json::to_string(value).map_err(|e| Error::Internal(e.to_string()))
}

fn cmd_enumerate(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let list: Box<dyn Iterator<Item = Result<NumericalSemigroup>>> = match cfg.method {
        Method::Descent => Box::new(enumerate_genus_iter(cfg.genus, &cfg.descent())?),
        Method::Tree | Method::Oracle => Box::new(
            tree_enumerate_by_genus(cfg.genus, &cfg.oracle)?
                .into_iter()
                .map(Ok),
        ),
    };
    let kept = write_list(cfg, list, out)?;
    if cfg.format == Format::Json {
        let records: Vec<_> = kept.iter().map(NumericalSemigroup::record).collect();
        writeln!(out, "{}", to_json(&json!(records))?)?;
    }
    Ok(EXIT_OK)
}

fn cmd_almost_symmetric(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let list = match (cfg.method, cfg.type_) {
        (Method::Descent, Some(t)) => {
            enumerate_almost_symmetric_high_type(cfg.frobenius, t, &cfg.descent())?
        }
        _ => enumerate_as_by_frobenius(cfg.frobenius, cfg.type_.map(|t| t as usize), &cfg.oracle)?,
    };
    let pf_sets = list
        .iter()
        .map(|s| s.pseudo_frobenius())
        .collect::<Result<BTreeSet<_>>>()?;
    let summary = format!("count={} distinct_pf={}", list.len(), pf_sets.len());
    match cfg.format {
        Format::Json => {
            let records: Vec<_> = list.iter().map(NumericalSemigroup::record).collect();
            let doc = json!({
                "frobenius": cfg.frobenius,
                "type": cfg.type_,
                "count": list.len(),
                "distinct_pf": pf_sets.len(),
                "semigroups": records,
            });
            writeln!(out, "{}", to_json(&doc)?)?;
        }
        _ => {
            write_list(cfg, list.into_iter().map(Ok), out)?;
            writeln!(out, "{summary}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let bounds = VerifyBounds {
        max_genus: cfg.genus,
        max_frobenius: cfg.frobenius,
    };
    let results = run_all(&bounds, &cfg.oracle, &cfg.descent())?;
    let passed = results.iter().all(|r| r.passed());
    match cfg.format {
        Format::Json => {
            let rows: Vec<_> = results
                .iter()
                .map(|r| json!({"suite": r.name, "cases": r.cases, "passed": r.passed(), "counterexample": r.counterexample}))
                .collect();
            writeln!(out, "{}", to_json(&json!(rows))?)?;
        }
        _ => {
            for r in &results {
                writeln!(out, "{r}")?;
            }
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_bench(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let mut reports = Vec::with_capacity(cfg.workers);
    for w in 1..=cfg.workers {
        let descent = cfg.descent().with_workers(w);
        reports.push(count_by_genus(cfg.genus, &descent)?);
    }
    if let Some(bad) = reports.iter().position(|r| r.counts != reports[0].counts) {
        return Err(Error::Internal(format!(
            "counts with {} workers differ from 1 worker",
            bad + 1
        )));
    }
    let mut header = vec!["level".to_string(), "count".to_string()];
    header.extend((1..=cfg.workers).map(|w| format!("workers_{w}_ms")));
    header.push("speedup".into());
    writeln!(out, "{}", header.join(","))?;
    for level in 0..cfg.genus {
        let mut row = vec![
            (level + 1).to_string(),
            reports[0].counts[level].to_string(),
        ];
        row.extend(reports.iter().map(|r| ms(r.elapsed[level])));
        let base = reports[0].elapsed[level].as_secs_f64();
        let last = reports[cfg.workers - 1].elapsed[level].as_secs_f64();
        let speedup = if last > 0.0 { base / last } else { 1.0 };
        row.push(format!("{speedup:.3}"));
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(EXIT_OK)
}

/// Runs a validated configuration, writing results to `out`.
pub fn execute(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    match cfg.command {
        CommandKind::Count => cmd_count(cfg, out),
        CommandKind::Enumerate => cmd_enumerate(cfg, out),
        CommandKind::AlmostSymmetric => cmd_almost_symmetric(cfg, out),
        CommandKind::Verify => cmd_verify(cfg, out),
        CommandKind::Bench => cmd_bench(cfg, out),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => EXIT_VERIFY_FAILED,
        _ => EXIT_USAGE,
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let result = OracleConfig::from_env()
        .and_then(|oracle| RunConfig::from_cli(cli, oracle))
        .and_then(|cfg| execute(&cfg, out));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["gapset"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_text() {
        let (code, out, _) = run_str(&["count", "--genus", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n1 = 1\nn2 = 2\nn3 = 4\n");
    }

    #[test]
    fn count_tree() {
        let (code, out, _) = run_str(&["count", "--genus", "1", "--method", "tree"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n1 = 1\n");
    }

    #[test]
    fn count_json() {
        let (code, out, _) = run_str(&["count", "--genus", "10", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(
            out.trim(),
            r#"{"F":39,"counts":[1,2,4,7,12,23,39,67,118,204]}"#
        );
    }

    #[test]
    fn count_out_of_ceiling() {
        let (code, _, err) = run_str(&["count", "--genus", "40"]);
        assert_eq!(code, 2);
        assert!(err.contains("ceiling"));
        let (code, _, _) = run_str(&["count", "--genus", "0"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_str(&["count", "--bogus"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn enumerate_text_and_json() {
        assert_eq!(run_str(&["enumerate", "--genus", "1"]).1, "gaps:1\n");
        assert_eq!(
            run_str(&["enumerate", "--genus", "2"]).1,
            "gaps:1,2\ngaps:1,3\n"
        );
        let (code, out, _) = run_str(&["enumerate", "--genus", "3", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Vec<crate::semigroup::SemigroupRecord> = serde_json::from_str(&out).unwrap();
        assert_eq!(v.len(), 4);
        assert!(v.iter().all(|r| r.to_semigroup().is_ok()));
    }

    #[test]
    fn almost_symmetric_small() {
        let (code, out, _) = run_str(&["almost-symmetric", "--frobenius", "7", "--type", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out, "gaps:1,2,3,4,5,7\ncount=1 distinct_pf=1\n");
        let (_, out, _) = run_str(&["almost-symmetric", "--frobenius", "7", "--type", "7"]);
        assert_eq!(out, "gaps:1,2,3,4,5,6,7\ncount=1 distinct_pf=1\n");
        let (code, _, _) = run_str(&["almost-symmetric", "--frobenius", "7", "--type", "4"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn verify_trivial() {
        let (code, out, _) = run_str(&["verify", "--max-genus", "0"]);
        assert_eq!(code, 0);
        assert!(out.lines().all(|l| l.starts_with("PASS")));
    }

    #[test]
    fn bench_single_row() {
        let (code, out, _) = run_str(&["bench", "--genus", "1"]);
        assert_eq!(code, 0);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines[0], "level,count,workers_1_ms,speedup");
        assert_eq!(lines.len(), 2);
    }
}
