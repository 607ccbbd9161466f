//! n_1, ..., n_g by pseudo-Frobenius descent, checked against the tree.
//!
//! ```text
//! cargo run --release --example count_by_genus -- 24 4
//! ```

use gapset::descent::count_by_genus;
use gapset::oracle::tree_counts;
use gapset::{DescentConfig, OracleConfig};

fn main() -> gapset::Result<()> {
    let mut args = std::env::args().skip(1);
    let g: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(20);
    let workers: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);

    let report = count_by_genus(g, &DescentConfig::default().with_workers(workers))?;
    let tree = if g <= OracleConfig::default().max_genus {
        Some(tree_counts(g, &OracleConfig::default())?)
    } else {
        None
    };
    println!("F = {}, {workers} worker(s)", report.frobenius);
    for (k, (n, dt)) in report.counts.iter().zip(&report.elapsed).enumerate() {
        let level = k + 1;
        let check = match &tree {
            Some(t) if t[level] == *n => "tree agrees",
            Some(_) => "TREE DISAGREES",
            None => "",
        };
        println!(
            "n{level:<3} = {n:>10}  {:>9.3} ms  {check}",
            dt.as_secs_f64() * 1e3
        );
    }
    Ok(())
}
