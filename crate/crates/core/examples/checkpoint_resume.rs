//! Breadth-first counting that survives interruption: the frontier is
//! saved after every level and a later run picks up from it.

use gapset::descent::{count_by_genus_checkpointed, run_descent, Frontier};
use gapset::DescentConfig;

fn main() -> gapset::Result<()> {
    let g = 16;
    let dir = std::env::temp_dir().join(format!("gapset-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("frontier.ckpt");
    let cfg = DescentConfig::default();

    // pretend an earlier run stopped after level 10
    let partial = run_descent(Frontier::root(4 * g as u32 - 1)?, 10, &cfg, |_, _| Ok(()))?;
    partial.save(&path)?;
    println!(
        "saved level {} with {} states",
        partial.level,
        partial.states.len()
    );

    let report = count_by_genus_checkpointed(g, &cfg, &path)?;
    for (k, n) in report.counts.iter().enumerate() {
        println!("n{} = {n}", report.start_level + k);
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
