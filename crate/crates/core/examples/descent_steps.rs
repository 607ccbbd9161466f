//! The first levels of the descent at F = 11, shown both as PF bitsets and
//! as the semigroups they stand for. Past level 3 the type drops below
//! (F - 1) / 2 and the step no longer applies.

use gapset::descent::{descent_step, initial_state};

fn main() -> gapset::Result<()> {
    let mut level = vec![initial_state(11)?];
    for depth in 0..=3 {
        println!("level {depth}: {} state(s)", level.len());
        for st in &level {
            println!(
                "  PF {:<22} mult {:>2}  preimage {:<14} image {}",
                st.pf_set().to_string(),
                st.mult(),
                st.preimage(depth)?.to_string(),
                st.semigroup(depth)?
            );
        }
        if depth == 3 {
            break;
        }
        let mut next = Vec::new();
        for st in &level {
            next.extend(descent_step(st, false)?);
        }
        level = next;
    }
    Ok(())
}
