//! Almost symmetric semigroups with Frobenius number 20: exhaustive
//! enumeration, grouped by type, with the high types cross-checked against
//! the descent.

use std::collections::BTreeMap;

use gapset::descent::enumerate_almost_symmetric_high_type;
use gapset::oracle::{distinct_pf_count, enumerate_as_by_frobenius};
use gapset::{DescentConfig, OracleConfig};

fn main() -> gapset::Result<()> {
    let f = 20;
    let all = enumerate_as_by_frobenius(f, None, &OracleConfig::default())?;
    let mut by_type: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &all {
        *by_type.entry(s.semigroup_type()?).or_default() += 1;
    }
    for (t, n) in &by_type {
        let t64 = *t as i64;
        let high = 2 * t64 >= f - 1 && (f - t64) % 2 == 0;
        if high {
            let descent = enumerate_almost_symmetric_high_type(f, t64, &DescentConfig::default())?;
            assert_eq!(descent.len(), *n);
            println!("type {t:>2}: {n:>3}  (descent agrees)");
        } else {
            println!("type {t:>2}: {n:>3}");
        }
    }
    println!(
        "count={} distinct_pf={}",
        all.len(),
        distinct_pf_count(&all)?
    );
    Ok(())
}
