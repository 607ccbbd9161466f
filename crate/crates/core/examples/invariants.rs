//! Invariants of a few numerical semigroups.
//!
//! ```text
//! cargo run --example invariants -- gens:5,7,9
//! ```

use gapset::NumericalSemigroup;

fn main() -> gapset::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec![
            "gens:3,5".to_string(),
            "gens:5,7,9".into(),
            "gaps:1,2,3,5,7".into(),
        ]
    } else {
        args
    };
    for text in inputs {
        let s: NumericalSemigroup = text.parse()?;
        let inv = s.invariants();
        println!("{s}");
        println!(
            "  F = {}, g = {}, m = {}, depth = {}",
            inv.frobenius, inv.genus, inv.multiplicity, inv.depth
        );
        println!("  minimal generators {:?}", s.minimal_generators());
        if s.genus() > 0 {
            println!("  PF = {} (type {})", s.pseudo_frobenius()?, inv.type_);
            println!("  almost symmetric: {}", s.is_almost_symmetric()?);
        }
        println!("  record {}", serde_json::to_string(&s.record()).unwrap());
    }
    Ok(())
}
