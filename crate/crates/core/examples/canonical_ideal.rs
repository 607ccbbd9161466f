//! Shifted canonical ideals and star duals.

use gapset::ideals::{gaps_of_shifted_canonical, shifted_canonical, star_dual};
use gapset::NumericalSemigroup;

fn main() -> gapset::Result<()> {
    let s = NumericalSemigroup::from_generators(&[3, 5])?;
    println!("S = {s}, F(S) = {}", s.frobenius());

    for shift in [0, 2, 5] {
        let k = shifted_canonical(&s, shift);
        println!(
            "K_S({shift}): min {}, bound {}, small elements {:?}",
            k.min_element(),
            k.bound(),
            k.small_elements()
        );
    }

    // for F > 2 F(S) the positive complement of K_S(F - F(S)) is a gapset
    for f in [15, 18] {
        println!(
            "F = {f}: positive complement {:?}",
            gaps_of_shifted_canonical(&s, f)?
        );
    }

    let t = NumericalSemigroup::from_gaps(vec![1, 2, 3, 5, 7])?;
    let dual = star_dual(&t)?;
    println!("T = {t}, PF(T) = {}", t.pseudo_frobenius()?);
    println!(
        "T* = T ∪ PF(T) read as a semigroup: {}",
        dual.to_semigroup()?
    );
    Ok(())
}
