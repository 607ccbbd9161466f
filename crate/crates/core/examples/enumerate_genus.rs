//! Every numerical semigroup of a given genus, with its minimal generators.

use gapset::descent::enumerate_genus_iter;
use gapset::DescentConfig;

fn main() -> gapset::Result<()> {
    let g: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    let mut n = 0;
    for s in enumerate_genus_iter(g, &DescentConfig::default())? {
        let s = s?;
        println!("{s:<24} <{:?}> F={}", s.minimal_generators(), s.frobenius());
        n += 1;
    }
    println!("n_{g} = {n}");
    Ok(())
}
