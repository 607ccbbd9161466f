//! Genus-g semigroups map to almost symmetric semigroups of Frobenius
//! number F and type F - 2g, and back.

use gapset::bijection::{forward_image, image_pf, inverse};
use gapset::descent::enumerate_genus;
use gapset::DescentConfig;

fn main() -> gapset::Result<()> {
    let g = 3;
    for f in [4 * g as i64 - 1, 4 * g as i64 + 2] {
        println!("F = {f}");
        for s in enumerate_genus(g, &DescentConfig::default())? {
            let image = forward_image(&s, f)?;
            let t = &image.semigroup;
            let back = inverse(t)?;
            assert_eq!(back, s);
            println!(
                "  {s:<18} -> {t:<40} PF {} ({:?})",
                image_pf(&s, f)?,
                image.contract
            );
        }
    }
    Ok(())
}
