//! The correspondence between numerical semigroups of genus `g` and almost
//! symmetric numerical semigroups with Frobenius number `F` and type
//! `F - 2g`, valid for `F >= 4g - 1`.
//!
//! The forward map sends `S` to `K_S(F - F(S))`, whose gaps are
//! `{1, …, F} \ { F - a : a a gap of S }`. The inverse is the star dual
//! `T ↦ T ∪ PF(T)`.

use crate::error::{domain, Error, Result};
use crate::ideals::star_dual;
use crate::semigroup::{NumericalSemigroup, PseudoFrobeniusSet, MAX_VALUE};

/// Whether a forward image falls inside the range where the map is a
/// bijection onto the almost symmetric semigroups of that type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contract {
    /// `F >= 4g - 1`.
    Bijection,
    /// `2 F(S) < F < 4g - 1`: the image is almost symmetric with the stated
    /// invariants, but other semigroups of the same `(F, t)` may be missed.
    ImageOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForwardImage {
    pub semigroup: NumericalSemigroup,
    pub contract: Contract,
}

fn check_forward(s: &NumericalSemigroup, frobenius: i64) -> Result<()> {
    if frobenius > MAX_VALUE {
        return Err(Error::OutOfRange(frobenius));
    }
    if frobenius < 1 || frobenius <= 2 * s.frobenius() {
        return domain(format!(
            "F = {frobenius} must be positive and exceed 2 F(S) = {}",
            2 * s.frobenius()
        ));
    }
    Ok(())
}

/// Forward map with its contract flag.
pub fn forward_image(s: &NumericalSemigroup, frobenius: i64) -> Result<ForwardImage> {
    check_forward(s, frobenius)?;
    let f = frobenius as usize;
    let mut removed = vec![false; f + 1];
    for &a in s.gaps() {
        removed[f - a as usize] = true;
    }
    let gaps = (1..=f).filter(|&x| !removed[x]).map(|x| x as i64).collect();
    let contract = if frobenius >= 4 * s.genus() as i64 - 1 {
        Contract::Bijection
    } else {
        Contract::ImageOnly
    };
    Ok(ForwardImage {
        semigroup: NumericalSemigroup::from_gaps_unchecked(gaps),
        contract,
    })
}

/// `S ↦ K_S(F - F(S))` as a numerical semigroup. Requires `F > 2 F(S)`.
pub fn forward(s: &NumericalSemigroup, frobenius: i64) -> Result<NumericalSemigroup> {
    forward_image(s, frobenius).map(|img| img.semigroup)
}

/// Pseudo-Frobenius numbers of `forward(S, F)` from the closed form
///
/// `{a ∈ S : 0 < a <= f} ∪ {f+1, …, F-f-1} ∪ {F - a : a ∈ S, 0 <= a <= f}`
///
/// with `f = F(S)`. The middle band starts at 1 when `S` is the full monoid.
pub fn image_pf(s: &NumericalSemigroup, frobenius: i64) -> Result<PseudoFrobeniusSet> {
    check_forward(s, frobenius)?;
    let f = s.frobenius();
    let low = s.members_up_to(f).filter(|&a| a > 0);
    let band = (f + 1).max(1)..=frobenius - f - 1;
    let high: Vec<i64> = s.members_up_to(f).map(|a| frobenius - a).collect();
    let elements: Vec<i64> = low.chain(band).chain(high.into_iter().rev()).collect();
    Ok(PseudoFrobeniusSet::from_sorted_unchecked(elements))
}

/// Checks `2t >= F - 1` and `F - t` even for the given invariants.
fn check_high_type(frobenius: i64, t: i64) -> Result<()> {
    if 2 * t < frobenius - 1 || (frobenius - t) % 2 != 0 {
        return domain(format!(
            "need t >= (F - 1) / 2 and F - t even, got F = {frobenius}, t = {t}"
        ));
    }
    Ok(())
}

/// The star dual of `T` read as a numerical semigroup; inverse of
/// [`forward`] on almost symmetric semigroups of high type.
pub fn inverse(t_semigroup: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    let frobenius = t_semigroup.frobenius();
    let t = t_semigroup.semigroup_type()? as i64;
    check_high_type(frobenius, t)?;
    if !t_semigroup.is_almost_symmetric()? {
        return domain(format!("{t_semigroup} is not almost symmetric"));
    }
    let dual = star_dual(t_semigroup)?;
    let s = dual.to_semigroup().map_err(|e| {
        Error::Internal(format!(
            "star dual of {t_semigroup} is not a semigroup: {e}"
        ))
    })?;
    if 2 * s.genus() as i64 != frobenius - t {
        return Err(Error::Internal(format!(
            "star dual of {t_semigroup} has genus {}, expected {}",
            s.genus(),
            (frobenius - t) / 2
        )));
    }
    Ok(s)
}

/// For `t >= (F - 1) / 2` and `F - t` even: `T` is almost symmetric iff
/// `T*` is a numerical semigroup of genus `(F - t) / 2`.
pub fn high_type_as_characterization(t_semigroup: &NumericalSemigroup) -> Result<bool> {
    let frobenius = t_semigroup.frobenius();
    let t = t_semigroup.semigroup_type()? as i64;
    check_high_type(frobenius, t)?;
    let dual = star_dual(t_semigroup)?;
    Ok(match dual.to_semigroup() {
        Ok(s) => 2 * s.genus() as i64 == frobenius - t,
        Err(_) => false,
    })
}

/// Genus-`g` preimage from the PF set of its image: gaps `{1, …, 2g-1} \ PF`.
pub fn recover_from_pf(pf: &PseudoFrobeniusSet, genus: usize) -> Result<NumericalSemigroup> {
    let top = 2 * genus as i64 - 1;
    let gaps: Vec<i64> = (1..=top).filter(|&x| !pf.contains(x)).collect();
    if gaps.len() != genus {
        return Err(Error::InvalidPseudoFrobenius(format!(
            "{pf} leaves {} gaps below {}, expected {genus}",
            gaps.len(),
            top + 1
        )));
    }
    NumericalSemigroup::from_gaps(gaps)
        .map_err(|e| Error::InvalidPseudoFrobenius(format!("{pf}: {e}")))
}
