//! Relative ideals of a numerical semigroup, the shifted canonical ideal
//! `K_S(s) = { F(S) + s - z : z not in S }` and the star dual `S* = S ∪ PF(S)`.

use std::fmt;

use crate::error::{domain, Result};
use crate::semigroup::NumericalSemigroup;

/// A cofinite, bounded-below subset `I` of the integers with `I + S ⊆ I`
/// and `a + I ⊆ S` for some member `a`.
///
/// Stored in normalized form: `bound` is the largest integer not in `I`
/// and `small_elements` lists the members of `I` below it. Two ideals are
/// equal when their normalized forms are.
#[derive(Clone)]
pub struct RelativeIdeal {
    owner: NumericalSemigroup,
    small_elements: Vec<i64>,
    bound: i64,
}

/// Normalizes `elements ∪ (threshold, ∞)` into `(small_elements, bound)`.
fn normalize(elements: &[i64], threshold: i64) -> (Vec<i64>, i64) {
    let mut sorted: Vec<i64> = elements.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut bound = threshold;
    while sorted.binary_search(&bound).is_ok() {
        bound -= 1;
    }
    sorted.retain(|&x| x < bound);
    (sorted, bound)
}

impl RelativeIdeal {
    /// The set `elements ∪ (threshold, ∞)`, checked to be a relative ideal
    /// of `owner`.
    pub fn new(owner: NumericalSemigroup, elements: &[i64], threshold: i64) -> Result<Self> {
        if !is_relative_ideal(elements, threshold, &owner) {
            return domain("candidate set is not a relative ideal of its owner");
        }
        Ok(Self::normalized(owner, elements, threshold))
    }

    fn normalized(owner: NumericalSemigroup, elements: &[i64], threshold: i64) -> Self {
        let (small_elements, bound) = normalize(elements, threshold);
        RelativeIdeal {
            owner,
            small_elements,
            bound,
        }
    }

    pub fn owner(&self) -> &NumericalSemigroup {
        &self.owner
    }

    /// Members of the ideal below [`bound`](Self::bound).
    pub fn small_elements(&self) -> &[i64] {
        &self.small_elements
    }

    /// Largest integer outside the ideal.
    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn min_element(&self) -> i64 {
        self.small_elements
            .first()
            .copied()
            .unwrap_or(self.bound + 1)
    }

    pub fn contains(&self, x: i64) -> bool {
        x > self.bound || self.small_elements.binary_search(&x).is_ok()
    }

    /// Nonnegative integers outside the ideal, ascending.
    pub fn complement_in_naturals(&self) -> Vec<i64> {
        (0..=self.bound).filter(|&x| !self.contains(x)).collect()
    }

    /// Reads the ideal as a subset of the nonnegative integers and returns it
    /// as a numerical semigroup when it is one.
    pub fn to_semigroup(&self) -> Result<NumericalSemigroup> {
        if self.min_element() != 0 {
            return domain(format!(
                "ideal has minimum {} and is not a submonoid of the naturals",
                self.min_element()
            ));
        }
        NumericalSemigroup::from_gaps(self.complement_in_naturals())
    }
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.bound == other.bound && self.small_elements == other.small_elements
    }
}

impl Eq for RelativeIdeal {}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RelativeIdeal")
            .field("owner", &self.owner.to_string())
            .field("small_elements", &self.small_elements)
            .field("bound", &self.bound)
            .finish()
    }
}

/// `K_S(s) = { F(S) + s - z : z ∈ ℤ \ S }`.
///
/// Negative `z` contribute every integer above `F(S) + s`, and `z = 0` is a
/// member, so the bound is exactly `F(S) + s`.
pub fn shifted_canonical(s_semigroup: &NumericalSemigroup, shift: i64) -> RelativeIdeal {
    let top = s_semigroup.frobenius() + shift;
    let small_elements: Vec<i64> = s_semigroup.gaps().iter().rev().map(|&a| top - a).collect();
    RelativeIdeal {
        owner: s_semigroup.clone(),
        small_elements,
        bound: top,
    }
}

/// `{1, …, F} \ { F - a : a a gap of S }` for `F > F(S)`: the positive
/// integers outside `K_S(F - F(S))`. The ideal itself never contains 0, so
/// the semigroup it names is `K_S(F - F(S)) ∪ {0}`.
///
/// The result is a gapset only when `F > 2 F(S)`, so it is returned as a
/// plain sorted list.
pub fn gaps_of_shifted_canonical(
    s_semigroup: &NumericalSemigroup,
    frobenius: i64,
) -> Result<Vec<i64>> {
    if frobenius <= s_semigroup.frobenius() {
        return domain(format!(
            "F = {frobenius} must exceed F(S) = {}",
            s_semigroup.frobenius()
        ));
    }
    let removed: Vec<i64> = s_semigroup
        .gaps()
        .iter()
        .rev()
        .map(|&a| frobenius - a)
        .collect();
    Ok((1..=frobenius)
        .filter(|x| removed.binary_search(x).is_err())
        .collect())
}

/// `S* = S ∪ PF(S)`, the dual of `S \ {0}` with respect to `S`.
pub fn star_dual(s_semigroup: &NumericalSemigroup) -> Result<RelativeIdeal> {
    let pf = s_semigroup.pseudo_frobenius()?;
    let mut elements = s_semigroup.small_elements();
    elements.extend_from_slice(pf.as_slice());
    let dual = RelativeIdeal::normalized(s_semigroup.clone(), &elements, s_semigroup.frobenius());
    debug_assert_eq!(dual, dual_of_maximal_ideal(s_semigroup));
    Ok(dual)
}

/// `{ z ∈ ℤ : z + (S \ {0}) ⊆ S }`, computed directly.
pub fn dual_of_maximal_ideal(s_semigroup: &NumericalSemigroup) -> RelativeIdeal {
    let f = s_semigroup.frobenius();
    let m = s_semigroup.multiplicity();
    // for genus >= 1 nothing below -m qualifies; the full monoid also
    // admits exactly -1
    let lo = -(f + m).max(1);
    let nonzero: Vec<i64> = s_semigroup.members_up_to(f - lo).skip(1).collect();
    let elements: Vec<i64> = (lo..=f)
        .filter(|&z| {
            nonzero
                .iter()
                .take_while(|&&s| z + s <= f)
                .all(|&s| s_semigroup.contains(z + s))
        })
        .collect();
    RelativeIdeal::normalized(s_semigroup.clone(), &elements, f)
}

/// Checks both defining conditions for `elements ∪ (threshold, ∞)`.
///
/// Condition two is tested with the member `a = F(S) + 1 + max(0, -min)`,
/// which pushes the whole candidate past the Frobenius number.
pub fn is_relative_ideal(
    elements: &[i64],
    threshold: i64,
    s_semigroup: &NumericalSemigroup,
) -> bool {
    let (small, bound) = normalize(elements, threshold);
    let contains = |x: i64| x > bound || small.binary_search(&x).is_ok();

    let closed = small.iter().all(|&x| {
        s_semigroup
            .members_up_to(bound - x)
            .all(|s| contains(x + s))
    });
    if !closed {
        return false;
    }

    let min = small.first().copied().unwrap_or(bound + 1);
    let a = s_semigroup.frobenius() + 1 + (-min).max(0);
    debug_assert!(s_semigroup.contains(a));
    small
        .iter()
        .chain(std::iter::once(&(bound + 1)))
        .all(|&x| s_semigroup.contains(a + x))
}

impl From<RelativeIdeal> for (Vec<i64>, i64) {
    fn from(ideal: RelativeIdeal) -> Self {
        (ideal.small_elements, ideal.bound)
    }
}
