//! Numerical semigroups stored by their gaps.
//!
//! A [`NumericalSemigroup`] keeps its gap list sorted and mirrors it in a
//! membership bit table over `[0, F]`. Every integer above the Frobenius
//! number is a member, so queries past `F` never touch the table.
//!
//! The semigroup of all nonnegative integers has no gaps and Frobenius
//! number `-1`. Its pseudo-Frobenius set is left undefined: asking for it
//! is an error rather than a sentinel.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::BitTable;
use crate::error::{Error, Result};

/// Largest Frobenius number or generator accepted anywhere in the crate.
pub const MAX_VALUE: i64 = (1 << 31) - 2;

fn check_sorted_positive(values: &[i64], what: &str) -> Result<()> {
    for (idx, &v) in values.iter().enumerate() {
        if v <= 0 {
            return Err(Error::Malformed(format!(
                "{what} contains nonpositive entry {v}"
            )));
        }
        if v > MAX_VALUE {
            return Err(Error::OutOfRange(v));
        }
        if idx > 0 {
            match values[idx - 1].cmp(&v) {
                Ordering::Less => {}
                Ordering::Equal => {
                    return Err(Error::Malformed(format!(
                        "{what} contains duplicate entry {v}"
                    )))
                }
                Ordering::Greater => {
                    return Err(Error::Malformed(format!("{what} is not sorted ascending")))
                }
            }
        }
    }
    Ok(())
}

/// Checks that `gaps` is closed in the gapset sense: whenever `a + b` is in
/// the set for positive `a`, `b`, one of `a`, `b` is in it too.
///
/// On failure the witness is the smallest offending sum, split with the
/// smallest possible `a`.
pub fn validate_gapset(gaps: &[i64]) -> Result<()> {
    check_sorted_positive(gaps, "gap list")?;
    let Some(&max) = gaps.last() else {
        return Ok(());
    };
    let mut is_gap = BitTable::zeros(max as usize + 1);
    for &x in gaps {
        is_gap.set(x as usize);
    }
    for &x in gaps {
        let x = x as usize;
        for a in 1..=x / 2 {
            if !is_gap.get(a) && !is_gap.get(x - a) {
                return Err(Error::NotAGapset {
                    a: a as i64,
                    b: (x - a) as i64,
                });
            }
        }
    }
    Ok(())
}

/// A validated gapset: a finite set of positive integers whose complement
/// in the nonnegative integers is a numerical semigroup.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Gapset(Vec<i64>);

impl Gapset {
    pub fn new(gaps: Vec<i64>) -> Result<Self> {
        validate_gapset(&gaps)?;
        Ok(Gapset(gaps))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.0.binary_search(&x).is_ok()
    }
}

/// Sorted set of pseudo-Frobenius numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PseudoFrobeniusSet(Vec<i64>);

impl PseudoFrobeniusSet {
    /// Wraps a sorted list of distinct positive integers. Whether the list is
    /// the PF set of anything is not checked here.
    pub fn new(elements: Vec<i64>) -> Result<Self> {
        check_sorted_positive(&elements, "pseudo-Frobenius list")?;
        Ok(PseudoFrobeniusSet(elements))
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<i64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        PseudoFrobeniusSet(elements)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn largest(&self) -> Option<i64> {
        self.0.last().copied()
    }
}

/// Frobenius number, genus, multiplicity, type and depth of one semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSummary {
    pub frobenius: i64,
    pub genus: usize,
    pub multiplicity: i64,
    /// Number of pseudo-Frobenius numbers; 0 for the full monoid, where the
    /// PF set is undefined.
    #[serde(rename = "type")]
    pub type_: usize,
    pub depth: i64,
}

/// A cofinite additive submonoid of the nonnegative integers.
///
/// Equality, hashing and ordering use the gap list only; collections of
/// semigroups sort lexicographically by gaps.
#[derive(Clone)]
pub struct NumericalSemigroup {
    gaps: Gapset,
    frobenius: i64,
    /// Bit `x` set iff `x` is a member, for `0 <= x <= frobenius`.
    members: BitTable,
}

impl NumericalSemigroup {
    /// The semigroup of all nonnegative integers.
    pub fn natural() -> Self {
        NumericalSemigroup {
            gaps: Gapset::default(),
            frobenius: -1,
            members: BitTable::zeros(0),
        }
    }

    pub fn from_gaps(gaps: Vec<i64>) -> Result<Self> {
        Ok(Self::from_gapset(Gapset::new(gaps)?))
    }

    pub fn from_gapset(gaps: Gapset) -> Self {
        let frobenius = gaps.0.last().copied().unwrap_or(-1);
        let mut members = BitTable::ones((frobenius + 1) as usize);
        for &x in &gaps.0 {
            members.clear(x as usize);
        }
        NumericalSemigroup {
            gaps,
            frobenius,
            members,
        }
    }

    /// Builds from a gap list already known to be a gapset. Validation runs
    /// in debug builds only.
    pub(crate) fn from_gaps_unchecked(gaps: Vec<i64>) -> Self {
        debug_assert_eq!(validate_gapset(&gaps), Ok(()));
        Self::from_gapset(Gapset(gaps))
    }

    /// Smallest numerical semigroup containing every generator.
    ///
    /// The sieve runs until `m` consecutive members appear, `m` being the
    /// smallest generator; the integer before that run is the Frobenius
    /// number.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Malformed("empty generator list".into()));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        check_sorted_positive(&sorted, "generator list")?;
        let d = sorted.iter().fold(0, |acc, &x| gcd(acc, x));
        if d != 1 {
            return Err(Error::NotCofinite(d));
        }
        let m = sorted[0] as usize;
        if m == 1 {
            return Ok(Self::natural());
        }
        let mut member: Vec<bool> = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < m {
            n += 1;
            if n as i64 > MAX_VALUE + m as i64 {
                return Err(Error::OutOfRange(n as i64 - m as i64));
            }
            let is_member = sorted
                .iter()
                .take_while(|&&g| g as usize <= n)
                .any(|&g| member[n - g as usize]);
            member.push(is_member);
            run = if is_member { run + 1 } else { 0 };
        }
        let frobenius = n - m;
        let gaps = (1..=frobenius)
            .filter(|&x| !member[x])
            .map(|x| x as i64)
            .collect();
        Ok(Self::from_gaps_unchecked(gaps))
    }

    pub fn gaps(&self) -> &[i64] {
        self.gaps.as_slice()
    }

    pub fn gapset(&self) -> &Gapset {
        &self.gaps
    }

    /// Largest gap, or `-1` for the full monoid.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x > self.frobenius {
            true
        } else {
            self.members.get(x as usize)
        }
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> i64 {
        (1..)
            .find(|&x| self.contains(x))
            .expect("cofinite sets have a positive member")
    }

    /// Members in `[0, bound]`, ascending.
    pub fn members_up_to(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..=bound).filter(move |&x| self.contains(x))
    }

    /// Members not exceeding the Frobenius number.
    pub fn small_elements(&self) -> Vec<i64> {
        self.members.iter_ones().map(|x| x as i64).collect()
    }

    /// Gaps `x` with `x + s` a member for every nonzero member `s`.
    pub fn pseudo_frobenius(&self) -> Result<PseudoFrobeniusSet> {
        if self.gaps.is_empty() {
            return Err(Error::EmptyPseudoFrobenius);
        }
        let f = self.frobenius;
        let nonzero: Vec<i64> = self.members.iter_ones().skip(1).map(|s| s as i64).collect();
        let pf = self
            .gaps()
            .iter()
            .copied()
            .filter(|&x| {
                nonzero
                    .iter()
                    .take_while(|&&s| x + s <= f)
                    .all(|&s| self.contains(x + s))
            })
            .collect();
        Ok(PseudoFrobeniusSet::from_sorted_unchecked(pf))
    }

    /// The type: number of pseudo-Frobenius numbers.
    pub fn semigroup_type(&self) -> Result<usize> {
        Ok(self.pseudo_frobenius()?.len())
    }

    /// Smallest `q` with `q * m >= F + 1`; 0 for the full monoid.
    pub fn depth(&self) -> i64 {
        let m = self.multiplicity();
        (self.frobenius + 1 + m - 1).div_euclid(m)
    }

    pub fn invariants(&self) -> InvariantSummary {
        InvariantSummary {
            frobenius: self.frobenius,
            genus: self.genus(),
            multiplicity: self.multiplicity(),
            type_: self.pseudo_frobenius().map(|pf| pf.len()).unwrap_or(0),
            depth: self.depth(),
        }
    }

    /// `2g = F + t`.
    pub fn is_almost_symmetric(&self) -> Result<bool> {
        let t = self.semigroup_type()? as i64;
        Ok(2 * self.genus() as i64 == self.frobenius + t)
    }

    /// Gap-by-gap check: every gap `a` has `F - a` a nonzero member or is
    /// itself pseudo-Frobenius.
    pub fn is_almost_symmetric_definitional(&self) -> Result<bool> {
        let pf = self.pseudo_frobenius()?;
        let f = self.frobenius;
        Ok(self
            .gaps()
            .iter()
            .all(|&a| (f - a != 0 && self.contains(f - a)) || pf.contains(a)))
    }

    /// Members that are not a sum of two nonzero members.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let m = self.multiplicity();
        // every minimal generator lies in [m, F + m]
        let upper = (self.frobenius + m).max(m);
        let nonzero: Vec<i64> = self.members_up_to(upper).skip(1).collect();
        nonzero
            .iter()
            .copied()
            .filter(|&s| {
                !nonzero
                    .iter()
                    .take_while(|&&a| 2 * a <= s)
                    .any(|&a| self.contains(s - a))
            })
            .collect()
    }

    /// The JSON-facing record of this semigroup.
    pub fn record(&self) -> SemigroupRecord {
        let inv = self.invariants();
        SemigroupRecord {
            frobenius: inv.frobenius,
            genus: inv.genus,
            multiplicity: inv.multiplicity,
            type_: inv.type_,
            depth: inv.depth,
            gaps: self.gaps().to_vec(),
            pf: self
                .pseudo_frobenius()
                .map(|pf| pf.as_slice().to_vec())
                .unwrap_or_default(),
            min_gens: self.minimal_generators(),
        }
    }
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gaps == other.gaps
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.gaps.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gaps.cmp(&other.gaps)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup({self})")
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, values: &[i64]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Shared textual form `gaps:1,2,4`.
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("gaps:")?;
        write_list(f, self.gaps())
    }
}

impl fmt::Display for PseudoFrobeniusSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        write_list(f, &self.0)?;
        f.write_str("}")
    }
}

fn parse_list(body: &str) -> Result<Vec<i64>> {
    let body = body.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
        })
        .collect()
}

/// Accepts `gaps:1,2,4` or `gens:3,5,7`. Gap lists are sorted before
/// validation; duplicates are still rejected.
impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix("gaps:") {
            let mut gaps = parse_list(body)?;
            gaps.sort_unstable();
            NumericalSemigroup::from_gaps(gaps)
        } else if let Some(body) = s.strip_prefix("gens:") {
            NumericalSemigroup::from_generators(&parse_list(body)?)
        } else {
            Err(Error::Parse(format!(
                "expected `gaps:<list>` or `gens:<list>`, got {s:?}"
            )))
        }
    }
}

/// JSON schema shared by every command that prints a semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub frobenius: i64,
    pub genus: usize,
    pub multiplicity: i64,
    #[serde(rename = "type")]
    pub type_: usize,
    pub depth: i64,
    pub gaps: Vec<i64>,
    pub pf: Vec<i64>,
    pub min_gens: Vec<i64>,
}

impl SemigroupRecord {
    /// Rebuilds the semigroup from its gap list and checks every stored
    /// invariant against it.
    pub fn to_semigroup(&self) -> Result<NumericalSemigroup> {
        let s = NumericalSemigroup::from_gaps(self.gaps.clone())?;
        if s.record() != *self {
            return Err(Error::Parse(format!(
                "record fields disagree with gaps {:?}",
                self.gaps
            )));
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gaps: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_gaps(gaps.to_vec()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(validate_gapset(&[1, 2, 3, 4, 5, 7]), Ok(()));
        assert_eq!(validate_gapset(&[]), Ok(()));
        assert_eq!(validate_gapset(&[2]), Err(Error::NotAGapset { a: 1, b: 1 }));
    }

    #[test]
    fn validate_rejects_malformed() {
        assert!(matches!(validate_gapset(&[0, 1]), Err(Error::Malformed(_))));
        assert!(matches!(validate_gapset(&[-3]), Err(Error::Malformed(_))));
        assert!(matches!(validate_gapset(&[1, 1]), Err(Error::Malformed(_))));
        assert!(matches!(validate_gapset(&[2, 1]), Err(Error::Malformed(_))));
        assert_eq!(
            validate_gapset(&[1, MAX_VALUE + 1]),
            Err(Error::OutOfRange(MAX_VALUE + 1))
        );
    }

    #[test]
    fn from_gaps_examples() {
        let s = sg(&[1]);
        assert_eq!(s.frobenius(), 1);
        assert_eq!(s.minimal_generators(), vec![2, 3]);

        let n = sg(&[]);
        assert_eq!(n, NumericalSemigroup::natural());
        assert_eq!(n.frobenius(), -1);

        let s = sg(&[1, 2, 3, 4, 5, 7]);
        assert_eq!(
            s.members_up_to(10).collect::<Vec<_>>(),
            vec![0, 6, 8, 9, 10]
        );
        assert_eq!(
            NumericalSemigroup::from_gaps(vec![1, 3, 4]),
            Err(Error::NotAGapset { a: 2, b: 2 })
        );
    }

    #[test]
    fn from_generators_examples() {
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s.gaps(), &[1]);
        let s = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!(s.gaps(), &[] as &[i64]);
        let s = NumericalSemigroup::from_generators(&[4, 5, 11]).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 3, 6, 7]);
        // Frobenius well above the product of the two smallest generators
        let s = NumericalSemigroup::from_generators(&[4, 6, 101]).unwrap();
        assert_eq!(s.frobenius(), 103);
    }

    #[test]
    fn from_generators_errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NotCofinite(2))
        );
        assert!(matches!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[0, 1]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn invariant_examples() {
        let cases: [(&[i64], InvariantSummary); 3] = [
            (
                &[1, 2, 3, 6, 7],
                InvariantSummary {
                    frobenius: 7,
                    genus: 5,
                    multiplicity: 4,
                    type_: 2,
                    depth: 2,
                },
            ),
            (
                &[1],
                InvariantSummary {
                    frobenius: 1,
                    genus: 1,
                    multiplicity: 2,
                    type_: 1,
                    depth: 1,
                },
            ),
            (
                &[1, 2, 3, 4, 5, 7],
                InvariantSummary {
                    frobenius: 7,
                    genus: 6,
                    multiplicity: 6,
                    type_: 5,
                    depth: 2,
                },
            ),
        ];
        for (gaps, expected) in cases {
            assert_eq!(sg(gaps).invariants(), expected, "gaps {gaps:?}");
        }
        let n = NumericalSemigroup::natural().invariants();
        assert_eq!(
            (n.frobenius, n.genus, n.multiplicity, n.type_, n.depth),
            (-1, 0, 1, 0, 0)
        );
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(sg(&[1]).pseudo_frobenius().unwrap().as_slice(), &[1]);
        assert_eq!(
            sg(&[1, 2, 3, 4, 5, 7])
                .pseudo_frobenius()
                .unwrap()
                .as_slice(),
            &[2, 3, 4, 5, 7]
        );
        assert_eq!(
            sg(&[1, 2, 3, 6, 7]).pseudo_frobenius().unwrap().as_slice(),
            &[6, 7]
        );
        assert_eq!(
            NumericalSemigroup::natural().pseudo_frobenius(),
            Err(Error::EmptyPseudoFrobenius)
        );
    }

    #[test]
    fn almost_symmetric_examples() {
        for (gaps, expected) in [
            (&[1, 2][..], true),
            (&[1][..], true),
            (&[1, 2, 3, 6, 7][..], false),
        ] {
            let s = sg(gaps);
            assert_eq!(s.is_almost_symmetric().unwrap(), expected);
            assert_eq!(s.is_almost_symmetric_definitional().unwrap(), expected);
        }
        assert!(NumericalSemigroup::natural().is_almost_symmetric().is_err());
    }

    #[test]
    fn minimal_generator_examples() {
        assert_eq!(sg(&[1]).minimal_generators(), vec![2, 3]);
        assert_eq!(sg(&[]).minimal_generators(), vec![1]);
        assert_eq!(sg(&[1, 2, 3, 6, 7]).minimal_generators(), vec![4, 5, 11]);
    }

    #[test]
    fn text_format() {
        let s: NumericalSemigroup = "gens:4,5,11".parse().unwrap();
        assert_eq!(s.to_string(), "gaps:1,2,3,6,7");
        let t: NumericalSemigroup = "gaps: 7,6,3,2,1".parse().unwrap();
        assert_eq!(s, t);
        assert_eq!(
            "gaps:".parse::<NumericalSemigroup>().unwrap(),
            NumericalSemigroup::natural()
        );
        assert!("1,2".parse::<NumericalSemigroup>().is_err());
        assert!("gaps:1,x".parse::<NumericalSemigroup>().is_err());
    }

    #[test]
    fn json_record() {
        let s = sg(&[1, 2, 3, 6, 7]);
        let json = serde_json::to_value(s.record()).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "frobenius": 7, "genus": 5, "multiplicity": 4, "type": 2, "depth": 2,
                "gaps": [1, 2, 3, 6, 7], "pf": [6, 7], "min_gens": [4, 5, 11]
            })
        );
        let back: SemigroupRecord = serde_json::from_value(json).unwrap();
        assert_eq!(back.to_semigroup().unwrap(), s);
    }
}
