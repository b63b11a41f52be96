//! Numerical sets and numerical semigroups.
//!
//! A numerical set is a subset of ℕ that contains 0 and has finite
//! complement. It is stored as its sorted gap list together with a bitset of
//! the members in `[0, F]`, where `F` is the Frobenius number (largest gap).
//! The set ℕ itself has no gaps; its Frobenius number is reported as `-1`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};

/// A cofinite subset of ℕ containing 0.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "GapsRepr", into = "GapsRepr")]
pub struct NumericalSet {
    gaps: Vec<u32>,
    members: FixedBitSet,
}

#[derive(Serialize, Deserialize)]
struct GapsRepr {
    gaps: Vec<u32>,
}

impl TryFrom<GapsRepr> for NumericalSet {
    type Error = Error;

    fn try_from(repr: GapsRepr) -> Result<Self> {
        NumericalSet::from_gaps(repr.gaps)
    }
}

impl From<NumericalSet> for GapsRepr {
    fn from(set: NumericalSet) -> Self {
        GapsRepr { gaps: set.gaps }
    }
}

impl NumericalSet {
    /// The set ℕ.
    pub fn naturals() -> Self {
        NumericalSet { gaps: Vec::new(), members: FixedBitSet::new() }
    }

    /// Builds a numerical set from its gaps. Order and duplicates are ignored;
    /// 0 can never be a gap.
    pub fn from_gaps<I: IntoIterator<Item = u32>>(gaps: I) -> Result<Self> {
        let mut gaps: Vec<u32> = gaps.into_iter().collect();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return Err(Error::Parse("0 belongs to every numerical set".into()));
        }
        Ok(Self::from_sorted_gaps(gaps))
    }

    pub(crate) fn from_sorted_gaps(gaps: Vec<u32>) -> Self {
        let members = match gaps.last() {
            None => FixedBitSet::new(),
            Some(&f) => {
                let mut bs = FixedBitSet::with_capacity(f as usize + 1);
                bs.insert_range(..);
                for &g in &gaps {
                    bs.set(g as usize, false);
                }
                bs
            }
        };
        NumericalSet { gaps, members }
    }

    /// Decodes a `u64` member mask of a set with Frobenius number `f`
    /// (see [`crate::bits`]).
    pub fn from_mask(mask: u64, f: u32) -> Self {
        let gaps = (1..=f).filter(|&n| !bits::has(mask, f, n)).collect();
        Self::from_sorted_gaps(gaps)
    }

    /// The member mask over `[0, F]`, when `F` fits in a word.
    /// ℕ is encoded with `f = 0` and mask `1`.
    pub fn mask(&self) -> Option<(u64, u32)> {
        match self.frobenius() {
            None => Some((1, 0)),
            Some(f) if f <= bits::MAX_MASK_FROBENIUS => {
                let m = self.members.ones().fold(0u64, |m, n| m | (1 << n));
                Some((m, f))
            }
            Some(_) => None,
        }
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// Largest gap, or `None` for ℕ.
    pub fn frobenius(&self) -> Option<u32> {
        self.gaps.last().copied()
    }

    /// Largest gap, with `-1` for ℕ.
    pub fn frobenius_number(&self) -> i64 {
        self.frobenius().map_or(-1, i64::from)
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_naturals(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn contains(&self, n: u32) -> bool {
        match self.frobenius() {
            None => true,
            Some(f) if n > f => true,
            Some(_) => self.members.contains(n as usize),
        }
    }

    /// Membership test for an arbitrary integer; negative input is rejected.
    pub fn contains_int(&self, n: i64) -> Result<bool> {
        if n < 0 {
            return Err(Error::Negative(n));
        }
        Ok(u32::try_from(n).map_or(true, |n| self.contains(n)))
    }

    /// Members in `[0, F]`, ascending. Empty iteration never happens since 0
    /// is always present, except for ℕ where nothing is below `F = -1`.
    pub fn small_elements(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.ones().map(|n| n as u32)
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> u32 {
        self.small_elements()
            .find(|&n| n > 0)
            .unwrap_or_else(|| self.frobenius().map_or(1, |f| f + 1))
    }

    /// Whether `n + T ⊆ T`. Only members up to `F` need checking.
    pub fn is_stabilized_by(&self, n: u32) -> bool {
        self.small_elements().all(|t| self.contains(n + t))
    }

    /// `A(T) = {n ∈ ℕ : n + T ⊆ T}`.
    pub fn atom_monoid(&self) -> NumericalSemigroup {
        let f = match self.frobenius() {
            None => return NumericalSemigroup::naturals(),
            Some(f) => f,
        };
        let gaps = (1..=f).filter(|&n| !self.is_stabilized_by(n)).collect();
        NumericalSemigroup(NumericalSet::from_sorted_gaps(gaps))
    }

    /// `T* = {F - u : u ∈ ℤ ∖ T}`; ℕ is its own dual.
    pub fn dual(&self) -> NumericalSet {
        let f = match self.frobenius() {
            None => return NumericalSet::naturals(),
            Some(f) => f,
        };
        let mut gaps: Vec<u32> = self.small_elements().map(|t| f - t).collect();
        gaps.reverse();
        NumericalSet::from_sorted_gaps(gaps)
    }

    /// For every `i ∈ [0, F]` exactly one of `i`, `F - i` is present.
    pub fn is_symmetric(&self) -> bool {
        match self.frobenius() {
            None => true,
            Some(f) => (0..=f).all(|i| self.contains(i) != self.contains(f - i)),
        }
    }

    /// A pair `(s, t)` of members with `s <= t` and `s + t` a gap, if any.
    pub fn closure_violation(&self) -> Option<(u32, u32)> {
        let small: Vec<u32> = self.small_elements().filter(|&n| n > 0).collect();
        for (i, &s) in small.iter().enumerate() {
            for &t in &small[i..] {
                if !self.contains(s + t) {
                    return Some((s, t));
                }
            }
        }
        None
    }

    pub fn is_semigroup(&self) -> bool {
        self.closure_violation().is_none()
    }

    /// Canonical text with an ASCII arrow, e.g. `0,1,4,5,7,->`.
    pub fn to_ascii_string(&self) -> String {
        self.to_string().replace('→', "->")
    }
}

impl PartialEq for NumericalSet {
    fn eq(&self, other: &Self) -> bool {
        self.gaps == other.gaps
    }
}

impl Eq for NumericalSet {}

impl Hash for NumericalSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.gaps.hash(state);
    }
}

/// Lexicographic order of gap lists.
impl Ord for NumericalSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gaps.cmp(&other.gaps)
    }
}

impl PartialOrd for NumericalSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Members up to `F + 1` followed by an arrow: `0,1,4,5,7,→`.
impl fmt::Display for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.frobenius().map_or(0, |fr| fr + 1);
        for n in (0..=last).filter(|&n| self.contains(n)) {
            write!(f, "{n},")?;
        }
        f.write_str("→")
    }
}

/// Accepts the canonical form with `→` or `->`, e.g. `0,3,6,->`. The listed
/// elements together with every integer above the last one form the set.
impl FromStr for NumericalSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let tokens: Vec<&str> = s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
        let (arrow, nums) = tokens
            .split_last()
            .ok_or_else(|| Error::Parse("empty numerical set".into()))?;
        if *arrow != "→" && *arrow != "->" {
            return Err(Error::Parse(format!("expected trailing `→` or `->`, found `{arrow}`")));
        }
        let mut elems = Vec::with_capacity(nums.len());
        for tok in nums {
            let n: i64 = tok.parse().map_err(|_| Error::Parse(format!("bad element `{tok}`")))?;
            if n < 0 {
                return Err(Error::Negative(n));
            }
            elems.push(u32::try_from(n).map_err(|_| Error::Parse(format!("element {n} too large")))?);
        }
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(Error::Parse("a numerical set must contain 0".into()));
        }
        let last = *elems.last().unwrap();
        let gaps = (1..last).filter(|n| elems.binary_search(n).is_err()).collect();
        Ok(NumericalSet::from_sorted_gaps(gaps))
    }
}

/// A numerical set closed under addition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NumericalSemigroup(NumericalSet);

impl NumericalSemigroup {
    pub fn naturals() -> Self {
        NumericalSemigroup(NumericalSet::naturals())
    }

    pub(crate) fn new_unchecked(set: NumericalSet) -> Self {
        debug_assert!(set.is_semigroup(), "{set} is not closed");
        NumericalSemigroup(set)
    }

    /// `⟨n₁, …, n_t⟩`: all ℕ-combinations of the generators.
    ///
    /// Membership is decided by a reachability sieve over `[0, m²]`, `m` the
    /// largest generator, which covers the Frobenius number whenever the
    /// generators are coprime.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        let gens: Vec<u32> = gens.iter().copied().filter(|&g| g > 0).collect();
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&u64::from(x)));
        if g != 1 {
            return Err(Error::InfiniteComplement { gcd: g });
        }
        let max = *gens.iter().max().unwrap() as usize;
        let bound = max * max;
        let mut reach = vec![false; bound + 1];
        reach[0] = true;
        for n in 1..=bound {
            reach[n] = gens.iter().any(|&g| (g as usize) <= n && reach[n - g as usize]);
        }
        let gaps = (1..=bound).filter(|&n| !reach[n]).map(|n| n as u32).collect();
        Ok(NumericalSemigroup(NumericalSet::from_sorted_gaps(gaps)))
    }

    /// The semigroup with gaps `{1, …, n}`, i.e. `{0, n+1, n+2, …}`.
    pub fn ordinary(n: u32) -> Self {
        NumericalSemigroup(NumericalSet::from_sorted_gaps((1..=n).collect()))
    }

    pub fn as_set(&self) -> &NumericalSet {
        &self.0
    }

    pub fn into_set(self) -> NumericalSet {
        self.0
    }

    /// `M(S)`: the `n ∈ [0, F]` such that neither `n` nor `F - n` is in `S`.
    pub fn missing_pairs(&self) -> Vec<u32> {
        match self.frobenius() {
            None => Vec::new(),
            Some(f) => self
                .gaps()
                .iter()
                .copied()
                .filter(|&n| !self.contains(f - n))
                .collect(),
        }
    }

    /// `F` even and `M(S) = {F/2}`.
    pub fn is_pseudosymmetric(&self) -> bool {
        match self.frobenius() {
            Some(f) if f % 2 == 0 => self.missing_pairs() == [f / 2],
            _ => false,
        }
    }

    /// Positive members that are not a sum of two positive members.
    pub fn minimal_generators(&self) -> Vec<u32> {
        let upper = self.frobenius().map_or(0, |f| f + 1) + self.multiplicity();
        (1..=upper)
            .filter(|&s| self.contains(s))
            .filter(|&s| !(1..=s / 2).any(|x| self.contains(x) && self.contains(s - x)))
            .collect()
    }

    /// Minimal generators larger than the Frobenius number.
    pub fn effective_generators(&self) -> Vec<u32> {
        let f = self.frobenius_number();
        self.minimal_generators().into_iter().filter(|&g| i64::from(g) > f).collect()
    }

    /// `S ∖ {g}` for a minimal generator `g`, which is again a semigroup.
    pub fn remove_generator(&self, g: u32) -> Result<Self> {
        if !self.minimal_generators().contains(&g) {
            return Err(Error::OutOfRange(format!("{g} is not a minimal generator of {self}")));
        }
        let mut gaps = self.gaps().to_vec();
        let pos = gaps.partition_point(|&x| x < g);
        gaps.insert(pos, g);
        Ok(NumericalSemigroup(NumericalSet::from_sorted_gaps(gaps)))
    }
}

impl TryFrom<NumericalSet> for NumericalSemigroup {
    type Error = Error;

    fn try_from(set: NumericalSet) -> Result<Self> {
        match set.closure_violation() {
            Some((a, b)) => Err(Error::NotClosed { a, b, sum: a + b }),
            None => Ok(NumericalSemigroup(set)),
        }
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let set = NumericalSet::deserialize(d)?;
        NumericalSemigroup::try_from(set).map_err(serde::de::Error::custom)
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NumericalSemigroup::try_from(s.parse::<NumericalSet>()?)
    }
}

impl Deref for NumericalSemigroup {
    type Target = NumericalSet;

    fn deref(&self) -> &NumericalSet {
        &self.0
    }
}

impl AsRef<NumericalSet> for NumericalSemigroup {
    fn as_ref(&self) -> &NumericalSet {
        &self.0
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        let gens = self.minimal_generators();
        for (i, g) in gens.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

/// Every numerical set with Frobenius number exactly `f`, in increasing
/// order of the member mask. There are `2^(f-1)` of them for `f >= 1`.
pub fn sets_with_frobenius(f: u32) -> impl Iterator<Item = NumericalSet> {
    assert!((1..=bits::MAX_MASK_FROBENIUS).contains(&f));
    (0..1u64 << (f - 1)).map(move |inner| NumericalSet::from_mask(bits::from_inner(inner, f), f))
}

/// Every numerical set with Frobenius number at most `f`, starting with ℕ.
pub fn sets_up_to_frobenius(f: u32) -> impl Iterator<Item = NumericalSet> {
    std::iter::once(NumericalSet::naturals()).chain((1..=f).flat_map(sets_with_frobenius))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> NumericalSet {
        s.parse().unwrap()
    }

    fn gens(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn membership() {
        let t = set("0,1,4,5,7,→");
        assert_eq!(t.gaps(), &[2, 3, 6]);
        assert_eq!(t.frobenius(), Some(6));
        assert_eq!(t.genus(), 3);
        assert!(t.contains(4));
        assert!(!t.contains(6));
        assert!(t.contains(100));
        assert!(NumericalSet::naturals().contains(0));
        assert_eq!(NumericalSet::naturals().frobenius_number(), -1);
        assert_eq!(t.contains_int(-1), Err(Error::Negative(-1)));
    }

    #[test]
    fn atom_monoid_examples() {
        // 5 is not in A(T): 5 + 1 = 6 is a gap.
        assert_eq!(set("0,1,4,5,7,→").atom_monoid().as_set(), &set("0,4,7,→"));
        assert_eq!(set("0,3,4,7,→").atom_monoid().as_set(), &set("0,4,7,→"));
        assert!(NumericalSet::naturals().atom_monoid().is_naturals());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(set("0,1,4,5,7,→").dual(), set("0,3,4,7,→"));
        let s = gens(&[2, 3]);
        assert_eq!(s.dual(), *s.as_set());
        assert_eq!(NumericalSet::naturals().dual(), NumericalSet::naturals());
    }

    #[test]
    fn missing_pair_examples() {
        let s: NumericalSemigroup = "0,3,6,→".parse().unwrap();
        assert_eq!(s.missing_pairs(), vec![1, 4]);
        assert_eq!(gens(&[3, 4, 5]).missing_pairs(), vec![1]);
        assert_eq!(gens(&[4, 5, 6, 7]).missing_pairs().len(), 2);
    }

    #[test]
    fn symmetry_examples() {
        assert!(gens(&[2, 5]).is_symmetric());
        assert!(!set("0,1,4,5,7,→").is_symmetric());
        assert!(!gens(&[3, 4, 5]).is_symmetric());
        assert!(NumericalSet::naturals().is_symmetric());
        assert!(gens(&[3, 4, 5]).is_pseudosymmetric());
        assert!(!gens(&[2, 3]).is_pseudosymmetric());
        assert!(!gens(&[4, 5, 6, 7]).is_pseudosymmetric());
    }

    #[test]
    fn generators() {
        let s = gens(&[3, 8]);
        assert_eq!(s.gaps(), &[1, 2, 4, 5, 7, 10, 13]);
        assert_eq!(s.frobenius(), Some(13));
        assert_eq!(s.genus(), 7);
        assert_eq!(gens(&[2, 3]).gaps(), &[1]);
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::InfiniteComplement { gcd: 2 })
        );
        assert_eq!(gens(&[4, 5, 6, 7]).minimal_generators(), vec![4, 5, 6, 7]);
        assert_eq!(NumericalSemigroup::naturals().minimal_generators(), vec![1]);
        assert_eq!(gens(&[2, 5]).minimal_generators(), vec![2, 5]);
        assert_eq!(gens(&[6, 10, 15]).frobenius(), Some(29));
    }

    #[test]
    fn effective_generators_and_children() {
        let s = gens(&[3, 4, 5]);
        assert_eq!(s.effective_generators(), vec![3, 4, 5]);
        assert_eq!(s.remove_generator(3).unwrap(), gens(&[4, 5, 6, 7]));
        assert!(gens(&[3, 4]).effective_generators().is_empty());
        assert!(s.remove_generator(6).is_err());
    }

    #[test]
    fn text_forms() {
        assert_eq!(set("0,1,4,5,7,→").to_string(), "0,1,4,5,7,→");
        assert_eq!(set("0, 1, 4, 5, 7, ->").to_ascii_string(), "0,1,4,5,7,->");
        assert_eq!(NumericalSet::naturals().to_string(), "0,→");
        assert_eq!(gens(&[3, 7, 8]).to_string(), "0,3,6,→");
        assert!("1,2,→".parse::<NumericalSet>().is_err());
        assert!("0,1,2".parse::<NumericalSet>().is_err());
        assert_eq!(
            "0,1,3,→".parse::<NumericalSemigroup>(),
            Err(Error::NotClosed { a: 1, b: 1, sum: 2 })
        );
        assert_eq!(format!("{:?}", gens(&[4, 5, 6, 7])), "⟨4,5,6,7⟩");
    }

    #[test]
    fn json_form() {
        let t = set("0,1,4,5,7,→");
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"gaps":[2,3,6]}"#);
        assert_eq!(serde_json::from_str::<NumericalSet>(&js).unwrap(), t);
        assert!(serde_json::from_str::<NumericalSet>(r#"{"gaps":[0,1]}"#).is_err());
        assert!(serde_json::from_str::<NumericalSemigroup>(r#"{"gaps":[2]}"#).is_err());
    }

    #[test]
    fn masks_round_trip() {
        let t = set("0,1,4,5,7,→");
        let (m, f) = t.mask().unwrap();
        assert_eq!((m, f), (0b0110011, 6));
        assert_eq!(NumericalSet::from_mask(m, f), t);
        assert_eq!(sets_with_frobenius(5).count(), 16);
        assert_eq!(sets_up_to_frobenius(4).count(), 1 + 1 + 2 + 4 + 8);
    }

    #[test]
    fn ordinary_semigroup() {
        let s = NumericalSemigroup::ordinary(4);
        assert_eq!(s.to_string(), "0,5,→");
        assert_eq!(NumericalSemigroup::ordinary(1), gens(&[2, 3]));
    }
}
