//! The anti-atom problem: which numerical sets have a given atom monoid?
//!
//! Any `T` with `A(T) = S` satisfies `S ⊆ T ⊆ S* = S ∪ M(S)`, so the search
//! runs over subsets `U ⊆ M(S)` with `T = S ∪ U`, never over all sets with
//! Frobenius number `F(S)`. `P(S)` counts the survivors; equivalently, it
//! counts partitions whose hook set is `ℕ ∖ S`.

use std::env;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bits;
use crate::error::{Error, Result};
use crate::json;
use crate::numset::{NumericalSemigroup, NumericalSet};

/// Environment variable overriding [`Budget::DEFAULT`].
pub const BUDGET_VAR: &str = "CORE_LATTICE_BUDGET";

/// Cap on the exponent of any `2^n` exhaustive scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u32);

impl Budget {
    pub const DEFAULT: Budget = Budget(24);

    /// Reads `CORE_LATTICE_BUDGET`, falling back to the default when unset.
    pub fn from_env() -> Result<Budget> {
        match env::var(BUDGET_VAR) {
            Err(_) => Ok(Budget::DEFAULT),
            Ok(v) => v
                .trim()
                .parse::<u32>()
                .map(Budget)
                .map_err(|_| Error::Parse(format!("{BUDGET_VAR} must be a non-negative integer, got `{v}`"))),
        }
    }

    pub fn check(self, what: &'static str, value: u32) -> Result<()> {
        if value > self.0 {
            Err(Error::BudgetExceeded { what, value, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiAtomReport {
    pub semigroup: NumericalSemigroup,
    pub p_value: u64,
    /// Every `T` with `A(T) = S`, ordered by gap list.
    pub witnesses: Vec<NumericalSet>,
    pub m_size: usize,
}

impl AntiAtomReport {
    pub fn to_json(&self, with_witnesses: bool) -> Value {
        let mut v = json!({
            "semigroup": self.semigroup.to_string(),
            "P": json::u64(self.p_value),
            "M": self.m_size,
        });
        if with_witnesses {
            v["witnesses"] = self.witnesses.iter().map(|t| Value::String(t.to_string())).collect();
        }
        v
    }
}

/// `T` has atom monoid exactly `s` (both as masks over `[0, f]`).
#[inline]
fn atom_equals(t: u64, s: u64, f: u32) -> bool {
    (1..=f).all(|n| bits::stabilizes(t, f, n) == ((s >> n) & 1 == 1))
}

/// Spreads the low bits of `u` onto the positions listed in `at`.
#[inline]
fn deposit(mut u: u64, at: &[u32]) -> u64 {
    let mut out = 0u64;
    for &p in at {
        if u == 0 {
            break;
        }
        if u & 1 == 1 {
            out |= 1 << p;
        }
        u >>= 1;
    }
    out
}

/// Subsets `U ⊆ M(S)` (as bit patterns over `M(S)`) with `A(S ∪ U) = S`.
fn witness_patterns(s: &NumericalSemigroup, m: &[u32], collect: bool) -> (u64, Vec<u64>) {
    let k = m.len() as u32;
    match s.mask() {
        Some((smask, f)) => {
            let keep = |u: &u64| atom_equals(smask | deposit(*u, m), smask, f);
            if collect {
                let found: Vec<u64> = (0..1u64 << k).into_par_iter().filter(keep).collect();
                (found.len() as u64, found)
            } else {
                ((0..1u64 << k).into_par_iter().filter(keep).count() as u64, Vec::new())
            }
        }
        None => {
            let keep = |u: &u64| {
                let t = union_with(s, m, *u);
                t.atom_monoid().as_set() == s.as_set()
            };
            let found: Vec<u64> = (0..1u64 << k).into_par_iter().filter(keep).collect();
            (found.len() as u64, if collect { found } else { Vec::new() })
        }
    }
}

fn union_with(s: &NumericalSemigroup, m: &[u32], u: u64) -> NumericalSet {
    let added: Vec<u32> = m.iter().enumerate().filter(|(i, _)| (u >> i) & 1 == 1).map(|(_, &n)| n).collect();
    let gaps = s.gaps().iter().copied().filter(|g| added.binary_search(g).is_err());
    NumericalSet::from_gaps(gaps).expect("gaps of a semigroup are positive")
}

/// `P(S)` with its witnesses, under an explicit budget on `|M(S)|`.
pub fn anti_atom_within(s: &NumericalSemigroup, budget: Budget) -> Result<AntiAtomReport> {
    let m = s.missing_pairs();
    budget.check("|M(S)|", m.len() as u32)?;
    let (p, patterns) = witness_patterns(s, &m, true);
    let mut witnesses: Vec<NumericalSet> = patterns.into_iter().map(|u| union_with(s, &m, u)).collect();
    witnesses.sort();
    Ok(AntiAtomReport { semigroup: s.clone(), p_value: p, witnesses, m_size: m.len() })
}

pub fn anti_atom(s: &NumericalSemigroup) -> Result<AntiAtomReport> {
    anti_atom_within(s, Budget::from_env()?)
}

/// `P(S)` alone.
pub fn p_value_within(s: &NumericalSemigroup, budget: Budget) -> Result<u64> {
    let m = s.missing_pairs();
    budget.check("|M(S)|", m.len() as u32)?;
    Ok(witness_patterns(s, &m, false).0)
}

pub fn p_value(s: &NumericalSemigroup) -> Result<u64> {
    p_value_within(s, Budget::from_env()?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SmallM {
    /// `M(S) = ∅`.
    Symmetric,
    /// `M(S) = {F/2}`.
    Pseudosymmetric,
    /// `|M(S)| = 2`.
    TwoMissing,
    Other,
}

impl fmt::Display for SmallM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SmallM::Symmetric => "symmetric",
            SmallM::Pseudosymmetric => "pseudosymmetric",
            SmallM::TwoMissing => "|M|=2",
            SmallM::Other => "other",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub class: SmallM,
    pub m_size: usize,
    pub p_value: u64,
}

impl Classification {
    /// `|M| = 0 ⟹ P = 1`, `|M| = 1 ⟹ P = 2`, `|M| = 2 ⟹ P ∈ {2, 3}`, and
    /// `1 <= P <= 2^|M|` throughout.
    pub fn is_consistent(&self) -> bool {
        let bound_ok = self.p_value >= 1 && (self.m_size >= 64 || self.p_value <= 1u64 << self.m_size);
        let class_ok = match self.class {
            SmallM::Symmetric => self.p_value == 1,
            SmallM::Pseudosymmetric => self.p_value == 2,
            SmallM::TwoMissing => matches!(self.p_value, 2 | 3),
            SmallM::Other => true,
        };
        bound_ok && class_ok
    }
}

pub fn classify_small_m(s: &NumericalSemigroup) -> Result<Classification> {
    let m_size = s.missing_pairs().len();
    let class = match m_size {
        0 => SmallM::Symmetric,
        // M(S) is closed under n ↦ F - n, so a singleton is {F/2}
        1 => SmallM::Pseudosymmetric,
        2 => SmallM::TwoMissing,
        _ => SmallM::Other,
    };
    let p_value = p_value(s)?;
    Ok(Classification { class, m_size, p_value })
}

/// `R_N = {0, (N+1)/2} ∪ E_N ∪ {N+1, N+2, …}` with `E_N` the even numbers
/// strictly between `(N+1)/2` and `N-1`. It has `P = 2` but
/// `|M| = 2⌈(N-1)/4⌉`, so `P` is not a function of `|M|` alone.
pub fn family_r(n: u32) -> Result<NumericalSemigroup> {
    if n % 2 == 0 || n < 11 {
        return Err(Error::OutOfRange(format!("R_N needs odd N >= 11, got {n}")));
    }
    let h = n.div_ceil(2);
    let member = |x: u32| x == h || (x > h && x < n - 1 && x % 2 == 0);
    let set = NumericalSet::from_gaps((1..=n).filter(|&x| !member(x)))?;
    NumericalSemigroup::try_from(set)
}

/// `2⌈(N-1)/4⌉`.
pub fn family_r_expected_m(n: u32) -> usize {
    2 * (n as usize - 1).div_ceil(4)
}

/// `S_N = {0, N+1, N+2, …}`.
pub fn family_s(n: u32) -> Result<NumericalSemigroup> {
    if n == 0 {
        return Err(Error::OutOfRange("S_N needs N >= 1".into()));
    }
    Ok(NumericalSemigroup::ordinary(n))
}

fn mask_frobenius(n: u32, budget: Budget) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    budget.check("N", n)?;
    if n > bits::MAX_MASK_FROBENIUS {
        return Err(Error::Unsupported(format!("N = {n} exceeds the word-sized scan limit")));
    }
    Ok(())
}

/// `γ_N = P(S_N) / 2^(N-1)`: the share of numerical sets with Frobenius
/// number `N` whose atom monoid is as small as possible.
pub fn gamma_within(n: u32, budget: Budget) -> Result<BigRational> {
    mask_frobenius(n, budget)?;
    let p = p_value_within(&family_s(n)?, Budget(u32::MAX))?;
    Ok(BigRational::new(BigInt::from(p), BigInt::from(1u64 << (n - 1))))
}

pub fn gamma(n: u32) -> Result<BigRational> {
    gamma_within(n, Budget::from_env()?)
}

/// `S(N)`, the number of numerical semigroups with Frobenius number `N`,
/// by a closure check on each of the `2^(N-1)` candidate gap sets.
pub fn count_semigroups_by_frobenius_within(n: u32, budget: Budget) -> Result<u64> {
    mask_frobenius(n, budget)?;
    Ok((0..1u64 << (n - 1))
        .into_par_iter()
        .filter(|&inner| bits::is_closed(bits::from_inner(inner, n), n))
        .count() as u64)
}

pub fn count_semigroups_by_frobenius(n: u32) -> Result<u64> {
    count_semigroups_by_frobenius_within(n, Budget::from_env()?)
}

/// `4 · 2^⌊(N-1)/2⌋`.
pub fn backelin_bound(n: u32) -> u64 {
    4u64 << ((n.max(1) - 1) / 2)
}

/// Every numerical semigroup with Frobenius number at most `f`, ℕ first,
/// then by Frobenius number and member mask.
pub fn semigroups_up_to_frobenius(f: u32) -> Vec<NumericalSemigroup> {
    let mut out = vec![NumericalSemigroup::naturals()];
    for n in 1..=f.min(bits::MAX_MASK_FROBENIUS) {
        for inner in 0..1u64 << (n - 1) {
            let mask = bits::from_inner(inner, n);
            if bits::is_closed(mask, n) {
                out.push(NumericalSemigroup::new_unchecked(NumericalSet::from_mask(mask, n)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(s: &str) -> NumericalSemigroup {
        s.parse().unwrap()
    }

    fn gens(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn small_examples() {
        let r = anti_atom(&sg("0,4,→")).unwrap();
        assert_eq!(r.p_value, 3);
        assert_eq!(r.witnesses.len(), 3);
        let r = anti_atom(&sg("0,3,6,→")).unwrap();
        assert_eq!(r.p_value, 2);
        assert_eq!(r.m_size, 2);
        let shown: Vec<String> = r.witnesses.iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, vec!["0,3,6,→", "0,1,3,4,6,→"]);
        assert_eq!(anti_atom(&gens(&[2, 7])).unwrap().p_value, 1);
        assert_eq!(anti_atom(&NumericalSemigroup::naturals()).unwrap().p_value, 1);
    }

    #[test]
    fn witnesses_contain_s_and_dual() {
        let s = gens(&[4, 5, 6, 7]);
        let r = anti_atom(&s).unwrap();
        assert_eq!(r.p_value, 3);
        assert!(r.witnesses.contains(s.as_set()));
        assert!(r.witnesses.contains(&s.dual()));
        for t in &r.witnesses {
            assert_eq!(t.atom_monoid(), s);
        }
    }

    #[test]
    fn classification() {
        let c = classify_small_m(&gens(&[3, 4, 5])).unwrap();
        assert_eq!((c.class, c.p_value), (SmallM::Pseudosymmetric, 2));
        let c = classify_small_m(&gens(&[4, 5, 6, 7])).unwrap();
        assert_eq!((c.class, c.m_size, c.p_value), (SmallM::TwoMissing, 2, 3));
        assert!(c.is_consistent());
        assert_eq!(classify_small_m(&gens(&[2, 7])).unwrap().class, SmallM::Symmetric);
    }

    #[test]
    fn family_r_11() {
        let r = family_r(11).unwrap();
        assert_eq!(r.to_string(), "0,6,8,12,→");
        let rep = anti_atom(&r).unwrap();
        assert_eq!((rep.p_value, rep.m_size), (2, 6));
        assert_eq!(family_r_expected_m(13), 6);
        assert_eq!(family_r_expected_m(15), 8);
        assert!(family_r(12).is_err());
        assert!(family_r(9).is_err());
    }

    #[test]
    fn family_s_and_gamma() {
        assert_eq!(family_s(4).unwrap().to_string(), "0,5,→");
        assert_eq!(family_s(1).unwrap(), gens(&[2, 3]));
        assert_eq!(gamma(1).unwrap(), BigRational::from_integer(1.into()));
        assert_eq!(gamma(2).unwrap(), BigRational::from_integer(1.into()));
        assert_eq!(gamma(4).unwrap(), BigRational::new(3.into(), 4.into()));
        assert!(matches!(gamma_within(30, Budget(24)), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn semigroup_counts() {
        let s: Vec<u64> = (1..=14).map(|n| count_semigroups_by_frobenius(n).unwrap()).collect();
        assert_eq!(s, vec![1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51, 40, 106, 103]);
        let listed = semigroups_up_to_frobenius(8);
        assert_eq!(listed.len() as u64, 1 + s[..8].iter().sum::<u64>());
    }

    #[test]
    fn json_shape() {
        let v = anti_atom(&sg("0,3,6,→")).unwrap().to_json(true);
        assert_eq!(v, json!({"semigroup":"0,3,6,→","P":2,"M":2,"witnesses":["0,3,6,→","0,1,3,4,6,→"]}));
    }
}
