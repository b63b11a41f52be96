//! Oversemigroups of `⟨a, b⟩` as lattice points.
//!
//! A semigroup `T ∋ a` contains `⟨a, b⟩` iff each least element of `T` in a
//! residue class mod `a` is at most the corresponding element of
//! `Ap(⟨a, b⟩, a)`. Adding that box to the closure inequalities on Apéry
//! tuples gives a polytope whose points are the oversemigroups.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::stats::anderson_count;
use super::{decompose, InequalitySystem, Region};
use crate::error::{Error, Result};
use crate::json;

/// Closure inequalities on Apéry tuples plus the box `x <= Ap(⟨a, b⟩)`.
pub fn oversemigroup_polytope(a: u32, b: u32) -> Result<InequalitySystem> {
    Ok(oversemigroup_region(a, b)?.system)
}

/// Apéry coordinates of `⟨a, b⟩`: `j·b` is the least element in its class.
fn apery_box(a: u32, b: u32) -> Vec<u32> {
    let mut x = vec![0u32; a as usize - 1];
    for j in 1..a {
        let n = u64::from(j) * u64::from(b);
        x[(n % u64::from(a)) as usize - 1] = (n / u64::from(a)) as u32;
    }
    x
}

pub fn oversemigroup_region(a: u32, b: u32) -> Result<Region> {
    decompose(a, &[b])?;
    let mut sys = InequalitySystem::new(a as usize - 1);
    for i in 1..a {
        for j in i..a {
            match (i + j).cmp(&a) {
                std::cmp::Ordering::Less => sys.push_sparse(&[(i + j, 1), (i, -1), (j, -1)], 0),
                std::cmp::Ordering::Greater => sys.push_sparse(&[(i + j - a, 1), (i, -1), (j, -1)], 1),
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    let bounds = apery_box(a, b);
    for (i, &ap) in bounds.iter().enumerate() {
        sys.push_sparse(&[(i as u32 + 1, 1)], i64::from(ap));
    }
    Ok(Region { a, system: sys, bounds })
}

/// `O(⟨a, b⟩)`, the number of numerical semigroups containing `⟨a, b⟩`.
pub fn count_oversemigroups(a: u32, b: u32) -> Result<u64> {
    Ok(oversemigroup_region(a, b)?.count())
}

/// The known closed forms for `O(⟨a, b⟩)` with `a ∈ {2, 3, 4}`.
pub fn oversemigroups_closed_form(a: u32, b: u32) -> Option<u64> {
    if b.gcd(&a) != 1 || b % a == 0 {
        return None;
    }
    let b = u64::from(b);
    match a {
        2 => Some(b / 2 + 1),
        3 => {
            let (k, l) = (b / 6, b % 6);
            Some((3 * k + l) * (k + 1))
        }
        4 => {
            let (k, l) = (b / 12, b % 12);
            let (c2, c1, c0) = match l {
                1 => (30, 11, 1),
                3 => (42, 23, 4),
                5 => (54, 39, 9),
                7 => (66, 59, 17),
                9 => (78, 83, 29),
                11 => (90, 111, 45),
                _ => unreachable!("b odd"),
            };
            Some(24 * k * k * k + c2 * k * k + c1 * k + c0)
        }
        _ => None,
    }
}

/// Counts of oversemigroups by genus, for any `a`.
pub fn oversemigroups_by_genus(a: u32, b: u32) -> Result<BTreeMap<u64, u64>> {
    let mut out = BTreeMap::new();
    for t in oversemigroup_region(a, b)?.tuples() {
        *out.entry(t.genus()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Counts of oversemigroups of `⟨4, b⟩` by the middle coordinate `x₂`.
pub fn oversemigroups_by_middle_apery(b: u32) -> Result<BTreeMap<u64, u64>> {
    let mut out = BTreeMap::new();
    for t in oversemigroup_region(4, b)?.tuples() {
        *out.entry(u64::from(t.get(2))).or_insert(0) += 1;
    }
    Ok(out)
}

/// Oversemigroups of `⟨3, 6k+ℓ⟩` with genus `n`.
pub fn overs3_genus_count(k: u64, l: u64, n: u64) -> u64 {
    let g = 6 * k + l - 1;
    if n > g {
        0
    } else if 2 * n + 2 <= 6 * k + l {
        n / 3 + 1
    } else {
        (g - n) / 3 + 1
    }
}

/// Oversemigroups of `⟨4, 12k+1⟩` whose middle Apéry coordinate is `n`.
pub fn overs4_middle_count(k: u64, n: u64) -> u64 {
    if n <= 2 * k {
        (n + 1) * (12 * k - 3 * n + 2) / 2
    } else if n <= 6 * k {
        let r = 3 * k - n / 2;
        (n + 1) * (3 * k - n.div_ceil(2) + 1) + r * (r + 1) / 2
    } else {
        0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrataKind {
    Genus,
    MiddleApery,
}

/// Stratified oversemigroup counts, with the closed form where one is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strata {
    pub a: u32,
    pub b: u32,
    pub kind: StrataKind,
    pub enumerated: BTreeMap<u64, u64>,
    pub closed_form: Option<BTreeMap<u64, u64>>,
}

impl Strata {
    pub fn total(&self) -> u64 {
        self.enumerated.values().sum()
    }

    /// Strata where enumeration and closed form disagree, as
    /// `(n, enumerated, formula)`.
    pub fn mismatches(&self) -> Vec<(u64, u64, u64)> {
        let Some(cf) = &self.closed_form else { return Vec::new() };
        let keys: std::collections::BTreeSet<u64> = self.enumerated.keys().chain(cf.keys()).copied().collect();
        keys.into_iter()
            .filter_map(|n| {
                let e = self.enumerated.get(&n).copied().unwrap_or(0);
                let f = cf.get(&n).copied().unwrap_or(0);
                (e != f).then_some((n, e, f))
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let strata: Vec<Value> = self
            .enumerated
            .iter()
            .map(|(&n, &c)| {
                let f = self.closed_form.as_ref().map(|cf| cf.get(&n).copied().unwrap_or(0));
                json!({ "n": n, "count": json::u64(c), "formula": f })
            })
            .collect();
        json!({
            "a": self.a,
            "b": self.b,
            "by": match self.kind { StrataKind::Genus => "genus", StrataKind::MiddleApery => "middle_apery" },
            "strata": strata,
            "total": json::u64(self.total()),
        })
    }
}

/// Genus strata for `a = 3`, middle-coordinate strata for `a = 4`.
pub fn count_oversemigroups_by_genus(a: u32, b: u32) -> Result<Strata> {
    match a {
        3 => {
            let enumerated = oversemigroups_by_genus(3, b)?;
            let (k, l) = (u64::from(b / 6), u64::from(b % 6));
            let cf = (0..6 * k + l).map(|n| (n, overs3_genus_count(k, l, n))).collect();
            Ok(Strata { a, b, kind: StrataKind::Genus, enumerated, closed_form: Some(cf) })
        }
        4 => {
            let enumerated = oversemigroups_by_middle_apery(b)?;
            let closed_form = (b % 12 == 1).then(|| {
                let k = u64::from(b / 12);
                (0..=6 * k).map(|n| (n, overs4_middle_count(k, n))).collect()
            });
            Ok(Strata { a, b, kind: StrataKind::MiddleApery, enumerated, closed_form })
        }
        _ => Err(Error::Unsupported(format!(
            "stratified closed forms exist only for a = 3 and a = 4 (got {a}); use oversemigroups_by_genus"
        ))),
    }
}

/// Symmetric semigroups containing `⟨a, b⟩`, ℕ included.
pub fn symmetric_oversemigroups(a: u32, b: u32) -> Result<u64> {
    Ok(oversemigroup_region(a, b)?.tuples().filter(|t| t.to_set().is_symmetric()).count() as u64)
}

/// `3k + 3ℓ/2 - ℓ²/6 - 1/3` symmetric semigroups contain `⟨3, 6k+ℓ⟩`.
pub fn symmetric_overs3_closed_form(k: u64, l: u64) -> BigRational {
    let six = BigInt::from(6);
    let num = BigInt::from(18 * k + 9 * l) - BigInt::from(l * l) - BigInt::from(2);
    BigRational::new(num, six)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioRow {
    pub b: u32,
    pub oversemigroups: u64,
    pub cores: BigUint,
    pub ratio: BigRational,
}

/// `O(⟨a, b⟩) / C(a, b)` over coprime `b`, with the limiting value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioTable {
    pub a: u32,
    pub rows: Vec<RatioRow>,
    pub limit: BigRational,
}

impl RatioTable {
    /// `|ratio - limit|` on the last row.
    pub fn last_gap(&self) -> Option<BigRational> {
        self.rows.last().map(|r| {
            let d = &r.ratio - &self.limit;
            if d < BigRational::from_integer(0.into()) { -d } else { d }
        })
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "b": r.b,
                    "O": json::u64(r.oversemigroups),
                    "C": json::uint(&r.cores),
                    "ratio": json::rational(&r.ratio),
                })
            })
            .collect();
        json!({ "a": self.a, "limit": json::rational(&self.limit), "rows": rows })
    }
}

pub fn semigroup_core_ratio(a: u32, b_limit: u32) -> Result<RatioTable> {
    if !(2..=4).contains(&a) {
        return Err(Error::Unsupported(format!("ratio limits are known for a = 2, 3, 4 (got {a})")));
    }
    let mut rows = Vec::new();
    for b in a + 1..=b_limit {
        if b.gcd(&a) != 1 {
            continue;
        }
        let o = count_oversemigroups(a, b)?;
        let c = anderson_count(a, b);
        let ratio = BigRational::new(BigInt::from(o), BigInt::from(c.clone()));
        rows.push(RatioRow { b, oversemigroups: o, cores: c, ratio });
    }
    let limit = BigRational::new(BigInt::from(1), BigInt::from(a - 1));
    Ok(RatioTable { a, rows, limit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numset::NumericalSemigroup;

    #[test]
    fn polytope_3_8() {
        let r = oversemigroup_region(3, 8).unwrap();
        assert_eq!(r.bounds, vec![5, 2]);
        let shown: Vec<String> = r.system.constraints().iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, vec!["-2x1 + x2 <= 0", "x1 - 2x2 <= 1", "x1 <= 5", "x2 <= 2"]);
        assert_eq!(r.count(), 10);
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_oversemigroups(3, 4).unwrap(), 4);
        assert_eq!(count_oversemigroups(2, 7).unwrap(), 4);
        assert_eq!(count_oversemigroups(4, 13).unwrap(), 66);
        assert_eq!(oversemigroup_polytope(2, 9).unwrap().constraints().len(), 1);
    }

    #[test]
    fn closed_forms_agree() {
        for a in 2..=4u32 {
            for b in a + 1..=40 {
                if let Some(cf) = oversemigroups_closed_form(a, b) {
                    assert_eq!(count_oversemigroups(a, b).unwrap(), cf, "a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn points_are_oversemigroups() {
        let s = NumericalSemigroup::from_generators(&[4, 7]).unwrap();
        for t in oversemigroup_region(4, 7).unwrap().tuples() {
            let set = t.to_set();
            assert!(set.is_semigroup());
            assert!(s.small_elements().all(|n| set.contains(n)));
        }
    }

    #[test]
    fn strata() {
        let st = count_oversemigroups_by_genus(3, 8).unwrap();
        assert_eq!(st.enumerated[&0], 1);
        assert_eq!(st.total(), 10);
        assert!(st.mismatches().is_empty());
        let st = count_oversemigroups_by_genus(4, 13).unwrap();
        assert_eq!(st.total(), 66);
        assert!(st.mismatches().is_empty());
        assert!(count_oversemigroups_by_genus(5, 7).is_err());
    }

    #[test]
    fn symmetric_counts() {
        assert_eq!(symmetric_oversemigroups(3, 4).unwrap(), 3);
        for k in 0..4u64 {
            for l in [1u64, 2, 4, 5] {
                let b = (6 * k + l) as u32;
                if b <= 3 {
                    continue;
                }
                let got = symmetric_oversemigroups(3, b).unwrap();
                assert_eq!(BigRational::from_integer(got.into()), symmetric_overs3_closed_form(k, l));
            }
        }
    }

    #[test]
    fn ratio_table() {
        let t = semigroup_core_ratio(2, 21).unwrap();
        assert!(t.rows.iter().all(|r| r.ratio == t.limit));
        let t = semigroup_core_ratio(3, 40).unwrap();
        assert_eq!(t.limit, BigRational::new(1.into(), 2.into()));
        assert!(semigroup_core_ratio(5, 10).is_err());
    }
}
