//! Apéry-tuple coordinates for `a`-cores.
//!
//! A numerical set `T` with `a ∈ A(T)` is determined by the tuple
//! `(x₁, …, x_{a-1})` where `a·xᵢ + i` is the least member of `T` congruent to
//! `i` mod `a`. Every tuple in `ℕ^{a-1}` arises this way, so `a`-core
//! partitions, numerical sets stable under `+a`, and `ℕ^{a-1}` are in
//! bijection.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::Pow;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numset::NumericalSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AperyRepr", into = "AperyRepr")]
pub struct AperyTuple {
    a: u32,
    x: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct AperyRepr {
    a: u32,
    x: Vec<u32>,
}

impl TryFrom<AperyRepr> for AperyTuple {
    type Error = Error;

    fn try_from(r: AperyRepr) -> Result<Self> {
        AperyTuple::new(r.a, r.x)
    }
}

impl From<AperyTuple> for AperyRepr {
    fn from(t: AperyTuple) -> Self {
        AperyRepr { a: t.a, x: t.x }
    }
}

impl AperyTuple {
    pub fn new(a: u32, x: Vec<u32>) -> Result<Self> {
        if a < 2 {
            return Err(Error::BadModulus { min: 2, got: a });
        }
        if x.len() != a as usize - 1 {
            return Err(Error::TupleLength { a, got: x.len(), expected: a as usize - 1 });
        }
        Ok(AperyTuple { a, x })
    }

    pub fn origin(a: u32) -> Result<Self> {
        AperyTuple::new(a, vec![0; a.saturating_sub(1) as usize])
    }

    pub fn modulus(&self) -> u32 {
        self.a
    }

    pub fn coords(&self) -> &[u32] {
        &self.x
    }

    /// `x_i` with the 1-based indexing used throughout this module.
    pub fn get(&self, i: u32) -> u32 {
        self.x[i as usize - 1]
    }

    pub fn is_origin(&self) -> bool {
        self.x.iter().all(|&v| v == 0)
    }

    /// Genus of the corresponding set: `Σ xᵢ`.
    pub fn genus(&self) -> u64 {
        self.x.iter().map(|&v| u64::from(v)).sum()
    }

    /// `F(T) = max(a·xᵢ + i - a)`; undefined for the origin (T = ℕ).
    pub fn frobenius(&self) -> Result<u32> {
        if self.is_origin() {
            return Err(Error::FrobeniusUndefined);
        }
        let a = i64::from(self.a);
        let f = (1..self.a)
            .map(|i| a * i64::from(self.get(i)) + i64::from(i) - a)
            .max()
            .unwrap();
        Ok(f as u32)
    }

    /// Size of the partition `φ(T)`, via
    /// `(a/2)·Σ xᵢ(xᵢ-1) + Σ i·xᵢ - (1/2)(Σxᵢ)(Σxᵢ - 1)`.
    pub fn size(&self) -> u64 {
        let a = i128::from(self.a);
        let x = self.x.iter().map(|&v| i128::from(v));
        let sq: i128 = x.clone().map(|v| v * (v - 1)).sum();
        let lin: i128 = x.clone().zip(1..).map(|(v, i)| i * v).sum();
        let g: i128 = x.sum();
        let twice = a * sq + 2 * lin - g * (g - 1);
        debug_assert!(twice >= 0 && twice % 2 == 0);
        (twice / 2) as u64
    }

    /// The same quadratic written as
    /// `((a-1)/2)·Σ xᵢ² + Σ (i - (a-1)/2)·xᵢ - Σ_{i<j} xᵢxⱼ`.
    pub fn size_expanded(&self) -> u64 {
        let a = i128::from(self.a);
        let x: Vec<i128> = self.x.iter().map(|&v| i128::from(v)).collect();
        let sq: i128 = x.iter().map(|v| v * v).sum();
        let lin: i128 = x.iter().zip(1..).map(|(v, i)| (2 * i - (a - 1)) * v).sum();
        let mut cross = 0i128;
        for i in 0..x.len() {
            for j in i + 1..x.len() {
                cross += x[i] * x[j];
            }
        }
        let twice = (a - 1) * sq + lin - 2 * cross;
        (twice / 2) as u64
    }

    /// The tuple of the dual set, i.e. of the conjugate partition. With
    /// `F ≡ ℓ (mod a)`:
    /// `x'ᵢ = x_ℓ - x_{ℓ-i}` for `i < ℓ`, `x_ℓ` for `i = ℓ`, and
    /// `x_ℓ - x_{a+ℓ-i} - 1` for `i > ℓ`. The origin maps to itself.
    pub fn conjugate(&self) -> AperyTuple {
        let f = match self.frobenius() {
            Ok(f) => f,
            Err(_) => return self.clone(),
        };
        let a = self.a;
        let l = f % a;
        let xl = self.get(l);
        let x = (1..a)
            .map(|i| match i.cmp(&l) {
                std::cmp::Ordering::Less => xl - self.get(l - i),
                std::cmp::Ordering::Equal => xl,
                std::cmp::Ordering::Greater => xl - self.get(a + l - i) - 1,
            })
            .collect();
        AperyTuple { a, x }
    }

    /// Whether the set is closed under addition:
    /// `xᵢ + xⱼ >= x_{i+j}` when `i + j < a`, and
    /// `xᵢ + xⱼ + 1 >= x_{i+j-a}` when `i + j > a`. Pairs with `i + j = a`
    /// impose nothing since multiples of `a` are always present.
    pub fn is_semigroup(&self) -> bool {
        let a = self.a;
        for i in 1..a {
            for j in i..a {
                let ok = match (i + j).cmp(&a) {
                    std::cmp::Ordering::Less => self.get(i) + self.get(j) >= self.get(i + j),
                    std::cmp::Ordering::Greater => self.get(i) + self.get(j) + 1 >= self.get(i + j - a),
                    std::cmp::Ordering::Equal => true,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// `T = {a·xᵢ + i + m·a} ∪ aℕ`.
    pub fn to_set(&self) -> NumericalSet {
        let a = self.a;
        let mut gaps: Vec<u32> = (1..a)
            .flat_map(|i| (0..self.get(i)).map(move |m| a * m + i))
            .collect();
        gaps.sort_unstable();
        NumericalSet::from_sorted_gaps(gaps)
    }
}

impl fmt::Display for AperyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={};[", self.a)?;
        for (i, v) in self.x.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// Parses `a=4;[0,2,1]`.
impl FromStr for AperyTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `a=<n>;[x1,...]`, got `{s}`"));
        let (head, tail) = s.trim().split_once(';').ok_or_else(bad)?;
        let a: u32 = head.trim().strip_prefix("a=").ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let inner = tail.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let x = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        AperyTuple::new(a, x)
    }
}

/// The Apéry tuple of `t` with respect to `a`; requires `a ∈ A(t)`.
pub fn apery_of(t: &NumericalSet, a: u32) -> Result<AperyTuple> {
    if a < 2 {
        return Err(Error::BadModulus { min: 2, got: a });
    }
    if !t.is_stabilized_by(a) {
        return Err(Error::NotAperyCoordinate { a });
    }
    let x = (1..a)
        .map(|i| {
            let least = (0..).map(|m| a * m + i).find(|&n| t.contains(n)).unwrap();
            (least - i) / a
        })
        .collect();
    Ok(AperyTuple { a, x })
}

/// Inverse of [`apery_of`].
pub fn set_from_apery(t: &AperyTuple) -> NumericalSet {
    t.to_set()
}

/// Number of `a`-cores with largest hook `a·k + ℓ`:
/// `(k+2)^(ℓ-1) · (k+1)^(a-ℓ-1)`.
pub fn count_acores_by_max_hook(a: u32, k: u32, l: u32) -> Result<BigUint> {
    if a < 2 {
        return Err(Error::BadModulus { min: 2, got: a });
    }
    if l == 0 || l >= a {
        return Err(Error::OutOfRange(format!("ℓ = {l} must lie in [1, {}]", a - 1)));
    }
    Ok(Pow::pow(BigUint::from(k + 2), l - 1) * Pow::pow(BigUint::from(k + 1), a - l - 1))
}

/// Number of `a`-cores with largest hook below `a·k`: `(k+1)^(a-1)`.
pub fn count_acores_max_hook_below(a: u32, k: u32) -> Result<BigUint> {
    if a < 2 {
        return Err(Error::BadModulus { min: 2, got: a });
    }
    Ok(Pow::pow(BigUint::from(k + 1), a - 1))
}

/// Number of `a`-cores with exactly `g` parts, `C(g+a-2, a-2)`, or with at
/// most `g` parts, `C(g+a-1, a-1)`.
pub fn count_acores_by_parts(a: u32, g: u32, at_most: bool) -> Result<BigUint> {
    if a < 2 {
        return Err(Error::BadModulus { min: 2, got: a });
    }
    let (n, k) = if at_most { (g + a - 1, a - 1) } else { (g + a - 2, a - 2) };
    Ok(binomial(BigUint::from(n), BigUint::from(k)))
}

/// `a`-tuples in a box `[0, bound]^(a-1)`, lexicographic.
pub fn tuples_in_box(a: u32, bound: u32) -> impl Iterator<Item = AperyTuple> {
    let dim = a as usize - 1;
    let total = (u64::from(bound) + 1).pow(dim as u32);
    (0..total).map(move |mut idx| {
        let mut x = vec![0u32; dim];
        for slot in x.iter_mut().rev() {
            *slot = (idx % (u64::from(bound) + 1)) as u32;
            idx /= u64::from(bound) + 1;
        }
        AperyTuple { a, x }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numset::NumericalSemigroup;
    use crate::partition::phi;
    use num_traits::One;

    fn one() -> BigUint {
        BigUint::one()
    }

    fn set(s: &str) -> NumericalSet {
        s.parse().unwrap()
    }

    fn tup(a: u32, x: &[u32]) -> AperyTuple {
        AperyTuple::new(a, x.to_vec()).unwrap()
    }

    #[test]
    fn apery_examples() {
        assert_eq!(apery_of(&set("0,1,4,5,7,→"), 4).unwrap(), tup(4, &[0, 2, 1]));
        assert_eq!(apery_of(&NumericalSet::naturals(), 5).unwrap(), tup(5, &[0, 0, 0, 0]));
        let s38 = NumericalSemigroup::from_generators(&[3, 8]).unwrap();
        assert_eq!(apery_of(&s38, 3).unwrap(), tup(3, &[5, 2]));
        assert_eq!(
            apery_of(&set("0,1,4,5,7,→"), 2),
            Err(Error::NotAperyCoordinate { a: 2 })
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(tup(4, &[0, 2, 1]).to_set(), set("0,1,4,5,7,→"));
        assert_eq!(tup(3, &[0, 0]).to_set(), NumericalSet::naturals());
        let s38 = NumericalSemigroup::from_generators(&[3, 8]).unwrap();
        assert_eq!(tup(3, &[5, 2]).to_set(), *s38.as_set());
    }

    #[test]
    fn genus_frobenius_size() {
        assert_eq!(tup(4, &[0, 2, 1]).genus(), 3);
        assert_eq!(tup(3, &[0, 0]).genus(), 0);
        assert_eq!(tup(3, &[5, 2]).genus(), 7);
        assert_eq!(tup(4, &[0, 2, 1]).frobenius(), Ok(6));
        assert_eq!(tup(3, &[5, 2]).frobenius(), Ok(13));
        assert_eq!(tup(2, &[3]).frobenius(), Ok(5));
        assert_eq!(tup(3, &[0, 0]).frobenius(), Err(Error::FrobeniusUndefined));
        assert_eq!(tup(4, &[0, 2, 1]).size(), 8);
        assert_eq!(tup(4, &[0, 0, 0]).size(), 0);
        // the Young diagram of <3,8> decides: 21 cells
        let oracle = phi(&tup(3, &[5, 2]).to_set()).size();
        assert_eq!(oracle, 21);
        assert_eq!(tup(3, &[5, 2]).size(), oracle);
        assert_eq!(tup(3, &[5, 2]).size_expanded(), oracle);
    }

    #[test]
    fn conjugation() {
        assert_eq!(tup(4, &[0, 2, 1]).conjugate(), tup(4, &[2, 2, 0]));
        // x1 < x2 gives (x2 - x1, x2); x1 > x2 gives (x1, x1 - x2 - 1)
        assert_eq!(tup(3, &[1, 4]).conjugate(), tup(3, &[3, 4]));
        assert_eq!(tup(3, &[6, 2]).conjugate(), tup(3, &[6, 3]));
        assert_eq!(tup(3, &[0, 0]).conjugate(), tup(3, &[0, 0]));
    }

    #[test]
    fn semigroup_tuples() {
        assert!(tup(3, &[5, 2]).is_semigroup());
        assert!(!tup(3, &[0, 2]).is_semigroup());
        assert!(!tup(3, &[0, 2]).to_set().is_semigroup());
        assert!(tup(3, &[0, 0]).is_semigroup());
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_acores_by_max_hook(3, 1, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(count_acores_by_max_hook(2, 0, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(count_acores_by_max_hook(4, 0, 3).unwrap(), BigUint::from(4u32));
        assert!(count_acores_by_max_hook(4, 0, 4).is_err());
        assert!(count_acores_by_max_hook(4, 0, 0).is_err());
        assert_eq!(count_acores_max_hook_below(3, 2).unwrap(), BigUint::from(9u32));
        assert_eq!(count_acores_max_hook_below(7, 0).unwrap(), one());
        assert_eq!(count_acores_max_hook_below(2, 5).unwrap(), BigUint::from(6u32));
        assert_eq!(count_acores_by_parts(3, 2, false).unwrap(), BigUint::from(3u32));
        assert_eq!(count_acores_by_parts(2, 5, false).unwrap(), one());
        assert_eq!(count_acores_by_parts(4, 2, true).unwrap(), BigUint::from(10u32));
    }

    #[test]
    fn text_and_json() {
        let t = tup(4, &[0, 2, 1]);
        assert_eq!(t.to_string(), "a=4;[0,2,1]");
        assert_eq!("a=4;[0,2,1]".parse::<AperyTuple>().unwrap(), t);
        assert!("a=4;[0,2]".parse::<AperyTuple>().is_err());
        assert!("a=1;[]".parse::<AperyTuple>().is_err());
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"a":4,"x":[0,2,1]}"#);
        assert_eq!(serde_json::from_str::<AperyTuple>(&js).unwrap(), t);
    }

    #[test]
    fn box_iteration() {
        let v: Vec<_> = tuples_in_box(3, 1).map(|t| t.coords().to_vec()).collect();
        assert_eq!(v, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(tuples_in_box(5, 4).count(), 625);
    }
}
