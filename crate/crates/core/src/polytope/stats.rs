//! Size statistics over the points of a region, and the classical closed
//! forms for simultaneous `(a, b)`-cores.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::enumerate::LatticePoints;
use super::{core_region, Region};
use crate::apery::AperyTuple;
use crate::error::Result;
use crate::json;

/// Count, largest size, a maximiser and the first two power sums of the
/// sizes of the partitions in a region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeStats {
    pub count: u64,
    pub max_size: u64,
    /// Lexicographically first tuple of maximum size.
    pub argmax: AperyTuple,
    /// Number of tuples attaining the maximum.
    pub argmax_count: u64,
    pub sum_size: BigUint,
    pub sum_sq: BigUint,
}

impl SizeStats {
    pub fn mean(&self) -> BigRational {
        BigRational::new(BigInt::from(self.sum_size.clone()), BigInt::from(self.count))
    }

    /// Population variance `E[s²] - E[s]²`.
    pub fn variance(&self) -> BigRational {
        let n = BigInt::from(self.count);
        let m2 = BigRational::new(BigInt::from(self.sum_sq.clone()), n);
        let m = self.mean();
        m2 - &m * &m
    }

    pub fn to_json(&self) -> Value {
        json!({
            "count": json::u64(self.count),
            "max": json::u64(self.max_size),
            "argmax": self.argmax.coords(),
            "argmax_count": json::u64(self.argmax_count),
            "sum": json::uint(&self.sum_size),
            "sum_sq": json::uint(&self.sum_sq),
            "mean": json::rational(&self.mean()),
        })
    }
}

/// Streaming accumulator; partial results over consecutive slices of the
/// enumeration order merge left to right.
#[derive(Clone, Debug, Default)]
pub struct SizeStatsBuilder {
    count: u64,
    best: Option<(u64, AperyTuple, u64)>,
    sum: u128,
    sum_sq: u128,
}

impl SizeStatsBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, t: &AperyTuple) {
        let s = t.size();
        self.count += 1;
        self.sum += u128::from(s);
        self.sum_sq += u128::from(s) * u128::from(s);
        match &mut self.best {
            Some((m, _, n)) if s == *m => *n += 1,
            Some((m, _, _)) if s < *m => {}
            _ => self.best = Some((s, t.clone(), 1)),
        }
    }

    /// `self` covers points that come before those of `other`.
    pub fn merge(mut self, other: SizeStatsBuilder) -> SizeStatsBuilder {
        self.count += other.count;
        self.sum += other.sum;
        self.sum_sq += other.sum_sq;
        self.best = match (self.best, other.best) {
            (Some(l), Some(r)) => Some(match l.0.cmp(&r.0) {
                std::cmp::Ordering::Less => r,
                std::cmp::Ordering::Greater => l,
                std::cmp::Ordering::Equal => (l.0, l.1, l.2 + r.2),
            }),
            (l, r) => l.or(r),
        };
        self
    }

    /// `None` for an empty region (which cannot happen for core polytopes,
    /// since the origin always lies inside).
    pub fn finish(self) -> Option<SizeStats> {
        let (max_size, argmax, argmax_count) = self.best?;
        Some(SizeStats {
            count: self.count,
            max_size,
            argmax,
            argmax_count,
            sum_size: BigUint::from(self.sum),
            sum_sq: BigUint::from(self.sum_sq),
        })
    }
}

pub(super) fn region_stats(region: &Region, jobs: usize) -> SizeStats {
    let a = region.a;
    let fold = |it: LatticePoints<'_>| {
        let mut acc = SizeStatsBuilder::new();
        for x in it {
            acc.push(&AperyTuple::new(a, x).expect("dimension is a - 1"));
        }
        acc
    };
    let acc = if jobs <= 1 || region.bounds.is_empty() {
        fold(region.points())
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        let slices: Vec<SizeStatsBuilder> = pool.install(|| {
            (0..=region.bounds[0])
                .into_par_iter()
                .map(|v| fold(LatticePoints::with_first(&region.system, &region.bounds, v)))
                .collect()
        });
        slices.into_iter().fold(SizeStatsBuilder::new(), SizeStatsBuilder::merge)
    };
    acc.finish().expect("regions used for statistics contain the origin")
}

/// Statistics over all `(a, b₁, …, b_m)`-cores.
pub fn core_stats(a: u32, bs: &[u32], jobs: usize) -> Result<SizeStats> {
    Ok(core_region(a, bs)?.stats(jobs))
}

/// `C(a+b, a) / (a+b)`, the number of `(a, b)`-cores for coprime `a, b`.
pub fn anderson_count(a: u32, b: u32) -> BigUint {
    let n = BigUint::from(a + b);
    binomial(n.clone(), BigUint::from(a)) / n
}

/// `(a² - 1)(b² - 1) / 24`, the largest size of an `(a, b)`-core.
pub fn olsson_stanton_max(a: u32, b: u32) -> BigUint {
    let a = BigUint::from(a);
    let b = BigUint::from(b);
    (&a * &a - 1u32) * (&b * &b - 1u32) / 24u32
}

/// `(a + b + 1)(a - 1)(b - 1) / 24`, the mean size of an `(a, b)`-core.
pub fn armstrong_mean(a: u32, b: u32) -> BigRational {
    let num = BigInt::from(a + b + 1) * BigInt::from(a - 1) * BigInt::from(b - 1);
    BigRational::new(num, BigInt::from(24))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_of, phi};

    #[test]
    fn stats_3_4() {
        let s = core_stats(3, &[4], 1).unwrap();
        assert_eq!(s.count, 5);
        assert_eq!(s.max_size, 5);
        assert_eq!(s.argmax.coords(), &[1, 2]);
        assert_eq!(s.argmax_count, 1);
        assert_eq!(s.mean(), armstrong_mean(3, 4));
    }

    #[test]
    fn parallel_agrees() {
        for (a, b) in [(5u32, 12u32), (6, 13), (4, 15)] {
            assert_eq!(core_stats(a, &[b], 1).unwrap(), core_stats(a, &[b], 4).unwrap());
        }
    }

    #[test]
    fn closed_forms_small() {
        for (a, b) in [(2u32, 5u32), (3, 5), (3, 7), (4, 7), (5, 8), (5, 9), (7, 10)] {
            let s = core_stats(a, &[b], 1).unwrap();
            assert_eq!(BigUint::from(s.count), anderson_count(a, b));
            assert_eq!(BigUint::from(s.max_size), olsson_stanton_max(a, b));
            assert_eq!(s.mean(), armstrong_mean(a, b));
            // the largest core is unique
            assert_eq!(s.argmax_count, 1);
        }
    }

    #[test]
    fn against_partition_scan() {
        // (3, 5)-cores have size at most 8
        let mut sizes: Vec<u64> = (0..=8)
            .flat_map(partitions_of)
            .filter(|l| l.is_core(3).unwrap() && l.is_core(5).unwrap())
            .map(|l| l.size())
            .collect();
        sizes.sort_unstable();
        let region = core_region(3, &[5]).unwrap();
        let mut ours: Vec<u64> = region.tuples().map(|t| phi(&t.to_set()).size()).collect();
        ours.sort_unstable();
        assert_eq!(sizes, ours);
    }

    #[test]
    fn json_shape() {
        let v = core_stats(3, &[4], 1).unwrap().to_json();
        assert_eq!(v["count"], 5);
        assert_eq!(v["mean"], json!({"num": 2, "den": 1}));
    }
}
