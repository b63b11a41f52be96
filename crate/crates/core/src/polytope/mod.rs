//! Core polytopes and their integer points.
//!
//! Writing `b = a·k + ℓ` with `ℓ ∈ [1, a-1]`, an `a`-core with Apéry tuple
//! `x` is also a `b`-core exactly when
//!
//! ```text
//! x_ℓ       <= k
//! x_{i+ℓ}   <= k + x_i          if i + ℓ < a
//! x_{i+ℓ-a} <= k + x_i + 1      if i + ℓ > a
//! x_i       >= 0
//! ```
//!
//! One such family per modulus `b_j` cuts out the `(a, b₁, …, b_m)`-core
//! polytope, which is bounded iff `gcd(a, b₁, …, b_m) = 1`.

mod enumerate;
mod oversemigroups;
mod stats;

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;

use num_integer::Integer;

use crate::apery::AperyTuple;
use crate::error::{Error, Result};

pub use enumerate::{enumerate_lattice_points, LatticePoints};
pub use oversemigroups::{
    count_oversemigroups, count_oversemigroups_by_genus, oversemigroup_polytope, oversemigroup_region,
    oversemigroups_by_genus, oversemigroups_by_middle_apery, oversemigroups_closed_form, overs3_genus_count,
    overs4_middle_count, semigroup_core_ratio, symmetric_oversemigroups, symmetric_overs3_closed_form, RatioRow,
    RatioTable, Strata, StrataKind,
};
pub use stats::{anderson_count, armstrong_mean, core_stats, olsson_stanton_max, SizeStats, SizeStatsBuilder};

/// `coeffs · x <= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub coeffs: Vec<i64>,
    pub bound: i64,
}

impl Constraint {
    pub fn eval(&self, x: &[u32]) -> i64 {
        self.coeffs.iter().zip(x).map(|(&c, &v)| c * i64::from(v)).sum()
    }

    pub fn holds(&self, x: &[u32]) -> bool {
        self.eval(x) <= self.bound
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            if !first {
                f.write_str(" ")?;
            }
            f.write_str(sign)?;
            if !first {
                f.write_str(" ")?;
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "x{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " <= {}", self.bound)
    }
}

/// Integer linear constraints over `x₁, …, x_dim`, with `x >= 0` implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalitySystem {
    dim: usize,
    constraints: Vec<Constraint>,
}

impl InequalitySystem {
    pub fn new(dim: usize) -> Self {
        InequalitySystem { dim, constraints: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Adds `Σ coeffs[i]·x_{i+1} <= bound`, given sparsely as `(index, coeff)`
    /// pairs with 1-based indices.
    pub fn push_sparse(&mut self, terms: &[(u32, i64)], bound: i64) {
        let mut coeffs = vec![0i64; self.dim];
        for &(i, c) in terms {
            coeffs[i as usize - 1] += c;
        }
        self.push(Constraint { coeffs, bound });
    }

    pub fn push(&mut self, c: Constraint) {
        assert_eq!(c.coeffs.len(), self.dim, "constraint length must equal the dimension");
        if !self.constraints.contains(&c) {
            self.constraints.push(c);
        }
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        x.len() == self.dim && self.constraints.iter().all(|c| c.holds(x))
    }

    /// Intersection with another system of the same dimension.
    pub fn intersect(mut self, other: &InequalitySystem) -> InequalitySystem {
        assert_eq!(self.dim, other.dim);
        for c in &other.constraints {
            self.push(c.clone());
        }
        self
    }
}

impl fmt::Display for InequalitySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.constraints {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A system together with a sound componentwise box `0 <= x <= bounds`.
#[derive(Clone, Debug)]
pub struct Region {
    pub a: u32,
    pub system: InequalitySystem,
    pub bounds: Vec<u32>,
}

impl Region {
    pub fn points(&self) -> LatticePoints<'_> {
        enumerate_lattice_points(&self.system, &self.bounds)
    }

    pub fn tuples(&self) -> impl Iterator<Item = AperyTuple> + '_ {
        let a = self.a;
        self.points().map(move |x| AperyTuple::new(a, x).expect("dimension is a - 1"))
    }

    pub fn count(&self) -> u64 {
        self.points().count() as u64
    }

    /// Size statistics over all points, optionally spread over `jobs` threads.
    pub fn stats(&self, jobs: usize) -> SizeStats {
        stats::region_stats(self, jobs)
    }
}

/// Splits each `b` as `a·k + ℓ` after checking `a >= 2`, `a ∤ b` and
/// `gcd(a, b₁, …) = 1`.
pub(crate) fn decompose(a: u32, bs: &[u32]) -> Result<Vec<(u32, u32)>> {
    if a < 2 {
        return Err(Error::BadModulus { min: 2, got: a });
    }
    if bs.is_empty() {
        return Err(Error::OutOfRange("at least one modulus b is required".into()));
    }
    if let Some(&b) = bs.iter().find(|&&b| b % a == 0) {
        return Err(Error::DivisibleByModulus { a, b });
    }
    let g = bs.iter().fold(a, |acc, &b| acc.gcd(&b));
    if g != 1 {
        return Err(Error::UnboundedCone { gcd: g });
    }
    Ok(bs.iter().map(|&b| (b / a, b % a)).collect())
}

/// The `(a, b₁, …, b_m)`-core polytope.
pub fn core_polytope(a: u32, bs: &[u32]) -> Result<InequalitySystem> {
    let parts = decompose(a, bs)?;
    let mut sys = InequalitySystem::new(a as usize - 1);
    for (k, l) in parts {
        let k = i64::from(k);
        sys.push_sparse(&[(l, 1)], k);
        for i in 1..a {
            match (i + l).cmp(&a) {
                std::cmp::Ordering::Less => sys.push_sparse(&[(i + l, 1), (i, -1)], k),
                std::cmp::Ordering::Greater => sys.push_sparse(&[(i + l - a, 1), (i, -1)], k + 1),
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    Ok(sys)
}

/// Componentwise upper bounds for the points of the core polytope.
///
/// Chaining the constraints gives `x_{s mod a} <= Σ y_j (k_j + 1) - 1`
/// whenever `s = Σ y_j ℓ_j` with some `y_j > 0`, so the bound for residue `i`
/// is one less than the shortest-path distance from 0 to `i` in `ℤ/a` with an
/// arc `r → r + ℓ_j` of weight `k_j + 1` for each modulus.
pub fn coordinate_bounds(a: u32, bs: &[u32]) -> Result<Vec<u32>> {
    let parts = decompose(a, bs)?;
    let n = a as usize;
    let mut dist = vec![u64::MAX; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &(k, l) in &parts {
            let next = (r + l as usize) % n;
            let nd = d + u64::from(k) + 1;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    Ok(dist[1..].iter().map(|&d| (d - 1) as u32).collect())
}

/// The core polytope bundled with its bounding box.
pub fn core_region(a: u32, bs: &[u32]) -> Result<Region> {
    Ok(Region { a, system: core_polytope(a, bs)?, bounds: coordinate_bounds(a, bs)? })
}
