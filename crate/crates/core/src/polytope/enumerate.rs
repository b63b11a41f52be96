//! Depth-first enumeration of the integer points of a bounded system.
//!
//! Coordinates are fixed left to right. A prefix is abandoned as soon as
//! some constraint can no longer be met: its partial sum plus the most
//! negative contribution the remaining coordinates could make (each taken
//! independently in its box) already exceeds the bound.

use super::InequalitySystem;

/// Points of `system ∩ [0, bounds]` in lexicographic order.
pub fn enumerate_lattice_points<'a>(system: &'a InequalitySystem, bounds: &[u32]) -> LatticePoints<'a> {
    LatticePoints::new(system, vec![0; bounds.len()], bounds.to_vec())
}

pub struct LatticePoints<'a> {
    system: &'a InequalitySystem,
    lo: Vec<u32>,
    hi: Vec<u32>,
    // touching[d]: constraints with a nonzero coefficient on coordinate d
    touching: Vec<Vec<usize>>,
    // rest[c][d]: Σ_{i >= d} min(0, coeff_i · hi_i)
    rest: Vec<Vec<i64>>,
    // partial[d][c]: Σ_{i < d} coeff_i · x_i
    partial: Vec<Vec<i64>>,
    cur: Vec<u32>,
    depth: usize,
    done: bool,
}

impl<'a> LatticePoints<'a> {
    fn new(system: &'a InequalitySystem, lo: Vec<u32>, hi: Vec<u32>) -> Self {
        let dim = system.dim();
        assert_eq!(hi.len(), dim, "bounds must match the dimension");
        let cons = system.constraints();
        let touching = (0..dim)
            .map(|d| (0..cons.len()).filter(|&c| cons[c].coeffs[d] != 0).collect())
            .collect();
        let rest: Vec<Vec<i64>> = cons
            .iter()
            .map(|c| {
                let mut r = vec![0i64; dim + 1];
                for d in (0..dim).rev() {
                    r[d] = r[d + 1] + (c.coeffs[d] * i64::from(hi[d])).min(0);
                }
                r
            })
            .collect();
        // constraints that fail even at the most favourable corner
        let hopeless = cons.iter().zip(&rest).any(|(c, r)| r[0] > c.bound);
        let empty_box = lo.iter().zip(&hi).any(|(l, h)| l > h);
        let cur = lo.clone();
        LatticePoints {
            system,
            touching,
            rest,
            partial: vec![vec![0; cons.len()]; dim + 1],
            cur,
            lo,
            hi,
            depth: 0,
            done: hopeless || empty_box,
        }
    }

    /// Points whose first coordinate equals `first`.
    pub(crate) fn with_first(system: &'a InequalitySystem, bounds: &[u32], first: u32) -> Self {
        let mut lo = vec![0; bounds.len()];
        let mut hi = bounds.to_vec();
        lo[0] = first;
        hi[0] = hi[0].min(first);
        LatticePoints::new(system, lo, hi)
    }

    /// `Ok` if `x_d = v` keeps every touched constraint satisfiable;
    /// `Err(true)` if every larger `v` fails as well.
    fn try_place(&self, d: usize, v: u32) -> std::result::Result<(), bool> {
        let cons = self.system.constraints();
        let mut failed = false;
        for &c in &self.touching[d] {
            let coeff = cons[c].coeffs[d];
            let p = self.partial[d][c] + coeff * i64::from(v);
            if p + self.rest[c][d + 1] > cons[c].bound {
                if coeff > 0 {
                    return Err(true);
                }
                failed = true;
            }
        }
        if failed {
            Err(false)
        } else {
            Ok(())
        }
    }
}

impl Iterator for LatticePoints<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let dim = self.system.dim();
        if self.done {
            return None;
        }
        if dim == 0 {
            self.done = true;
            return Some(Vec::new());
        }
        loop {
            let d = self.depth;
            if self.cur[d] > self.hi[d] {
                if d == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                self.cur[d - 1] += 1;
                continue;
            }
            let v = self.cur[d];
            match self.try_place(d, v) {
                Ok(()) => {
                    if d + 1 == dim {
                        let out = self.cur.clone();
                        self.cur[d] += 1;
                        return Some(out);
                    }
                    let cons = self.system.constraints();
                    let (head, tail) = self.partial.split_at_mut(d + 1);
                    for (c, slot) in tail[0].iter_mut().enumerate() {
                        *slot = head[d][c] + cons[c].coeffs[d] * i64::from(v);
                    }
                    self.depth += 1;
                    self.cur[d + 1] = self.lo[d + 1];
                }
                Err(true) => self.cur[d] = self.hi[d] + 1,
                Err(false) => self.cur[d] += 1,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apery::tuples_in_box;
    use crate::polytope::{coordinate_bounds, core_polytope};

    fn brute(a: u32, bs: &[u32], side: u32) -> Vec<Vec<u32>> {
        let sys = core_polytope(a, bs).unwrap();
        tuples_in_box(a, side).map(|t| t.coords().to_vec()).filter(|x| sys.contains(x)).collect()
    }

    #[test]
    fn matches_box_scan() {
        for (a, bs) in [(3u32, vec![8u32]), (3, vec![4]), (4, vec![7]), (5, vec![7, 8]), (4, vec![6, 9]), (5, vec![9])] {
            let sys = core_polytope(a, &bs).unwrap();
            let bounds = coordinate_bounds(a, &bs).unwrap();
            let got: Vec<_> = enumerate_lattice_points(&sys, &bounds).collect();
            assert_eq!(got, brute(a, &bs, 10), "a={a} bs={bs:?}");
        }
    }

    #[test]
    fn points_of_3_4() {
        let sys = core_polytope(3, &[4]).unwrap();
        let got: Vec<_> = enumerate_lattice_points(&sys, &[1, 2]).collect();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn first_coordinate_slices_partition_the_points() {
        let sys = core_polytope(5, &[12]).unwrap();
        let bounds = coordinate_bounds(5, &[12]).unwrap();
        let all = enumerate_lattice_points(&sys, &bounds).count();
        let sliced: usize = (0..=bounds[0]).map(|v| LatticePoints::with_first(&sys, &bounds, v).count()).sum();
        assert_eq!(all, sliced);
    }

    #[test]
    fn infeasible_and_trivial() {
        let mut sys = InequalitySystem::new(2);
        sys.push_sparse(&[(1, 1)], -1);
        assert_eq!(enumerate_lattice_points(&sys, &[3, 3]).count(), 0);
        let sys = InequalitySystem::new(0);
        assert_eq!(enumerate_lattice_points(&sys, &[]).collect::<Vec<_>>(), vec![Vec::<u32>::new()]);
    }
}
