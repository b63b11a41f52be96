//! Integer partitions, Young diagrams and hook lengths, and the profile walk
//! `φ` that identifies partitions with numerical sets.
//!
//! `φ(T)` walks `n = 0, 1, …, F(T)`, stepping right when `n ∈ T` and up when
//! `n ∉ T`. The region enclosed by this path, the vertical axis and the final
//! horizontal ray is the Young diagram, with row 1 at the top. Each gap of `T`
//! is an up-step and therefore a row; the row's length is the number of
//! right-steps taken before it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numset::NumericalSet;

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartsRepr", into = "PartsRepr")]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PartsRepr {
    parts: Vec<u32>,
}

impl TryFrom<PartsRepr> for Partition {
    type Error = Error;

    fn try_from(repr: PartsRepr) -> Result<Self> {
        Partition::new(repr.parts)
    }
}

impl From<Partition> for PartsRepr {
    fn from(p: Partition) -> Self {
        PartsRepr { parts: p.parts }
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of parts (rows).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The transpose: part `j` of the conjugate counts the parts `>= j`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Hook lengths of every cell, plus the hook set and multiset.
    pub fn hooks(&self) -> HookData {
        let conj = self.conjugate();
        let per_cell: Vec<Vec<u32>> = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| row - j + conj.parts[j as usize] - i as u32 - 1).collect())
            .collect();
        let mut multiset: Vec<u32> = per_cell.iter().flatten().copied().collect();
        multiset.sort_unstable();
        let mut set = multiset.clone();
        set.dedup();
        HookData { per_cell, multiset, set }
    }

    /// No hook length equals `a`; for hook sets this is equivalent to none
    /// being divisible by `a`.
    pub fn is_core(&self, a: u32) -> Result<bool> {
        if a == 0 {
            return Err(Error::BadModulus { min: 1, got: a });
        }
        Ok(self.hooks().set.binary_search(&a).is_err())
    }

    /// ASCII Young diagram with the hook length written in each cell.
    pub fn render_hooks(&self) -> String {
        let hooks = self.hooks();
        let w = hooks.set.last().map_or(1, |h| h.to_string().len());
        let border = |n: u32| {
            let mut s = String::from("+");
            for _ in 0..n {
                s.push_str(&"-".repeat(w + 1));
                s.push('+');
            }
            s
        };
        let mut out = String::new();
        for (i, row) in hooks.per_cell.iter().enumerate() {
            // the border above a row spans the longer of the two rows it separates
            let above = if i == 0 { row.len() } else { hooks.per_cell[i - 1].len() };
            out.push_str(&border(above.max(row.len()) as u32));
            out.push('\n');
            out.push('|');
            for h in row {
                out.push_str(&format!("{h:>w$} |", w = w));
            }
            out.push('\n');
        }
        if let Some(last) = hooks.per_cell.last() {
            out.push_str(&border(last.len() as u32));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected a parenthesized list, got `{s}`")))?;
        let parts = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad part `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The three views of a partition's hook lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookData {
    /// `per_cell[i][j]` is the hook length of the cell in row `i`, column `j`
    /// (both from 0, row 0 on top).
    pub per_cell: Vec<Vec<u32>>,
    /// All hook lengths, ascending, with repetition.
    pub multiset: Vec<u32>,
    /// Distinct hook lengths, ascending.
    pub set: Vec<u32>,
}

impl HookData {
    pub fn max(&self) -> Option<u32> {
        self.set.last().copied()
    }
}

/// The profile walk `φ`.
pub fn phi(t: &NumericalSet) -> Partition {
    let parts = t.gaps().iter().enumerate().rev().map(|(j, &g)| g - j as u32).collect();
    Partition { parts }
}

/// `φ⁻¹`: the gaps are the labels of the vertical profile steps.
pub fn phi_inverse(lambda: &Partition) -> NumericalSet {
    let gaps = lambda.parts.iter().rev().enumerate().map(|(j, &p)| p + j as u32).collect();
    NumericalSet::from_sorted_gaps(gaps)
}

/// Partitions of `n` in reverse lexicographic order, starting with `(n)`.
pub fn partitions_of(n: u32) -> PartitionsOf {
    PartitionsOf { next: Some(if n == 0 { Vec::new() } else { vec![n] }) }
}

pub struct PartitionsOf {
    next: Option<Vec<u32>>,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        // successor: strip trailing 1s, decrement the last part > 1 and
        // redistribute the freed amount in parts no larger than it
        let mut succ = cur.clone();
        let mut freed = 0u32;
        while succ.last() == Some(&1) {
            succ.pop();
            freed += 1;
        }
        if let Some(last) = succ.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let p = freed.min(cap);
                succ.push(p);
                freed -= p;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: cur })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> NumericalSet {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&set("0,1,4,5,7,→")), part("(4,2,2)"));
        assert_eq!(phi(&NumericalSet::naturals()), Partition::empty());
        assert_eq!(phi(&set("0,3,4,7,→")), part("(3,3,1,1)"));
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(phi_inverse(&part("(4,2,2)")), set("0,1,4,5,7,→"));
        assert_eq!(phi_inverse(&Partition::empty()), NumericalSet::naturals());
        assert_eq!(phi_inverse(&part("(3,3,1,1)")), set("0,3,4,7,→"));
    }

    #[test]
    fn hooks_of_422() {
        let h = part("(4,2,2)").hooks();
        assert_eq!(h.per_cell, vec![vec![6, 5, 2, 1], vec![3, 2], vec![2, 1]]);
        let mut expected = vec![6, 5, 2, 1, 3, 2, 2, 1];
        expected.sort_unstable();
        assert_eq!(h.multiset, expected);
        assert_eq!(h.set, vec![1, 2, 3, 5, 6]);
        assert_eq!(part("(5)").hooks().set, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn cores() {
        let l = part("(4,2,2)");
        assert!(l.is_core(4).unwrap());
        assert!(l.is_core(7).unwrap());
        assert!(!l.is_core(2).unwrap());
        assert!(l.is_core(0).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(part("(4,2,2)").conjugate(), part("(3,3,1,1)"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part("(5)").conjugate(), part("(1,1,1,1,1)"));
        assert!(part("(2,1)").is_self_conjugate());
    }

    #[test]
    fn parsing_and_json() {
        assert_eq!(part("()"), Partition::empty());
        assert_eq!(part("(4, 2, 2)").to_string(), "(4,2,2)");
        assert!("(2,3)".parse::<Partition>().is_err());
        assert!("(2,0)".parse::<Partition>().is_err());
        assert!("4,2".parse::<Partition>().is_err());
        let js = serde_json::to_string(&part("(4,2,2)")).unwrap();
        assert_eq!(js, r#"{"parts":[4,2,2]}"#);
        assert!(serde_json::from_str::<Partition>(r#"{"parts":[1,2]}"#).is_err());
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 0..=10
        let p: Vec<usize> = (0..=10).map(|n| partitions_of(n).count()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert!(partitions_of(6).all(|l| l.size() == 6));
        assert_eq!(partitions_of(60).count(), 966_467);
    }

    #[test]
    fn render() {
        let r = part("(4,2,2)").render_hooks();
        let expected = "\
+--+--+--+--+
|6 |5 |2 |1 |
+--+--+--+--+
|3 |2 |
+--+--+
|2 |1 |
+--+--+
";
        assert_eq!(r, expected);
    }
}
