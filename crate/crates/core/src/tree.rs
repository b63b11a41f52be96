//! The tree of numerical semigroups.
//!
//! ℕ is the root, and the children of `S` are `S ∖ {g}` for each minimal
//! generator `g > F(S)`. Every numerical semigroup appears exactly once, at
//! depth equal to its genus.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::antiatom::{p_value_within, Budget};
use crate::bits;
use crate::error::{Error, Result};
use crate::json;
use crate::numset::NumericalSemigroup;

/// Deepest level [`build_tree`] and [`genus_census`] will visit.
pub const MAX_TREE_GENUS: u32 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Annotations {
    pub m_size: usize,
    pub p_value: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub semigroup: NumericalSemigroup,
    pub genus: u32,
    pub generators: Vec<u32>,
    /// Minimal generators above the Frobenius number.
    pub effective_generators: Vec<u32>,
    /// Index of the parent in [`SemigroupTree::nodes`]; `None` for the root.
    pub parent: Option<usize>,
    pub annotations: Option<Annotations>,
}

#[derive(Clone, Debug)]
pub struct SemigroupTree {
    /// Level by level; within a level, ordered by generator list.
    pub nodes: Vec<TreeNode>,
    /// `levels[g]` is the index range of genus `g`.
    pub levels: Vec<std::ops::Range<usize>>,
}

impl SemigroupTree {
    pub fn level(&self, g: u32) -> &[TreeNode] {
        &self.nodes[self.levels[g as usize].clone()]
    }

    pub fn census(&self) -> Vec<u64> {
        self.levels.iter().map(|r| r.len() as u64).collect()
    }

    pub fn node_json(&self, i: usize) -> Value {
        let n = &self.nodes[i];
        let mut v = json!({
            "gens": n.generators,
            "genus": n.genus,
            "parent": n.parent.map(|p| self.nodes[p].generators.clone()),
        });
        if let Some(a) = n.annotations {
            v["M"] = json!(a.m_size);
            v["P"] = json::u64(a.p_value);
        }
        v
    }

    /// One JSON object per node, one per line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for i in 0..self.nodes.len() {
            out.push_str(&self.node_json(i).to_string());
            out.push('\n');
        }
        out
    }

    /// Graphviz rendering, one column per genus.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph semigroups {\n  rankdir=LR;\n  node [shape=box];\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let mut label = format!("{:?}", n.semigroup);
            if let Some(a) = n.annotations {
                let _ = write!(label, "\\n|M(S)|={}\\nP(S)={}", a.m_size, a.p_value);
            }
            let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
        }
        for (i, n) in self.nodes.iter().enumerate() {
            if let Some(p) = n.parent {
                let _ = writeln!(out, "  n{p} -> n{i};");
            }
        }
        out.push_str("}\n");
        out
    }
}

fn check_genus(max_genus: u32) -> Result<()> {
    if max_genus > MAX_TREE_GENUS {
        return Err(Error::BudgetExceeded { what: "genus", value: max_genus, cap: MAX_TREE_GENUS });
    }
    Ok(())
}

fn node(semigroup: NumericalSemigroup, genus: u32, parent: Option<usize>, annotate: bool) -> Result<TreeNode> {
    let annotations = if annotate {
        let m_size = semigroup.missing_pairs().len();
        // 2^|M| is at most 2^(F-1) <= 2^(2g-2), fine at tree depths
        let p_value = p_value_within(&semigroup, Budget(u32::MAX))?;
        Some(Annotations { m_size, p_value })
    } else {
        None
    };
    Ok(TreeNode {
        generators: semigroup.minimal_generators(),
        effective_generators: semigroup.effective_generators(),
        semigroup,
        genus,
        parent,
        annotations,
    })
}

/// Breadth-first construction down to `max_genus`, optionally annotating
/// each node with `|M(S)|` and `P(S)`.
pub fn build_tree(max_genus: u32, annotate: bool) -> Result<SemigroupTree> {
    check_genus(max_genus)?;
    let mut nodes = vec![node(NumericalSemigroup::naturals(), 0, None, annotate)?];
    let mut levels = vec![0..1];
    for g in 1..=max_genus {
        let prev = levels[g as usize - 1].clone();
        let mut next = Vec::new();
        for p in prev {
            for &e in &nodes[p].effective_generators {
                let child = nodes[p].semigroup.remove_generator(e)?;
                next.push((child, p));
            }
        }
        next.sort_by_cached_key(|(s, _)| s.minimal_generators());
        let start = nodes.len();
        for (s, p) in next {
            nodes.push(node(s, g, Some(p), annotate)?);
        }
        levels.push(start..nodes.len());
    }
    Ok(SemigroupTree { nodes, levels })
}

/// Effective generators of the semigroup with member mask `mask` over
/// `[0, f]` and multiplicity `m`: they lie in `(f, f + m]`.
fn effective_mask(mask: u64, f: u32, m: u32) -> impl Iterator<Item = u32> {
    (f + 1..=f + m).filter(move |&s| {
        let mut rest = mask & !1;
        while rest != 0 {
            let x = rest.trailing_zeros();
            if bits::has(mask, f, s - x) {
                return false;
            }
            rest &= rest - 1;
        }
        true
    })
}

/// Number of semigroups of each genus `0..=max_genus`, by a depth-first walk
/// of the tree on word-sized masks.
pub fn genus_census(max_genus: u32) -> Result<Vec<u64>> {
    check_genus(max_genus)?;
    let mut counts = vec![0u64; max_genus as usize + 1];
    counts[0] = 1;
    if max_genus == 0 {
        return Ok(counts);
    }
    // (mask, frobenius, multiplicity, genus); F <= 2g - 1 keeps masks in a word
    let mut stack = vec![(0b1u64, 1u32, 2u32, 1u32)];
    while let Some((mask, f, m, g)) = stack.pop() {
        counts[g as usize] += 1;
        if g == max_genus {
            continue;
        }
        for e in effective_mask(mask, f, m) {
            // members f+1..e-1 become explicit, e becomes the new Frobenius number
            let between = bits::low(e - 1) & !bits::low(f);
            let child = mask | between;
            let cm = if e == m { e + 1 } else { m };
            stack.push((child, e, cm, g + 1));
        }
    }
    Ok(counts)
}

/// The labels of the first six levels as printed alongside the tree:
/// generators, `|M(S)|`, `P(S)`.
pub const PRINTED_LABELS: [(&[u32], usize, u64); 27] = [
    (&[1], 0, 1),
    (&[2, 3], 0, 1),
    (&[2, 5], 0, 1),
    (&[3, 4, 5], 1, 2),
    (&[2, 7], 0, 1),
    (&[3, 4], 0, 1),
    (&[3, 5, 7], 1, 2),
    (&[4, 5, 6, 7], 2, 3),
    (&[2, 9], 0, 1),
    (&[3, 5], 0, 1),
    (&[3, 7, 8], 2, 2),
    (&[4, 5, 6], 0, 1),
    (&[4, 5, 7], 1, 2),
    (&[4, 6, 7, 9], 2, 2),
    (&[5, 6, 7, 8, 9], 4, 6),
    (&[2, 11], 0, 1),
    (&[3, 7, 11], 1, 2),
    (&[3, 8, 10], 2, 2),
    (&[4, 5, 11], 2, 2),
    (&[4, 6, 7], 0, 1),
    (&[4, 6, 9, 11], 2, 2),
    (&[4, 7, 9, 10], 3, 4),
    (&[5, 6, 7, 8], 0, 1),
    (&[5, 6, 7, 9], 1, 2),
    (&[5, 6, 8, 9], 2, 2),
    (&[5, 7, 8, 9, 11], 3, 6),
    (&[6, 7, 8, 9, 10, 11], 4, 10),
];

/// One row of the comparison between computed and printed labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelRow {
    pub generators: Vec<u32>,
    pub genus: u32,
    pub computed: Annotations,
    pub printed: Option<(usize, u64)>,
}

impl LabelRow {
    pub fn matches(&self) -> bool {
        self.printed == Some((self.computed.m_size, self.computed.p_value))
    }
}

/// Annotated genus 0–5 levels next to the printed labels.
pub fn compare_printed_labels() -> Result<Vec<LabelRow>> {
    let tree = build_tree(5, true)?;
    let rows = tree
        .nodes
        .iter()
        .map(|n| {
            let printed = PRINTED_LABELS.iter().find(|(g, _, _)| *g == n.generators.as_slice()).map(|&(_, m, p)| (m, p));
            LabelRow {
                generators: n.generators.clone(),
                genus: n.genus,
                computed: n.annotations.expect("annotated"),
                printed,
            }
        })
        .collect();
    Ok(rows)
}

/// Whether the tree has no repeated semigroup.
pub fn has_duplicates(tree: &SemigroupTree) -> bool {
    let mut seen = HashSet::new();
    !tree.nodes.iter().all(|n| seen.insert(n.semigroup.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_levels() {
        let t = build_tree(3, false).unwrap();
        assert_eq!(t.census(), vec![1, 1, 2, 4]);
        let g2: Vec<_> = t.level(2).iter().map(|n| n.generators.clone()).collect();
        assert_eq!(g2, vec![vec![2, 5], vec![3, 4, 5]]);
        assert_eq!(t.nodes[0].effective_generators, vec![1]);
        assert!(!has_duplicates(&t));
    }

    #[test]
    fn census() {
        assert_eq!(genus_census(0).unwrap(), vec![1]);
        // n_g for g = 0..=12
        assert_eq!(
            genus_census(12).unwrap(),
            vec![1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592]
        );
        assert_eq!(build_tree(9, false).unwrap().census(), genus_census(9).unwrap());
        assert!(genus_census(31).is_err());
    }

    #[test]
    fn printed_labels() {
        let rows = compare_printed_labels().unwrap();
        assert_eq!(rows.len(), 27);
        assert!(rows.iter().all(|r| r.printed.is_some()));
        let bad: Vec<_> = rows.iter().filter(|r| !r.matches()).map(|r| r.generators.clone()).collect();
        // the printed |M| for ⟨5,6,7,8,9⟩ is 4; M = {1,2,3} there
        assert_eq!(bad, vec![vec![5, 6, 7, 8, 9]]);
        let s = rows.iter().find(|r| r.generators == [5, 6, 7, 8, 9]).unwrap();
        assert_eq!(s.computed, Annotations { m_size: 3, p_value: 6 });
    }

    #[test]
    fn json_lines() {
        let t = build_tree(1, true).unwrap();
        let text = t.to_json_lines();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], r#"{"M":0,"P":1,"gens":[1],"genus":0,"parent":null}"#);
        assert_eq!(lines[1], r#"{"M":0,"P":1,"gens":[2,3],"genus":1,"parent":[1]}"#);
        assert!(t.to_dot().contains("n0 -> n1"));
    }
}
