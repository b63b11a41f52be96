//! Executable checks of the counting theorems against independent
//! brute-force oracles. Each criterion yields a report made of named
//! checks; a criterion passes when all of its checks do.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::antiatom::{
    anti_atom_within, backelin_bound, classify_small_m, count_semigroups_by_frobenius_within, family_r,
    family_r_expected_m, gamma_within, p_value_within, semigroups_up_to_frobenius, Budget, SmallM,
};
use crate::apery::{
    apery_of, count_acores_by_max_hook, count_acores_by_parts, count_acores_max_hook_below, tuples_in_box,
    AperyTuple,
};
use crate::bits;
use crate::error::{Error, Result};
use crate::numset::sets_up_to_frobenius;
use crate::partition::{partitions_of, phi, phi_inverse};
use crate::polytope::{
    anderson_count, armstrong_mean, core_stats, count_oversemigroups, count_oversemigroups_by_genus,
    olsson_stanton_max, oversemigroups_closed_form, symmetric_oversemigroups, symmetric_overs3_closed_form,
    SizeStats,
};
use crate::tree::{compare_printed_labels, build_tree, genus_census, has_duplicates};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: u8,
    pub suite: &'static str,
    pub checks: Vec<Check>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "criterion": self.id,
            "suite": self.suite,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name, "passed": c.passed, "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }

    /// One line per check, indented under the verdict line.
    pub fn render(&self) -> String {
        let mut s = format!("{self}\n");
        for c in &self.checks {
            s.push_str(&format!("    [{}] {}: {}\n", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail));
        }
        s
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(
            f,
            "criterion {:>2} {:<17} {} ({} checks, {} failed)",
            self.id,
            self.suite,
            if failed == 0 { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed
        )
    }
}

/// Accumulates many cases into one check, keeping the first few failures.
struct Tally {
    name: String,
    cases: u64,
    failed: u64,
    examples: Vec<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally { name: name.into(), cases: 0, failed: 0, examples: Vec::new() }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < 3 {
                self.examples.push(what());
            }
        }
    }

    fn error(&mut self, e: Error) {
        self.case(false, || e.to_string());
    }

    fn finish(self) -> Check {
        let detail = if self.failed == 0 {
            format!("{} cases", self.cases)
        } else {
            format!("{} of {} failed; {}", self.failed, self.cases, self.examples.join("; "))
        };
        Check { name: self.name, passed: self.failed == 0 && self.cases > 0, detail }
    }
}

fn shown<T: fmt::Display>(r: &Result<T>) -> String {
    r.as_ref().map_or_else(|e| e.to_string(), |v| v.to_string())
}

fn shown_debug<T: fmt::Debug>(r: &Result<T>) -> String {
    r.as_ref().map_or_else(|e| e.to_string(), |v| format!("{v:?}"))
}

fn single(name: &str, passed: bool, detail: String) -> Check {
    Check { name: name.into(), passed, detail }
}

pub const SUITES: [(&str, u8); 12] = [
    ("anderson", 1),
    ("olsson-stanton", 2),
    ("armstrong", 3),
    ("partition-oracle", 4),
    ("oversemigroups", 5),
    ("strata", 6),
    ("symmetric", 7),
    ("counting", 8),
    ("structure", 9),
    ("antiatom", 10),
    ("gamma", 11),
    ("tree", 12),
];

/// Every accepted suite name: the twelve criteria, `figure2` and `all`.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).chain(["figure2", "all"]).collect()
}

pub fn run_criterion(id: u8) -> Result<CriterionReport> {
    let suite = SUITES
        .iter()
        .find(|(_, i)| *i == id)
        .map(|(n, _)| *n)
        .ok_or_else(|| Error::OutOfRange(format!("criteria are numbered 1 to 12, got {id}")))?;
    let checks = match id {
        1 => anderson(),
        2 => olsson_stanton(),
        3 => armstrong(),
        4 => partition_oracle(),
        5 => oversemigroups(),
        6 => strata(),
        7 => symmetric(),
        8 => counting(),
        9 => structure(),
        10 => antiatom(),
        11 => gamma(),
        _ => tree(),
    };
    Ok(CriterionReport { id, suite, checks })
}

/// Runs a suite by name.
pub fn run_suite(name: &str) -> Result<Vec<CriterionReport>> {
    match name {
        "all" => (1..=12).map(run_criterion).collect(),
        "figure2" => Ok(vec![CriterionReport { id: 10, suite: "figure2", checks: vec![figure2()] }]),
        _ => match SUITES.iter().find(|(n, _)| *n == name) {
            Some(&(_, id)) => Ok(vec![run_criterion(id)?]),
            None => Err(Error::Parse(format!("unknown suite `{name}`; expected one of {}", suite_names().join(", ")))),
        },
    }
}

// ---------------------------------------------------------------------------
// 1–3: simultaneous (a, b)-cores

fn coprime_pairs(max: u32) -> Vec<(u32, u32)> {
    (2..=max).flat_map(|a| (a + 1..=max).map(move |b| (a, b))).filter(|&(a, b)| a.gcd(&b) == 1).collect()
}

fn pair_stats() -> Vec<((u32, u32), Result<SizeStats>)> {
    coprime_pairs(12).into_iter().map(|(a, b)| ((a, b), core_stats(a, &[b], 1))).collect()
}

fn anderson() -> Vec<Check> {
    let mut t = Tally::new("count = C(a+b,a)/(a+b), coprime 2 <= a < b <= 12");
    for ((a, b), s) in pair_stats() {
        match s {
            Ok(s) => {
                let want = anderson_count(a, b);
                t.case(BigUint::from(s.count) == want, || format!("({a},{b}): {} vs {want}", s.count));
            }
            Err(e) => t.error(e),
        }
    }
    // the remaining pairs in range have infinitely many simultaneous cores
    let mut r = Tally::new("non-coprime 2 <= a < b <= 12 rejected as unbounded");
    for a in 2..=12u32 {
        for b in a + 1..=12 {
            if a.gcd(&b) != 1 {
                let res = core_stats(a, &[b], 1);
                r.case(
                    matches!(res, Err(Error::UnboundedCone { .. }) | Err(Error::DivisibleByModulus { .. })),
                    || format!("({a},{b}) accepted"),
                );
            }
        }
    }
    vec![t.finish(), r.finish()]
}

fn olsson_stanton() -> Vec<Check> {
    let mut t = Tally::new("max = (a²-1)(b²-1)/24 with a unique maximiser");
    let mut spot = None;
    for ((a, b), s) in pair_stats() {
        match s {
            Ok(s) => {
                let want = olsson_stanton_max(a, b);
                if (a, b) == (3, 8) {
                    spot = Some(s.max_size);
                }
                t.case(BigUint::from(s.max_size) == want && s.argmax_count == 1, || {
                    format!("({a},{b}): max {} vs {want}, {} maximisers", s.max_size, s.argmax_count)
                });
            }
            Err(e) => t.error(e),
        }
    }
    vec![t.finish(), single("(3,8) max = 21", spot == Some(21), spot.map_or("none".into(), |m| m.to_string()))]
}

fn armstrong() -> Vec<Check> {
    let mut t = Tally::new("mean = (a+b+1)(a-1)(b-1)/24 exactly");
    let mut spot = None;
    for ((a, b), s) in pair_stats() {
        match s {
            Ok(s) => {
                let want = armstrong_mean(a, b);
                if (a, b) == (3, 8) {
                    spot = Some(s.mean());
                }
                t.case(s.mean() == want, || format!("({a},{b}): {} vs {want}", s.mean()));
            }
            Err(e) => t.error(e),
        }
    }
    let seven = BigRational::from_integer(7.into());
    let ok = spot.as_ref() == Some(&seven);
    vec![t.finish(), single("(3,8) mean = 7", ok, spot.map_or("none".into(), |m| m.to_string()))]
}

// ---------------------------------------------------------------------------
// 4: every partition of size <= 60, filtered by hook lengths

const ORACLE_SIZE: u32 = 60;

/// Calls `f(size, hook set mask)` for every partition of size at most `max`,
/// hooks computed cell by cell from the Young diagram.
fn for_each_hook_mask(max: u32, f: &mut dyn FnMut(u32, u64)) {
    fn rec(parts: &mut Vec<u32>, size: u32, max: u32, f: &mut dyn FnMut(u32, u64)) {
        f(size, hook_mask(parts));
        let cap = parts.last().copied().unwrap_or(max).min(max - size);
        for p in 1..=cap {
            parts.push(p);
            rec(parts, size + p, max, f);
            parts.pop();
        }
    }
    rec(&mut Vec::new(), 0, max, f);
}

fn hook_mask(parts: &[u32]) -> u64 {
    let width = parts.first().copied().unwrap_or(0) as usize;
    let mut conj = [0u32; 64];
    for &p in parts {
        for c in conj.iter_mut().take(p as usize) {
            *c += 1;
        }
    }
    let mut mask = 0u64;
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row as usize {
            debug_assert!(j < width);
            let h = row - j as u32 + conj[j] - i as u32 - 1;
            mask |= 1 << h;
        }
    }
    mask
}

#[derive(Default)]
struct Acc {
    count: u64,
    max: u64,
    sum: u64,
}

fn partition_oracle() -> Vec<Check> {
    let pairs: Vec<(u32, u32)> = coprime_pairs(ORACLE_SIZE)
        .into_iter()
        .filter(|&(a, b)| olsson_stanton_max(a, b) <= BigUint::from(ORACLE_SIZE))
        .collect();
    let mut accs: Vec<Acc> = pairs.iter().map(|_| Acc::default()).collect();
    let keys: Vec<u64> = pairs.iter().map(|&(a, b)| (1 << a) | (1 << b)).collect();
    let mut seen = 0u64;
    for_each_hook_mask(ORACLE_SIZE, &mut |size, mask| {
        seen += 1;
        for (acc, key) in accs.iter_mut().zip(&keys) {
            if mask & key == 0 {
                acc.count += 1;
                acc.max = acc.max.max(u64::from(size));
                acc.sum += u64::from(size);
            }
        }
    });
    let mut t = Tally::new(format!("count, max, mean over all {seen} partitions of size <= {ORACLE_SIZE}"));
    for ((a, b), acc) in pairs.iter().zip(&accs) {
        match core_stats(*a, &[*b], 1) {
            Ok(s) => {
                let mean = BigRational::new(BigInt::from(acc.sum), BigInt::from(acc.count));
                t.case(acc.count == s.count && acc.max == s.max_size && mean == s.mean(), || {
                    format!("({a},{b}): oracle {}/{}/{mean} vs {}/{}/{}", acc.count, acc.max, s.count, s.max_size, s.mean())
                });
            }
            Err(e) => t.error(e),
        }
    }
    vec![t.finish()]
}

// ---------------------------------------------------------------------------
// 5–7: oversemigroups

/// Semigroups containing `⟨a, b⟩`, by closure-checking every subset of the
/// gaps of `⟨a, b⟩` (taken as the gaps of a candidate).
fn oversemigroups_by_subsets(a: u32, b: u32) -> u64 {
    let s = crate::numset::NumericalSemigroup::from_generators(&[a, b]).expect("coprime");
    let gaps = s.gaps().to_vec();
    let Some(f) = s.frobenius() else { return 1 };
    let base = s.mask().expect("small").0;
    let mut count = 0u64;
    for u in 0..1u64 << gaps.len() {
        let mut mask = base;
        for (i, &g) in gaps.iter().enumerate() {
            if (u >> i) & 1 == 1 {
                mask |= 1 << g;
            }
        }
        if bits::is_closed(mask, f) {
            count += 1;
        }
    }
    count
}

fn oversemigroups() -> Vec<Check> {
    let o38 = count_oversemigroups(3, 8);
    let mut checks = vec![single("O(⟨3,8⟩) = 10", o38 == Ok(10), shown(&o38))];

    let mut t = Tally::new("O(⟨3,6k+ℓ⟩) = (3k+ℓ)(k+1), k <= 10");
    for k in 0..=10u32 {
        for l in [1u32, 2, 4, 5] {
            let b = 6 * k + l;
            let want = u64::from((3 * k + l) * (k + 1));
            match count_oversemigroups(3, b) {
                Ok(o) => t.case(o == want, || format!("b={b}: {o} vs {want}")),
                Err(e) => t.error(e),
            }
        }
    }
    checks.push(t.finish());

    let chart: [(u32, [u64; 4]); 6] = [
        (1, [24, 30, 11, 1]),
        (3, [24, 42, 23, 4]),
        (5, [24, 54, 39, 9]),
        (7, [24, 66, 59, 17]),
        (9, [24, 78, 83, 29]),
        (11, [24, 90, 111, 45]),
    ];
    let mut t = Tally::new("O(⟨4,12k+ℓ⟩) matches the cubic chart, k <= 5");
    for k in 0..=5u32 {
        for (l, c) in chart {
            let b = 12 * k + l;
            let kk = u64::from(k);
            let want = c[0] * kk * kk * kk + c[1] * kk * kk + c[2] * kk + c[3];
            match count_oversemigroups(4, b) {
                Ok(o) => t.case(o == want, || format!("b={b}: {o} vs {want}")),
                Err(e) => t.error(e),
            }
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("O(⟨2,2k+1⟩) = k+1, k <= 20");
    for k in 0..=20u32 {
        match count_oversemigroups(2, 2 * k + 1) {
            Ok(o) => t.case(o == u64::from(k) + 1, || format!("k={k}: {o}")),
            Err(e) => t.error(e),
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("lattice count = closure-checked subset search, F(⟨a,b⟩) <= 23");
    for (a, b) in coprime_pairs(25) {
        if (a - 1) * (b - 1) > 24 {
            continue;
        }
        match count_oversemigroups(a, b) {
            Ok(o) => {
                let brute = oversemigroups_by_subsets(a, b);
                t.case(o == brute, || format!("⟨{a},{b}⟩: {o} vs {brute}"));
            }
            Err(e) => t.error(e),
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("O(⟨a,b⟩) increasing in b, a in {2,3,4}, b <= 40");
    for a in 2..=4u32 {
        let series: Vec<(u32, u64)> = (a + 1..=40)
            .filter(|b| b.gcd(&a) == 1)
            .filter_map(|b| count_oversemigroups(a, b).ok().map(|o| (b, o)))
            .collect();
        for w in series.windows(2) {
            t.case(w[0].1 <= w[1].1, || format!("a={a}: O(b={})={} > O(b={})={}", w[0].0, w[0].1, w[1].0, w[1].1));
        }
        for &(b, o) in &series {
            if let Some(cf) = oversemigroups_closed_form(a, b) {
                t.case(o == cf, || format!("⟨{a},{b}⟩ closed form {cf} vs {o}"));
            }
        }
    }
    checks.push(t.finish());
    checks
}

fn strata() -> Vec<Check> {
    let mut t = Tally::new("O_n(⟨3,6k+ℓ⟩) piecewise formula, k <= 6");
    for k in 0..=6u32 {
        for l in [1u32, 2, 4, 5] {
            let b = 6 * k + l;
            match count_oversemigroups_by_genus(3, b) {
                Ok(s) => {
                    let total = count_oversemigroups(3, b).unwrap_or(0);
                    let mism = s.mismatches();
                    t.case(mism.is_empty() && s.total() == total, || format!("b={b}: (n, enumerated, formula) {mism:?}"));
                }
                Err(e) => t.error(e),
            }
        }
    }
    let mut u = Tally::new("O'_n(⟨4,12k+1⟩) by middle Apéry entry, k <= 3");
    for k in 0..=3u32 {
        let b = 12 * k + 1;
        match count_oversemigroups_by_genus(4, b) {
            Ok(s) => {
                let total = count_oversemigroups(4, b).unwrap_or(0);
                let mism = s.mismatches();
                u.case(mism.is_empty() && s.total() == total, || format!("b={b}: (n, enumerated, formula) {mism:?}"));
            }
            Err(e) => u.error(e),
        }
    }
    vec![t.finish(), u.finish()]
}

fn symmetric() -> Vec<Check> {
    let mut t = Tally::new("symmetric oversemigroups of ⟨3,6k+ℓ⟩ = 3k + 3ℓ/2 - ℓ²/6 - 1/3, k <= 10");
    let mut u = Tally::new("symmetric count = 2·O - C");
    for k in 0..=10u32 {
        for l in [1u32, 2, 4, 5] {
            let b = 6 * k + l;
            let want = symmetric_overs3_closed_form(u64::from(k), u64::from(l));
            match (symmetric_oversemigroups(3, b), count_oversemigroups(3, b)) {
                (Ok(sym), Ok(o)) => {
                    let got = BigRational::from_integer(BigInt::from(sym));
                    t.case(got == want, || format!("b={b}: {sym} vs {want}"));
                    let two_o_c = BigInt::from(2 * o) - BigInt::from(anderson_count(3, b));
                    u.case(BigInt::from(sym) == two_o_c, || format!("b={b}: {sym} vs {two_o_c}"));
                }
                (Err(e), _) | (_, Err(e)) => t.error(e),
            }
        }
    }
    vec![t.finish(), u.finish()]
}

// ---------------------------------------------------------------------------
// 8: counting a-cores in a box

fn counting() -> Vec<Check> {
    let mut hook_exact = Tally::new("a-cores with largest hook ak+ℓ = (k+2)^(ℓ-1)(k+1)^(a-ℓ-1)");
    let mut hook_below = Tally::new("a-cores with largest hook < ak = (k+1)^(a-1)");
    let mut parts_exact = Tally::new("a-cores with g parts = C(g+a-2, a-2)");
    let mut parts_most = Tally::new("a-cores with <= g parts = C(g+a-1, a-1)");
    let mut berg = Tally::new("a-cores with g parts = (a-1)-cores with <= g parts");
    const K: u32 = 8;
    // per a: histograms of Frobenius number and genus over [0, K+1]^(a-1),
    // read from the sets themselves rather than from coordinate formulas
    let mut by_genus: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
    for a in 2..=6u32 {
        let mut frob: HashMap<Option<u32>, u64> = HashMap::new();
        let mut genus = vec![0u64; (K as usize + 1) * (a as usize - 1) + a as usize];
        for t in tuples_in_box(a, K + 1) {
            let set = t.to_set();
            *frob.entry(set.frobenius()).or_insert(0) += 1;
            genus[set.genus()] += 1;
        }
        for k in 0..=K {
            for l in 1..a {
                let got = frob.get(&Some(a * k + l)).copied().unwrap_or(0);
                match count_acores_by_max_hook(a, k, l) {
                    Ok(want) => hook_exact.case(BigUint::from(got) == want, || format!("a={a} k={k} ℓ={l}: {got} vs {want}")),
                    Err(e) => hook_exact.error(e),
                }
            }
            let below: u64 = frob.iter().filter(|(f, _)| f.is_none_or(|f| f < a * k)).map(|(_, c)| c).sum();
            match count_acores_max_hook_below(a, k) {
                Ok(want) => hook_below.case(BigUint::from(below) == want, || format!("a={a} k={k}: {below} vs {want}")),
                Err(e) => hook_below.error(e),
            }
        }
        for g in 0..=K {
            let exact = genus[g as usize];
            let most: u64 = genus[..=g as usize].iter().sum();
            if a >= 3 {
                match count_acores_by_parts(a, g, false) {
                    Ok(want) => parts_exact.case(BigUint::from(exact) == want, || format!("a={a} g={g}: {exact} vs {want}")),
                    Err(e) => parts_exact.error(e),
                }
            } else {
                parts_exact.case(exact == 1, || format!("a=2 g={g}: {exact}"));
            }
            match count_acores_by_parts(a, g, true) {
                Ok(want) => parts_most.case(BigUint::from(most) == want, || format!("a={a} g={g}: {most} vs {want}")),
                Err(e) => parts_most.error(e),
            }
        }
        by_genus.insert(a, genus);
    }
    for a in 3..=6u32 {
        for g in 0..=K as usize {
            let exact = by_genus[&a][g];
            let most: u64 = by_genus[&(a - 1)][..=g].iter().sum();
            berg.case(exact == most, || format!("a={a} g={g}: {exact} vs {most}"));
        }
    }
    vec![hook_exact.finish(), hook_below.finish(), parts_exact.finish(), parts_most.finish(), berg.finish()]
}

// ---------------------------------------------------------------------------
// 9: the profile bijection and its companions

fn structure() -> Vec<Check> {
    let mut round = Tally::new("φ⁻¹(φ(T)) = T and φ injective, F <= 16");
    let mut images = HashSet::new();
    for t in sets_up_to_frobenius(16) {
        let l = phi(&t);
        round.case(phi_inverse(&l) == t && images.insert(l.clone()), || format!("{t} ↦ {l}"));
    }
    let mut back = Tally::new("φ(φ⁻¹(λ)) = λ, |λ| <= 16");
    for n in 0..=16 {
        for l in partitions_of(n) {
            back.case(phi(&phi_inverse(&l)) == l, || format!("{l}"));
        }
    }

    let mut multiset = Tally::new("hook multiset = {n - t : n ∉ T, t ∈ T, n > t}, F <= 14");
    let mut hookset = Tally::new("hook set = ℕ ∖ A(T), F <= 14");
    let mut square = Tally::new("φ(T*) = conjugate of φ(T), F <= 14");
    let mut selfconj = Tally::new("T symmetric ⟺ φ(T) self-conjugate, F <= 14");
    for t in sets_up_to_frobenius(14) {
        let l = phi(&t);
        let hooks = l.hooks();
        let f = t.frobenius().map_or(0, |f| f + 1);
        let mut diffs: Vec<u32> = (0..f)
            .filter(|&n| !t.contains(n))
            .flat_map(|n| (0..n).filter(|&s| t.contains(s)).map(move |s| n - s))
            .collect();
        diffs.sort_unstable();
        multiset.case(diffs == hooks.multiset, || format!("{t}"));
        let atom = t.atom_monoid();
        hookset.case(hooks.set == atom.gaps(), || format!("{t}: {:?} vs {:?}", hooks.set, atom.gaps()));
        square.case(phi(&t.dual()) == l.conjugate(), || format!("{t}"));
        selfconj.case(t.is_symmetric() == l.is_self_conjugate(), || format!("{t}"));
    }

    let mut conj = Tally::new("Apéry conjugation formula = Apéry tuple of the dual, [0,4]^(a-1), a <= 5");
    let mut size = Tally::new("size formulas = Young diagram size, [0,4]^(a-1), a <= 5");
    for a in 2..=5u32 {
        for t in tuples_in_box(a, 4) {
            let set = t.to_set();
            match apery_of(&set.dual(), a) {
                Ok(d) => conj.case(d == t.conjugate(), || format!("{t}: {} vs {d}", t.conjugate())),
                Err(e) => conj.error(e),
            }
            let young = phi(&set).size();
            size.case(t.size() == young && t.size_expanded() == young, || {
                format!("{t}: {} / {} vs {young}", t.size(), t.size_expanded())
            });
        }
    }

    let mut three = Tally::new("3-cores: φ⁻¹(λ) or φ⁻¹(conjugate λ) is a semigroup, [0,15]²");
    for x1 in 0..=15 {
        for x2 in 0..=15 {
            let t = AperyTuple::new(3, vec![x1, x2]).expect("a = 3");
            let set = t.to_set();
            let conj_set = phi_inverse(&phi(&set).conjugate());
            three.case(set.is_semigroup() || conj_set.is_semigroup(), || format!("{t}"));
        }
    }

    let mut second = Tally::new("∩_i 𝒫(a, ak+i) = [0,k]^(a-1), a <= 5, k <= 4");
    for a in 2..=5u32 {
        for k in 0..=4u32 {
            let bs: Vec<u32> = (1..a).map(|i| a * k + i).collect();
            match crate::polytope::core_region(a, &bs) {
                Ok(r) => {
                    let pts: Vec<Vec<u32>> = r.points().collect();
                    let cube: Vec<Vec<u32>> = tuples_in_box(a, k).map(|t| t.coords().to_vec()).collect();
                    second.case(pts == cube, || format!("a={a} k={k}: {} points vs {}", pts.len(), cube.len()));
                }
                Err(e) => second.error(e),
            }
        }
    }

    vec![
        round.finish(),
        back.finish(),
        multiset.finish(),
        hookset.finish(),
        square.finish(),
        selfconj.finish(),
        conj.finish(),
        size.finish(),
        three.finish(),
        second.finish(),
    ]
}

// ---------------------------------------------------------------------------
// 10: the anti-atom problem

const ANTIATOM_F: u32 = 18;
const HOOK_ORACLE_F: u32 = 14;

fn antiatom() -> Vec<Check> {
    let unlimited = Budget(u32::MAX);
    let semigroups = semigroups_up_to_frobenius(ANTIATOM_F);
    let mut bounds = Tally::new(format!("1 <= P(S) <= 2^|M(S)| and |M| in {{0,1,2}} classes, F <= {ANTIATOM_F}"));
    let mut realised = BTreeSet::new();
    let mut witnesses = Tally::new(format!("witnesses lie in [S, S*], include S and S* ≠ S when not symmetric, F <= {ANTIATOM_F}"));
    for s in &semigroups {
        match classify_small_m(s) {
            Ok(c) => {
                if c.class == SmallM::TwoMissing {
                    realised.insert(c.p_value);
                }
                bounds.case(c.is_consistent(), || format!("{s}: {} |M|={} P={}", c.class, c.m_size, c.p_value));
            }
            Err(e) => bounds.error(e),
        }
        match anti_atom_within(s, unlimited) {
            Ok(r) => {
                let dual = s.dual();
                let between = r.witnesses.iter().all(|t| {
                    s.small_elements().all(|n| t.contains(n)) && t.small_elements().all(|n| dual.contains(n))
                });
                let has_both = r.witnesses.contains(s.as_set())
                    && (s.is_symmetric() || (dual != *s.as_set() && r.witnesses.contains(&dual)));
                witnesses.case(between && has_both && r.p_value == r.witnesses.len() as u64, || format!("{s}"));
            }
            Err(e) => witnesses.error(e),
        }
    }
    let both = realised.contains(&2) && realised.contains(&3);
    let realised_check = single("|M(S)| = 2 realises both P = 2 and P = 3", both, format!("{realised:?}"));

    // partitions grouped by hook set; hook sets read off Young diagrams
    let mut by_hooks: HashMap<Vec<u32>, u64> = HashMap::new();
    for t in sets_up_to_frobenius(HOOK_ORACLE_F) {
        *by_hooks.entry(phi(&t).hooks().set).or_insert(0) += 1;
    }
    let mut hooks = Tally::new(format!("P(S) = #partitions with hook set ℕ ∖ S, F <= {HOOK_ORACLE_F}"));
    for s in semigroups.iter().filter(|s| s.frobenius_number() <= i64::from(HOOK_ORACLE_F)) {
        let want = by_hooks.get(s.gaps()).copied().unwrap_or(0);
        match p_value_within(s, unlimited) {
            Ok(p) => hooks.case(p == want, || format!("{s}: {p} vs {want}")),
            Err(e) => hooks.error(e),
        }
    }

    let mut r = Tally::new("R_N: P = 2 and |M| = 2⌈(N-1)/4⌉, odd N in [11, 25]");
    for n in (11..=25).step_by(2) {
        match family_r(n).and_then(|s| anti_atom_within(&s, unlimited)) {
            Ok(rep) => {
                let want = family_r_expected_m(n);
                r.case(rep.p_value == 2 && rep.m_size == want, || {
                    format!("N={n}: P={} |M|={} (expected {want})", rep.p_value, rep.m_size)
                });
            }
            Err(e) => r.error(e),
        }
    }

    vec![bounds.finish(), realised_check, witnesses.finish(), hooks.finish(), r.finish(), figure2()]
}

fn figure2() -> Check {
    match compare_printed_labels() {
        Ok(rows) => {
            let mut t = Tally::new("(|M|, P) labels of the genus 0–5 tree (27 printed labels)");
            for row in &rows {
                t.case(row.matches(), || {
                    let gens: Vec<String> = row.generators.iter().map(u32::to_string).collect();
                    let printed = row.printed.map_or("nothing".into(), |(m, p)| format!("(|M|={m}, P={p})"));
                    format!(
                        "⟨{}⟩ computed (|M|={}, P={}) printed {printed}",
                        gens.join(","),
                        row.computed.m_size,
                        row.computed.p_value,
                    )
                });
            }
            let mut c = t.finish();
            if rows.len() != 27 {
                c.passed = false;
                c.detail = format!("{} nodes instead of 27; {}", rows.len(), c.detail);
            }
            c
        }
        Err(e) => single("printed tree labels", false, e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// 11: γ_N and S(N)

const GAMMA_N: u32 = 20;

fn strictly_decreasing(name: &str, series: &[(u32, BigRational)]) -> Check {
    let mut t = Tally::new(name);
    for w in series.windows(2) {
        let ((n0, v0), (n1, v1)) = (&w[0], &w[1]);
        t.case(v1 < v0, || format!("N={n0}: {v0}, N={n1}: {v1}"));
    }
    t.finish()
}

fn gamma() -> Vec<Check> {
    let budget = match Budget::from_env() {
        Ok(b) => b,
        Err(e) => return vec![single("budget", false, e.to_string())],
    };
    let mut gammas = Vec::new();
    let mut oracle = Tally::new("P(S_N) = #sets with F = N and A(T) = S_N (all 2^(N-1) sets), N <= 20");
    for n in 1..=GAMMA_N {
        match gamma_within(n, budget) {
            Ok(g) => {
                let trivial = (0..1u64 << (n - 1))
                    .filter(|&inner| bits::atom_is_trivial_below(bits::from_inner(inner, n), n))
                    .count() as u64;
                let p = g.clone() * BigRational::from_integer(BigInt::from(1u64 << (n - 1)));
                oracle.case(p == BigRational::from_integer(trivial.into()), || format!("N={n}: {p} vs {trivial}"));
                gammas.push((n, g));
            }
            Err(e) => oracle.error(e),
        }
    }
    let mut checks = vec![oracle.finish()];
    let tail: Vec<_> = gammas.iter().filter(|(n, _)| *n >= 2).cloned().collect();
    checks.push(strictly_decreasing("γ_N strictly decreasing, N in [2, 20]", &tail));
    let band = gammas.iter().find(|(n, _)| *n == GAMMA_N).map(|(_, g)| g.clone());
    let lo = BigRational::new(48.into(), 100.into());
    let hi = BigRational::new(60.into(), 100.into());
    checks.push(match band {
        Some(g) => {
            let approx = decimal(&g);
            single("γ_20 in (0.48, 0.60)", g > lo && g < hi, format!("γ_20 = {g} ≈ {approx}"))
        }
        None => single("γ_20 in (0.48, 0.60)", false, "γ_20 not computed".into()),
    });

    let mut backelin = Tally::new("S(N) <= 4·2^⌊(N-1)/2⌋, N <= 20");
    let mut ratios = Vec::new();
    for n in 1..=GAMMA_N {
        match count_semigroups_by_frobenius_within(n, budget) {
            Ok(c) => {
                backelin.case(c <= backelin_bound(n), || format!("N={n}: {c} > {}", backelin_bound(n)));
                ratios.push((n, BigRational::new(BigInt::from(c), BigInt::from(1u64 << (n - 1)))));
            }
            Err(e) => backelin.error(e),
        }
    }
    checks.push(backelin.finish());
    let tail: Vec<_> = ratios.into_iter().filter(|(n, _)| *n >= 4).collect();
    checks.push(strictly_decreasing("S(N)/2^(N-1) strictly decreasing, N in [4, 20]", &tail));
    checks
}

/// Six decimal places, truncated.
fn decimal(r: &BigRational) -> String {
    let scaled = (r * BigRational::from_integer(1_000_000.into())).to_integer();
    let (q, m) = scaled.div_rem(&BigInt::from(1_000_000));
    format!("{q}.{:06}", m)
}

// ---------------------------------------------------------------------------
// 12: the semigroup tree

const TREE_ORACLE_GENUS: u32 = 8;

/// Gap sets of all semigroups of genus `g`, by choosing `g` gaps in
/// `[1, 2g-1]` and checking closure.
fn semigroups_of_genus(g: u32) -> HashSet<Vec<u32>> {
    if g == 0 {
        return HashSet::from([Vec::new()]);
    }
    let span = 2 * g - 1;
    let mut out = HashSet::new();
    for gaps in 0..1u64 << span {
        if gaps.count_ones() != g {
            continue;
        }
        let gapmask = gaps << 1;
        let f = 63 - gapmask.leading_zeros();
        let members = bits::low(f) & !gapmask;
        if bits::is_closed(members, f) {
            out.insert((1..=f).filter(|&n| (gapmask >> n) & 1 == 1).collect());
        }
    }
    out
}

fn tree() -> Vec<Check> {
    let census = genus_census(5);
    let want = vec![1u64, 1, 2, 4, 7, 12];
    let mut checks = vec![single("genus census 0–5 = 1,1,2,4,7,12", census.as_ref() == Ok(&want), shown_debug(&census))];
    match build_tree(TREE_ORACLE_GENUS, false) {
        Ok(t) => {
            let census_bfs = t.census();
            checks.push(single(
                "breadth-first levels agree with depth-first census, genus <= 8",
                genus_census(TREE_ORACLE_GENUS).as_ref() == Ok(&census_bfs),
                format!("{census_bfs:?}"),
            ));
            checks.push(single("no semigroup appears twice", !has_duplicates(&t), format!("{} nodes", t.nodes.len())));
            let mut levels = Tally::new("level g = all semigroups of genus g (gap-subset search), g <= 8");
            for g in 0..=TREE_ORACLE_GENUS {
                let ours: HashSet<Vec<u32>> = t.level(g).iter().map(|n| n.semigroup.gaps().to_vec()).collect();
                let brute = semigroups_of_genus(g);
                levels.case(ours == brute, || format!("g={g}: {} vs {}", ours.len(), brute.len()));
            }
            checks.push(levels.finish());
        }
        Err(e) => checks.push(single("tree to genus 8", false, e.to_string())),
    }
    checks
}
