//! Which numerical sets have a given atom monoid?
//!
//! ```bash
//! cargo run --release --example anti_atom
//! ```
use corelattice::antiatom::{anti_atom, backelin_bound, classify_small_m, count_semigroups_by_frobenius, family_r, gamma};
use corelattice::NumericalSemigroup;

fn main() -> corelattice::Result<()> {
    let s: NumericalSemigroup = "0,4,→".parse()?;
    let r = anti_atom(&s)?;
    println!("P({s}) = {}  |M(S)| = {}", r.p_value, r.m_size);
    for w in &r.witnesses {
        println!("  A({w}) = {}", w.atom_monoid());
    }

    for gens in [&[3, 5][..], &[4, 6, 9, 11], &[5, 7, 9, 11, 13]] {
        let s = NumericalSemigroup::from_generators(gens)?;
        let c = classify_small_m(&s)?;
        println!("<{gens:?}>: class {}, P={}", c.class, c.p_value);
    }

    let r11 = family_r(11)?;
    println!("\nR_11 = {r11}, P = {}", anti_atom(&r11)?.p_value);

    println!("\n  N  gamma_N        S(N)  bound");
    for n in 1..=16 {
        println!("{n:>3}  {:<12} {:>5}  {:>5}", gamma(n)?.to_string(), count_semigroups_by_frobenius(n)?, backelin_bound(n));
    }
    Ok(())
}
