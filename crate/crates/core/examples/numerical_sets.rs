//! Numerical sets, their atom monoids and duals.
//!
//! ```bash
//! cargo run --example numerical_sets
//! ```
use corelattice::{NumericalSemigroup, NumericalSet};

fn main() -> corelattice::Result<()> {
    let t: NumericalSet = "0,1,4,5,7,->".parse()?;
    println!("T        = {t}");
    println!("gaps     = {:?}", t.gaps());
    println!("F(T)     = {}   genus = {}", t.frobenius_number(), t.genus());
    println!("A(T)     = {}", t.atom_monoid());
    println!("T*       = {}", t.dual());
    println!("semigroup? {}  symmetric? {}", t.is_semigroup(), t.is_symmetric());

    // semigroups from generators
    let s = NumericalSemigroup::from_generators(&[3, 5, 7])?;
    println!("\n<3,5,7>  = {s}");
    println!("min gens = {:?}", s.minimal_generators());
    println!("M(S)     = {:?}", s.missing_pairs());

    // a set that is not closed
    match "0,1,3,->".parse::<NumericalSemigroup>() {
        Ok(_) => unreachable!(),
        Err(e) => println!("\n0,1,3,→ rejected: {e}"),
    }
    Ok(())
}
