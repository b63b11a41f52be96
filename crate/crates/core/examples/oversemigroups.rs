//! Numerical semigroups containing <a, b>, counted as lattice points.
//!
//! ```bash
//! cargo run --release --example oversemigroups
//! ```
use corelattice::polytope::{
    count_oversemigroups, count_oversemigroups_by_genus, oversemigroup_region, oversemigroups_closed_form,
    semigroup_core_ratio, symmetric_oversemigroups, symmetric_overs3_closed_form,
};

fn main() -> corelattice::Result<()> {
    let region = oversemigroup_region(3, 8)?;
    println!("semigroups containing <3,8>:");
    for x in region.tuples() {
        println!("  {x}  {}", x.to_set());
    }

    println!("\n  a   b   O(a,b)  closed form");
    for (a, b) in [(3, 8), (3, 13), (3, 20), (4, 13), (4, 27), (5, 12)] {
        let cf = oversemigroups_closed_form(a, b).map_or("-".to_string(), |v| v.to_string());
        println!("{a:>3} {b:>3} {:>8}  {cf}", count_oversemigroups(a, b)?);
    }

    let strata = count_oversemigroups_by_genus(3, 14)?;
    println!("\nby genus for <3,14>: {:?}", strata.enumerated);
    println!("mismatches against the piecewise formula: {:?}", strata.mismatches());

    println!("\nsymmetric oversemigroups of <3,14>: {} (formula {})", symmetric_oversemigroups(3, 14)?, symmetric_overs3_closed_form(2, 2));

    let table = semigroup_core_ratio(3, 40)?;
    let last = table.rows.last().unwrap();
    println!("\nO/C for <3,{}> = {} -> limit {}", last.b, last.ratio, table.limit);
    Ok(())
}
