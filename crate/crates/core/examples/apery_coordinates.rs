//! Apéry coordinates of a-cores and the counting formulas built on them.
//!
//! ```bash
//! cargo run --example apery_coordinates
//! ```
use corelattice::apery::{apery_of, count_acores_by_max_hook, count_acores_by_parts, tuples_in_box};
use corelattice::partition::phi;
use corelattice::AperyTuple;

fn main() -> corelattice::Result<()> {
    let t = "0,1,4,5,7,→".parse()?;
    let x = apery_of(&t, 4)?;
    println!("{} has Apéry tuple {x}", phi(&t));
    println!("size {} (profile gives {})", x.size(), phi(&t).size());
    println!("conjugate tuple {}", x.conjugate());

    let y: AperyTuple = "a=3;[5,2]".parse()?;
    println!("\n{y}: set {}, size {}, semigroup? {}", y.to_set(), y.size(), y.is_semigroup());

    // 3-cores with coordinates <= 2, smallest first
    let mut cores: Vec<_> = tuples_in_box(3, 2).collect();
    cores.sort_by_key(|c| c.size());
    for c in cores.iter().take(6) {
        println!("  {c}  {}", phi(&c.to_set()));
    }

    println!("\n4-cores with largest hook 4·2+1: {}", count_acores_by_max_hook(4, 2, 1)?);
    println!("5-cores with exactly 3 parts: {}", count_acores_by_parts(5, 3, false)?);
    Ok(())
}
