//! Numerical sets ↔ partitions: the profile walk, hooks and conjugation.
//!
//! ```bash
//! cargo run --example profile_bijection
//! ```
use corelattice::partition::{phi, phi_inverse};
use corelattice::{NumericalSet, Partition};

fn main() -> corelattice::Result<()> {
    let t: NumericalSet = "0,1,4,5,7,→".parse()?;
    let lambda = phi(&t);
    println!("{t}  ->  {lambda}");
    print!("{}", lambda.render_hooks());
    println!("hook set {:?}", lambda.hooks().set);

    // conjugate partition <-> dual set
    let mu = lambda.conjugate();
    println!("\nconjugate {mu}  <-  {}", t.dual());
    assert_eq!(phi(&t.dual()), mu);

    // a-cores are exactly the partitions whose set is stabilised by a
    for a in 2..8 {
        println!("{a}-core? {:<5}  {a} in A(T)? {}", lambda.is_core(a)?, t.atom_monoid().contains(a));
    }

    let p: Partition = "(5,3,3,1)".parse()?;
    println!("\n{p} has set {}", phi_inverse(&p));
    Ok(())
}
