//! The tree of numerical semigroups, by genus.
//!
//! ```bash
//! cargo run --release --example semigroup_tree
//! cargo run --release --example semigroup_tree -- --dot | dot -Tsvg > tree.svg
//! ```
use corelattice::tree::{compare_printed_labels, build_tree, genus_census};

fn main() -> corelattice::Result<()> {
    if std::env::args().any(|a| a == "--dot") {
        print!("{}", build_tree(4, true)?.to_dot());
        return Ok(());
    }

    let tree = build_tree(4, true)?;
    for n in &tree.nodes {
        let a = n.annotations.unwrap();
        let indent = "  ".repeat(n.genus as usize);
        println!("{indent}<{:?}>  |M|={} P={}", n.generators, a.m_size, a.p_value);
    }

    println!("\nsemigroups per genus: {:?}", genus_census(20)?);

    for row in compare_printed_labels()?.iter().filter(|r| !r.matches()) {
        println!("label differs for {:?}: computed {:?}, printed {:?}", row.generators, row.computed, row.printed.unwrap());
    }
    Ok(())
}
