//! Simultaneous (a, b)-cores as integer points of a polytope.
//!
//! ```bash
//! cargo run --release --example core_polytope -- 5 7
//! ```
use corelattice::polytope::{anderson_count, armstrong_mean, core_polytope, core_region, olsson_stanton_max};

fn main() -> corelattice::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a, bs) = match args.split_first() {
        Some((&a, bs)) if !bs.is_empty() => (a, bs.to_vec()),
        _ => (3, vec![8]),
    };

    println!("({a}, {bs:?})-core polytope:");
    print!("{}", core_polytope(a, &bs)?);
    let region = core_region(a, &bs)?;
    println!("bounding box {:?}", region.bounds);

    for x in region.tuples().take(10) {
        println!("  {x}  size {}", x.size());
    }

    let s = region.stats(1);
    println!("count {}  max {} at {}  mean {}", s.count, s.max_size, s.argmax, s.mean());
    if let [b] = bs[..] {
        println!(
            "closed forms: count {}  max {}  mean {}",
            anderson_count(a, b),
            olsson_stanton_max(a, b),
            armstrong_mean(a, b)
        );
    }

    // adding a third modulus only cuts the polytope down
    let tighter = core_region(4, &[7, 9])?;
    println!("\n(4,7,9)-cores: {} (vs {} (4,7)-cores)", tighter.count(), core_region(4, &[7])?.count());
    Ok(())
}
