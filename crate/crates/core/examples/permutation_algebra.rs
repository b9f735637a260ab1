//! Composition, powers, inverses and direct sums.
//!
//!     cargo run --example permutation_algebra -- 1325467 3

use permchain::{Permutation, Result};

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let p: Permutation = args.next().as_deref().unwrap_or("1325467").parse()?;
    let k: usize = args.next().map_or(2, |s| s.parse().expect("k must be a non-negative integer"));

    println!("p          = {}", p.to_compact_string());
    println!("p^-1       = {}", p.inverse().to_compact_string());
    for i in 0..=k {
        println!("p^{i:<8} = {}", p.power(i).to_compact_string());
    }
    println!("p . p^-1   = {}", p.compose(&p.inverse())?.to_compact_string());

    let tail: Permutation = "21".parse()?;
    let sum = p.direct_sum(&tail);
    println!("p (+) 21   = {sum}");
    println!("(p (+) 21)^2 = {}", sum.power(2));
    println!("unimodal?  {}", p.is_unimodal());
    Ok(())
}
