//! Lazy and parallel enumeration of chain avoiders.
//!
//!     cargo run --release --example enumerate_avoiders -- "213,312:~213" 6 4

use std::time::Instant;

use permchain::{avoiders, count_avoiders, enumerate_avoiders, parse_chain, Result};

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let chain = parse_chain(args.next().as_deref().unwrap_or("213,312:~213"))?;
    let n: usize = args.next().map_or(5, |s| s.parse().expect("n"));
    let workers: usize = args.next().map_or(4, |s| s.parse().expect("workers"));

    // The iterator is lazy; take the first few without visiting the rest.
    let first: Vec<String> = avoiders(n, &chain).take(5).map(|p| p.to_compact_string()).collect();
    println!("first avoiders of {chain} in S_{n}: {}", first.join(" "));

    let all = enumerate_avoiders(n, &chain, workers);
    println!("{} avoiders in total", all.len());

    for m in 1..=n + 3 {
        let start = Instant::now();
        let count = count_avoiders(m, &chain, workers);
        println!("n={m:<2} {count:>8}  ({:.1?})", start.elapsed());
    }
    Ok(())
}
