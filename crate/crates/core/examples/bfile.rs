//! Write a count sequence as a b-file (`n a(n)` per line) to stdout.
//!
//!     cargo run --example bfile -- "231,1432:231" 1 60 closed > b.txt

use permchain::{parse_chain, sequence, Method, Result};

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let chain = parse_chain(args.next().as_deref().unwrap_or("231,1432:231"))?;
    let lo: usize = args.next().map_or(1, |s| s.parse().expect("min n"));
    let hi: usize = args.next().map_or(30, |s| s.parse().expect("max n"));
    let method: Method = args.next().as_deref().unwrap_or("closed").parse()?;

    let seq = sequence(&chain, lo, hi, method, 4)?;
    for (n, count) in &seq.entries {
        println!("{n} {count}");
    }
    Ok(())
}
