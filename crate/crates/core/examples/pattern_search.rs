//! Classical and consecutive pattern occurrences, with witnesses.
//!
//!     cargo run --example pattern_search -- 1534627 12345 3142 ~213 ~321

use permchain::pattern::{self, Pattern};
use permchain::{Permutation, Result};

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (p, pats) = match args.split_first() {
        Some((p, rest)) if !rest.is_empty() => (p.clone(), rest.to_vec()),
        _ => ("1534627".to_string(), ["12345", "3142", "~213", "~321"].map(String::from).to_vec()),
    };
    let p: Permutation = p.parse()?;
    println!("permutation {}", p.to_compact_string());
    for text in &pats {
        let pat: Pattern = text.parse()?;
        match pattern::contains(&p, &pat) {
            Some(occ) => println!(
                "{pat:>6}: first occurrence at {occ} (values {:?}), {} in total",
                occ.values_in(p.values()),
                pattern::count_occurrences(&p, &pat)
            ),
            None => println!("{pat:>6}: avoided"),
        }
    }
    Ok(())
}
