//! Decide chain avoidance and show what each power contains.
//!
//!     cargo run --example check_chain -- 1325467 "231,1432:231"

use permchain::{parse_chain, Permutation, Result};

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let p: Permutation = args.next().as_deref().unwrap_or("1325467").parse()?;
    let chain = parse_chain(args.next().as_deref().unwrap_or("231,1432:231"))?;

    let report = chain.report(&p);
    println!("{} against {chain}", p.to_compact_string());
    for entry in &report.entries {
        let status = match &entry.witness {
            Some(w) => format!("contains at {w}"),
            None => "avoids".to_string(),
        };
        println!("  p^{} = {}  {}: {status}", entry.power, entry.power_perm.to_compact_string(), entry.pattern);
    }
    println!("{}", if report.verdict { "AVOIDS" } else { "CONTAINS" });
    Ok(())
}
