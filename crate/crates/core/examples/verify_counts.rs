//! Cross-check brute force, the constructions and the closed forms.
//!
//!     cargo run --release --example verify_counts -- 9

use permchain::verify::{self, Suite};

fn main() -> permchain::Result<()> {
    let n_max: usize = std::env::args().nth(1).map_or(8, |s| s.parse().expect("max n"));
    let workers = std::thread::available_parallelism().map_or(1, |w| w.get());
    let reports = verify::run(Suite::All, n_max, workers)?;
    for r in &reports {
        println!("{r}\n");
    }
    let ok = reports.iter().all(|r| r.passed());
    println!("{}", if ok { "all suites pass" } else { "MISMATCH" });
    std::process::exit(if ok { 0 } else { 1 });
}
