//! Exact counts from the closed forms, far beyond brute-force range.
//!
//!     cargo run --example closed_forms -- 200

use permchain::closed;

fn main() -> permchain::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(100, |s| s.parse().expect("n"));

    println!("Lucas numbers: {:?}", (0..10).map(closed::lucas).collect::<Vec<_>>());
    for m in [2, 3, 10, 30, n] {
        let f = closed::f_closed(m)?;
        let g = closed::g_closed(m)?;
        assert_eq!(f, closed::f_recurrence(m)?);
        assert_eq!(g, closed::g_recurrence(m)?);
        println!("n={m:<4} 231,1432:231 -> {f}");
        println!("       213,312:~213 -> {g}");
    }
    Ok(())
}
