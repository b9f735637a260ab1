//! Permutations avoiding chains of patterns.
//!
//! A permutation `π` avoids the chain `(τ1 : τ2 : … : τk)` when `π^i`
//! avoids every pattern of level `i`. This crate provides
//!
//! * [`Permutation`] with composition, powers, inverse and direct sum,
//! * classical and consecutive [`Pattern`] search,
//! * [`Chain`] parsing and avoidance reports,
//! * a pruned, deterministic parallel enumerator over `S_n`,
//! * constructive generators for `S_n(231,1432:231)` and
//!   `S_n(213,312:~213)`,
//! * exact closed forms for both counts,
//! * verification suites tying the three counting routes together, and
//! * the `permchain` command-line front end.
//!
//! ```
//! use permchain::{Chain, Permutation};
//!
//! let chain: Chain = "231,1432:231".parse().unwrap();
//! let pi: Permutation = "1325467".parse().unwrap();
//! assert!(chain.is_avoided_by(&pi));
//! assert_eq!(permchain::count_avoiders(6, &chain, 1), 25);
//! ```
//!
//! Counting extends to `n = 0`, where the empty permutation is the single
//! avoider of every chain.

pub mod chain;
pub mod cli;
pub mod closed;
pub mod enumerate;
pub mod error;
pub mod pattern;
pub mod perm;
pub mod sequence;
pub mod structural;
pub mod verify;

pub use chain::{avoids_chain, parse_chain, strongly_avoids, AvoidanceReport, Chain, LevelCheck};
pub use enumerate::{avoiders, count_avoiders, enumerate_avoiders, Avoiders};
pub use error::{Error, Result};
pub use pattern::{Flavor, Occurrence, Pattern};
pub use perm::Permutation;
pub use sequence::{sequence, CountSequence, KnownChain, Method};
pub use structural::{StructuralForms, TrichotomyTag};
