//! Exhaustive search for chain avoiders in `S_n`.
//!
//! Permutations are generated in lexicographic order. A prefix is abandoned
//! as soon as it contains a classical level-1 pattern; every other
//! constraint is checked on complete permutations only. Parallel runs split
//! the search by first entry into `n` independent units and concatenate the
//! results in first-entry order, so the output does not depend on the
//! worker count.
//!
//! The empty permutation avoids every chain, so `n = 0` yields one avoider.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use crate::chain::Chain;
use crate::pattern::{self, Pattern};
use crate::perm::Permutation;

/// Streaming iterator over the avoiders of a chain, in lexicographic order.
pub struct Avoiders<'a> {
    n: usize,
    chain: &'a Chain,
    prune: Vec<&'a Pattern>,
    prefix: Vec<usize>,
    used: Vec<bool>,
    /// Next value to try at each depth.
    cursor: Vec<usize>,
    first_max: usize,
    done: bool,
}

impl<'a> Avoiders<'a> {
    pub fn new(n: usize, chain: &'a Chain) -> Self {
        Avoiders::with_first_entries(n, chain, 1, n)
    }

    /// Only permutations whose first entry lies in `first_min..=first_max`.
    pub fn with_first_entries(n: usize, chain: &'a Chain, first_min: usize, first_max: usize) -> Self {
        let mut cursor = vec![1; n.max(1)];
        cursor[0] = first_min.max(1);
        Avoiders {
            n,
            chain,
            prune: chain.first_level_classical().collect(),
            prefix: Vec::with_capacity(n),
            used: vec![false; n + 1],
            cursor,
            first_max: first_max.min(n),
            done: false,
        }
    }

    fn prefix_ok(&self) -> bool {
        self.prune
            .iter()
            .all(|pat| !pattern::occurs_ending_at_last(&self.prefix, pat))
    }
}

impl Iterator for Avoiders<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(Permutation::empty());
        }
        loop {
            let depth = self.prefix.len();
            let max = if depth == 0 { self.first_max } else { self.n };
            let mut advanced = false;
            while self.cursor[depth] <= max {
                let v = self.cursor[depth];
                self.cursor[depth] += 1;
                if self.used[v] {
                    continue;
                }
                self.prefix.push(v);
                if self.prefix_ok() {
                    self.used[v] = true;
                    advanced = true;
                    break;
                }
                self.prefix.pop();
            }
            if !advanced {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                let v = self.prefix.pop().expect("non-empty prefix");
                self.used[v] = false;
                continue;
            }
            if self.prefix.len() < self.n {
                self.cursor[self.prefix.len()] = 1;
                continue;
            }
            let candidate = Permutation::from_vec_unchecked(self.prefix.clone());
            let v = self.prefix.pop().expect("full prefix");
            self.used[v] = false;
            if self.chain.is_avoided_by_after_pruning(&candidate) {
                return Some(candidate);
            }
        }
    }
}

/// Streaming, single-worker enumeration.
pub fn avoiders(n: usize, chain: &Chain) -> Avoiders<'_> {
    Avoiders::new(n, chain)
}

/// All avoiders of `chain` in `S_n`, in lexicographic order, using up to
/// `workers` threads.
pub fn enumerate_avoiders(n: usize, chain: &Chain, workers: usize) -> Vec<Permutation> {
    if n == 0 || workers <= 1 {
        return avoiders(n, chain).collect();
    }
    run_units(n, workers, |first| {
        Avoiders::with_first_entries(n, chain, first, first).collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// `|S_n(chain)|` without materializing the avoiders.
pub fn count_avoiders(n: usize, chain: &Chain, workers: usize) -> u64 {
    if n == 0 || workers <= 1 {
        return avoiders(n, chain).count() as u64;
    }
    run_units(n, workers, |first| {
        Avoiders::with_first_entries(n, chain, first, first).count() as u64
    })
    .into_iter()
    .sum()
}

/// Runs one job per first entry `1..=n` on a pool of scoped threads and
/// returns the results indexed by first entry.
fn run_units<T: Send>(n: usize, workers: usize, job: impl Fn(usize) -> T + Sync) -> Vec<T> {
    let next = AtomicUsize::new(1);
    let mut results: Vec<(usize, T)> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers.min(n))
            .map(|_| {
                s.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let first = next.fetch_add(1, Ordering::Relaxed);
                        if first > n {
                            break;
                        }
                        done.push((first, job(first)));
                    }
                    done
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    });
    results.sort_by_key(|(first, _)| *first);
    results.into_iter().map(|(_, r)| r).collect()
}
