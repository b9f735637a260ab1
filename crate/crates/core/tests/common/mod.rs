//! Brute-force oracles. Nothing here goes through the library's search,
//! power or enumeration code; only the `Permutation` constructor and its
//! `values()` accessor are shared.

#![allow(dead_code)]

use itertools::Itertools;
use permchain::Permutation;

/// All of `S_n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return vec![Permutation::empty()];
    }
    (1..=n)
        .permutations(n)
        .map(|v| Permutation::from_one_line(v).unwrap())
        .collect()
}

/// Parses a digit string or comma form.
pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn order_isomorphic(values: &[usize], word: &[usize]) -> bool {
    (0..word.len()).all(|a| (0..word.len()).all(|b| (values[a] < values[b]) == (word[a] < word[b])))
}

/// Every occurrence of `word` in `seq` as 1-based position vectors, in
/// lexicographic order, by scanning all index subsets.
pub fn occurrences_oracle(seq: &[usize], word: &[usize], consecutive: bool) -> Vec<Vec<usize>> {
    let k = word.len();
    if k > seq.len() {
        return Vec::new();
    }
    (0..seq.len())
        .combinations(k)
        .filter(|idx| !consecutive || idx.windows(2).all(|w| w[1] == w[0] + 1))
        .filter(|idx| {
            let vals: Vec<usize> = idx.iter().map(|&i| seq[i]).collect();
            order_isomorphic(&vals, word)
        })
        .map(|idx| idx.into_iter().map(|i| i + 1).collect())
        .collect()
}

pub fn contains_oracle(seq: &[usize], word: &[usize], consecutive: bool) -> bool {
    !occurrences_oracle(seq, word, consecutive).is_empty()
}

/// `p^k` by direct index chasing.
pub fn power_oracle(p: &[usize], k: usize) -> Vec<usize> {
    (1..=p.len())
        .map(|i| (0..k).fold(i, |x, _| p[x - 1]))
        .collect()
}

/// A pattern as (word, consecutive) parsed from `~213` / `231` text.
pub fn pattern_text(s: &str) -> (Vec<usize>, bool) {
    let (consecutive, digits) = match s.strip_prefix('~') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let word = digits.chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
    (word, consecutive)
}

/// Chain avoidance with levels given as text pattern lists, `"-"` for none.
pub fn chain_oracle(p: &[usize], levels: &[&[&str]]) -> bool {
    levels.iter().enumerate().all(|(i, level)| {
        let power = power_oracle(p, i + 1);
        level.iter().all(|pat| {
            let (word, consecutive) = pattern_text(pat);
            !contains_oracle(&power, &word, consecutive)
        })
    })
}

/// Unpruned filter of all of `S_n`.
pub fn avoiders_oracle(n: usize, levels: &[&[&str]]) -> Vec<Permutation> {
    all_perms(n)
        .into_iter()
        .filter(|p| chain_oracle(p.values(), levels))
        .collect()
}

pub const CHAIN_231: &[&[&str]] = &[&["231", "1432"], &["231"]];
pub const CHAIN_213: &[&[&str]] = &[&["213", "312"], &["~213"]];

/// Unimodal permutations of `[n]`, built from the set of entries left of
/// `n`; `2^(n-1)` of them for `n >= 1`.
pub fn unimodal_perms(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return vec![Permutation::empty()];
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << (n - 1) {
        let left: Vec<usize> = (1..n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let right: Vec<usize> = (1..n).rev().filter(|v| mask >> (v - 1) & 1 == 0).collect();
        let mut values = left;
        values.push(n);
        values.extend(right);
        out.push(Permutation::from_one_line(values).unwrap());
    }
    out.sort();
    out
}

/// f(n) from the recurrence with f(0) = 1, f(1) = 1, f(2) = 2, computed
/// directly in u64.
pub fn f_table(max: usize) -> Vec<u64> {
    let mut f = vec![1u64, 1, 2];
    for n in 3..=max {
        let ceil = ((n - 1) as u64).div_ceil(2);
        f.push(ceil + f[n - 1] + f[n - 2]);
    }
    f.truncate(max + 1);
    f
}
