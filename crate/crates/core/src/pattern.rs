//! Classical and consecutive pattern containment.
//!
//! Searches run over any slice of distinct values, not only normalized
//! permutations, so the enumerator can test partial prefixes directly.
//!
//! Classical search extends an index vector slot by slot. Each pattern slot
//! carries the two earlier slots that bound it in value (its nearest smaller
//! and nearest larger predecessor in the pattern), so a candidate entry is
//! accepted or rejected with two comparisons. Positions are tried in
//! increasing order, which makes the first hit the lexicographically least
//! position vector.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    Classical,
    /// Occurrences must occupy adjacent positions.
    Consecutive,
}

/// Value window for one pattern slot, as indices of earlier slots.
#[derive(Debug, Clone, Copy)]
struct SlotBounds {
    below: Option<usize>,
    above: Option<usize>,
}

/// A pattern word together with its flavor.
#[derive(Clone)]
pub struct Pattern {
    word: Permutation,
    flavor: Flavor,
    bounds: Box<[SlotBounds]>,
    /// Slots listed in increasing order of their pattern value.
    by_value: Box<[usize]>,
}

impl Pattern {
    pub fn new(word: Permutation, flavor: Flavor) -> Self {
        let w = word.values();
        let bounds = (0..w.len())
            .map(|j| {
                let mut below: Option<usize> = None;
                let mut above: Option<usize> = None;
                for l in 0..j {
                    if w[l] < w[j] && below.is_none_or(|b| w[l] > w[b]) {
                        below = Some(l);
                    }
                    if w[l] > w[j] && above.is_none_or(|a| w[l] < w[a]) {
                        above = Some(l);
                    }
                }
                SlotBounds { below, above }
            })
            .collect();
        let by_value = word.inverse().values().iter().map(|&i| i - 1).collect();
        Pattern {
            word,
            flavor,
            bounds,
            by_value,
        }
    }

    pub fn classical(word: Permutation) -> Self {
        Pattern::new(word, Flavor::Classical)
    }

    pub fn consecutive(word: Permutation) -> Self {
        Pattern::new(word, Flavor::Consecutive)
    }

    pub fn word(&self) -> &Permutation {
        &self.word
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_classical(&self) -> bool {
        self.flavor == Flavor::Classical
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

impl PartialEq for Pattern {
    fn eq(&self, other: &Self) -> bool {
        self.flavor == other.flavor && self.word == other.word
    }
}

impl Eq for Pattern {}

impl Hash for Pattern {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.flavor.hash(state);
        self.word.hash(state);
    }
}

impl PartialOrd for Pattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pattern {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.flavor, &self.word).cmp(&(other.flavor, &other.word))
    }
}

impl fmt::Display for Pattern {
    /// `231` for classical, `~213` for consecutive.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.flavor == Flavor::Consecutive {
            f.write_str("~")?;
        }
        f.write_str(&self.word.to_compact_string())
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pattern_at(s, 0)
    }
}

/// Parses a pattern token; `offset` locates `token` within a larger input
/// for error reporting.
pub(crate) fn parse_pattern_at(token: &str, offset: usize) -> Result<Pattern> {
    let lead = token.chars().take_while(|c| c.is_whitespace()).count();
    let body = token.trim();
    let (flavor, digits, start) = match body.strip_prefix('~') {
        Some(rest) => (Flavor::Consecutive, rest, offset + lead + 1),
        None => (Flavor::Classical, body, offset + lead),
    };
    if digits.is_empty() {
        return Err(Error::parse(start, "expected a pattern word"));
    }
    let mut values = Vec::with_capacity(digits.len());
    for (i, c) in digits.chars().enumerate() {
        match c.to_digit(10) {
            Some(d) if d > 0 => values.push(d as usize),
            _ => return Err(Error::parse(start + i, format!("invalid pattern digit {c:?}"))),
        }
    }
    if values.len() > 9 {
        return Err(Error::parse(start + 9, "pattern words are limited to length 9"));
    }
    let word = Permutation::from_one_line(values).map_err(|e| match e {
        Error::NotABijection { index, .. } => Error::parse(
            start + index - 1,
            format!("pattern {digits:?} is not a permutation word"),
        ),
        other => other,
    })?;
    Ok(Pattern::new(word, flavor))
}

/// 1-based positions of an occurrence, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    positions: Vec<usize>,
}

impl Occurrence {
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// The entries of `seq` at this occurrence.
    pub fn values_in(&self, seq: &[usize]) -> Vec<usize> {
        self.positions.iter().map(|&i| seq[i - 1]).collect()
    }

    fn from_zero_based(indices: &[usize]) -> Self {
        Occurrence {
            positions: indices.iter().map(|&i| i + 1).collect(),
        }
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Lexicographically least occurrence of `pat` in `p`, if any.
pub fn contains(p: &Permutation, pat: &Pattern) -> Option<Occurrence> {
    find_in(p.values(), pat)
}

pub fn avoids(p: &Permutation, pat: &Pattern) -> bool {
    !occurs_in(p.values(), pat)
}

pub fn count_occurrences(p: &Permutation, pat: &Pattern) -> u64 {
    let mut count = 0u64;
    let _ = visit(p.values(), pat, None, &mut |_| {
        count += 1;
        ControlFlow::<()>::Continue(())
    });
    count
}

/// Every occurrence of `pat` in `p`, in lexicographic order.
pub fn occurrences(p: &Permutation, pat: &Pattern) -> Vec<Occurrence> {
    let mut out = Vec::new();
    let _ = visit(p.values(), pat, None, &mut |idx| {
        out.push(Occurrence::from_zero_based(idx));
        ControlFlow::<()>::Continue(())
    });
    out
}

/// Witness search over an arbitrary sequence of distinct values.
pub fn find_in(seq: &[usize], pat: &Pattern) -> Option<Occurrence> {
    match visit(seq, pat, None, &mut |idx| {
        ControlFlow::Break(Occurrence::from_zero_based(idx))
    }) {
        ControlFlow::Break(occ) => Some(occ),
        ControlFlow::Continue(()) => None,
    }
}

/// Containment decision over an arbitrary sequence of distinct values.
pub fn occurs_in(seq: &[usize], pat: &Pattern) -> bool {
    if pat.flavor == Flavor::Classical && pat.word.values() == [2, 3, 1] {
        return !avoids_231_by_stack(seq);
    }
    visit(seq, pat, None, &mut |_| ControlFlow::Break(())).is_break()
}

/// True if some occurrence of `pat` uses the last entry of `seq`.
///
/// With classical patterns this is the incremental test for a prefix that
/// was known to avoid `pat` before its last entry was appended.
pub fn occurs_ending_at_last(seq: &[usize], pat: &Pattern) -> bool {
    match seq.len().checked_sub(1) {
        Some(last) => visit(seq, pat, Some(last), &mut |_| ControlFlow::Break(())).is_break(),
        None => false,
    }
}

/// Stack-sorting test: `seq` avoids 231 iff one pass through a stack sorts it.
pub fn avoids_231_by_stack(seq: &[usize]) -> bool {
    let mut stack: Vec<usize> = Vec::with_capacity(seq.len());
    let mut last_out = 0usize;
    for &v in seq {
        while let Some(&top) = stack.last() {
            if top < v {
                if top < last_out {
                    return false;
                }
                last_out = top;
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(v);
    }
    while let Some(top) = stack.pop() {
        if top < last_out {
            return false;
        }
        last_out = top;
    }
    true
}

/// Calls `f` with the 0-based index vector of each occurrence, in
/// lexicographic order, until `f` breaks. When `last` is given the final
/// pattern slot is pinned to that index.
fn visit<B>(
    seq: &[usize],
    pat: &Pattern,
    last: Option<usize>,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let k = pat.len();
    let n = seq.len();
    if k > n || k == 0 {
        return ControlFlow::Continue(());
    }
    match pat.flavor {
        Flavor::Consecutive => {
            let mut window: Vec<usize> = Vec::with_capacity(k);
            let starts = match last {
                Some(l) if l + 1 < k => return ControlFlow::Continue(()),
                Some(l) => l + 1 - k..=l + 1 - k,
                None => 0..=n - k,
            };
            for start in starts {
                let w = &seq[start..start + k];
                if pat.by_value.windows(2).all(|s| w[s[0]] < w[s[1]]) {
                    window.clear();
                    window.extend(start..start + k);
                    f(&window)?;
                }
            }
            ControlFlow::Continue(())
        }
        Flavor::Classical => {
            if last.is_some_and(|l| l + 1 < k) {
                return ControlFlow::Continue(());
            }
            let mut chosen = vec![0usize; k];
            extend(seq, pat, last, 0, 0, &mut chosen, f)
        }
    }
}

fn extend<B>(
    seq: &[usize],
    pat: &Pattern,
    last: Option<usize>,
    slot: usize,
    from: usize,
    chosen: &mut [usize],
    f: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let k = chosen.len();
    if slot == k {
        return f(chosen);
    }
    let bounds = pat.bounds[slot];
    let lo = bounds.below.map(|s| seq[chosen[s]]);
    let hi = bounds.above.map(|s| seq[chosen[s]]);
    // The remaining slots need room to the right (or must end at `last`).
    let (range_end, forced) = match last {
        Some(l) if slot + 1 == k => (l + 1, Some(l)),
        Some(l) => (l - (k - 1 - slot) + 1, None),
        None => (seq.len() - (k - 1 - slot), None),
    };
    let range_start = forced.map_or(from, |l| l.max(from));
    for i in range_start..range_end {
        let v = seq[i];
        if lo.is_some_and(|lo| v <= lo) || hi.is_some_and(|hi| v >= hi) {
            continue;
        }
        chosen[slot] = i;
        extend(seq, pat, last, slot + 1, i + 1, chosen, f)?;
    }
    ControlFlow::Continue(())
}
