//! Constructive generators for the two chain classes.
//!
//! `S_n(231,1432:231)` for `n >= 3` splits into three disjoint classes:
//!
//! * P1, `π(1) = n`: exactly `n (n-1) … (n-k+1) 1 2 … (n-k)` for
//!   `ceil(n/2) <= k <= n-1`; these are the inverses of the strongly
//!   312-avoiding permutations ending in 1, `(k+1) … n k … 1`.
//! * P2, `π(n) = n`: `σ ⊕ 1` with `σ` an avoider of size `n-1`.
//! * P3, `π(n-1) π(n) = n (n-1)`: `σ ⊕ 21` with `σ` of size `n-2`.
//!
//! `S_n(213,312:~213)` for `n >= 3` splits into the permutations starting
//! with 1, which are `1 ⊕ σ` for an avoider `σ` of size `n-1`, and the
//! class Q2 of those ending in 1: `2 3 … n 1` together with every
//! `σ n (n-1) τ 1` where `σ` increases and `τ` decreases.
//!
//! Generator output is always sorted lexicographically, so comparing with
//! the brute-force enumerator is plain list equality.

use crate::error::{Error, Result};
use crate::pattern::{self, Pattern};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrichotomyTag {
    /// `π(1) = n`
    StartsWithMax,
    /// `π(n) = n`
    EndsWithMax,
    /// `π(n-1) π(n) = n (n-1)`
    EndsMaxThenSecond,
}

/// Tags a member of `S_n(231,1432:231)`, `n >= 3`, with its class.
///
/// Returns [`Error::NotInTrichotomy`] when none of the three shapes holds,
/// which proves `p` is not an avoider.
pub fn classify_trichotomy(p: &Permutation) -> Result<TrichotomyTag> {
    let n = p.len();
    if n < 3 {
        return Err(Error::Domain {
            function: "classify_trichotomy",
            n,
            min: 3,
        });
    }
    let v = p.values();
    let starts = v[0] == n;
    let ends = v[n - 1] == n;
    let ends_pair = v[n - 2] == n && v[n - 1] == n - 1;
    debug_assert!(
        [starts, ends, ends_pair].iter().filter(|&&b| b).count() <= 1,
        "trichotomy shapes overlap for {p}"
    );
    if starts {
        Ok(TrichotomyTag::StartsWithMax)
    } else if ends {
        Ok(TrichotomyTag::EndsWithMax)
    } else if ends_pair {
        Ok(TrichotomyTag::EndsMaxThenSecond)
    } else {
        Err(Error::NotInTrichotomy(p.to_string()))
    }
}

/// `n (n-1) … (n-k+1) 1 2 … (n-k)` for `k = ceil(n/2) ..= n-1`, by
/// increasing `k`.
pub fn gen_p1(n: usize) -> Vec<Permutation> {
    (n.div_ceil(2)..n)
        .map(|k| {
            let values = (n - k + 1..=n).rev().chain(1..=n - k).collect();
            Permutation::from_vec_unchecked(values)
        })
        .collect()
}

/// The strongly 312-avoiding permutations ending in 1:
/// `(k+1) (k+2) … n k (k-1) … 1` for `k = ceil(n/2) ..= n-1`.
pub fn gen_bona_smith_family(n: usize) -> Vec<Permutation> {
    (n.div_ceil(2)..n)
        .map(|k| {
            let values = (k + 1..=n).chain((1..=k).rev()).collect();
            Permutation::from_vec_unchecked(values)
        })
        .collect()
}

/// Members of `S_n(213,312:~213)` ending in 1, `n >= 3`; `2^(n-3) + 1` of
/// them.
pub fn gen_q2(n: usize) -> Vec<Permutation> {
    if n < 3 {
        return Vec::new();
    }
    let rotation: Vec<usize> = (2..=n).chain(std::iter::once(1)).collect();
    let middle: Vec<usize> = (2..=n - 2).collect();
    let mut out = Vec::with_capacity((1 << (n - 3)) + 1);
    for mask in 0u64..1 << middle.len() {
        let chosen = |i: &usize| mask >> i & 1 == 1;
        let mut values = Vec::with_capacity(n);
        values.extend(
            middle
                .iter()
                .enumerate()
                .filter(|(i, _)| chosen(i))
                .map(|(_, &v)| v),
        );
        values.push(n);
        values.push(n - 1);
        values.extend(
            middle
                .iter()
                .enumerate()
                .rev()
                .filter(|(i, _)| !chosen(i))
                .map(|(_, &v)| v),
        );
        values.push(1);
        assert_ne!(values, rotation, "Q2 families overlap at n = {n}");
        out.push(Permutation::from_vec_unchecked(values));
    }
    out.push(Permutation::from_vec_unchecked(rotation));
    out.sort();
    out
}

/// Checks that every consecutive 213 window `π²(i-1) π²(i) π²(i+1)` of a
/// unimodal `π` sits under the peak, i.e. `π(i) = n`. Expected to always
/// hold; a `false` would be a counterexample.
pub fn check_peak_lemma(p: &Permutation) -> Result<bool> {
    let n = p.len();
    if n < 3 {
        return Err(Error::Domain {
            function: "check_peak_lemma",
            n,
            min: 3,
        });
    }
    if !p.is_unimodal() {
        return Err(Error::NotUnimodal(p.to_string()));
    }
    let square = p.power(2);
    let sq = square.values();
    Ok((2..n).all(|i| {
        let (a, b, c) = (sq[i - 2], sq[i - 1], sq[i]);
        let is_213 = b < a && a < c;
        !is_213 || p.apply(i) == n
    }))
}

/// The three classes of `S_n(231,1432:231)`, each sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Chain231Branches {
    pub starts_with_max: Vec<Permutation>,
    pub ends_with_max: Vec<Permutation>,
    pub ends_max_then_second: Vec<Permutation>,
}

impl Chain231Branches {
    pub fn get(&self, tag: TrichotomyTag) -> &[Permutation] {
        match tag {
            TrichotomyTag::StartsWithMax => &self.starts_with_max,
            TrichotomyTag::EndsWithMax => &self.ends_with_max,
            TrichotomyTag::EndsMaxThenSecond => &self.ends_max_then_second,
        }
    }
}

/// Memoized recursive generators. Not shared between threads; build one
/// per worker if needed.
#[derive(Debug, Default)]
pub struct StructuralForms {
    chain231: Vec<Vec<Permutation>>,
    chain213: Vec<Vec<Permutation>>,
}

fn base_cases() -> [Vec<Permutation>; 3] {
    [
        vec![Permutation::empty()],
        vec![Permutation::identity(1)],
        vec![Permutation::identity(2), decreasing(2)],
    ]
}

fn decreasing(n: usize) -> Permutation {
    Permutation::from_vec_unchecked((1..=n).rev().collect())
}

impl StructuralForms {
    pub fn new() -> Self {
        StructuralForms::default()
    }

    /// Split of `S_n(231,1432:231)`, `n >= 3`, into its three classes.
    pub fn chain231_branches(&mut self, n: usize) -> Chain231Branches {
        if n < 3 {
            return Chain231Branches::default();
        }
        let one = Permutation::identity(1);
        let two_one = decreasing(2);
        let mut ends_with_max: Vec<_> = self
            .gen_chain231(n - 1)
            .iter()
            .map(|s| s.direct_sum(&one))
            .collect();
        let mut ends_max_then_second: Vec<_> = self
            .gen_chain231(n - 2)
            .iter()
            .map(|s| s.direct_sum(&two_one))
            .collect();
        let mut starts_with_max = gen_p1(n);
        starts_with_max.sort();
        ends_with_max.sort();
        ends_max_then_second.sort();
        Chain231Branches {
            starts_with_max,
            ends_with_max,
            ends_max_then_second,
        }
    }

    /// `S_n(231,1432:231)`, sorted.
    pub fn gen_chain231(&mut self, n: usize) -> &[Permutation] {
        if self.chain231.is_empty() {
            self.chain231.extend(base_cases());
        }
        while self.chain231.len() <= n {
            let m = self.chain231.len();
            let b = self.chain231_branches(m);
            let mut all = b.starts_with_max;
            all.extend(b.ends_with_max);
            all.extend(b.ends_max_then_second);
            all.sort();
            self.chain231.push(all);
        }
        &self.chain231[n]
    }

    /// `S_n(213,312:~213)`, sorted.
    pub fn gen_chain213(&mut self, n: usize) -> &[Permutation] {
        if self.chain213.is_empty() {
            self.chain213.extend(base_cases());
        }
        let one = Permutation::identity(1);
        while self.chain213.len() <= n {
            let m = self.chain213.len();
            let mut all: Vec<_> = self.chain213[m - 1]
                .iter()
                .map(|s| one.direct_sum(s))
                .collect();
            all.extend(gen_q2(m));
            all.sort();
            self.chain213.push(all);
        }
        &self.chain213[n]
    }
}

pub fn gen_chain231(n: usize) -> Vec<Permutation> {
    StructuralForms::new().gen_chain231(n).to_vec()
}

pub fn gen_chain213(n: usize) -> Vec<Permutation> {
    StructuralForms::new().gen_chain213(n).to_vec()
}

/// True if `p` avoids classical 1432; every member of P1 does.
pub fn avoids_1432(p: &Permutation) -> bool {
    let pat: Pattern = Pattern::classical(Permutation::from_vec_unchecked(vec![1, 4, 3, 2]));
    pattern::avoids(p, &pat)
}
