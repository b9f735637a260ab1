//! Permutations in one-line notation and their algebra.
//!
//! A [`Permutation`] of length `n` stores the word `π(1) π(2) … π(n)` with
//! 1-based values. Composition is functional: `compose(p, q)(i) = p(q(i))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{1, …, n}` written as a word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation.
    pub fn from_one_line(values: impl Into<Vec<usize>>) -> Result<Self> {
        let values = values.into();
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in values.iter().enumerate() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotABijection {
                    index: i + 1,
                    value: v,
                    len: n,
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    /// Caller guarantees `values` is a bijection of `[n]`.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_one_line(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn empty() -> Self {
        Permutation::default()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The one-line word, 1-based.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `π(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `r(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation {
            values: other.values.iter().map(|&j| self.values[j - 1]).collect(),
        })
    }

    /// `π^k` by iterated composition; `π^0` is the identity.
    pub fn power(&self, k: usize) -> Permutation {
        let mut acc = Permutation::identity(self.len());
        for _ in 0..k {
            acc = self.compose_unchecked(&acc);
        }
        acc
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            values: other.values.iter().map(|&j| self.values[j - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    /// `self ⊕ other`: `self`, then `other` shifted up by `self.len()`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let k = self.len();
        let mut values = Vec::with_capacity(k + other.len());
        values.extend_from_slice(&self.values);
        values.extend(other.values.iter().map(|&v| v + k));
        Permutation { values }
    }

    /// Strictly increasing up to a single peak, then strictly decreasing.
    /// Monotone words qualify; the empty word is trivially unimodal.
    pub fn is_unimodal(&self) -> bool {
        let v = &self.values;
        let mut i = 1;
        while i < v.len() && v[i - 1] < v[i] {
            i += 1;
        }
        while i < v.len() && v[i - 1] > v[i] {
            i += 1;
        }
        i >= v.len()
    }

    /// Digit-string form for `n <= 9`, comma form otherwise.
    pub fn to_compact_string(&self) -> String {
        if self.len() <= 9 {
            self.values.iter().map(|v| v.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for Permutation {
    /// Canonical comma-separated form, e.g. `4,3,1,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `4,3,1,2` or, for `n <= 9`, the digit string `4312`.
    /// Whitespace around values is ignored; an empty string is the empty
    /// permutation.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Permutation::empty());
        }
        let mut values = Vec::new();
        if trimmed.contains(',') {
            let mut offset = 0;
            for part in s.split(',') {
                let token = part.trim();
                let value = token.parse::<usize>().map_err(|_| {
                    Error::parse(offset, format!("expected a positive integer, found {token:?}"))
                })?;
                values.push(value);
                offset += part.chars().count() + 1;
            }
        } else {
            let lead = s.chars().take_while(|c| c.is_whitespace()).count();
            for (i, c) in trimmed.chars().enumerate() {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| Error::parse(lead + i, format!("unexpected character {c:?}")))?;
                values.push(d as usize);
            }
            if values.len() > 9 {
                return Err(Error::parse(
                    lead + 9,
                    "digit form is limited to n <= 9; use comma-separated values",
                ));
            }
        }
        Permutation::from_one_line(values)
    }
}
