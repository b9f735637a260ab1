//! Exact counting formulas for the two chains with known enumerations.
//!
//! * `f(n) = |S_n(231,1432:231)| = L(n+1) - ceil(n/2) - 1` for `n >= 1`,
//!   with recurrence `f(n) = ceil((n-1)/2) + f(n-1) + f(n-2)`.
//! * `g(n) = |S_n(213,312:~213)| = 2^(n-2) + n - 1` for `n >= 2`,
//!   with recurrence `g(n) = g(n-1) + 2^(n-3) + 1`.
//!
//! Lucas numbers use `L(1) = 1`, `L(2) = 3`, and `L(0) = 2`.
//! All values are arbitrary precision.

use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Memoized Lucas numbers.
#[derive(Debug)]
pub struct LucasSequence {
    cache: Mutex<Vec<BigUint>>,
}

impl Default for LucasSequence {
    fn default() -> Self {
        LucasSequence::new()
    }
}

impl LucasSequence {
    pub fn new() -> Self {
        LucasSequence {
            cache: Mutex::new(vec![BigUint::from(2u32), BigUint::one()]),
        }
    }

    pub fn get(&self, m: usize) -> BigUint {
        let mut cache = self.cache.lock().unwrap_or_else(|e| e.into_inner());
        while cache.len() <= m {
            let next = &cache[cache.len() - 1] + &cache[cache.len() - 2];
            cache.push(next);
        }
        cache[m].clone()
    }
}

pub fn lucas(m: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::from(2u32), BigUint::one());
    for _ in 0..m {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

fn ceil_half(n: usize) -> usize {
    n.div_ceil(2)
}

fn require(function: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::Domain { function, n, min })
    } else {
        Ok(())
    }
}

/// `L(n+1) - ceil(n/2) - 1`.
pub fn f_closed(n: usize) -> Result<BigUint> {
    require("f_closed", n, 1)?;
    Ok(lucas(n + 1) - BigUint::from(ceil_half(n) + 1))
}

/// `f(n) = ceil((n-1)/2) + f(n-1) + f(n-2)`, `f(1) = 1`, `f(2) = 2`.
pub fn f_recurrence(n: usize) -> Result<BigUint> {
    require("f_recurrence", n, 1)?;
    let (mut prev, mut cur) = (BigUint::one(), BigUint::from(2u32));
    if n == 1 {
        return Ok(prev);
    }
    for m in 3..=n {
        let next = BigUint::from(ceil_half(m - 1)) + &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `2^(n-2) + n - 1`.
///
/// `g(1)` is outside the formula's range even though `S_1` has one
/// avoider; it is reported as a domain error.
pub fn g_closed(n: usize) -> Result<BigUint> {
    require("g_closed", n, 2)?;
    Ok((BigUint::one() << (n - 2)) + BigUint::from(n - 1))
}

/// `g(n) = g(n-1) + 2^(n-3) + 1`, `g(2) = 2`.
pub fn g_recurrence(n: usize) -> Result<BigUint> {
    require("g_recurrence", n, 2)?;
    let mut g = BigUint::from(2u32);
    for m in 3..=n {
        g += (BigUint::one() << (m - 3)) + BigUint::one();
    }
    Ok(g)
}

/// Size of the first-entry-maximal class, `ceil((n-1)/2)`.
pub fn p1_count(n: usize) -> Result<BigUint> {
    require("p1_count", n, 3)?;
    Ok(BigUint::from(ceil_half(n - 1)))
}

/// Size of the last-entry-one class, `2^(n-3) + 1`.
pub fn q2_count(n: usize) -> Result<BigUint> {
    require("q2_count", n, 3)?;
    Ok((BigUint::one() << (n - 3)) + BigUint::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn lucas_values() {
        assert_eq!(lucas(0), big(2));
        assert_eq!(lucas(1), big(1));
        assert_eq!(lucas(2), big(3));
        assert_eq!(lucas(7), big(29));
        let seq = LucasSequence::new();
        assert_eq!(seq.get(7), big(29));
        assert_eq!(seq.get(0), big(2));
        for m in 0..40 {
            assert_eq!(seq.get(m), lucas(m));
        }
    }

    #[test]
    fn f_values() {
        assert_eq!(f_closed(1).unwrap(), big(1));
        assert_eq!(f_closed(2).unwrap(), big(2));
        assert_eq!(f_closed(3).unwrap(), big(4));
        assert_eq!(f_closed(8).unwrap(), big(71));
        assert_eq!(f_recurrence(3).unwrap(), big(4));
        assert_eq!(f_recurrence(4).unwrap(), big(8));
        assert!(matches!(f_closed(0), Err(Error::Domain { min: 1, .. })));
        assert!(f_recurrence(0).is_err());
    }

    #[test]
    fn g_values() {
        assert_eq!(g_closed(2).unwrap(), big(2));
        assert_eq!(g_closed(3).unwrap(), big(4));
        assert_eq!(g_closed(9).unwrap(), big(136));
        assert_eq!(g_recurrence(3).unwrap(), big(4));
        assert_eq!(g_recurrence(5).unwrap(), big(12));
        assert!(g_closed(1).is_err());
        assert!(g_recurrence(1).is_err());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(p1_count(3).unwrap(), big(1));
        assert_eq!(p1_count(4).unwrap(), big(2));
        assert_eq!(p1_count(101).unwrap(), big(50));
        assert_eq!(q2_count(3).unwrap(), big(2));
        assert_eq!(q2_count(4).unwrap(), big(3));
        assert_eq!(q2_count(13).unwrap(), big(1025));
        assert!(p1_count(2).is_err());
        assert!(q2_count(2).is_err());
    }

    #[test]
    fn closed_forms_match_recurrences() {
        for n in 1..=64 {
            assert_eq!(f_closed(n).unwrap(), f_recurrence(n).unwrap(), "f({n})");
        }
        for n in 2..=64 {
            assert_eq!(g_closed(n).unwrap(), g_recurrence(n).unwrap(), "g({n})");
        }
    }

    #[test]
    fn decomposition_identities() {
        for n in 3..=64 {
            let sum = p1_count(n).unwrap() + f_closed(n - 1).unwrap() + f_closed(n - 2).unwrap();
            assert_eq!(f_closed(n).unwrap(), sum);
            let sum = g_closed(n - 1).unwrap() + q2_count(n).unwrap();
            assert_eq!(g_closed(n).unwrap(), sum);
        }
        for n in 1..=128 {
            assert_eq!(lucas(n + 1), lucas(n) + lucas(n - 1));
        }
    }

    #[test]
    fn large_arguments_do_not_overflow() {
        let g = g_closed(200).unwrap();
        assert_eq!(g, (BigUint::one() << 198usize) + big(199));
        assert!(f_closed(150).unwrap() > big(u64::MAX));
    }
}
