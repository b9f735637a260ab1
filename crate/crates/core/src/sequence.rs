//! Count sequences over a range of `n`, by one of three methods.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::chain::{parse_chain, Chain};
use crate::closed;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::structural::StructuralForms;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Exhaustive search over `S_n`.
    Brute,
    /// Recursive constructive generators.
    Structural,
    /// Closed-form formulas.
    Closed,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Structural => "structural",
            Method::Closed => "closed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "structural" => Ok(Method::Structural),
            "closed" => Ok(Method::Closed),
            other => Err(Error::parse(0, format!("unknown method {other:?}"))),
        }
    }
}

/// The two chains with structural generators and closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnownChain {
    /// `231,1432:231`
    Chain231,
    /// `213,312:~213`
    Chain213,
}

impl KnownChain {
    pub fn text(self) -> &'static str {
        match self {
            KnownChain::Chain231 => "231,1432:231",
            KnownChain::Chain213 => "213,312:~213",
        }
    }

    pub fn chain(self) -> Chain {
        parse_chain(self.text()).expect("built-in chain parses")
    }

    /// Matches `chain` against the known chains, with set semantics
    /// within each level.
    pub fn recognize(chain: &Chain) -> Option<KnownChain> {
        [KnownChain::Chain231, KnownChain::Chain213]
            .into_iter()
            .find(|k| k.chain() == *chain)
    }

    /// Smallest `n` covered by the closed form.
    pub fn closed_min_n(self) -> usize {
        match self {
            KnownChain::Chain231 => 1,
            KnownChain::Chain213 => 2,
        }
    }

    pub fn closed_count(self, n: usize) -> Result<BigUint> {
        match self {
            KnownChain::Chain231 => closed::f_closed(n),
            KnownChain::Chain213 => closed::g_closed(n),
        }
    }
}

/// `(n, count)` pairs for a contiguous range of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSequence {
    pub chain: Chain,
    pub method: Method,
    pub entries: Vec<(usize, BigUint)>,
}

/// Counts for `n_min..=n_max`. Structural and closed methods require one
/// of the [`KnownChain`]s; the closed method also requires `n_min` to be
/// inside the formula's range.
pub fn sequence(
    chain: &Chain,
    n_min: usize,
    n_max: usize,
    method: Method,
    workers: usize,
) -> Result<CountSequence> {
    if n_min > n_max {
        return Err(Error::parse(0, format!("empty range {n_min}..={n_max}")));
    }
    let known = KnownChain::recognize(chain);
    let entries = match (method, known) {
        (Method::Brute, _) => (n_min..=n_max)
            .map(|n| (n, BigUint::from(enumerate::count_avoiders(n, chain, workers))))
            .collect(),
        (Method::Structural, Some(k)) => {
            let mut forms = StructuralForms::new();
            (n_min..=n_max)
                .map(|n| {
                    let len = match k {
                        KnownChain::Chain231 => forms.gen_chain231(n).len(),
                        KnownChain::Chain213 => forms.gen_chain213(n).len(),
                    };
                    (n, BigUint::from(len))
                })
                .collect()
        }
        (Method::Closed, Some(k)) => (n_min..=n_max)
            .map(|n| k.closed_count(n).map(|c| (n, c)))
            .collect::<Result<_>>()?,
        (_, None) => return Err(Error::UnsupportedChain(chain.to_string())),
    };
    Ok(CountSequence {
        chain: chain.clone(),
        method,
        entries,
    })
}
