//! Three-way verification suites: brute force, structural generators and
//! closed forms, compared per `n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::chain::{parse_chain, Chain};
use crate::closed;
use crate::enumerate::enumerate_avoiders;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::perm::Permutation;
use crate::sequence::KnownChain;
use crate::structural::{self, StructuralForms, TrichotomyTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Conj231,
    Conj213,
    Trichotomy,
    BonaSmith,
    Peak,
    All,
}

impl Suite {
    pub const SINGLE: [Suite; 5] = [
        Suite::Conj231,
        Suite::Conj213,
        Suite::Trichotomy,
        Suite::BonaSmith,
        Suite::Peak,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Conj231 => "conj231",
            Suite::Conj213 => "conj213",
            Suite::Trichotomy => "trichotomy",
            Suite::BonaSmith => "bona-smith",
            Suite::Peak => "peak",
            Suite::All => "all",
        }
    }

    /// Smallest `n` the suite is defined for.
    pub fn min_n(self) -> usize {
        match self {
            Suite::Conj231 => 1,
            Suite::Conj213 | Suite::BonaSmith => 2,
            Suite::Trichotomy | Suite::Peak | Suite::All => 3,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::SINGLE
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown suite {s:?}")))
    }
}

/// One line of a verification table. The three columns are rendered
/// values so that suites with composite results (class sizes) fit the
/// same shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub n: usize,
    pub brute: String,
    pub structural: String,
    pub closed: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub rows: Vec<VerifyRow>,
    /// First failing permutation or count, if any.
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && self.rows.iter().all(|r| r.ok)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        writeln!(f, "{:>3}  {:>12}  {:>12}  {:>12}  match", "n", "brute", "structural", "closed")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>3}  {:>12}  {:>12}  {:>12}  {}",
                r.n,
                r.brute,
                r.structural,
                r.closed,
                if r.ok { "yes" } else { "NO" }
            )?;
        }
        if let Some(c) = &self.counterexample {
            writeln!(f, "counterexample: {c}")?;
        }
        write!(f, "{} {}", if self.passed() { "PASS" } else { "FAIL" }, self.suite)
    }
}

/// Runs `suite` (or every suite, for [`Suite::All`]) for
/// `suite.min_n() ..= n_max`.
pub fn run(suite: Suite, n_max: usize, workers: usize) -> Result<Vec<SuiteReport>> {
    if n_max < suite.min_n() {
        return Err(Error::Domain {
            function: "verify",
            n: n_max,
            min: suite.min_n(),
        });
    }
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::SINGLE.to_vec(),
        s => vec![s],
    };
    suites
        .into_iter()
        .map(|s| run_single(s, n_max, workers))
        .collect()
}

fn run_single(suite: Suite, n_max: usize, workers: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        suite,
        rows: Vec::new(),
        counterexample: None,
    };
    let mut forms = StructuralForms::new();
    for n in suite.min_n()..=n_max {
        let (row, counterexample) = match suite {
            Suite::Conj231 => conjecture_row(KnownChain::Chain231, n, workers, &mut forms)?,
            Suite::Conj213 => conjecture_row(KnownChain::Chain213, n, workers, &mut forms)?,
            Suite::Trichotomy => trichotomy_row(n, workers, &mut forms)?,
            Suite::BonaSmith => bona_smith_row(n, workers),
            Suite::Peak => peak_row(n, workers)?,
            Suite::All => unreachable!("expanded by run"),
        };
        if report.counterexample.is_none() {
            report.counterexample = counterexample.map(|c| format!("n={n}: {c}"));
        }
        report.rows.push(row);
    }
    Ok(report)
}

/// First position where two sorted lists differ, described.
fn first_difference(left: &[Permutation], right: &[Permutation], names: (&str, &str)) -> Option<String> {
    for i in 0..left.len().max(right.len()) {
        match (left.get(i), right.get(i)) {
            (Some(a), Some(b)) if a == b => continue,
            (Some(a), Some(b)) => {
                return Some(format!("entry {i}: {} has {a}, {} has {b}", names.0, names.1))
            }
            (Some(a), None) => return Some(format!("{} has extra {a}", names.0)),
            (None, Some(b)) => return Some(format!("{} has extra {b}", names.1)),
            (None, None) => unreachable!(),
        }
    }
    None
}

fn conjecture_row(
    known: KnownChain,
    n: usize,
    workers: usize,
    forms: &mut StructuralForms,
) -> Result<(VerifyRow, Option<String>)> {
    let brute = enumerate_avoiders(n, &known.chain(), workers);
    let generated = match known {
        KnownChain::Chain231 => forms.gen_chain231(n),
        KnownChain::Chain213 => forms.gen_chain213(n),
    };
    let closed = known.closed_count(n)?;
    let mut problem = first_difference(&brute, generated, ("brute", "structural"));
    if problem.is_none() && BigUint::from(brute.len()) != closed {
        problem = Some(format!("count {} differs from closed form {closed}", brute.len()));
    }
    let row = VerifyRow {
        n,
        brute: brute.len().to_string(),
        structural: generated.len().to_string(),
        closed: closed.to_string(),
        ok: problem.is_none(),
    };
    Ok((row, problem))
}

fn trichotomy_row(n: usize, workers: usize, forms: &mut StructuralForms) -> Result<(VerifyRow, Option<String>)> {
    let brute = enumerate_avoiders(n, &KnownChain::Chain231.chain(), workers);
    let branches = forms.chain231_branches(n);
    let tags = [
        TrichotomyTag::StartsWithMax,
        TrichotomyTag::EndsWithMax,
        TrichotomyTag::EndsMaxThenSecond,
    ];
    let mut classes: [Vec<Permutation>; 3] = Default::default();
    let mut problem = None;
    for p in &brute {
        match structural::classify_trichotomy(p) {
            Ok(tag) => classes[tags.iter().position(|&t| t == tag).unwrap()].push(p.clone()),
            Err(_) => {
                problem.get_or_insert_with(|| format!("{p} receives no trichotomy tag"));
            }
        }
    }
    for (i, tag) in tags.iter().enumerate() {
        if problem.is_none() {
            problem = first_difference(&classes[i], branches.get(*tag), ("brute", "structural"))
                .map(|d| format!("{tag:?}: {d}"));
        }
    }
    let expected = [
        closed::p1_count(n)?,
        f_or_one(n - 1)?,
        f_or_one(n - 2)?,
    ];
    let sizes: Vec<BigUint> = classes.iter().map(|c| BigUint::from(c.len())).collect();
    if problem.is_none() && sizes != expected {
        problem = Some(format!("class sizes {sizes:?} differ from {expected:?}"));
    }
    let join = |v: &[String]| v.join("/");
    let row = VerifyRow {
        n,
        brute: join(&classes.iter().map(|c| c.len().to_string()).collect::<Vec<_>>()),
        structural: join(&tags.iter().map(|&t| branches.get(t).len().to_string()).collect::<Vec<_>>()),
        closed: join(&expected.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        ok: problem.is_none(),
    };
    Ok((row, problem))
}

/// `f(m)` extended with `f(0) = 1`, the empty permutation.
fn f_or_one(m: usize) -> Result<BigUint> {
    if m == 0 {
        Ok(BigUint::from(1u32))
    } else {
        closed::f_closed(m)
    }
}

fn strong_312() -> Chain {
    let pat: Pattern = "312".parse().expect("valid pattern");
    Chain::strong(pat)
}

fn bona_smith_row(n: usize, workers: usize) -> (VerifyRow, Option<String>) {
    let brute: Vec<Permutation> = enumerate_avoiders(n, &strong_312(), workers)
        .into_iter()
        .filter(|p| p.values().last() == Some(&1))
        .collect();
    let family = structural::gen_bona_smith_family(n);
    let expected = n - n.div_ceil(2);
    let mut problem = first_difference(&brute, &family, ("brute", "structural"));
    if problem.is_none() && n >= 3 {
        let inverses: Vec<Permutation> = family.iter().map(Permutation::inverse).collect();
        problem = first_difference(&inverses, &structural::gen_p1(n), ("inverse", "P1"));
    }
    if problem.is_none() && brute.len() != expected {
        problem = Some(format!("count {} differs from {expected}", brute.len()));
    }
    let row = VerifyRow {
        n,
        brute: brute.len().to_string(),
        structural: family.len().to_string(),
        closed: expected.to_string(),
        ok: problem.is_none(),
    };
    (row, problem)
}

fn peak_row(n: usize, workers: usize) -> Result<(VerifyRow, Option<String>)> {
    let unimodal_chain = parse_chain("213,312").expect("valid chain");
    let candidates = enumerate_avoiders(n, &unimodal_chain, workers);
    let mut problem = None;
    let mut held = 0usize;
    for p in &candidates {
        match structural::check_peak_lemma(p) {
            Ok(true) => held += 1,
            Ok(false) => {
                problem.get_or_insert_with(|| format!("{p} violates the peak lemma"));
            }
            Err(e) => {
                problem.get_or_insert_with(|| e.to_string());
            }
        }
    }
    let expected = BigUint::from(1u32) << (n - 1);
    if problem.is_none() && BigUint::from(candidates.len()) != expected {
        problem = Some(format!("{} unimodal permutations, expected {expected}", candidates.len()));
    }
    let row = VerifyRow {
        n,
        brute: candidates.len().to_string(),
        structural: held.to_string(),
        closed: expected.to_string(),
        ok: problem.is_none(),
    };
    Ok((row, problem))
}
