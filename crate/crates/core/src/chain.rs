//! Chains of patterns and chain-avoidance decisions.
//!
//! A chain is a list of levels; level `i` (1-based) holds the patterns that
//! `π^i` must avoid. Text form: levels separated by `:`, patterns within a
//! level by `,`, a lone `-` for a level with no constraint. Examples:
//! `231,1432:231`, `213,312:~213`, `-:321`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pattern::{self, parse_pattern_at, Occurrence, Pattern};
use crate::perm::Permutation;

#[derive(Clone)]
pub struct Chain {
    levels: Vec<Vec<Pattern>>,
}

impl Chain {
    /// Builds a chain from explicit levels. Fails if every level is empty
    /// or a level repeats a pattern.
    pub fn new(levels: Vec<Vec<Pattern>>) -> Result<Self> {
        if levels.iter().all(Vec::is_empty) {
            return Err(Error::parse(0, "chain has no constrained level"));
        }
        for level in &levels {
            for (i, pat) in level.iter().enumerate() {
                if level[..i].contains(pat) {
                    return Err(Error::parse(0, format!("pattern {pat} repeated within a level")));
                }
            }
        }
        Ok(Chain { levels })
    }

    /// The chain `(σ : σ)`.
    pub fn strong(pat: Pattern) -> Self {
        Chain {
            levels: vec![vec![pat.clone()], vec![pat]],
        }
    }

    pub fn levels(&self) -> &[Vec<Pattern>] {
        &self.levels
    }

    /// Number of levels, i.e. the highest power constrained.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Classical patterns constraining `π` itself.
    pub fn first_level_classical(&self) -> impl Iterator<Item = &Pattern> {
        self.levels[0].iter().filter(|p| p.is_classical())
    }

    /// Boolean decision; stops at the first violated constraint.
    pub fn is_avoided_by(&self, p: &Permutation) -> bool {
        self.check(p, false)
    }

    /// Same as [`Chain::is_avoided_by`] but trusts the caller that `p`
    /// already avoids every classical level-1 pattern.
    pub(crate) fn is_avoided_by_after_pruning(&self, p: &Permutation) -> bool {
        self.check(p, true)
    }

    fn check(&self, p: &Permutation, skip_level1_classical: bool) -> bool {
        let top = self.top_constrained_level();
        let mut power = p.clone();
        for (i, level) in self.levels[..top].iter().enumerate() {
            if i > 0 {
                power = p.compose_unchecked(&power);
            }
            for pat in level {
                if i == 0 && skip_level1_classical && pat.is_classical() {
                    continue;
                }
                if pattern::occurs_in(power.values(), pat) {
                    return false;
                }
            }
        }
        true
    }

    /// Full report: every (level, pattern) pair is evaluated.
    pub fn report(&self, p: &Permutation) -> AvoidanceReport {
        let top = self.top_constrained_level();
        let mut entries = Vec::new();
        let mut power = p.clone();
        for (i, level) in self.levels[..top].iter().enumerate() {
            if i > 0 {
                power = p.compose_unchecked(&power);
            }
            for pat in level {
                entries.push(LevelCheck {
                    power: i + 1,
                    power_perm: power.clone(),
                    pattern: pat.clone(),
                    witness: pattern::contains(&power, pat),
                });
            }
        }
        AvoidanceReport {
            verdict: entries.iter().all(|e| e.witness.is_none()),
            entries,
        }
    }

    fn top_constrained_level(&self) -> usize {
        self.levels
            .iter()
            .rposition(|l| !l.is_empty())
            .map_or(0, |i| i + 1)
    }

    fn sorted_levels(&self) -> Vec<Vec<&Pattern>> {
        self.levels
            .iter()
            .map(|level| {
                let mut l: Vec<&Pattern> = level.iter().collect();
                l.sort();
                l
            })
            .collect()
    }
}

/// Levels compare as sets; parse order only matters for reporting.
impl PartialEq for Chain {
    fn eq(&self, other: &Self) -> bool {
        self.sorted_levels() == other.sorted_levels()
    }
}

impl Eq for Chain {}

impl Hash for Chain {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.sorted_levels().hash(state);
    }
}

impl fmt::Display for Chain {
    /// Canonical form: no whitespace, `-` for unconstrained levels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, level) in self.levels.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            if level.is_empty() {
                f.write_str("-")?;
            }
            for (j, pat) in level.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{pat}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chain({self})")
    }
}

impl FromStr for Chain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_chain(s)
    }
}

/// Parses the chain grammar:
///
/// ```text
/// chain   := level (":" level)*
/// level   := "-" | pattern ("," pattern)*
/// pattern := "~"? digits
/// ```
pub fn parse_chain(text: &str) -> Result<Chain> {
    if text.trim().is_empty() {
        return Err(Error::parse(0, "empty chain"));
    }
    let mut levels = Vec::new();
    let mut offset = 0;
    for level_text in text.split(':') {
        let body = level_text.trim();
        let lead = level_text.chars().take_while(|c| c.is_whitespace()).count();
        if body.is_empty() {
            return Err(Error::parse(offset + lead, "empty level (use \"-\" for no constraint)"));
        }
        let mut level: Vec<Pattern> = Vec::new();
        if body != "-" {
            let mut token_offset = offset;
            for token in level_text.split(',') {
                if token.trim().is_empty() {
                    return Err(Error::parse(token_offset, "empty pattern"));
                }
                let pat = parse_pattern_at(token, token_offset)?;
                if level.contains(&pat) {
                    return Err(Error::parse(
                        token_offset,
                        format!("pattern {pat} repeated within a level"),
                    ));
                }
                level.push(pat);
                token_offset += token.chars().count() + 1;
            }
        }
        levels.push(level);
        offset += level_text.chars().count() + 1;
    }
    if levels.iter().all(Vec::is_empty) {
        return Err(Error::parse(0, "chain has no constrained level"));
    }
    Ok(Chain { levels })
}

/// Outcome for one (level, pattern) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelCheck {
    /// Exponent `i` of the power tested.
    pub power: usize,
    pub power_perm: Permutation,
    pub pattern: Pattern,
    pub witness: Option<Occurrence>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceReport {
    /// True iff no entry has a witness.
    pub verdict: bool,
    pub entries: Vec<LevelCheck>,
}

pub fn avoids_chain(p: &Permutation, c: &Chain) -> AvoidanceReport {
    c.report(p)
}

/// Both `π` and `π²` avoid `pat`.
pub fn strongly_avoids(p: &Permutation, pat: &Pattern) -> bool {
    pattern::avoids(p, pat) && pattern::avoids(&p.power(2), pat)
}
