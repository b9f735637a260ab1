//! Command-line front end.
//!
//! Exit codes: 0 success, 1 semantic failure (the permutation contains a
//! pattern, or a verification mismatch), 2 usage or parse error.

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::chain::{parse_chain, Chain};
use crate::enumerate;
use crate::error::Error;
use crate::perm::Permutation;
use crate::sequence::{self, KnownChain, Method};
use crate::structural::StructuralForms;
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "permchain", version, about = "Permutations avoiding chains of patterns")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the avoiders of a chain in S_n.
    Count {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        chain: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
        method: MethodArg,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = CountFormat::Text)]
        format: CountFormat,
    },
    /// List the avoiders of a chain in S_n, lexicographically.
    Enumerate {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        chain: String,
        #[arg(long, value_enum, default_value_t = ListMethod::Brute)]
        method: ListMethod,
        #[arg(long, value_enum, default_value_t = ListFormat::Lines)]
        format: ListFormat,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Print permutations of length <= 9 as digit strings.
        #[arg(long)]
        compact: bool,
    },
    /// Decide whether a permutation avoids a chain.
    Check {
        #[arg(long)]
        perm: String,
        #[arg(long, allow_hyphen_values = true)]
        chain: String,
        /// Show every power and the witness of each contained pattern.
        #[arg(long)]
        verbose: bool,
    },
    /// Print the k-th power of a permutation.
    Power {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        compact: bool,
    },
    /// Count sequence over a range of n.
    Sequence {
        #[arg(long, allow_hyphen_values = true)]
        chain: String,
        #[arg(long = "min-n")]
        min_n: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = SequenceFormat::Csv)]
        format: SequenceFormat,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Cross-check brute force, structural generators and closed forms.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Structural,
    Closed,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Brute => Method::Brute,
            MethodArg::Structural => Method::Structural,
            MethodArg::Closed => Method::Closed,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListMethod {
    Brute,
    Structural,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CountFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListFormat {
    Lines,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SequenceFormat {
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Conj231,
    Conj213,
    Trichotomy,
    BonaSmith,
    Peak,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Conj231 => Suite::Conj231,
            SuiteArg::Conj213 => Suite::Conj213,
            SuiteArg::Trichotomy => Suite::Trichotomy,
            SuiteArg::BonaSmith => Suite::BonaSmith,
            SuiteArg::Peak => Suite::Peak,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn chain_arg(text: &str) -> Result<Chain, CliError> {
    Ok(parse_chain(text)?)
}

fn perm_arg(text: &str) -> Result<Permutation, CliError> {
    Ok(text.parse()?)
}

fn render(p: &Permutation, compact: bool) -> String {
    if compact {
        p.to_compact_string()
    } else {
        p.to_string()
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Count {
            n,
            chain,
            method,
            threads,
            format,
        } => {
            let c = chain_arg(&chain)?;
            let method = Method::from(method);
            let seq = sequence::sequence(&c, n, n, method, threads)?;
            let count = &seq.entries[0].1;
            match format {
                CountFormat::Text => writeln!(out, "{count}")?,
                CountFormat::Json => {
                    let doc = json!({
                        "n": n,
                        "chain": c.to_string(),
                        "method": method.as_str(),
                        "count": count.to_string(),
                    });
                    writeln!(out, "{doc}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            n,
            chain,
            method,
            format,
            threads,
            compact,
        } => {
            let c = chain_arg(&chain)?;
            let list = match method {
                ListMethod::Brute => enumerate::enumerate_avoiders(n, &c, threads),
                ListMethod::Structural => {
                    let mut forms = StructuralForms::new();
                    match KnownChain::recognize(&c) {
                        Some(KnownChain::Chain231) => forms.gen_chain231(n).to_vec(),
                        Some(KnownChain::Chain213) => forms.gen_chain213(n).to_vec(),
                        None => return Err(Error::UnsupportedChain(c.to_string()).into()),
                    }
                }
            };
            match format {
                ListFormat::Lines => {
                    for p in &list {
                        writeln!(out, "{}", render(p, compact))?;
                    }
                }
                ListFormat::Json => {
                    let doc: Vec<String> = list.iter().map(|p| render(p, compact)).collect();
                    writeln!(out, "{}", json!(doc))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            perm,
            chain,
            verbose,
        } => {
            let p = perm_arg(&perm)?;
            let c = chain_arg(&chain)?;
            let report = c.report(&p);
            if verbose {
                writeln!(out, "permutation {p}")?;
                writeln!(out, "chain {c}")?;
                let mut last_power = 0;
                for entry in &report.entries {
                    if entry.power != last_power {
                        writeln!(out, "power {} = {}", entry.power, entry.power_perm)?;
                        last_power = entry.power;
                    }
                    match &entry.witness {
                        None => writeln!(out, "  {}: avoids", entry.pattern)?,
                        Some(w) => {
                            let values: Vec<String> = w
                                .values_in(entry.power_perm.values())
                                .iter()
                                .map(|v| v.to_string())
                                .collect();
                            writeln!(
                                out,
                                "  {}: contains at positions {} (values {})",
                                entry.pattern,
                                w,
                                values.join(",")
                            )?;
                        }
                    }
                }
            }
            if report.verdict {
                writeln!(out, "AVOIDS")?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "CONTAINS")?;
                Ok(EXIT_FAILURE)
            }
        }
        Command::Power { perm, k, compact } => {
            let p = perm_arg(&perm)?;
            writeln!(out, "{}", render(&p.power(k), compact))?;
            Ok(EXIT_OK)
        }
        Command::Sequence {
            chain,
            min_n,
            max_n,
            method,
            format,
            threads,
        } => {
            if min_n > max_n {
                return Err(CliError::Usage(format!("--min-n {min_n} exceeds --max-n {max_n}")));
            }
            let c = chain_arg(&chain)?;
            let seq = sequence::sequence(&c, min_n, max_n, method.into(), threads)?;
            match format {
                SequenceFormat::Csv => {
                    writeln!(out, "n,count")?;
                    for (n, count) in &seq.entries {
                        writeln!(out, "{n},{count}")?;
                    }
                }
                SequenceFormat::Bfile => {
                    for (n, count) in &seq.entries {
                        writeln!(out, "{n} {count}")?;
                    }
                }
                SequenceFormat::Json => {
                    let entries: Vec<_> = seq
                        .entries
                        .iter()
                        .map(|(n, count)| json!({ "n": n, "count": count.to_string() }))
                        .collect();
                    let doc = json!({
                        "chain": seq.chain.to_string(),
                        "method": seq.method.as_str(),
                        "entries": entries,
                    });
                    writeln!(out, "{doc}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            max_n,
            threads,
        } => {
            let suite = Suite::from(suite);
            if max_n < suite.min_n() {
                return Err(CliError::Usage(format!(
                    "suite {suite} needs --max-n >= {}",
                    suite.min_n()
                )));
            }
            let reports = verify::run(suite, max_n, threads)?;
            let mut all_passed = true;
            for (i, report) in reports.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "{report}")?;
                all_passed &= report.passed();
            }
            if reports.len() > 1 {
                writeln!(out)?;
                writeln!(out, "{}", if all_passed { "PASS" } else { "FAIL" })?;
            }
            Ok(if all_passed { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}
