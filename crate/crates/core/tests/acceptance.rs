//! Acceptance criteria. All comparisons are exact (tolerance 0).
//!
//! Run with `cargo test -p permchain --test acceptance -- --nocapture` to
//! see one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigUint;
use permchain::closed;
use permchain::pattern;
use permchain::structural::{self, StructuralForms, TrichotomyTag};
use permchain::{count_avoiders, enumerate_avoiders, parse_chain, strongly_avoids};
use permchain::{Chain, Flavor, Pattern, Permutation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn chain231() -> Chain {
    parse_chain("231,1432:231").unwrap()
}

fn chain213() -> Chain {
    parse_chain("213,312:~213").unwrap()
}

const SINGLE_WORKER_BUDGET: Duration = Duration::from_secs(60);

fn ac1_chain231_counts() -> Outcome {
    let f = f_table(10);
    ensure!(f[1..=8] == [1, 2, 4, 8, 14, 25, 42, 71], "recurrence oracle drifted: {:?}", f);
    let c = chain231();
    let mut forms = StructuralForms::new();
    for (n, &expected) in f.iter().enumerate().skip(1) {
        let brute = count_avoiders(n, &c, 1);
        let closed = closed::f_closed(n).unwrap();
        let generated = forms.gen_chain231(n).len() as u64;
        ensure!(brute == expected, "n={n}: brute {brute} vs recurrence {expected}");
        ensure!(closed == BigUint::from(expected), "n={n}: closed {closed} vs {expected}");
        ensure!(generated == expected, "n={n}: structural {generated} vs {expected}");
    }
    let start = Instant::now();
    let single = count_avoiders(10, &c, 1);
    let single_time = start.elapsed();
    let start = Instant::now();
    let parallel = count_avoiders(10, &c, 8);
    let parallel_time = start.elapsed();
    ensure!(single == parallel, "worker counts disagree at n=10");
    ensure!(single_time <= SINGLE_WORKER_BUDGET, "n=10 took {single_time:?} single-worker");
    Ok(format!(
        "f(1..10) = {:?}; n=10 in {single_time:.2?} (1 worker), {parallel_time:.2?} (8 workers)",
        &f[1..]
    ))
}

fn ac2_chain213_counts() -> Outcome {
    let c = chain213();
    let mut forms = StructuralForms::new();
    let mut values = Vec::new();
    for n in 2..=10 {
        let expected = (1u64 << (n - 2)) + n as u64 - 1;
        let brute = count_avoiders(n, &c, 1);
        let closed = closed::g_closed(n).unwrap();
        let generated = forms.gen_chain213(n).len() as u64;
        ensure!(brute == expected, "n={n}: brute {brute} vs {expected}");
        ensure!(closed == BigUint::from(expected), "n={n}: closed {closed}");
        ensure!(generated == expected, "n={n}: structural {generated}");
        values.push(brute);
    }
    ensure!(values[..8] == [2, 4, 7, 12, 21, 38, 71, 136], "values {values:?}");
    let start = Instant::now();
    count_avoiders(10, &c, 1);
    let elapsed = start.elapsed();
    ensure!(elapsed <= SINGLE_WORKER_BUDGET, "n=10 took {elapsed:?}");
    Ok(format!("g(2..10) = {values:?}; n=10 in {elapsed:.2?} (1 worker)"))
}

fn ac3_set_equivalence() -> Outcome {
    let mut forms = StructuralForms::new();
    for n in 0..=9 {
        ensure!(
            forms.gen_chain231(n) == enumerate_avoiders(n, &chain231(), 1).as_slice(),
            "231 chain lists differ at n={n}"
        );
        ensure!(
            forms.gen_chain213(n) == enumerate_avoiders(n, &chain213(), 1).as_slice(),
            "213 chain lists differ at n={n}"
        );
    }
    for n in 0..=7 {
        ensure!(forms.gen_chain231(n) == avoiders_oracle(n, CHAIN_231).as_slice(), "oracle 231 n={n}");
        ensure!(forms.gen_chain213(n) == avoiders_oracle(n, CHAIN_213).as_slice(), "oracle 213 n={n}");
    }
    Ok("structural lists equal brute-force lists for n <= 9 (and the unpruned oracle for n <= 7)".into())
}

fn ac4_trichotomy() -> Outcome {
    let f = f_table(9);
    let mut summary = Vec::new();
    for n in 3..=9 {
        let mut sizes = [0u64; 3];
        for p in enumerate_avoiders(n, &chain231(), 1) {
            let tag = structural::classify_trichotomy(&p).map_err(|e| format!("n={n}: {e}"))?;
            let v = p.values();
            let shapes = [v[0] == n, v[n - 1] == n, v[n - 2] == n && v[n - 1] == n - 1];
            ensure!(shapes.iter().filter(|&&s| s).count() == 1, "{p} matches {shapes:?}");
            let slot = match tag {
                TrichotomyTag::StartsWithMax => 0,
                TrichotomyTag::EndsWithMax => 1,
                TrichotomyTag::EndsMaxThenSecond => 2,
            };
            ensure!(shapes[slot], "{p} tagged {tag:?}");
            sizes[slot] += 1;
        }
        let expected = [(n as u64 - 1).div_ceil(2), f[n - 1], f[n - 2]];
        ensure!(sizes == expected, "n={n}: sizes {sizes:?} vs {expected:?}");
        summary.push(format!("{}/{}/{}", sizes[0], sizes[1], sizes[2]));
    }
    Ok(format!("class sizes n=3..9: {}", summary.join(" ")))
}

fn ac5_bona_smith() -> Outcome {
    let p312: Pattern = "312".parse().unwrap();
    for n in 2..=9 {
        let brute: Vec<Permutation> = all_perms(n)
            .into_iter()
            .filter(|p| p.values()[n - 1] == 1 && strongly_avoids(p, &p312))
            .collect();
        let family = structural::gen_bona_smith_family(n);
        ensure!(family == brute, "n={n}: family {family:?} vs brute {brute:?}");
        if n >= 3 {
            let mut inverses: Vec<Permutation> = family.iter().map(Permutation::inverse).collect();
            inverses.sort();
            let before = inverses.len();
            inverses.dedup();
            ensure!(inverses.len() == before, "inverse map not injective at n={n}");
            let mut p1 = structural::gen_p1(n);
            p1.sort();
            ensure!(inverses == p1, "n={n}: inverses {inverses:?} vs P1 {p1:?}");
        }
    }
    Ok("generator equals brute force for n=2..9; inverse is a bijection onto P1 for n=3..9".into())
}

fn ac6_peak_lemma() -> Outcome {
    let mut checked = 0usize;
    for n in 3..=10 {
        let unimodal = unimodal_perms(n);
        ensure!(unimodal.len() == 1 << (n - 1), "n={n}: {} unimodal", unimodal.len());
        for p in &unimodal {
            match structural::check_peak_lemma(p) {
                Ok(true) => checked += 1,
                other => return Err(format!("{p}: {other:?}")),
            }
        }
    }
    Ok(format!("{checked} unimodal permutations (n=3..10), no violation"))
}

fn ac7_class_sizes() -> Outcome {
    for n in 3..=12 {
        let q2 = structural::gen_q2(n).len();
        let p1 = structural::gen_p1(n).len();
        ensure!(q2 == (1 << (n - 3)) + 1, "n={n}: |Q2| = {q2}");
        ensure!(p1 == (n - 1).div_ceil(2), "n={n}: |P1| = {p1}");
        ensure!(BigUint::from(q2) == closed::q2_count(n).unwrap(), "q2_count({n})");
        ensure!(BigUint::from(p1) == closed::p1_count(n).unwrap(), "p1_count({n})");
    }
    for n in 3..=9 {
        let q2_brute: Vec<Permutation> = enumerate_avoiders(n, &chain213(), 1)
            .into_iter()
            .filter(|p| p.values()[n - 1] == 1)
            .collect();
        ensure!(structural::gen_q2(n) == q2_brute, "n={n}: Q2 differs from brute extraction");
        let p1_brute: Vec<Permutation> = enumerate_avoiders(n, &chain231(), 1)
            .into_iter()
            .filter(|p| p.values()[0] == n)
            .collect();
        let mut p1 = structural::gen_p1(n);
        p1.sort();
        ensure!(p1 == p1_brute, "n={n}: P1 differs from brute extraction");
    }
    Ok("sizes hold for n=3..12; sets equal brute extraction for n=3..9".into())
}

fn ac8_algebra() -> Outcome {
    let mut pairs = 0u64;
    for total in 0..=8 {
        for a in 0..=total {
            let right = all_perms(total - a);
            for s in all_perms(a) {
                let s2 = power_oracle(s.values(), 2);
                for t in &right {
                    let sum = s.direct_sum(t);
                    let t2 = power_oracle(t.values(), 2);
                    let mut expected = s2.clone();
                    expected.extend(t2.iter().map(|v| v + a));
                    ensure!(sum.power(2).values() == expected.as_slice(), "({s} + {t})^2");
                    pairs += 1;
                }
            }
        }
    }
    let (p231, p312) = ("231".parse::<Pattern>().unwrap(), "312".parse::<Pattern>().unwrap());
    for n in 0..=8 {
        for p in all_perms(n) {
            ensure!(
                strongly_avoids(&p, &p231) == strongly_avoids(&p.inverse(), &p312),
                "duality fails at {p}"
            );
        }
    }
    let mut patterns = Vec::new();
    for k in 1..=4 {
        for w in all_perms(k) {
            patterns.push(Pattern::new(w.clone(), Flavor::Classical));
            patterns.push(Pattern::new(w, Flavor::Consecutive));
        }
    }
    let mut decisions = 0u64;
    for n in 0..=8 {
        for p in all_perms(n) {
            for pt in &patterns {
                let consecutive = pt.flavor() == Flavor::Consecutive;
                let expected = occurrences_oracle(p.values(), pt.word().values(), consecutive);
                let witness = pattern::contains(&p, pt).map(|o| o.positions().to_vec());
                ensure!(witness == expected.first().cloned(), "{p} / {pt}: witness {witness:?}");
                ensure!(pattern::avoids(&p, pt) == expected.is_empty(), "{p} / {pt}: decision");
                decisions += 1;
            }
        }
    }
    Ok(format!(
        "{pairs} direct-sum pairs, duality for n<=8, {decisions} pattern decisions vs all-subsets oracle"
    ))
}

fn render(list: &[Permutation]) -> Vec<u8> {
    let mut out = Vec::new();
    for p in list {
        out.extend_from_slice(p.to_string().as_bytes());
        out.push(b'\n');
    }
    out
}

fn ac9_determinism() -> Outcome {
    for c in [chain231(), chain213()] {
        let reference = render(&enumerate_avoiders(9, &c, 1));
        for workers in [2, 8] {
            ensure!(
                render(&enumerate_avoiders(9, &c, workers)) == reference,
                "{c}: output differs at {workers} workers"
            );
        }
    }
    Ok("n=9 listings byte-identical at 1, 2, 8 workers for both chains".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("AC1 |S_n(231,1432:231)| = L(n+1)-ceil(n/2)-1, n=1..10", ac1_chain231_counts),
        ("AC2 |S_n(213,312:~213)| = 2^(n-2)+n-1, n=2..10", ac2_chain213_counts),
        ("AC3 structural lists = brute-force lists, n<=9", ac3_set_equivalence),
        ("AC4 trichotomy partition, n=3..9", ac4_trichotomy),
        ("AC5 strongly 312-avoiders ending in 1, n=2..9", ac5_bona_smith),
        ("AC6 peak lemma on all unimodal permutations, n=3..10", ac6_peak_lemma),
        ("AC7 |Q2| and |P1|, n=3..12", ac7_class_sizes),
        ("AC8 algebraic properties and pattern oracle", ac8_algebra),
        ("AC9 deterministic output across worker counts", ac9_determinism),
    ];
    let mut failures = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {name}  [{elapsed:.2?}]  {detail}"),
            Err(why) => {
                println!("FAIL  {name}  [{elapsed:.2?}]  {why}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
