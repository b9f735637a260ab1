//! The explicit constructions: P1, Q2, the strongly 312-avoiding family and
//! the recursive descriptions of both chain classes.
//!
//!     cargo run --example structural_forms -- 6

use permchain::structural::{self, StructuralForms, TrichotomyTag};
use permchain::Permutation;

fn line(list: &[Permutation]) -> String {
    list.iter().map(Permutation::to_compact_string).collect::<Vec<_>>().join(" ")
}

fn main() {
    let n: usize = std::env::args().nth(1).map_or(5, |s| s.parse().expect("n"));
    assert!((3..=9).contains(&n), "pick 3 <= n <= 9 so the lists stay readable");

    println!("P1({n})          {}", line(&structural::gen_p1(n)));
    println!("Q2({n})          {}", line(&structural::gen_q2(n)));
    println!("312-family({n})  {}", line(&structural::gen_bona_smith_family(n)));

    let mut forms = StructuralForms::new();
    let branches = forms.chain231_branches(n);
    for tag in [TrichotomyTag::StartsWithMax, TrichotomyTag::EndsWithMax, TrichotomyTag::EndsMaxThenSecond] {
        println!("{tag:?}: {} permutations", branches.get(tag).len());
    }
    println!("231,1432:231 -> {} permutations", forms.gen_chain231(n).len());
    println!("213,312:~213 -> {}", line(forms.gen_chain213(n)));

    let probe: Permutation = "13542".parse().unwrap();
    println!("peak lemma on 13542: {:?}", structural::check_peak_lemma(&probe));
}
