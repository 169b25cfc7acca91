//! End-to-end acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use s1s_core::buchi::{exact_up_nfa, find_match, intersection, membership_up, union};
use s1s_core::complement::{color_add, complement, gamma_letter, gamma_word, rf_nfa, Color};
use s1s_core::encodings::{exists_prefix_merge_nfa, merge0_nfa, never_merge_nfa, MergeEncoding};
use s1s_core::logic::{
    encode_full, eval_direct, interp_to_upword, models_full_up, models_up, models_up_interp,
    reduce_full, sat_full, sat_min, UpInterpretation,
};
use s1s_core::random::{
    all_semigroups, random_full_formula, random_min_formula, random_nfa, random_qf_formula,
    random_semigroup, random_up_word, random_word,
};
use s1s_core::semigroup::{idempotent_power, merges_up, FiniteSemigroup};
use s1s_core::{BuchiNfa, UpWord};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(failures: usize, checks: usize, extra: &str) -> Outcome {
    Outcome {
        ok: failures == 0,
        detail: format!("{checks} checks, {failures} violations{extra}"),
    }
}

fn random_bits<R: Rng>(r: &mut R, n: usize) -> Vec<UpWord> {
    (0..n).map(|_| random_up_word(r, 2, 3, 3)).collect()
}

fn complement_law() -> Outcome {
    let start = Instant::now();
    let mut r = rng(1);
    let (mut checks, mut failures) = (0, 0);
    for _ in 0..200 {
        let states = r.gen_range(1..=3);
        let alphabet = r.gen_range(1..=2);
        let density = r.gen_range(0.1..0.7);
        let a = random_nfa(&mut r, states, alphabet, density);
        let c = complement(&a).expect("small automaton");
        for _ in 0..50 {
            let s = random_up_word(&mut r, alphabet, 3, 3);
            checks += 1;
            let (x, y) = (naive_accepts_up(&a, &s), naive_accepts_up(&c, &s));
            if x == y || membership_up(&c, &s).unwrap() != y {
                failures += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let mut o = outcome(
        failures,
        checks,
        &format!(", {:.1}s", elapsed.as_secs_f64()),
    );
    o.ok &= elapsed <= Duration::from_secs(300);
    o
}

fn color_laws() -> Outcome {
    let mut r = rng(2);
    let (mut checks, mut failures) = (0, 0);
    for _ in 0..1000 {
        let size = r.gen_range(1..=4);
        let a = random_nfa(&mut r, size, 2, 0.4);
        let u = random_word(&mut r, 2, 5);
        let v = random_word(&mut r, 2, 5);
        checks += 1;
        if gamma_word(&a, &u.concat(&v))
            != color_add(&gamma_word(&a, &u), &gamma_word(&a, &v)).unwrap()
        {
            failures += 1;
        }
        // Colors of random words, and single letters, as the triple.
        let pick = |r: &mut rand_chacha::ChaCha8Rng| -> Color {
            if r.gen_bool(0.3) {
                gamma_letter(&a, r.gen_range(0..2))
            } else {
                gamma_word(&a, &random_word(r, 2, 4))
            }
        };
        let (x, y, z) = (pick(&mut r), pick(&mut r), pick(&mut r));
        checks += 1;
        let left = color_add(&color_add(&x, &y).unwrap(), &z).unwrap();
        let right = color_add(&x, &color_add(&y, &z).unwrap()).unwrap();
        if left != right {
            failures += 1;
        }
    }
    outcome(failures, checks, "")
}

/// One match-solver case: the verdict agrees with lasso enumeration and the
/// returned witness re-validates.
fn match_case(a: &BuchiNfa) -> bool {
    let m = find_match(a);
    if m.is_some() != naive_lasso(a).is_some() {
        return false;
    }
    m.map_or(true, |m| {
        m.is_valid_for(a) && naive_accepts_up(a, &m.up_word())
    })
}

fn match_solver() -> Outcome {
    let (mut checks, mut failures) = (0, 0);
    let slots: Vec<(usize, usize, usize)> = (0..2)
        .flat_map(|p| (0..2).flat_map(move |l| (0..2).map(move |q| (p, l, q))))
        .collect();
    for mask in 0u32..1 << slots.len() {
        let trans: Vec<_> = (0..slots.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| slots[k])
            .collect();
        for init in 0..4usize {
            for acc in 0..4usize {
                let bits = |m: usize| (0..2).filter(move |q| m >> q & 1 == 1);
                let a = BuchiNfa::new(2, 2, trans.clone(), bits(init), bits(acc)).unwrap();
                checks += 1;
                if !match_case(&a) {
                    failures += 1;
                }
            }
        }
    }
    let exhaustive = checks;
    let mut r = rng(3);
    for _ in 0..50_000 {
        let density = r.gen_range(0.05..0.6);
        let a = random_nfa(&mut r, 3, 2, density);
        checks += 1;
        if !match_case(&a) {
            failures += 1;
        }
    }
    outcome(
        failures,
        checks,
        &format!(" ({exhaustive} exhaustive two-state)"),
    )
}

fn boolean_laws() -> Outcome {
    let mut r = rng(4);
    let mut failures = 0;
    for _ in 0..500 {
        let alphabet = r.gen_range(1..=2);
        let size = r.gen_range(1..=3);
        let a = random_nfa(&mut r, size, alphabet, 0.4);
        let size = r.gen_range(1..=3);
        let b = random_nfa(&mut r, size, alphabet, 0.4);
        let s = random_up_word(&mut r, alphabet, 3, 3);
        let (x, y) = (naive_accepts_up(&a, &s), naive_accepts_up(&b, &s));
        let u = membership_up(&union(&a, &b).unwrap(), &s).unwrap();
        let i = membership_up(&intersection(&a, &b).unwrap(), &s).unwrap();
        if u != (x || y) || i != (x && y) {
            failures += 1;
        }
    }
    outcome(failures, 500, "")
}

fn exact_automata() -> Outcome {
    let mut r = rng(5);
    let mut failures = 0;
    for k in 0..500 {
        let s = random_up_word(&mut r, 2, 3, 3);
        // Every fourth pair unrolls the period of the first word.
        let t = if k % 4 == 0 {
            let mut y = s.period.letters().to_vec();
            y.extend_from_slice(s.period.letters());
            up(s.prefix.letters(), &y)
        } else {
            random_up_word(&mut r, 2, 3, 3)
        };
        let e = exact_up_nfa(&s.prefix, &s.period, 2).unwrap();
        if membership_up(&e, &t).unwrap() != naive_up_equal(&s, &t) {
            failures += 1;
        }
    }
    outcome(failures, 500, "")
}

fn translation() -> Outcome {
    let mut r = rng(6);
    let mut failures = 0;
    for _ in 0..500 {
        let phi = random_qf_formula(&mut r, 3, 4);
        let so = random_bits(&mut r, 3);
        let direct = eval_direct(&phi, &so).expect("quantifier-free");
        if models_up(&interp_to_upword(&so), &phi, 3).unwrap() != direct {
            failures += 1;
        }
    }
    let (mut sat, mut unsat) = (0, 0);
    for _ in 0..100 {
        // Two free variables and up to two bound ones.
        let phi = random_min_formula(&mut r, 2, 4, 2);
        match sat_min(&phi, 4).unwrap() {
            Some(w) => {
                sat += 1;
                if !models_up_interp(&w, &phi).unwrap() {
                    failures += 1;
                }
            }
            None => {
                unsat += 1;
                if (0..200).any(|_| models_up_interp(&random_bits(&mut r, 4), &phi).unwrap()) {
                    failures += 1;
                }
            }
        }
    }
    outcome(failures, 600, &format!(" ({sat} sat, {unsat} unsat)"))
}

fn full_reduction() -> Outcome {
    let mut r = rng(7);
    let (mut failures, mut witnesses) = (0, 0);
    let (n1, n2) = (2, 1);
    for _ in 0..300 {
        let phi = random_full_formula(&mut r, n1, n2, 3, 2);
        let interp = UpInterpretation {
            so: random_bits(&mut r, n2),
            fo: vec![r.gen_range(0..5), r.gen_range(0..5)],
        };
        let encoded = interp_to_upword(&encode_full(&interp, n1, n2).unwrap());
        let direct = models_up(&encoded, &reduce_full(&phi, n1, n2), n1 + n2 + 1).unwrap();
        if models_full_up(&interp, &phi, n1, n2).unwrap() != direct {
            failures += 1;
        }
        match sat_full(&phi, n1, n2) {
            Ok(Some(w)) => {
                witnesses += 1;
                if !models_full_up(&w, &phi, n1, n2).unwrap() {
                    failures += 1;
                }
            }
            Ok(None) => {}
            // Includes a witness that does not decode to singletons.
            Err(_) => failures += 1,
        }
    }
    outcome(failures, 600, &format!(" ({witnesses} witnesses)"))
}

fn ramseyan_automata() -> Outcome {
    let mut r = rng(8);
    let (mut checks, mut failures) = (0, 0);
    for g in test_semigroups() {
        let a = rf_nfa(&g);
        for _ in 0..500 {
            let s = random_up_word(&mut r, g.size(), 4, 4);
            checks += 1;
            if !membership_up(&a, &s).unwrap() {
                failures += 1;
            }
        }
    }
    outcome(failures, checks, "")
}

fn up_words(alphabet: usize, max_len: usize) -> Vec<UpWord> {
    let words = all_words(alphabet, max_len);
    words
        .iter()
        .flat_map(|x| words.iter().map(move |y| up(x, y)))
        .collect()
}

fn merging_corpus() -> Outcome {
    let (mut checks, mut failures) = (0, 0);
    let small: Vec<FiniteSemigroup> = (1..=2).flat_map(all_semigroups).collect();
    for g in small.iter().chain(&test_semigroups()) {
        let (m0, nm) = (merge0_nfa(g), never_merge_nfa(g));
        for s in up_words(g.size(), 3) {
            let infinite = infinitely_many_merge_with_zero(g, &s);
            checks += 2;
            failures += usize::from(membership_up(&m0, &s).unwrap() != infinite);
            failures += usize::from(membership_up(&nm, &s).unwrap() == infinite);
        }
    }
    let mut r = rng(9);
    for _ in 0..500 {
        let size = r.gen_range(1..=3);
        let g = random_semigroup(&mut r, size);
        let s = random_up_word(&mut r, g.size(), 4, 4);
        checks += 1;
        failures += usize::from(!membership_up(&exists_prefix_merge_nfa(&g), &s).unwrap());
    }
    for g in &small {
        let enc = MergeEncoding::new(g).unwrap();
        for s in up_words(g.size(), 2) {
            for i in 0..=3 {
                for j in 0..=3 {
                    checks += 1;
                    failures += usize::from(enc.check(&s, i, j) != merges_up(g, &s, i, j));
                }
            }
        }
    }
    outcome(failures, checks, "")
}

fn idempotent_powers() -> Outcome {
    let (mut checks, mut failures) = (0, 0);
    let mut check = |g: &FiniteSemigroup| {
        for a in g.elements() {
            checks += 1;
            let k = idempotent_power(g, a);
            if k == 0 || k > g.size() || !g.is_idempotent(g.multiple(k, a)) {
                failures += 1;
            }
        }
    };
    let mut tables = 0;
    for size in 1..=4 {
        for g in all_semigroups(size) {
            tables += 1;
            check(&g);
        }
    }
    let mut r = rng(10);
    for _ in 0..1000 {
        let size = r.gen_range(1..=4);
        let g = random_semigroup(&mut r, size);
        // Re-validated through the table constructor.
        let g = FiniteSemigroup::new(g.size(), g.table()).expect("associative");
        check(&g);
    }
    outcome(failures, checks, &format!(" ({tables} exhaustive tables)"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("complement law", complement_law),
        ("color homomorphism and associativity", color_laws),
        ("match solver vs lasso enumeration", match_solver),
        ("union and intersection laws", boolean_laws),
        ("exact automata", exact_automata),
        ("formula translation", translation),
        ("first-order reduction", full_reduction),
        ("Ramseyan factorization automata", ramseyan_automata),
        ("merging automata and encoding", merging_corpus),
        ("idempotent power bound", idempotent_powers),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let verdict = if o.ok { "PASS" } else { "FAIL" };
        println!(
            "{verdict} {:>2} {name}: {} [{:.1}s]",
            k + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        all &= o.ok;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
