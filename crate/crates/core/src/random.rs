//! Random instances for testing and corpus generation.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::buchi::BuchiNfa;
use crate::logic::{FullFormula, MinFormula};
use crate::semigroup::FiniteSemigroup;
use crate::word::{UpWord, Word};

/// An automaton where each possible transition is present with probability
/// `density`, each state initial with probability 1/2 (at least one is),
/// and each state accepting with probability 1/2.
pub fn random_nfa<R: Rng>(rng: &mut R, states: usize, alphabet: usize, density: f64) -> BuchiNfa {
    let mut trans = Vec::new();
    for p in 0..states {
        for l in 0..alphabet {
            for q in 0..states {
                if rng.gen_bool(density) {
                    trans.push((p, l, q));
                }
            }
        }
    }
    let mut initial: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    if initial.is_empty() {
        initial.push(rng.gen_range(0..states));
    }
    let accepting: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    BuchiNfa::new(states, alphabet, trans, initial, accepting).expect("in range")
}

/// A word of length `1..=max_len`.
pub fn random_word<R: Rng>(rng: &mut R, alphabet: usize, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word::new((0..len).map(|_| rng.gen_range(0..alphabet)).collect()).expect("nonempty")
}

/// `x y^ω` with `1 ≤ |x| ≤ max_prefix` and `1 ≤ |y| ≤ max_period`.
pub fn random_up_word<R: Rng>(
    rng: &mut R,
    alphabet: usize,
    max_prefix: usize,
    max_period: usize,
) -> UpWord {
    UpWord::new(
        random_word(rng, alphabet, max_prefix),
        random_word(rng, alphabet, max_period),
    )
}

/// A uniformly chosen total table completed by backtracking on
/// associativity, trying entries in random order.
pub fn random_semigroup<R: Rng>(rng: &mut R, size: usize) -> FiniteSemigroup {
    let mut table = vec![None; size * size];
    let mut order: Vec<Vec<usize>> = Vec::with_capacity(size * size);
    for _ in 0..size * size {
        let mut values: Vec<usize> = (0..size).collect();
        values.shuffle(rng);
        order.push(values);
    }
    assert!(
        fill(&mut table, size, 0, &mut |_| (), Some(&order)),
        "the zero table is associative"
    );
    FiniteSemigroup::new(size, to_rows(&table, size)).expect("associative")
}

/// Every associative table on `size` elements (isomorphic copies
/// included).
pub fn all_semigroups(size: usize) -> Vec<FiniteSemigroup> {
    let mut out = Vec::new();
    let mut table = vec![None; size * size];
    fill(
        &mut table,
        size,
        0,
        &mut |t| {
            out.push(FiniteSemigroup::new(size, to_rows(t, size)).expect("associative"));
        },
        None,
    );
    out
}

fn to_rows(table: &[Option<usize>], size: usize) -> Vec<Vec<usize>> {
    table
        .chunks(size)
        .map(|row| row.iter().map(|v| v.expect("filled")).collect())
        .collect()
}

/// Fills cells `cell..` in order. With `order`, stops at the first complete
/// table and returns true; otherwise reports every completion.
fn fill(
    table: &mut [Option<usize>],
    size: usize,
    cell: usize,
    found: &mut dyn FnMut(&[Option<usize>]),
    order: Option<&[Vec<usize>]>,
) -> bool {
    if cell == table.len() {
        found(table);
        return order.is_some();
    }
    let values: Vec<usize> = match order {
        Some(o) => o[cell].clone(),
        None => (0..size).collect(),
    };
    for v in values {
        table[cell] = Some(v);
        if consistent(table, size) && fill(table, size, cell + 1, found, order) {
            return true;
        }
    }
    table[cell] = None;
    false
}

/// No fully defined instance of `(a + b) + c = a + (b + c)` fails.
fn consistent(table: &[Option<usize>], size: usize) -> bool {
    let at = |a: usize, b: usize| table[a * size + b];
    for a in 0..size {
        for b in 0..size {
            let Some(ab) = at(a, b) else { continue };
            for c in 0..size {
                let Some(bc) = at(b, c) else { continue };
                if let (Some(l), Some(r)) = (at(ab, c), at(a, bc)) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// A quantifier-free minimal formula of depth at most `depth` over `nvars`
/// variables.
pub fn random_qf_formula<R: Rng>(rng: &mut R, nvars: usize, depth: usize) -> MinFormula {
    random_min_formula(rng, nvars, depth, 0)
}

/// A minimal formula of depth at most `depth` over `nvars` free variables
/// with at most `quantifiers` quantifiers; bound variables are numbered from
/// `nvars` upward.
pub fn random_min_formula<R: Rng>(
    rng: &mut R,
    nvars: usize,
    depth: usize,
    quantifiers: usize,
) -> MinFormula {
    let mut budget = quantifiers;
    min_node(rng, nvars, depth, &mut budget)
}

fn min_node<R: Rng>(rng: &mut R, scope: usize, depth: usize, budget: &mut usize) -> MinFormula {
    let choice = if depth == 0 {
        0
    } else {
        rng.gen_range(0..if *budget > 0 { 4 } else { 3 })
    };
    match choice {
        0 => {
            let x = rng.gen_range(0..scope);
            let y = rng.gen_range(0..scope);
            if rng.gen_bool(0.5) {
                MinFormula::Less(x, y)
            } else {
                MinFormula::Incl(x, y)
            }
        }
        1 => MinFormula::and(
            min_node(rng, scope, depth - 1, budget),
            min_node(rng, scope, depth - 1, budget),
        ),
        2 => MinFormula::not(min_node(rng, scope, depth - 1, budget)),
        _ => {
            *budget -= 1;
            MinFormula::ex2(scope, min_node(rng, scope + 1, depth - 1, budget))
        }
    }
}

/// A full formula over `n1` first-order and `n2` second-order variables
/// (`n1 ≥ 1`) with at most `quantifiers` quantifiers, which rebind existing
/// variables.
pub fn random_full_formula<R: Rng>(
    rng: &mut R,
    n1: usize,
    n2: usize,
    depth: usize,
    quantifiers: usize,
) -> FullFormula {
    assert!(n1 >= 1, "first-order atoms need a first-order variable");
    let mut budget = quantifiers;
    full_node(rng, n1, n2, depth, &mut budget)
}

fn full_node<R: Rng>(
    rng: &mut R,
    n1: usize,
    n2: usize,
    depth: usize,
    budget: &mut usize,
) -> FullFormula {
    let choice = if depth == 0 {
        0
    } else {
        rng.gen_range(0..if *budget > 0 { 4 } else { 3 })
    };
    match choice {
        0 => {
            let x = rng.gen_range(0..n1);
            if n2 > 0 && rng.gen_bool(0.5) {
                FullFormula::FoIn(x, rng.gen_range(0..n2))
            } else {
                FullFormula::FoLess(x, rng.gen_range(0..n1))
            }
        }
        1 => FullFormula::and(
            full_node(rng, n1, n2, depth - 1, budget),
            full_node(rng, n1, n2, depth - 1, budget),
        ),
        2 => FullFormula::not(full_node(rng, n1, n2, depth - 1, budget)),
        _ => {
            *budget -= 1;
            let body = full_node(rng, n1, n2, depth - 1, budget);
            if n2 > 0 && rng.gen_bool(0.5) {
                FullFormula::ex2(rng.gen_range(0..n2), body)
            } else {
                FullFormula::ex1(rng.gen_range(0..n1), body)
            }
        }
    }
}
