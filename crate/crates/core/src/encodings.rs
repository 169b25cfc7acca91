//! Automata and formulas about the merging relation on sequences over a
//! finite semigroup.
//!
//! Positions `i` and `j` merge in `σ` when `col σ[i,k) = col σ[j,k)` for
//! some `k` beyond both.

use crate::buchi::BuchiNfa;
use crate::logic::{
    interp_to_upword, reduce_full, translate_with, FullFormula, LogicError, TranslateConfig,
    UpInterpretation,
};
use crate::semigroup::FiniteSemigroup;
use crate::word::UpWord;

/// The product of the two components, each either unset (`None`, written ⊤)
/// or an element.
fn pair_index(n: usize, a: Option<usize>, b: Option<usize>) -> usize {
    let idx = |v: Option<usize>| v.map_or(0, |e| e + 1);
    idx(a) * (n + 1) + idx(b)
}

/// Accepts the sequences in which infinitely many positions merge with 0.
///
/// The first component tracks the color of the prefix read so far; the
/// second, once a position `j` has been guessed, the color since `j`. The
/// run passes an accepting state when both colors agree, then guesses again.
pub fn merge0_nfa(g: &FiniteSemigroup) -> BuchiNfa {
    let n = g.size();
    let s = |a, b| pair_index(n, a, b);
    let mut trans = Vec::new();
    for a in 0..n {
        trans.push((s(None, None), a, s(Some(a), None)));
        for b in 0..n {
            let ba = g.add(b, a);
            trans.push((s(Some(b), None), a, s(Some(ba), None)));
            trans.push((s(Some(b), None), a, s(Some(ba), Some(a))));
            for c in 0..n {
                let target = if b == c {
                    s(Some(ba), None)
                } else {
                    s(Some(ba), Some(g.add(c, a)))
                };
                trans.push((s(Some(b), Some(c)), a, target));
            }
        }
    }
    let states = (n + 1) * (n + 1);
    let mut accepting = vec![false; states];
    for a in 0..n {
        accepting[s(Some(a), Some(a))] = true;
    }
    BuchiNfa::from_parts(states, n, trans, vec![s(None, None)], accepting)
}

/// Accepts the sequences with a suffix in which infinitely many positions
/// merge with the suffix's first position: [`merge0_nfa`] behind a fresh
/// initial state that loops on every letter.
pub fn exists_prefix_merge_nfa(g: &FiniteSemigroup) -> BuchiNfa {
    let base = merge0_nfa(g);
    let n = g.size();
    let guess = base.state_count();
    let start = pair_index(n, None, None);
    let mut trans: Vec<_> = base.transitions().collect();
    for a in 0..n {
        trans.push((guess, a, guess));
        for &q in base.successors(start, a) {
            trans.push((guess, a, q));
        }
    }
    let mut accepting: Vec<bool> = (0..guess).map(|q| base.is_accepting(q)).collect();
    accepting.push(false);
    BuchiNfa::from_parts(guess + 1, n, trans, vec![guess], accepting)
}

/// Accepts the sequences in which, from some position on, no position
/// merges with 0.
///
/// After guessing the position `k`, the second component holds the colors
/// of all segments `[j, m)` with `k ≤ j < m`; the run is stuck as soon as
/// the prefix color is among them.
pub fn never_merge_nfa(g: &FiniteSemigroup) -> BuchiNfa {
    let n = g.size();
    let sets = 1usize << n;
    let width = sets + 1;
    // Second component: 0 = unset, 1 + mask.
    let s = |b: Option<usize>, m: Option<usize>| {
        b.map_or(0, |e| e + 1) * width + m.map_or(0, |m| m + 1)
    };
    let mut trans = Vec::new();
    for a in 0..n {
        trans.push((s(None, None), a, s(Some(a), None)));
        for b in 0..n {
            let ba = g.add(b, a);
            trans.push((s(Some(b), None), a, s(Some(ba), None)));
            trans.push((s(Some(b), None), a, s(Some(ba), Some(1 << a))));
            for mask in 0..sets {
                if mask >> b & 1 == 1 {
                    continue;
                }
                let shifted = (0..n)
                    .filter(|&c| mask >> c & 1 == 1)
                    .fold(1 << a, |acc, c| acc | 1 << g.add(c, a));
                trans.push((s(Some(b), Some(mask)), a, s(Some(ba), Some(shifted))));
            }
        }
    }
    let states = (n + 1) * width;
    let mut accepting = vec![false; states];
    for b in 0..n {
        for mask in 0..sets {
            accepting[s(Some(b), Some(mask))] = true;
        }
    }
    BuchiNfa::from_parts(states, n, trans, vec![s(None, None)], accepting)
}

/// First-order variables of [`phi_merge`]: `x`, `y` (free), the merge point
/// `z`, the scanning variable `w`, and `s`, `u` used by successor
/// references.
pub const MERGE_FO: [&str; 6] = ["x", "y", "z", "w", "s", "u"];
const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const W: usize = 3;
const S: usize = 4;
const U: usize = 5;

/// Second-order variable names: `X0 … X(n-1)` mark the letters of the
/// sequence, `Y0 … Y(n-1)` the running colors.
pub fn merge_so_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|a| format!("X{a}"))
        .chain((0..n).map(|a| format!("Y{a}")))
        .collect()
}

pub fn merge_fo_names() -> Vec<String> {
    MERGE_FO.iter().map(|s| s.to_string()).collect()
}

mod build {
    use crate::logic::FullFormula;

    /// Negation that cancels a double negation.
    pub fn not(f: FullFormula) -> FullFormula {
        match f {
            FullFormula::Not(inner) => *inner,
            other => FullFormula::not(other),
        }
    }

    pub fn and(a: FullFormula, b: FullFormula) -> FullFormula {
        FullFormula::and(a, b)
    }

    pub fn and_all(parts: Vec<FullFormula>) -> Option<FullFormula> {
        parts.into_iter().reduce(and)
    }

    pub fn or(a: FullFormula, b: FullFormula) -> FullFormula {
        not(and(not(a), not(b)))
    }

    pub fn implies(a: FullFormula, b: FullFormula) -> FullFormula {
        not(and(a, not(b)))
    }

    pub fn forall1(x: usize, f: FullFormula) -> FullFormula {
        not(FullFormula::ex1(x, not(f)))
    }
}

use build::{and, and_all, forall1, implies, not, or};

/// `S v ∈ Y`: `∀s. v < s → (¬∃u. v < u ∧ u < s) → s ∈ Y`.
fn succ_in(v: usize, set: usize) -> FullFormula {
    let between = FullFormula::ex1(U, and(FullFormula::FoLess(v, U), FullFormula::FoLess(U, S)));
    forall1(
        S,
        implies(
            FullFormula::FoLess(v, S),
            implies(not(between), FullFormula::FoIn(S, set)),
        ),
    )
}

/// The color of `σ[from, to)` is `c`.
fn sum_is(g: &FiniteSemigroup, from: usize, to: usize, c: usize) -> FullFormula {
    let n = g.size();
    let xs = |a: usize| a;
    let ys = |a: usize| n + a;
    let mut parts = Vec::new();
    // At most one running color per position; vacuous with one element.
    let unique: Vec<FullFormula> = (0..n)
        .filter_map(|a| {
            let others = and_all(
                (0..n)
                    .filter(|&b| b != a)
                    .map(|b| not(FullFormula::FoIn(W, ys(b))))
                    .collect(),
            )?;
            Some(implies(FullFormula::FoIn(W, ys(a)), others))
        })
        .collect();
    if let Some(u) = and_all(unique) {
        parts.push(forall1(W, u));
    }
    let first = (0..n)
        .map(|a| implies(FullFormula::FoIn(from, xs(a)), succ_in(from, ys(a))))
        .collect();
    parts.push(and_all(first).expect("nonempty semigroup"));
    let mut steps = Vec::new();
    for a in 0..n {
        for b in 0..n {
            steps.push(implies(
                FullFormula::FoIn(W, ys(a)),
                implies(FullFormula::FoIn(W, xs(b)), succ_in(W, ys(g.add(a, b)))),
            ));
        }
    }
    let inside = and(FullFormula::FoLess(from, W), FullFormula::FoLess(W, to));
    parts.push(forall1(
        W,
        implies(inside, and_all(steps).expect("nonempty")),
    ));
    parts.push(FullFormula::FoIn(to, ys(c)));
    let body = and_all(parts).expect("nonempty");
    (0..n).rev().fold(body, |f, a| FullFormula::ex2(ys(a), f))
}

/// `x` and `y` merge: `∃z. x < z ∧ y < z ∧ ⋁_c (σ[x,z) and σ[y,z) both have
/// color c)`, with derived connectives expanded into `¬`, `∧` and `∃`.
pub fn phi_merge(g: &FiniteSemigroup) -> FullFormula {
    let colors = (0..g.size())
        .map(|c| and(sum_is(g, X, Z, c), sum_is(g, Y, Z, c)))
        .reduce(or)
        .expect("nonempty semigroup");
    let bounds = and(FullFormula::FoLess(X, Z), FullFormula::FoLess(Y, Z));
    FullFormula::ex1(Z, and(bounds, colors))
}

/// `X_a` holds the positions where `σ` is `a`; `x = i`, `y = j`; every
/// other variable is empty or 0.
pub fn interp_of_word(g: &FiniteSemigroup, sigma: &UpWord, i: usize, j: usize) -> UpInterpretation {
    let n = g.size();
    let indicator = |a: usize| {
        let bits =
            |w: &crate::word::Word| w.letters().iter().map(|&l| usize::from(l == a)).collect();
        UpWord::from_vecs(bits(&sigma.prefix), bits(&sigma.period)).expect("nonempty")
    };
    let empty = UpWord::from_vecs(vec![0], vec![0]).expect("nonempty");
    let mut so: Vec<UpWord> = (0..n).map(indicator).collect();
    so.extend(std::iter::repeat_n(empty, n));
    let mut fo = vec![0; MERGE_FO.len()];
    fo[X] = i;
    fo[Y] = j;
    UpInterpretation { so, fo }
}

/// [`phi_merge`] for one semigroup, compiled once.
#[derive(Debug, Clone)]
pub struct MergeEncoding {
    g: FiniteSemigroup,
    formula: FullFormula,
    nfa: BuchiNfa,
}

impl MergeEncoding {
    pub fn new(g: &FiniteSemigroup) -> Result<Self, LogicError> {
        Self::with_config(g, &TranslateConfig::default())
    }

    pub fn with_config(g: &FiniteSemigroup, config: &TranslateConfig) -> Result<Self, LogicError> {
        let formula = phi_merge(g);
        let (n1, n2) = (MERGE_FO.len(), 2 * g.size());
        let reduced = reduce_full(&formula, n1, n2);
        let config = TranslateConfig {
            singletons: n1,
            ..*config
        };
        let nfa = translate_with(&reduced, n1 + n2 + 1, &config)?.nfa;
        Ok(MergeEncoding {
            g: g.clone(),
            formula,
            nfa,
        })
    }

    pub fn formula(&self) -> &FullFormula {
        &self.formula
    }

    pub fn automaton(&self) -> &BuchiNfa {
        &self.nfa
    }

    /// Whether the encoding says `i` and `j` merge in `σ`.
    pub fn check(&self, sigma: &UpWord, i: usize, j: usize) -> bool {
        let interp = interp_of_word(&self.g, sigma, i, j);
        let (n1, n2) = (MERGE_FO.len(), 2 * self.g.size());
        let encoded = crate::logic::encode_full(&interp, n1, n2).expect("complete interpretation");
        crate::buchi::membership_up(&self.nfa, &interp_to_upword(&encoded))
            .expect("set-letter alphabet")
    }
}

/// Decides merging of `i` and `j` in `σ` through the formula encoding.
pub fn check_merge_encoding(
    g: &FiniteSemigroup,
    sigma: &UpWord,
    i: usize,
    j: usize,
) -> Result<bool, LogicError> {
    Ok(MergeEncoding::new(g)?.check(sigma, i, j))
}
