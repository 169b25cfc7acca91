//! Boolean and projection operations on Büchi automata.

use std::collections::HashMap;

use super::matching::{find_match, is_satisfiable, Match};
use super::{AutomatonError, BuchiNfa};
use crate::word::{UpWord, Word};

fn same_alphabet(a: &BuchiNfa, b: &BuchiNfa) -> Result<(), AutomatonError> {
    if a.alphabet_size() == b.alphabet_size() {
        Ok(())
    } else {
        Err(AutomatonError::AlphabetMismatch {
            left: a.alphabet_size(),
            right: b.alphabet_size(),
        })
    }
}

/// Deterministic automaton accepting exactly the sequences equal to
/// `x y^ω`: a chain of `|x|` states feeding an accepting cycle of `|y|`
/// states.
pub fn exact_up_nfa(x: &Word, y: &Word, alphabet: usize) -> Result<BuchiNfa, AutomatonError> {
    if let Some(&bad) = x
        .letters()
        .iter()
        .chain(y.letters())
        .find(|&&l| l >= alphabet)
    {
        return Err(AutomatonError::LetterOutOfRange {
            letter: bad,
            alphabet,
        });
    }
    let (nx, ny) = (x.len(), y.len());
    let mut trans = Vec::with_capacity(nx + ny);
    for (i, &l) in x.letters().iter().enumerate() {
        trans.push((i, l, i + 1));
    }
    for (j, &l) in y.letters().iter().enumerate() {
        trans.push((nx + j, l, nx + (j + 1) % ny));
    }
    let accepting = (0..nx + ny).map(|q| q >= nx).collect();
    Ok(BuchiNfa::from_parts(
        nx + ny,
        alphabet,
        trans,
        vec![0],
        accepting,
    ))
}

/// Disjoint sum; `b`'s states are shifted past `a`'s.
pub fn union(a: &BuchiNfa, b: &BuchiNfa) -> Result<BuchiNfa, AutomatonError> {
    same_alphabet(a, b)?;
    let shift = a.state_count();
    let trans = a
        .transitions()
        .chain(b.transitions().map(|(p, l, q)| (p + shift, l, q + shift)))
        .collect();
    let initial = a
        .initial()
        .iter()
        .copied()
        .chain(b.initial().iter().map(|&q| q + shift))
        .collect();
    let accepting = (0..shift)
        .map(|q| a.is_accepting(q))
        .chain((0..b.state_count()).map(|q| b.is_accepting(q)))
        .collect();
    Ok(BuchiNfa::from_parts(
        shift + b.state_count(),
        a.alphabet_size(),
        trans,
        initial,
        accepting,
    ))
}

/// A state of the intersection automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductState {
    pub flag: bool,
    pub left: usize,
    pub right: usize,
}

/// Intersection by the flagged product. Only reachable product states are
/// built.
pub fn intersection(a: &BuchiNfa, b: &BuchiNfa) -> Result<BuchiNfa, AutomatonError> {
    Ok(intersection_with_origins(a, b)?.0)
}

/// Like [`intersection`], also returning the product state behind each
/// state of the result.
pub fn intersection_with_origins(
    a: &BuchiNfa,
    b: &BuchiNfa,
) -> Result<(BuchiNfa, Vec<ProductState>), AutomatonError> {
    same_alphabet(a, b)?;
    Ok(product_mapped(a, b))
}

/// The flag is set while waiting for an accepting state of `a` and cleared
/// while waiting for one of `b`; accepting product states are the flagged
/// ones over an accepting state of `a`.
pub(crate) fn product_mapped(a: &BuchiNfa, b: &BuchiNfa) -> (BuchiNfa, Vec<ProductState>) {
    let mut index: HashMap<ProductState, usize> = HashMap::new();
    let mut states: Vec<ProductState> = Vec::new();
    let mut trans = Vec::new();
    let mut intern = |s: ProductState, states: &mut Vec<ProductState>| -> usize {
        *index.entry(s).or_insert_with(|| {
            states.push(s);
            states.len() - 1
        })
    };
    let mut initial = Vec::new();
    for &p in a.initial() {
        for &q in b.initial() {
            initial.push(intern(
                ProductState {
                    flag: false,
                    left: p,
                    right: q,
                },
                &mut states,
            ));
        }
    }
    let mut next = 0;
    while next < states.len() {
        let s = states[next];
        let flag = if s.flag && a.is_accepting(s.left) {
            false
        } else if !s.flag && b.is_accepting(s.right) {
            true
        } else {
            s.flag
        };
        for l in 0..a.alphabet_size() {
            for &p in a.successors(s.left, l) {
                for &q in b.successors(s.right, l) {
                    let t = intern(
                        ProductState {
                            flag,
                            left: p,
                            right: q,
                        },
                        &mut states,
                    );
                    trans.push((next, l, t));
                }
            }
        }
        next += 1;
    }
    if states.is_empty() {
        let placeholder = ProductState {
            flag: false,
            left: 0,
            right: 0,
        };
        return (BuchiNfa::empty(a.alphabet_size()), vec![placeholder]);
    }
    let accepting = states
        .iter()
        .map(|s| s.flag && a.is_accepting(s.left))
        .collect();
    let nfa = BuchiNfa::from_parts(states.len(), a.alphabet_size(), trans, initial, accepting);
    (nfa, states)
}

/// Intersection without the flag, for when one side is weak: a run of the
/// weak side eventually stays in one component, so accepted runs are those
/// meeting accepting states of both sides together infinitely often.
pub(crate) fn weak_intersection(a: &BuchiNfa, b: &BuchiNfa) -> BuchiNfa {
    debug_assert!(a.is_weak() || b.is_weak());
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut states: Vec<(usize, usize)> = Vec::new();
    let mut intern = |s: (usize, usize), states: &mut Vec<(usize, usize)>| -> usize {
        *index.entry(s).or_insert_with(|| {
            states.push(s);
            states.len() - 1
        })
    };
    let mut initial = Vec::new();
    for &p in a.initial() {
        for &q in b.initial() {
            initial.push(intern((p, q), &mut states));
        }
    }
    let mut trans = Vec::new();
    let mut next = 0;
    while next < states.len() {
        let (u, v) = states[next];
        for l in 0..a.alphabet_size() {
            for &p in a.successors(u, l) {
                for &q in b.successors(v, l) {
                    trans.push((next, l, intern((p, q), &mut states)));
                }
            }
        }
        next += 1;
    }
    if states.is_empty() {
        return BuchiNfa::empty(a.alphabet_size());
    }
    let accepting = states
        .iter()
        .map(|&(p, q)| a.is_accepting(p) && b.is_accepting(q))
        .collect();
    BuchiNfa::from_parts(states.len(), a.alphabet_size(), trans, initial, accepting)
}

/// Whether `a` accepts the sequence `σ`.
pub fn membership_up(a: &BuchiNfa, sigma: &UpWord) -> Result<bool, AutomatonError> {
    let exact = exact_up_nfa(&sigma.prefix, &sigma.period, a.alphabet_size())?;
    Ok(is_satisfiable(&intersection(a, &exact)?))
}

/// A match of `a` whose lasso word is equivalent to `σ`, if `σ` is accepted.
pub fn match_for_up(a: &BuchiNfa, sigma: &UpWord) -> Result<Option<Match>, AutomatonError> {
    let exact = exact_up_nfa(&sigma.prefix, &sigma.period, a.alphabet_size())?;
    let (product, origins) = intersection_with_origins(a, &exact)?;
    Ok(find_match(&product).map(|m| Match {
        stem_path: m.stem_path.iter().map(|&s| origins[s].left).collect(),
        cycle_path: m.cycle_path.iter().map(|&s| origins[s].left).collect(),
        stem: m.stem,
        cycle: m.cycle,
    }))
}

/// Adds a copy `(p, b, q)` of every transition `(p, a, q)` with `(a, b)` in
/// `pairs`.
pub fn ex_project(a: &BuchiNfa, pairs: &[(usize, usize)]) -> BuchiNfa {
    let mut trans: Vec<_> = a.transitions().collect();
    for (p, l, q) in a.transitions() {
        for &(from, to) in pairs {
            if from == l && to < a.alphabet_size() {
                trans.push((p, to, q));
            }
        }
    }
    rebuild(a, trans)
}

/// For `σ` accepted by `ex_project(a, pairs)`, a match of `a` itself whose
/// letters relate to those of a lasso for `σ` through `pairs`, together with
/// that relabelled lasso word.
pub fn ex_project_witness(
    a: &BuchiNfa,
    pairs: &[(usize, usize)],
    sigma: &UpWord,
) -> Result<Option<(Match, UpWord)>, AutomatonError> {
    let projected = ex_project(a, pairs);
    let Some(m) = match_for_up(&projected, sigma)? else {
        return Ok(None);
    };
    let relabel = |path: &[usize], word: &Word| -> Word {
        let letters = word
            .letters()
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let (p, q) = (path[i], path[i + 1]);
                if a.has_transition(p, l, q) {
                    return l;
                }
                pairs
                    .iter()
                    .filter(|&&(from, to)| to == l && a.has_transition(p, from, q))
                    .map(|&(from, _)| from)
                    .min()
                    .expect("projected transition has an origin")
            })
            .collect();
        Word::new(letters).expect("nonempty")
    };
    let stem = relabel(&m.stem_path, &m.stem);
    let cycle = relabel(&m.cycle_path, &m.cycle);
    let witness = UpWord::new(stem.clone(), cycle.clone());
    Ok(Some((
        Match {
            stem,
            cycle,
            stem_path: m.stem_path,
            cycle_path: m.cycle_path,
        },
        witness,
    )))
}

/// Reads letters of a larger alphabet through `view`: the result has a
/// transition `(p, l, q)` whenever `a` has `(p, view[l], q)`.
pub(crate) fn lift(a: &BuchiNfa, view: &[usize]) -> BuchiNfa {
    let mut trans = Vec::new();
    for (l, &old) in view.iter().enumerate() {
        for p in 0..a.state_count() {
            for &q in a.successors(p, old) {
                trans.push((p, l, q));
            }
        }
    }
    let accepting = (0..a.state_count()).map(|q| a.is_accepting(q)).collect();
    BuchiNfa::from_parts(
        a.state_count(),
        view.len(),
        trans,
        a.initial().to_vec(),
        accepting,
    )
}

/// Renames letters through `image` into an alphabet of `size` letters.
pub(crate) fn project_out(a: &BuchiNfa, image: &[usize], size: usize) -> BuchiNfa {
    let trans = a.transitions().map(|(p, l, q)| (p, image[l], q)).collect();
    let accepting = (0..a.state_count()).map(|q| a.is_accepting(q)).collect();
    BuchiNfa::from_parts(
        a.state_count(),
        size,
        trans,
        a.initial().to_vec(),
        accepting,
    )
}

fn rebuild(a: &BuchiNfa, trans: Vec<(usize, usize, usize)>) -> BuchiNfa {
    let accepting = (0..a.state_count()).map(|q| a.is_accepting(q)).collect();
    BuchiNfa::from_parts(
        a.state_count(),
        a.alphabet_size(),
        trans,
        a.initial().to_vec(),
        accepting,
    )
}
