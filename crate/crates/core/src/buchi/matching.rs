//! Lasso witnesses for nonemptiness.

use std::collections::VecDeque;

use super::BuchiNfa;
use crate::relation::Relation;
use crate::word::{UpWord, Word};

/// A lasso `stem · cycle^ω` together with the runs that witness it.
///
/// `stem_path` has `stem.len() + 1` states, starting at an initial state and
/// ending at the state where `cycle_path` starts and ends. `cycle_path` has
/// `cycle.len() + 1` states and visits an accepting state before its last
/// position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Match {
    pub stem: Word,
    pub cycle: Word,
    pub stem_path: Vec<usize>,
    pub cycle_path: Vec<usize>,
}

impl Match {
    pub fn up_word(&self) -> UpWord {
        UpWord::new(self.stem.clone(), self.cycle.clone())
    }

    /// Re-checks the witness against `a` using only letter relations.
    pub fn is_valid_for(&self, a: &BuchiNfa) -> bool {
        let n = a.state_count();
        let sp = &self.stem_path;
        let cp = &self.cycle_path;
        if sp.len() != self.stem.len() + 1 || cp.len() != self.cycle.len() + 1 {
            return false;
        }
        if sp.iter().chain(cp).any(|&q| q >= n) {
            return false;
        }
        if self
            .stem
            .letters()
            .iter()
            .chain(self.cycle.letters())
            .any(|&l| l >= a.alphabet_size())
        {
            return false;
        }
        let steps_ok = |path: &[usize], word: &Word| {
            word.letters()
                .iter()
                .enumerate()
                .all(|(i, &l)| a.letter_relation(l).contains(path[i], path[i + 1]))
        };
        a.is_initial(sp[0])
            && sp[sp.len() - 1] == cp[0]
            && cp[0] == cp[cp.len() - 1]
            && steps_ok(sp, &self.stem)
            && steps_ok(cp, &self.cycle)
            && cp[..cp.len() - 1].iter().any(|&q| a.is_accepting(q))
    }
}

/// Some accepting lasso of `a`, if one exists.
///
/// The loop state is the lowest-numbered reachable accepting state lying on a
/// cycle; stem and loop are shortest paths found breadth-first, with ties
/// broken by lower source state and then lower letter.
pub fn find_match(a: &BuchiNfa) -> Option<Match> {
    let reach = a.reachable();
    let (comp, cyclic) = a.sccs();
    let q = (0..a.state_count()).find(|&q| reach[q] && a.is_accepting(q) && cyclic[comp[q]])?;
    let sources: Vec<usize> = a.initial().to_vec();
    let (stem, stem_path) = shortest_nonempty_path(a, &sources, q)?;
    let (cycle, cycle_path) = shortest_nonempty_path(a, &[q], q)?;
    Some(Match {
        stem,
        cycle,
        stem_path,
        cycle_path,
    })
}

pub fn is_satisfiable(a: &BuchiNfa) -> bool {
    let productive = a.productive();
    a.initial().iter().any(|&p| productive[p])
}

/// Shortest path of length ≥ 1 from one of `sources` to `target`.
fn shortest_nonempty_path(
    a: &BuchiNfa,
    sources: &[usize],
    target: usize,
) -> Option<(Word, Vec<usize>)> {
    let n = a.state_count();
    // parent[q] = (previous state, letter) on the first discovery of q.
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut queue = VecDeque::new();
    let expand =
        |p: usize, parent: &mut Vec<Option<(usize, usize)>>, queue: &mut VecDeque<usize>| {
            for l in 0..a.alphabet_size() {
                for &r in a.successors(p, l) {
                    if parent[r].is_none() {
                        parent[r] = Some((p, l));
                        queue.push_back(r);
                    }
                }
            }
        };
    for &s in sources {
        expand(s, &mut parent, &mut queue);
    }
    while parent[target].is_none() {
        let p = queue.pop_front()?;
        expand(p, &mut parent, &mut queue);
    }
    let mut letters = Vec::new();
    let mut path = vec![target];
    let mut cur = target;
    loop {
        let (prev, l) = parent[cur].expect("discovered");
        letters.push(l);
        path.push(prev);
        cur = prev;
        // Every parent was expanded before its child was discovered, so the
        // walk reaches a source; stopping at the first one keeps length ≥ 1.
        if sources.contains(&cur) {
            break;
        }
    }
    letters.reverse();
    path.reverse();
    Some((Word::new(letters).expect("nonempty"), path))
}

/// Composition of the letter relations along `w`.
pub fn relation_of_word(a: &BuchiNfa, w: &Word) -> Relation {
    let mut r = a.letter_relation(w[0]);
    for &l in &w.letters()[1..] {
        r = r.compose(&a.letter_relation(l));
    }
    r
}
