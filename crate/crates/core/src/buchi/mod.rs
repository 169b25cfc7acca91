//! Nondeterministic Büchi automata over a finite alphabet of letter indices.
//!
//! A run is accepting when it passes through accepting states infinitely
//! often. All operations are pure and return fresh automata.

mod format;
mod matching;
mod ops;
mod simulation;

use std::collections::VecDeque;

use thiserror::Error;

use crate::relation::Relation;
use crate::word::Word;

pub use format::FormatError;
pub use matching::{find_match, is_satisfiable, relation_of_word, Match};
pub use ops::{
    ex_project, ex_project_witness, exact_up_nfa, intersection, intersection_with_origins,
    match_for_up, membership_up, union, ProductState,
};
pub(crate) use ops::{lift, project_out, weak_intersection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("automaton needs at least one state and one letter")]
    Degenerate,
    #[error("state {state} out of range (automaton has {states} states)")]
    StateOutOfRange { state: usize, states: usize },
    #[error("letter {letter} out of range (alphabet has {alphabet} letters)")]
    LetterOutOfRange { letter: usize, alphabet: usize },
    #[error("alphabet mismatch: {left} vs {right} letters")]
    AlphabetMismatch { left: usize, right: usize },
}

/// A Büchi NFA with states `0..states` and letters `0..alphabet`.
///
/// Transitions are kept sorted by `(source, letter, target)` in a compressed
/// row layout so that successor lookups are slices.
#[derive(Clone, PartialEq, Eq)]
pub struct BuchiNfa {
    states: usize,
    alphabet: usize,
    initial: Vec<usize>,
    accepting: Vec<bool>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl BuchiNfa {
    pub fn new(
        states: usize,
        alphabet: usize,
        transitions: impl IntoIterator<Item = (usize, usize, usize)>,
        initial: impl IntoIterator<Item = usize>,
        accepting: impl IntoIterator<Item = usize>,
    ) -> Result<Self, AutomatonError> {
        if states == 0 || alphabet == 0 {
            return Err(AutomatonError::Degenerate);
        }
        let check_state = |q: usize| {
            if q < states {
                Ok(q)
            } else {
                Err(AutomatonError::StateOutOfRange { state: q, states })
            }
        };
        let mut trans = Vec::new();
        for (p, a, q) in transitions {
            check_state(p)?;
            check_state(q)?;
            if a >= alphabet {
                return Err(AutomatonError::LetterOutOfRange {
                    letter: a,
                    alphabet,
                });
            }
            trans.push((p, a, q));
        }
        let mut init = initial
            .into_iter()
            .map(check_state)
            .collect::<Result<Vec<_>, _>>()?;
        init.sort_unstable();
        init.dedup();
        let mut acc = vec![false; states];
        for q in accepting {
            acc[check_state(q)?] = true;
        }
        Ok(Self::from_parts(states, alphabet, trans, init, acc))
    }

    /// Trusted constructor for internal builders; indices must be in range.
    pub(crate) fn from_parts(
        states: usize,
        alphabet: usize,
        mut trans: Vec<(usize, usize, usize)>,
        mut initial: Vec<usize>,
        accepting: Vec<bool>,
    ) -> Self {
        debug_assert!(states > 0 && alphabet > 0 && accepting.len() == states);
        trans.sort_unstable();
        trans.dedup();
        initial.sort_unstable();
        initial.dedup();
        let mut offsets = vec![0; states * alphabet + 1];
        for &(p, a, _) in &trans {
            offsets[p * alphabet + a + 1] += 1;
        }
        for i in 1..offsets.len() {
            offsets[i] += offsets[i - 1];
        }
        let targets = trans.into_iter().map(|(_, _, q)| q).collect();
        BuchiNfa {
            states,
            alphabet,
            initial,
            accepting,
            offsets,
            targets,
        }
    }

    /// One non-initial, non-accepting state and no transitions.
    pub fn empty(alphabet: usize) -> Self {
        Self::from_parts(1, alphabet, vec![], vec![], vec![false])
    }

    /// One initial accepting state looping on every letter.
    pub fn universal(alphabet: usize) -> Self {
        let trans = (0..alphabet).map(|a| (0, a, 0)).collect();
        Self::from_parts(1, alphabet, trans, vec![0], vec![true])
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    pub fn is_initial(&self, q: usize) -> bool {
        self.initial.binary_search(&q).is_ok()
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.states).filter(|&q| self.accepting[q])
    }

    pub fn transition_count(&self) -> usize {
        self.targets.len()
    }

    #[inline]
    pub fn successors(&self, p: usize, a: usize) -> &[usize] {
        let i = p * self.alphabet + a;
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    /// All successors of `p` on any letter (may repeat).
    pub fn all_successors(&self, p: usize) -> &[usize] {
        let lo = self.offsets[p * self.alphabet];
        let hi = self.offsets[(p + 1) * self.alphabet];
        &self.targets[lo..hi]
    }

    pub fn has_transition(&self, p: usize, a: usize, q: usize) -> bool {
        self.successors(p, a).binary_search(&q).is_ok()
    }

    /// Transitions in `(source, letter, target)` order.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.states).flat_map(move |p| {
            (0..self.alphabet)
                .flat_map(move |a| self.successors(p, a).iter().map(move |&q| (p, a, q)))
        })
    }

    /// `{(p, q) : (p, a, q) is a transition}`.
    pub fn letter_relation(&self, a: usize) -> Relation {
        let mut r = Relation::empty(self.states);
        for p in 0..self.states {
            for &q in self.successors(p, a) {
                r.insert(p, q);
            }
        }
        r
    }

    /// Path profile of `w`: the pairs `(p, q)` joined by a path on `w`, and
    /// those joined by a path that visits an accepting state at some position
    /// other than the last.
    pub fn path_profile(&self, w: &Word) -> (Relation, Relation) {
        let n = self.states;
        let mut reach = Relation::empty(n);
        let mut reach_acc = Relation::empty(n);
        // Per source: current states, split by whether an accepting state
        // has been left on the way there.
        for p in 0..n {
            let mut plain = vec![false; n];
            let mut flagged = vec![false; n];
            plain[p] = true;
            for &a in w.letters() {
                let mut next_plain = vec![false; n];
                let mut next_flagged = vec![false; n];
                for r in 0..n {
                    let (from_plain, from_flagged) = (plain[r], flagged[r]);
                    if !from_plain && !from_flagged {
                        continue;
                    }
                    for &q in self.successors(r, a) {
                        if from_flagged || self.accepting[r] {
                            next_flagged[q] = true;
                        }
                        if from_plain && !self.accepting[r] {
                            next_plain[q] = true;
                        }
                    }
                }
                plain = next_plain;
                flagged = next_flagged;
            }
            for q in 0..n {
                if plain[q] || flagged[q] {
                    reach.insert(p, q);
                }
                if flagged[q] {
                    reach_acc.insert(p, q);
                }
            }
        }
        (reach, reach_acc)
    }

    /// There is a path on `w` from `p` to `q`.
    pub fn trans(&self, p: usize, w: &Word, q: usize) -> bool {
        self.path_profile(w).0.contains(p, q)
    }

    /// There is a path on `w` from `p` to `q` that passes through an
    /// accepting state before its last position.
    pub fn transa(&self, p: usize, w: &Word, q: usize) -> bool {
        self.path_profile(w).1.contains(p, q)
    }

    /// Finite-word acceptance: a path on `w` from an initial state to an
    /// accepting state.
    pub fn accepts_finite(&self, w: &Word) -> bool {
        let mut current = vec![false; self.states];
        for &p in &self.initial {
            current[p] = true;
        }
        for &a in w.letters() {
            let mut next = vec![false; self.states];
            for p in (0..self.states).filter(|&p| current[p]) {
                for &q in self.successors(p, a) {
                    next[q] = true;
                }
            }
            current = next;
        }
        (0..self.states).any(|q| current[q] && self.accepting[q])
    }

    pub(crate) fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.states];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &p in &self.initial {
            if !seen[p] {
                seen[p] = true;
                queue.push_back(p);
            }
        }
        while let Some(p) = queue.pop_front() {
            for &q in self.all_successors(p) {
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        seen
    }

    /// Strongly connected components of the state graph (letters ignored).
    /// Returns the component index of each state and whether the component
    /// contains a cycle.
    pub(crate) fn sccs(&self) -> (Vec<usize>, Vec<bool>) {
        const UNVISITED: usize = usize::MAX;
        let n = self.states;
        let mut index = vec![UNVISITED; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comp = vec![UNVISITED; n];
        let mut cyclic = Vec::new();
        let mut counter = 0;
        // Iterative Tarjan: (state, next successor offset).
        let mut work: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if index[root] != UNVISITED {
                continue;
            }
            work.push((root, 0));
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut next)) = work.last_mut() {
                let succ = self.all_successors(v);
                if *next < succ.len() {
                    let w = succ[*next];
                    *next += 1;
                    if index[w] == UNVISITED {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        work.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    work.pop();
                    if let Some(&(parent, _)) = work.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        let id = cyclic.len();
                        let mut size = 0;
                        loop {
                            let w = stack.pop().expect("tarjan stack");
                            on_stack[w] = false;
                            comp[w] = id;
                            size += 1;
                            if w == v {
                                break;
                            }
                        }
                        let self_loop = self.all_successors(v).contains(&v);
                        cyclic.push(size > 1 || self_loop);
                    }
                }
            }
        }
        (comp, cyclic)
    }

    /// Whether every cycle stays among accepting states or among rejecting
    /// ones: acceptance is constant on each cyclic component.
    pub(crate) fn is_weak(&self) -> bool {
        let (comp, cyclic) = self.sccs();
        let mut seen: Vec<Option<bool>> = vec![None; cyclic.len()];
        (0..self.states).all(|q| {
            let c = comp[q];
            !cyclic[c] || *seen[c].get_or_insert(self.accepting[q]) == self.accepting[q]
        })
    }

    /// States that can start an accepting run: those from which an accepting
    /// state lying on a cycle is reachable.
    pub(crate) fn productive(&self) -> Vec<bool> {
        let (comp, cyclic) = self.sccs();
        let mut good = vec![false; self.states];
        let mut pred: Vec<Vec<usize>> = vec![Vec::new(); self.states];
        for (p, _, q) in self.transitions() {
            pred[q].push(p);
        }
        let mut queue = VecDeque::new();
        for q in 0..self.states {
            if self.accepting[q] && cyclic[comp[q]] {
                good[q] = true;
                queue.push_back(q);
            }
        }
        while let Some(q) = queue.pop_front() {
            for &p in &pred[q] {
                if !good[p] {
                    good[p] = true;
                    queue.push_back(p);
                }
            }
        }
        good
    }

    /// Keeps only reachable states that can still start an accepting run.
    /// The accepted language is unchanged.
    pub fn trim(&self) -> BuchiNfa {
        let reach = self.reachable();
        let prod = self.productive();
        let keep: Vec<bool> = (0..self.states).map(|q| reach[q] && prod[q]).collect();
        self.restrict(&keep)
    }

    fn restrict(&self, keep: &[bool]) -> BuchiNfa {
        let mut map = vec![usize::MAX; self.states];
        let mut n = 0;
        for q in 0..self.states {
            if keep[q] {
                map[q] = n;
                n += 1;
            }
        }
        if n == 0 {
            return BuchiNfa::empty(self.alphabet);
        }
        if n == self.states {
            return self.clone();
        }
        let trans = self
            .transitions()
            .filter(|&(p, _, q)| keep[p] && keep[q])
            .map(|(p, a, q)| (map[p], a, map[q]))
            .collect();
        let init = self
            .initial
            .iter()
            .filter(|&&p| keep[p])
            .map(|&p| map[p])
            .collect();
        let acc = (0..self.states)
            .filter(|&q| keep[q])
            .map(|q| self.accepting[q])
            .collect();
        BuchiNfa::from_parts(n, self.alphabet, trans, init, acc)
    }

    /// Trims, merges bisimilar states, and on automata of moderate size
    /// applies [direct simulation](simulation) reductions. The accepted
    /// language is unchanged.
    pub fn reduce(&self) -> BuchiNfa {
        let quotient = self.trim().bisimulation_quotient();
        if quotient.states <= SIMULATION_LIMIT {
            simulation::simulation_reduce(&quotient)
        } else {
            quotient
        }
    }

    /// Merges bisimilar states (same acceptance and the same letter-labelled
    /// moves into each class).
    fn bisimulation_quotient(self) -> BuchiNfa {
        let trimmed = self;
        let n = trimmed.states;
        let mut block: Vec<usize> = (0..n).map(|q| trimmed.accepting[q] as usize).collect();
        let mut blocks = renumber(&mut block);
        loop {
            let mut signatures: Vec<(usize, Vec<(usize, usize)>)> = Vec::with_capacity(n);
            for p in 0..n {
                let mut sig: Vec<(usize, usize)> = Vec::new();
                for a in 0..trimmed.alphabet {
                    for &q in trimmed.successors(p, a) {
                        sig.push((a, block[q]));
                    }
                }
                sig.sort_unstable();
                sig.dedup();
                signatures.push((block[p], sig));
            }
            let mut ids = std::collections::HashMap::new();
            let mut next: Vec<usize> = Vec::with_capacity(n);
            for sig in signatures {
                let fresh = ids.len();
                next.push(*ids.entry(sig).or_insert(fresh));
            }
            let count = ids.len();
            block = next;
            if count == blocks {
                break;
            }
            blocks = count;
        }
        if blocks == n {
            return trimmed;
        }
        let trans = trimmed
            .transitions()
            .map(|(p, a, q)| (block[p], a, block[q]))
            .collect();
        let init = trimmed.initial.iter().map(|&p| block[p]).collect();
        let mut acc = vec![false; blocks];
        for q in 0..n {
            if trimmed.accepting[q] {
                acc[block[q]] = true;
            }
        }
        BuchiNfa::from_parts(blocks, trimmed.alphabet, trans, init, acc)
    }
}

/// Largest automaton on which [`BuchiNfa::reduce`] computes simulations.
const SIMULATION_LIMIT: usize = 4000;

/// Renumbers block ids densely in order of first appearance.
fn renumber(block: &mut [usize]) -> usize {
    let mut ids = std::collections::HashMap::new();
    for b in block.iter_mut() {
        let fresh = ids.len();
        *b = *ids.entry(*b).or_insert(fresh);
    }
    ids.len()
}

impl std::fmt::Debug for BuchiNfa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BuchiNfa")
            .field("states", &self.states)
            .field("alphabet", &self.alphabet)
            .field("initial", &self.initial)
            .field("accepting", &self.accepting_states().collect::<Vec<_>>())
            .field("transitions", &self.transitions().collect::<Vec<_>>())
            .finish()
    }
}
