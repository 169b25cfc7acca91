//! Complementation through transition profiles.
//!
//! The color of a nonempty word is the pair of relations recording which
//! states it connects and which it connects through an accepting state.
//! Colors form a finite semigroup; a sequence has kind `V/W` when it splits
//! into a first factor of color `V` followed by infinitely many factors of
//! color `W`. The complement accepts the sequences of every kind that the
//! automaton accepts no sequence of.

use std::collections::HashMap;

use thiserror::Error;

use crate::buchi::{intersection, is_satisfiable, BuchiNfa};
use crate::relation::Relation;
use crate::semigroup::FiniteSemigroup;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplementError {
    #[error("color dimensions differ: {left} vs {right} states")]
    DimensionMismatch { left: usize, right: usize },
    #[error("more than {0} realizable colors")]
    BudgetExceeded(usize),
}

/// A transition profile: `reach` holds the pairs joined by a path, and
/// `reach_acc` those joined by a path through an accepting state before its
/// last position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color {
    pub reach: Relation,
    pub reach_acc: Relation,
}

/// The kind `first/rest`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Kind {
    pub first: Color,
    pub rest: Color,
}

impl Color {
    pub fn dim(&self) -> usize {
        self.reach.dim()
    }

    fn add(&self, other: &Color) -> Color {
        let reach = self.reach.compose(&other.reach);
        let mut reach_acc = self.reach_acc.compose(&other.reach);
        reach_acc.union_with(&self.reach.compose(&other.reach_acc));
        Color { reach, reach_acc }
    }
}

pub fn color_add(v: &Color, w: &Color) -> Result<Color, ComplementError> {
    if v.dim() != w.dim() {
        return Err(ComplementError::DimensionMismatch {
            left: v.dim(),
            right: w.dim(),
        });
    }
    Ok(v.add(w))
}

pub fn gamma_letter(a: &BuchiNfa, letter: usize) -> Color {
    let reach = a.letter_relation(letter);
    let mut reach_acc = Relation::empty(a.state_count());
    for (p, q) in reach.pairs() {
        if a.is_accepting(p) {
            reach_acc.insert(p, q);
        }
    }
    Color { reach, reach_acc }
}

pub fn gamma_word(a: &BuchiNfa, w: &Word) -> Color {
    let mut c = gamma_letter(a, w[0]);
    for &l in &w.letters()[1..] {
        c = c.add(&gamma_letter(a, l));
    }
    c
}

pub const DEFAULT_MAX_COLORS: usize = 20_000;

/// The subsemigroup of colors generated by the letters of an automaton,
/// with its right action by letters tabulated.
#[derive(Debug, Clone)]
pub struct RealizableColors {
    colors: Vec<Color>,
    index: HashMap<Color, usize>,
    letter: Vec<usize>,
    step: Vec<usize>,
    alphabet: usize,
}

impl RealizableColors {
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn index_of(&self, c: &Color) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Index of the color of the one-letter word `l`.
    pub fn letter(&self, l: usize) -> usize {
        self.letter[l]
    }

    /// Index of `colors[c] + γ(l)`.
    pub fn step(&self, c: usize, l: usize) -> usize {
        self.step[c * self.alphabet + l]
    }

    /// Index of `colors[v] + colors[w]`.
    pub fn sum(&self, v: usize, w: usize) -> usize {
        let sum = self.colors[v].add(&self.colors[w]);
        self.index_of(&sum).expect("closed under addition")
    }
}

/// Closure of the letter colors of `a` under addition.
pub fn realizable_colors(
    a: &BuchiNfa,
    max_colors: usize,
) -> Result<RealizableColors, ComplementError> {
    let alphabet = a.alphabet_size();
    let generators: Vec<Color> = (0..alphabet).map(|l| gamma_letter(a, l)).collect();
    let mut colors: Vec<Color> = Vec::new();
    let mut index: HashMap<Color, usize> = HashMap::new();
    let mut intern = |c: Color, colors: &mut Vec<Color>| -> Result<usize, ComplementError> {
        if let Some(&i) = index.get(&c) {
            return Ok(i);
        }
        if colors.len() == max_colors {
            return Err(ComplementError::BudgetExceeded(max_colors));
        }
        index.insert(c.clone(), colors.len());
        colors.push(c);
        Ok(colors.len() - 1)
    };
    let mut letter = Vec::with_capacity(alphabet);
    for g in &generators {
        letter.push(intern(g.clone(), &mut colors)?);
    }
    // Every word's color is reached from a letter color by right steps.
    let mut step = Vec::new();
    let mut next = 0;
    while next < colors.len() {
        for g in &generators {
            let sum = colors[next].add(g);
            step.push(intern(sum, &mut colors)?);
        }
        next += 1;
    }
    let index = colors
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    Ok(RealizableColors {
        colors,
        index,
        letter,
        step,
        alphabet,
    })
}

/// The factor-chaining automaton over colors `0..n` acted on by letters:
/// a head factor reaching color `head`, then factors reaching `rest`
/// forever. State 0 starts the head, state `n + 1` is the accepting junction
/// that starts each later factor.
fn chain_nfa(
    alphabet: usize,
    n: usize,
    letter: impl Fn(usize) -> usize,
    step: impl Fn(usize, usize) -> usize,
    head: usize,
    rest: usize,
) -> BuchiNfa {
    let junction = n + 1;
    let states = 2 * (n + 1);
    let mut trans = Vec::new();
    for base in [0, junction] {
        let target_color = if base == 0 { head } else { rest };
        let mut add = |p: usize, l: usize, c: usize| {
            trans.push((p, l, base + 1 + c));
            if c == target_color {
                trans.push((p, l, junction));
            }
        };
        for l in 0..alphabet {
            add(base, l, letter(l));
            for c in 0..n {
                add(base + 1 + c, l, step(c, l));
            }
        }
    }
    let mut accepting = vec![false; states];
    accepting[junction] = true;
    BuchiNfa::from_parts(states, alphabet, trans, vec![0], accepting)
}

/// String acceptor for the words over the elements of `g` whose color is
/// `c`. State 0 is the start; state `1 + b` is reached by words of color `b`.
pub fn color_nfa(g: &FiniteSemigroup, c: usize) -> BuchiNfa {
    let n = g.size();
    let mut trans = Vec::new();
    for a in 0..n {
        trans.push((0, a, 1 + a));
        for b in 0..n {
            trans.push((1 + b, a, 1 + g.add(b, a)));
        }
    }
    let mut accepting = vec![false; n + 1];
    accepting[1 + c] = true;
    BuchiNfa::from_parts(n + 1, n, trans, vec![0], accepting)
}

/// Sequences over `g` with a first factor of color `c` and all later factors
/// of color `d`.
pub fn kind_nfa_semigroup(g: &FiniteSemigroup, c: usize, d: usize) -> BuchiNfa {
    chain_nfa(g.size(), g.size(), |a| a, |b, a| g.add(b, a), c, d)
}

/// Sequences over `g` with a Ramseyan factorization.
pub fn rf_nfa(g: &FiniteSemigroup) -> BuchiNfa {
    let mut parts = Vec::with_capacity(g.size() * g.size());
    for c in 0..g.size() {
        for d in 0..g.size() {
            parts.push(kind_nfa_semigroup(g, c, d));
        }
    }
    disjoint_union(&parts, g.size())
}

fn disjoint_union(parts: &[BuchiNfa], alphabet: usize) -> BuchiNfa {
    let mut trans = Vec::new();
    let mut initial = Vec::new();
    let mut accepting = Vec::new();
    let mut shift = 0;
    for part in parts {
        trans.extend(
            part.transitions()
                .map(|(p, l, q)| (p + shift, l, q + shift)),
        );
        initial.extend(part.initial().iter().map(|&q| q + shift));
        accepting.extend((0..part.state_count()).map(|q| part.is_accepting(q)));
        shift += part.state_count();
    }
    if shift == 0 {
        return BuchiNfa::empty(alphabet);
    }
    BuchiNfa::from_parts(shift, alphabet, trans, initial, accepting)
}

/// Sequences over the alphabet of `a` of kind `kind`.
pub fn kind_nfa(a: &BuchiNfa, kind: &Kind) -> Result<BuchiNfa, ComplementError> {
    let colors = realizable_colors(a, DEFAULT_MAX_COLORS)?;
    Ok(kind_nfa_in(a, &colors, kind))
}

/// [`kind_nfa`] over an already computed color closure.
pub fn kind_nfa_in(a: &BuchiNfa, colors: &RealizableColors, kind: &Kind) -> BuchiNfa {
    match (colors.index_of(&kind.first), colors.index_of(&kind.rest)) {
        (Some(v), Some(w)) => chain_nfa(
            a.alphabet_size(),
            colors.len(),
            |l| colors.letter(l),
            |c, l| colors.step(c, l),
            v,
            w,
        ),
        // No word has an unrealizable color, so no sequence has this kind.
        _ => BuchiNfa::empty(a.alphabet_size()),
    }
}

/// Whether `a` accepts some sequence of kind `kind`, decided by emptiness of
/// the product with the kind automaton.
pub fn compatible(a: &BuchiNfa, kind: &Kind) -> Result<bool, ComplementError> {
    let k = kind_nfa(a, kind)?;
    Ok(is_satisfiable(&intersection(&k, a).expect("same alphabet")))
}

/// Which kinds the complement is assembled from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KindSelection {
    /// Every pair of realizable colors.
    #[default]
    All,
    /// Pairs `V/W` with `W + W = W` and `V + W = V`. Every ultimately
    /// periodic sequence has such a kind, so the restriction keeps the
    /// complement exact on those sequences with fewer kinds.
    IdempotentLinked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplementConfig {
    pub max_colors: usize,
    pub kinds: KindSelection,
    /// Build the kind automata over classes of colors instead of colors: two
    /// colors are identified when no context tells them apart by the
    /// compatibility of linked kinds. Only linked kinds are used then, and
    /// the complement stays exact.
    pub syntactic: bool,
}

impl Default for ComplementConfig {
    fn default() -> Self {
        ComplementConfig {
            max_colors: DEFAULT_MAX_COLORS,
            kinds: KindSelection::All,
            syntactic: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ComplementStats {
    pub colors: usize,
    /// Color classes the automaton is built over; equals `colors` unless
    /// the syntactic quotient is used.
    pub classes: usize,
    pub compatible_kinds: usize,
    pub incompatible_kinds: usize,
    pub states: usize,
}

pub fn complement(a: &BuchiNfa) -> Result<BuchiNfa, ComplementError> {
    Ok(complement_with(a, &ComplementConfig::default())?.0)
}

/// A finite semigroup acted on by letters, with the rest colors whose kinds
/// are to be accepted after each head color.
struct Chains {
    n: usize,
    letter: Vec<usize>,
    /// `step[c * alphabet + l]`.
    step: Vec<usize>,
    /// Per head color.
    incompatible: Vec<Vec<usize>>,
}

/// The union of the kind automata of all selected kinds incompatible with
/// `a`, built with a shared head phase and one factor phase per rest color.
pub fn complement_with(
    a: &BuchiNfa,
    config: &ComplementConfig,
) -> Result<(BuchiNfa, ComplementStats), ComplementError> {
    let colors = realizable_colors(a, config.max_colors)?;
    let mut stats = ComplementStats {
        colors: colors.len(),
        ..Default::default()
    };
    let chains = if config.syntactic {
        let classes = syntactic_classes(a, &colors);
        stats.classes = classes.k;
        if let Some(dfa) = classes.weak_dfa(true) {
            for &(_, _, accepted) in &classes.linked {
                if accepted {
                    stats.compatible_kinds += 1;
                } else {
                    stats.incompatible_kinds += 1;
                }
            }
            let result = dfa.trim();
            stats.states = result.state_count();
            return Ok((result, stats));
        }
        classes.chains(&mut stats)
    } else {
        color_chains(a, &colors, config.kinds, &mut stats)
    };
    stats.classes = chains.n;
    let result = assemble(a.alphabet_size(), &chains);
    stats.states = result.state_count();
    Ok((result, stats))
}

fn color_chains(
    a: &BuchiNfa,
    colors: &RealizableColors,
    kinds: KindSelection,
    stats: &mut ComplementStats,
) -> Chains {
    let n = colors.len();
    let add = |v: usize, w: usize| colors.sum(v, w);
    let heads = head_targets(a, colors);
    let mut incompatible: Vec<Vec<usize>> = vec![Vec::new(); n];
    for w in 0..n {
        if kinds == KindSelection::IdempotentLinked && add(w, w) != w {
            continue;
        }
        let good = good_starts(&colors.colors()[w]);
        for v in 0..n {
            if kinds == KindSelection::IdempotentLinked && add(v, w) != v {
                continue;
            }
            if heads[v].iter().any(|&q| good[q]) {
                stats.compatible_kinds += 1;
            } else {
                stats.incompatible_kinds += 1;
                incompatible[v].push(w);
            }
        }
    }
    Chains {
        n,
        letter: colors.letter.clone(),
        step: colors.step.clone(),
        incompatible,
    }
}

/// Colors modulo the coarsest congruence under which "`s` followed by
/// infinitely many factors of color `f` is accepted" depends only on the
/// classes of `s` and `f`.
struct Classes {
    k: usize,
    alphabet: usize,
    letter: Vec<usize>,
    step: Vec<usize>,
    /// For linked class pairs `v/w` (`w + w = w`, `v + w = v`), whether
    /// the automaton accepts sequences of that kind.
    linked: Vec<(usize, usize, bool)>,
}

fn syntactic_classes(a: &BuchiNfa, colors: &RealizableColors) -> Classes {
    let n = colors.len();
    let alphabet = a.alphabet_size();
    let heads = head_targets(a, colors);
    // Idempotent power of every color.
    let power: Vec<usize> = (0..n)
        .map(|f| {
            let mut p = f;
            while colors.sum(p, p) != p {
                p = colors.sum(p, f);
            }
            p
        })
        .collect();
    let mut idempotents: Vec<usize> = power.clone();
    idempotents.sort_unstable();
    idempotents.dedup();
    // accepts[s][k]: a sequence of kind (s + e)/e meets the automaton, for
    // e = idempotents[k].
    let accepts: Vec<Vec<bool>> = {
        let goods: Vec<Vec<bool>> = idempotents
            .iter()
            .map(|&e| good_starts(&colors.colors()[e]))
            .collect();
        (0..n)
            .map(|s| {
                idempotents
                    .iter()
                    .zip(&goods)
                    .map(|(&e, good)| heads[colors.sum(s, e)].iter().any(|&q| good[q]))
                    .collect()
            })
            .collect()
    };
    let slot: HashMap<usize, usize> = idempotents
        .iter()
        .enumerate()
        .map(|(k, &e)| (e, k))
        .collect();
    let acc = |s: usize, f: usize| accepts[s][slot[&power[f]]];
    let left: Vec<usize> = (0..n)
        .flat_map(|c| (0..alphabet).map(move |l| (c, l)))
        .map(|(c, l)| colors.sum(colors.letter(l), c))
        .collect();
    // acc(u, f) depends on f only through its idempotent power, so u is
    // described as a head by its row of `accepts` and as a period by the
    // column of its idempotent power.
    let column: Vec<usize> = dense_ids(
        (0..idempotents.len())
            .map(|k| (0..n).map(|s| accepts[s][k]).collect::<Vec<bool>>())
            .collect(),
    );
    let mut class: Vec<usize> = dense_ids(
        (0..n)
            .map(|u| (accepts[u].clone(), column[slot[&power[u]]]))
            .collect(),
    );
    loop {
        let count = class.iter().max().map_or(0, |&m| m + 1);
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|u| {
                let mut sig = vec![class[u]];
                sig.extend((0..alphabet).map(|l| class[colors.step(u, l)]));
                sig.extend((0..alphabet).map(|l| class[left[u * alphabet + l]]));
                sig
            })
            .collect();
        let next = dense_ids(sigs);
        let refined = next.iter().max().map_or(0, |&m| m + 1);
        class = next;
        if refined == count {
            break;
        }
    }
    let k = class.iter().max().map_or(0, |&m| m + 1);
    let mut rep = vec![usize::MAX; k];
    for u in (0..n).rev() {
        rep[class[u]] = u;
    }
    let mul: Vec<usize> = (0..k * k)
        .map(|i| class[colors.sum(rep[i / k], rep[i % k])])
        .collect();
    let mut linked = Vec::new();
    for w in (0..k).filter(|&w| mul[w * k + w] == w) {
        for v in (0..k).filter(|&v| mul[v * k + w] == v) {
            linked.push((v, w, acc(rep[v], rep[w])));
        }
    }
    let letter = (0..alphabet).map(|l| class[colors.letter(l)]).collect();
    let step = (0..k)
        .flat_map(|c| (0..alphabet).map(move |l| (c, l)))
        .map(|(c, l)| class[colors.step(rep[c], l)])
        .collect();
    Classes {
        k,
        alphabet,
        letter,
        step,
        linked,
    }
}

impl Classes {
    fn chains(&self, stats: &mut ComplementStats) -> Chains {
        let mut incompatible: Vec<Vec<usize>> = vec![Vec::new(); self.k];
        for &(v, w, accepted) in &self.linked {
            if accepted {
                stats.compatible_kinds += 1;
            } else {
                stats.incompatible_kinds += 1;
                incompatible[v].push(w);
            }
        }
        Chains {
            n: self.k,
            letter: self.letter.clone(),
            step: self.step.clone(),
            incompatible,
        }
    }

    /// The automaton reading class names deterministically (state 0 before
    /// any letter, `1 + c` after a word of class `c`), when acceptance
    /// depends only on the strongly connected component a run ends in. Its
    /// cyclic components are accepting when their kinds are accepted, or
    /// when they are not if `negate` is set.
    fn weak_dfa(&self, negate: bool) -> Option<BuchiNfa> {
        let k = self.k;
        let mut trans = Vec::with_capacity((k + 1) * self.alphabet);
        for l in 0..self.alphabet {
            trans.push((0, l, 1 + self.letter[l]));
            for c in 0..k {
                trans.push((1 + c, l, 1 + self.step[c * self.alphabet + l]));
            }
        }
        let graph = BuchiNfa::from_parts(
            k + 1,
            self.alphabet,
            trans.clone(),
            vec![0],
            vec![false; k + 1],
        );
        let (comp, cyclic) = graph.sccs();
        let mut verdict: Vec<Option<bool>> = vec![None; cyclic.len()];
        for &(v, _, accepted) in &self.linked {
            let c = comp[1 + v];
            if !cyclic[c] {
                continue;
            }
            if *verdict[c].get_or_insert(accepted) != accepted {
                return None;
            }
        }
        let accepting = (0..=k)
            .map(|q| {
                cyclic[comp[q]]
                    && verdict[comp[q]].expect("cyclic class has a linked kind") != negate
            })
            .collect();
        Some(BuchiNfa::from_parts(
            k + 1,
            self.alphabet,
            trans,
            vec![0],
            accepting,
        ))
    }
}

/// A deterministic automaton accepting the same sequences as `a`, read off
/// the syntactic color classes, if acceptance is decided by the component
/// a run ends in.
pub fn weak_determinization(
    a: &BuchiNfa,
    max_colors: usize,
) -> Result<Option<BuchiNfa>, ComplementError> {
    let colors = realizable_colors(a, max_colors)?;
    Ok(syntactic_classes(a, &colors)
        .weak_dfa(false)
        .map(|d| d.reduce()))
}

/// Numbers distinct values densely in order of first appearance.
fn dense_ids<T: std::hash::Hash + Eq>(values: Vec<T>) -> Vec<usize> {
    let mut ids = HashMap::new();
    values
        .into_iter()
        .map(|v| {
            let fresh = ids.len();
            *ids.entry(v).or_insert(fresh)
        })
        .collect()
}

fn assemble(alphabet: usize, chains: &Chains) -> BuchiNfa {
    let n = chains.n;
    let step = |c: usize, l: usize| chains.step[c * alphabet + l];
    let incompatible = &chains.incompatible;
    // States: 0 = head start, 1 + v = head color v; then per used rest
    // color w a junction followed by one state per color.
    let mut block = vec![usize::MAX; n];
    let mut states = 1 + n;
    for ws in incompatible {
        for &w in ws {
            if block[w] == usize::MAX {
                block[w] = states;
                states += 1 + n;
            }
        }
    }
    let mut trans = Vec::new();
    let into_head = |p: usize, l: usize, v: usize, trans: &mut Vec<(usize, usize, usize)>| {
        trans.push((p, l, 1 + v));
        for &w in &incompatible[v] {
            trans.push((p, l, block[w]));
        }
    };
    for l in 0..alphabet {
        into_head(0, l, chains.letter[l], &mut trans);
        for c in 0..n {
            into_head(1 + c, l, step(c, l), &mut trans);
        }
    }
    let mut accepting = vec![false; states];
    for w in 0..n {
        let j = block[w];
        if j == usize::MAX {
            continue;
        }
        accepting[j] = true;
        let mut into_rest = |p: usize, l: usize, c: usize| {
            trans.push((p, l, j + 1 + c));
            if c == w {
                trans.push((p, l, j));
            }
        };
        for l in 0..alphabet {
            into_rest(j, l, chains.letter[l]);
            for c in 0..n {
                into_rest(j + 1 + c, l, step(c, l));
            }
        }
    }
    BuchiNfa::from_parts(states, alphabet, trans, vec![0], accepting).trim()
}

/// For each color `V`, the states reachable from an initial state by a word
/// of color `V`.
fn head_targets(a: &BuchiNfa, colors: &RealizableColors) -> Vec<Vec<usize>> {
    colors
        .colors()
        .iter()
        .map(|c| {
            let mut targets: Vec<usize> =
                a.initial().iter().flat_map(|&p| c.reach.image(p)).collect();
            targets.sort_unstable();
            targets.dedup();
            targets
        })
        .collect()
}

/// States from which repeated factors of color `w` admit a run through
/// accepting states infinitely often: those that can reach, along `w`-steps,
/// a state lying on a `w`-cycle containing an accepting step.
fn good_starts(w: &Color) -> Vec<bool> {
    let n = w.dim();
    let closure = w.reach.star();
    let back = w.reach_acc.compose(&closure);
    let looping: Vec<usize> = (0..n).filter(|&r| back.contains(r, r)).collect();
    (0..n)
        .map(|q| looping.iter().any(|&r| closure.contains(q, r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buchi::membership_up;
    use crate::word::UpWord;

    fn up(x: &[usize], y: &[usize]) -> UpWord {
        UpWord::from_vecs(x.to_vec(), y.to_vec()).unwrap()
    }

    fn w(v: &[usize]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    fn infinitely_many_ones() -> BuchiNfa {
        BuchiNfa::new(2, 2, [(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 1, 1)], [0], [1]).unwrap()
    }

    #[test]
    fn letter_colors() {
        let a = BuchiNfa::universal(1);
        let c = gamma_letter(&a, 0);
        assert_eq!(c.reach, Relation::identity(1));
        assert_eq!(c.reach_acc, Relation::identity(1));
        let b = BuchiNfa::new(1, 1, [(0, 0, 0)], [0], []).unwrap();
        assert!(gamma_letter(&b, 0).reach_acc.is_empty());
    }

    #[test]
    fn word_color_is_sum_of_letters() {
        let a = BuchiNfa::new(2, 1, [(0, 0, 1), (1, 0, 0), (1, 0, 1)], [0], [1]).unwrap();
        let g = gamma_letter(&a, 0);
        assert_eq!(gamma_word(&a, &w(&[0, 0])), color_add(&g, &g).unwrap());
        let other = Color {
            reach: Relation::empty(3),
            reach_acc: Relation::empty(3),
        };
        assert_eq!(
            color_add(&g, &other),
            Err(ComplementError::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn empty_colors_absorb() {
        let zero = Color {
            reach: Relation::empty(2),
            reach_acc: Relation::empty(2),
        };
        let id = Color {
            reach: Relation::identity(2),
            reach_acc: Relation::empty(2),
        };
        assert_eq!(color_add(&zero, &id).unwrap(), zero);
        assert_eq!(color_add(&id, &id).unwrap(), id);
    }

    #[test]
    fn closure_sizes() {
        assert_eq!(
            realizable_colors(&BuchiNfa::universal(1), 10)
                .unwrap()
                .len(),
            1
        );
        let none = BuchiNfa::new(2, 1, [], [0], [0]).unwrap();
        assert_eq!(realizable_colors(&none, 10).unwrap().len(), 1);
        let a = infinitely_many_ones();
        assert_eq!(
            realizable_colors(&a, 1).unwrap_err(),
            ComplementError::BudgetExceeded(1)
        );
    }

    #[test]
    fn color_acceptor_reads_colors() {
        let g = FiniteSemigroup::left_projection(2);
        let a = color_nfa(&g, 1);
        assert_eq!(a.state_count(), 3);
        assert!(a.accepts_finite(&w(&[1, 0, 0])));
        assert!(!a.accepts_finite(&w(&[0, 1])));
    }

    #[test]
    fn kind_automata_over_semigroups() {
        let g = FiniteSemigroup::cyclic(3);
        let k = kind_nfa_semigroup(&g, 1, 0);
        assert!(membership_up(&k, &up(&[1], &[1, 1, 1])).unwrap());
        assert!(!membership_up(&k, &up(&[0], &[0])).unwrap());
        let lp = FiniteSemigroup::left_projection(2);
        assert!(!membership_up(&kind_nfa_semigroup(&lp, 0, 1), &up(&[0], &[0])).unwrap());
        let rf = rf_nfa(&g);
        assert_eq!(rf.state_count(), 9 * 8);
        assert!(membership_up(&rf, &up(&[0], &[0])).unwrap());
    }

    #[test]
    fn kind_of_up_word() {
        let a = infinitely_many_ones();
        let (x, y) = (w(&[0, 1]), w(&[1, 0]));
        let kind = Kind {
            first: gamma_word(&a, &x),
            rest: gamma_word(&a, &y),
        };
        let k = kind_nfa(&a, &kind).unwrap();
        assert!(membership_up(&k, &UpWord::new(x.clone(), y.clone())).unwrap());
        let yy = y.concat(&y);
        let kind2 = Kind {
            first: gamma_word(&a, &x),
            rest: gamma_word(&a, &yy),
        };
        assert!(membership_up(&kind_nfa(&a, &kind2).unwrap(), &UpWord::new(x, yy)).unwrap());
    }

    #[test]
    fn compatibility_examples() {
        let a = infinitely_many_ones();
        let zeros = Kind {
            first: gamma_letter(&a, 0),
            rest: gamma_letter(&a, 0),
        };
        assert!(!compatible(&a, &zeros).unwrap());
        let ones = Kind {
            first: gamma_letter(&a, 1),
            rest: gamma_letter(&a, 1),
        };
        assert!(compatible(&a, &ones).unwrap());
        let dead =
            BuchiNfa::new(2, 2, [(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 1, 1)], [0], []).unwrap();
        let ones_dead = Kind {
            first: gamma_letter(&dead, 1),
            rest: gamma_letter(&dead, 1),
        };
        assert!(!compatible(&dead, &ones_dead).unwrap());
    }

    #[test]
    fn complement_examples() {
        let a = infinitely_many_ones();
        let c = complement(&a).unwrap();
        assert!(membership_up(&c, &up(&[1], &[0])).unwrap());
        assert!(!membership_up(&c, &up(&[0], &[1])).unwrap());
        let all = complement(&BuchiNfa::universal(2)).unwrap();
        assert!(!membership_up(&all, &up(&[0], &[1])).unwrap());
        let nothing = BuchiNfa::new(1, 2, [(0, 0, 0), (0, 1, 0)], [0], []).unwrap();
        let every = complement(&nothing).unwrap();
        assert!(membership_up(&every, &up(&[0, 1], &[1, 0])).unwrap());
    }

    #[test]
    fn idempotent_selection_agrees() {
        let a = infinitely_many_ones();
        let config = ComplementConfig {
            kinds: KindSelection::IdempotentLinked,
            ..Default::default()
        };
        let (c, stats) = complement_with(&a, &config).unwrap();
        let (_, full) = complement_with(&a, &ComplementConfig::default()).unwrap();
        assert!(stats.incompatible_kinds <= full.incompatible_kinds);
        for s in [up(&[1], &[0]), up(&[0], &[1]), up(&[0, 1], &[0, 0, 1])] {
            assert_ne!(
                membership_up(&c, &s).unwrap(),
                membership_up(&a, &s).unwrap()
            );
        }
    }
}
