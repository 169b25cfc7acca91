//! Brute-force oracles shared by the integration tests. They use only the
//! raw transition lists and positions of words, never the library's
//! profiles, matching or products.
#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use s1s_core::semigroup::{merges_up, FiniteSemigroup};
use s1s_core::{BuchiNfa, UpWord, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn up(x: &[usize], y: &[usize]) -> UpWord {
    UpWord::from_vecs(x.to_vec(), y.to_vec()).unwrap()
}

/// Successor lists `next[p][l]` read off the transition list.
fn table(a: &BuchiNfa) -> Vec<Vec<Vec<usize>>> {
    let mut next = vec![vec![Vec::new(); a.alphabet_size()]; a.state_count()];
    for (p, l, q) in a.transitions() {
        next[p][l].push(q);
    }
    next
}

/// Whether `a` accepts `x y^ω`: search the graph of (state, position in the
/// lasso) for a reachable node lying on a cycle through itself whose state
/// is accepting.
pub fn naive_accepts_up(a: &BuchiNfa, sigma: &UpWord) -> bool {
    let next = table(a);
    let (nx, ny) = (sigma.prefix.len(), sigma.period.len());
    let positions = nx + ny;
    let letter = |pos: usize| sigma.at(pos);
    let step = |pos: usize| if pos + 1 == positions { nx } else { pos + 1 };
    let node = |q: usize, pos: usize| q * positions + pos;
    let total = a.state_count() * positions;
    let succ = |v: usize| -> Vec<usize> {
        let (q, pos) = (v / positions, v % positions);
        next[q][letter(pos)]
            .iter()
            .map(|&r| node(r, step(pos)))
            .collect()
    };
    let reach_from = |starts: Vec<usize>| -> Vec<bool> {
        let mut seen = vec![false; total];
        let mut stack = starts;
        while let Some(v) = stack.pop() {
            for w in succ(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    };
    let init: Vec<usize> = a.initial().iter().map(|&p| node(p, 0)).collect();
    let mut reachable = reach_from(init.clone());
    for &v in &init {
        reachable[v] = true;
    }
    (0..total).any(|v| reachable[v] && a.is_accepting(v / positions) && reach_from(vec![v])[v])
}

/// All runs of `a` on `w` from `p`, as (end state, whether an accepting
/// state occurs before the last position).
pub fn naive_runs(a: &BuchiNfa, p: usize, w: &[usize]) -> Vec<(usize, bool)> {
    let next = table(a);
    let mut out = Vec::new();
    let mut stack = vec![(p, 0usize, false)];
    while let Some((q, i, acc)) = stack.pop() {
        if i == w.len() {
            out.push((q, acc));
            continue;
        }
        let acc = acc || a.is_accepting(q);
        for &r in &next[q][w[i]] {
            stack.push((r, i + 1, acc));
        }
    }
    out
}

/// Every word of length `1..=max_len` over `alphabet`.
pub fn all_words(alphabet: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .into_iter()
            .flat_map(|w| {
                (0..alphabet).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Nonemptiness by enumerating lassos `u v^ω` with `|u|, |v| ≤ n`: some
/// run reads `u` from an initial state to `q` and `v` from `q` back to `q`
/// through an accepting state. Shortest stems and cycles never exceed the
/// number of states.
pub fn naive_lasso(a: &BuchiNfa) -> Option<(Vec<usize>, Vec<usize>)> {
    let words = all_words(a.alphabet_size(), a.state_count());
    for u in &words {
        for &p in a.initial() {
            for (q, _) in naive_runs(a, p, u) {
                for v in &words {
                    if naive_runs(a, q, v).iter().any(|&(r, acc)| r == q && acc) {
                        return Some((u.clone(), v.clone()));
                    }
                }
            }
        }
    }
    None
}

/// `x y^ω` and `u v^ω` agree on a window covering both prefixes and a
/// common multiple of the periods.
pub fn naive_up_equal(s: &UpWord, t: &UpWord) -> bool {
    let window = s.prefix.len() + t.prefix.len() + s.period.len() * t.period.len();
    (0..window).all(|n| s.at(n) == t.at(n))
}

/// Color of `σ[i, k)`, folded letter by letter.
pub fn segment_color(g: &FiniteSemigroup, sigma: &UpWord, i: usize, k: usize) -> usize {
    (i + 1..k).fold(sigma.at(i), |acc, n| g.add(acc, sigma.at(n)))
}

/// Merging by scanning every endpoint `k` up to `bound`.
pub fn naive_merges(g: &FiniteSemigroup, sigma: &UpWord, i: usize, j: usize, bound: usize) -> bool {
    (i.max(j) + 1..=bound).any(|k| segment_color(g, sigma, i, k) == segment_color(g, sigma, j, k))
}

/// Whether infinitely many `j` merge with 0. For `j` past the prefix,
/// whether `j` merges with 0 depends only on `col σ[0, j)` and the phase of
/// `j` in the period, and that pair evolves deterministically with `j`; the
/// set is infinite iff some `j` on the eventual cycle of pairs merges.
pub fn infinitely_many_merge_with_zero(g: &FiniteSemigroup, sigma: &UpWord) -> bool {
    let (nx, ny) = (sigma.prefix.len(), sigma.period.len());
    let mut seen = std::collections::HashMap::new();
    let mut states = Vec::new();
    let mut j = nx;
    let mut color = segment_color(g, sigma, 0, j);
    loop {
        let state = (color, (j - nx) % ny);
        if let Some(&first) = seen.get(&state) {
            return (first..states.len()).any(|t| merges_up(g, sigma, 0, nx + t));
        }
        seen.insert(state, states.len());
        states.push(state);
        color = g.add(color, sigma.at(j));
        j += 1;
    }
}

/// Some small test semigroups of each size up to 3.
pub fn test_semigroups() -> Vec<FiniteSemigroup> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push(FiniteSemigroup::cyclic(n));
        out.push(FiniteSemigroup::left_projection(n));
        out.push(FiniteSemigroup::right_projection(n));
        out.push(FiniteSemigroup::max_semilattice(n));
    }
    out
}

/// `w` as a [`Word`].
pub fn word(w: &[usize]) -> Word {
    Word::new(w.to_vec()).unwrap()
}
