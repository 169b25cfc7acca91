//! Direct simulation: `p` simulates `q` when `p` is accepting whenever `q`
//! is and every move of `q` is matched by a move of `p` on the same letter
//! into a state simulating the target.

use super::BuchiNfa;

struct Bits {
    words: usize,
    data: Vec<u64>,
}

impl Bits {
    fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        Bits {
            words,
            data: vec![0; rows * words],
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn set(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] |= 1 << (c % 64);
    }

    fn clear(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] &= !(1 << (c % 64));
    }
}

fn meets(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// The largest direct simulation; `sim.get(q, p)` when `p` simulates `q`.
fn direct_simulation(a: &BuchiNfa) -> Bits {
    let n = a.state_count();
    let letters: Vec<Vec<usize>> = (0..n)
        .map(|q| {
            (0..a.alphabet_size())
                .filter(|&l| !a.successors(q, l).is_empty())
                .collect()
        })
        .collect();
    // One successor bitset per (state, letter with successors).
    let mut slot = vec![Vec::new(); n];
    let mut succ = Bits::new(letters.iter().map(Vec::len).sum(), n);
    let mut next = 0;
    for q in 0..n {
        for &l in &letters[q] {
            for &t in a.successors(q, l) {
                succ.set(next, t);
            }
            slot[q].push((l, next));
            next += 1;
        }
    }
    let row_of = |p: usize, l: usize| slot[p].iter().find(|&&(m, _)| m == l).map(|&(_, r)| r);
    let mut sim = Bits::new(n, n);
    for q in 0..n {
        for p in 0..n {
            let acc_ok = !a.is_accepting(q) || a.is_accepting(p);
            if acc_ok
                && letters[q]
                    .iter()
                    .all(|l| letters[p].binary_search(l).is_ok())
            {
                sim.set(q, p);
            }
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for q in 0..n {
            for p in 0..n {
                if p == q || !sim.get(q, p) {
                    continue;
                }
                let ok = letters[q].iter().all(|&l| {
                    let row = row_of(p, l).expect("letters checked");
                    a.successors(q, l)
                        .iter()
                        .all(|&t| meets(sim.row(t), succ.row(row)))
                });
                if !ok {
                    sim.clear(q, p);
                    changed = true;
                }
            }
        }
    }
    sim
}

/// Merges simulation-equivalent states, then drops moves and initial states
/// whose targets are strictly simulated by a sibling. Both steps keep the
/// accepted language.
pub(crate) fn simulation_reduce(a: &BuchiNfa) -> BuchiNfa {
    let n = a.state_count();
    let sim = direct_simulation(a);
    let mut class = vec![usize::MAX; n];
    let mut classes = 0;
    for q in 0..n {
        if class[q] != usize::MAX {
            continue;
        }
        for p in q..n {
            if class[p] == usize::MAX && sim.get(q, p) && sim.get(p, q) {
                class[p] = classes;
            }
        }
        classes += 1;
    }
    let quotient = if classes == n {
        a.clone()
    } else {
        let trans = a
            .transitions()
            .map(|(p, l, q)| (class[p], l, class[q]))
            .collect();
        let init = a.initial().iter().map(|&p| class[p]).collect();
        let mut acc = vec![false; classes];
        for q in 0..n {
            acc[class[q]] |= a.is_accepting(q);
        }
        BuchiNfa::from_parts(classes, a.alphabet_size(), trans, init, acc)
    };
    prune(&quotient)
}

fn prune(a: &BuchiNfa) -> BuchiNfa {
    let n = a.state_count();
    let sim = direct_simulation(a);
    let strictly = |q: usize, p: usize| q != p && sim.get(q, p) && !sim.get(p, q);
    let dominated = |q: usize, siblings: &[usize]| siblings.iter().any(|&p| strictly(q, p));
    let mut trans = Vec::with_capacity(a.transition_count());
    let mut dropped = false;
    for p in 0..n {
        for l in 0..a.alphabet_size() {
            let targets = a.successors(p, l);
            for &q in targets {
                if dominated(q, targets) {
                    dropped = true;
                } else {
                    trans.push((p, l, q));
                }
            }
        }
    }
    let init: Vec<usize> = a
        .initial()
        .iter()
        .copied()
        .filter(|&q| !dominated(q, a.initial()))
        .collect();
    if !dropped && init.len() == a.initial().len() {
        return a.clone();
    }
    let acc = (0..n).map(|q| a.is_accepting(q)).collect();
    BuchiNfa::from_parts(n, a.alphabet_size(), trans, init, acc).trim()
}
