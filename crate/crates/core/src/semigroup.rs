//! Finite semigroups given by operation tables, string colors, idempotent
//! powers, Ramseyan factorizations of UP words, and the merging relation.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::word::{UpWord, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("semigroup must have at least one element")]
    Empty,
    #[error("operation table must be {size}x{size}")]
    Shape { size: usize },
    #[error("table entry {entry} at ({a}, {b}) is not an element")]
    EntryOutOfRange { a: usize, b: usize, entry: usize },
    #[error("operation is not associative: ({a}+{b})+{c} != {a}+({b}+{c})")]
    AssociativityViolation { a: usize, b: usize, c: usize },
    #[error("semigroup format error on line {line}: {msg}")]
    Format { line: usize, msg: String },
}

/// A finite semigroup on the elements `0..size`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<usize>,
}

impl FiniteSemigroup {
    /// Validates shape, range, and associativity of `table`.
    pub fn new(size: usize, table: Vec<Vec<usize>>) -> Result<Self, SemigroupError> {
        if size == 0 {
            return Err(SemigroupError::Empty);
        }
        if table.len() != size || table.iter().any(|row| row.len() != size) {
            return Err(SemigroupError::Shape { size });
        }
        for (a, row) in table.iter().enumerate() {
            for (b, &entry) in row.iter().enumerate() {
                if entry >= size {
                    return Err(SemigroupError::EntryOutOfRange { a, b, entry });
                }
            }
        }
        let g = FiniteSemigroup {
            size,
            table: table.into_iter().flatten().collect(),
        };
        if let Some((a, b, c)) = g.associativity_violation() {
            return Err(SemigroupError::AssociativityViolation { a, b, c });
        }
        Ok(g)
    }

    pub fn from_fn(
        size: usize,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, SemigroupError> {
        let table = (0..size)
            .map(|a| (0..size).map(|b| op(a, b)).collect())
            .collect();
        FiniteSemigroup::new(size, table)
    }

    /// `a + b = a`.
    pub fn left_projection(size: usize) -> Self {
        Self::from_fn(size, |a, _| a).expect("left projection is associative")
    }

    /// `a + b = b`.
    pub fn right_projection(size: usize) -> Self {
        Self::from_fn(size, |_, b| b).expect("right projection is associative")
    }

    /// Addition modulo `size`.
    pub fn cyclic(size: usize) -> Self {
        Self::from_fn(size, |a, b| (a + b) % size).expect("modular addition is associative")
    }

    /// `a + b = max(a, b)`.
    pub fn max_semilattice(size: usize) -> Self {
        Self::from_fn(size, |a, b| a.max(b)).expect("max is associative")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.add(a, a) == a
    }

    fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.add(a, b);
                for c in self.elements() {
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// `n · a`, the sum of `n ≥ 1` copies of `a`.
    pub fn multiple(&self, n: usize, a: usize) -> usize {
        assert!(n >= 1);
        (1..n).fold(a, |acc, _| self.add(acc, a))
    }
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSemigroup{:?}", self.table())
    }
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "semigroup {}", self.size)?;
        for row in self.table.chunks(self.size) {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for FiniteSemigroup {
    type Err = SemigroupError;

    /// `semigroup n` followed by `n` rows of `n` entries; `#` starts a comment.
    fn from_str(text: &str) -> Result<Self, SemigroupError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line, msg: &str| SemigroupError::Format {
            line,
            msg: msg.to_string(),
        };
        let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
        let size = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["semigroup", n] => n
                .parse::<usize>()
                .map_err(|_| err(hline, "size must be a number"))?,
            _ => return Err(err(hline, "expected `semigroup <n>`")),
        };
        let mut table = Vec::with_capacity(size);
        for (line, row) in lines {
            let cells = row
                .split_whitespace()
                .map(|c| c.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| err(line, "entries must be numbers"))?;
            table.push(cells);
        }
        FiniteSemigroup::new(size, table)
    }
}

/// `col(a₀⋯aₙ) = a₀ + ⋯ + aₙ`.
pub fn col(g: &FiniteSemigroup, w: &Word) -> usize {
    let letters = w.letters();
    letters[1..]
        .iter()
        .fold(letters[0], |acc, &a| g.add(acc, a))
}

/// The least `n ≥ 1` such that `n · a` is idempotent.
pub fn idempotent_power(g: &FiniteSemigroup, a: usize) -> usize {
    let mut acc = a;
    for n in 1.. {
        if g.is_idempotent(acc) {
            return n;
        }
        acc = g.add(acc, a);
    }
    unreachable!()
}

/// A factorization `head · rep · rep · ⋯` in which every factor after the
/// head has the same, idempotent, color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyanFactorization {
    pub head: Word,
    pub rep: Word,
    pub color: usize,
}

impl RamseyanFactorization {
    pub fn as_up_word(&self) -> UpWord {
        UpWord::new(self.head.clone(), self.rep.clone())
    }
}

/// Factorizes `x y^ω` as `x, yⁿ, yⁿ, …` with `n` the idempotent power of
/// `col(y)`.
pub fn ramseyan_factorization_up(g: &FiniteSemigroup, sigma: &UpWord) -> RamseyanFactorization {
    let n = idempotent_power(g, col(g, &sigma.period));
    let rep = sigma.period.repeat(n);
    let color = col(g, &rep);
    debug_assert!(g.is_idempotent(color));
    RamseyanFactorization {
        head: sigma.prefix.clone(),
        rep,
        color,
    }
}

/// Whether `i` merges with `j` in `σ`: some `k > i, j` has
/// `col(σ[i,k)) = col(σ[j,k))`.
///
/// The pair of colors evolves deterministically with `k`, and once `k` is
/// past the prefix the triple (color, color, phase in period) determines the
/// future. If that triple repeats without the colors meeting, they never do.
pub fn merges_up(g: &FiniteSemigroup, sigma: &UpWord, i: usize, j: usize) -> bool {
    if i == j {
        return true;
    }
    let x = sigma.prefix.len();
    let y = sigma.period.len();
    let start = i.max(j) + 1;
    let segment =
        |from: usize| (from + 1..start).fold(sigma.at(from), |acc, n| g.add(acc, sigma.at(n)));
    let (mut ci, mut cj) = (segment(i), segment(j));
    let mut seen = HashSet::new();
    let mut k = start;
    loop {
        if ci == cj {
            return true;
        }
        if k >= x && !seen.insert((ci, cj, (k - x) % y)) {
            return false;
        }
        let a = sigma.at(k);
        ci = g.add(ci, a);
        cj = g.add(cj, a);
        k += 1;
    }
}

/// The least subset containing `generators` and closed under `+`.
pub fn subsemigroup_closure(
    g: &FiniteSemigroup,
    generators: impl IntoIterator<Item = usize>,
) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = generators.into_iter().collect();
    loop {
        let mut added = Vec::new();
        for &a in &set {
            for &b in &set {
                let c = g.add(a, b);
                if !set.contains(&c) {
                    added.push(c);
                }
            }
        }
        if added.is_empty() {
            return set;
        }
        set.extend(added);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    fn up(x: &[usize], y: &[usize]) -> UpWord {
        UpWord::from_vecs(x.to_vec(), y.to_vec()).unwrap()
    }

    #[test]
    fn construction_examples() {
        assert!(FiniteSemigroup::new(2, vec![vec![0, 0], vec![1, 1]]).is_ok());
        assert!(FiniteSemigroup::new(1, vec![vec![0]]).is_ok());
        // (0+0)+0 = 1+0 = 1 but 0+(0+0) = 0+1 = 0.
        assert_eq!(
            FiniteSemigroup::new(2, vec![vec![1, 0], vec![1, 0]]),
            Err(SemigroupError::AssociativityViolation { a: 0, b: 0, c: 0 })
        );
        assert_eq!(
            FiniteSemigroup::new(2, vec![vec![0, 2], vec![1, 1]]),
            Err(SemigroupError::EntryOutOfRange {
                a: 0,
                b: 1,
                entry: 2
            })
        );
        assert_eq!(
            FiniteSemigroup::new(2, vec![vec![0, 0]]),
            Err(SemigroupError::Shape { size: 2 })
        );
        assert_eq!(FiniteSemigroup::new(0, vec![]), Err(SemigroupError::Empty));
    }

    #[test]
    fn colors() {
        let left = FiniteSemigroup::left_projection(2);
        assert_eq!(col(&left, &w(&[0, 1, 1])), 0);
        assert_eq!(col(&left, &w(&[1])), 1);
        let z3 = FiniteSemigroup::cyclic(3);
        assert_eq!(col(&z3, &w(&[1, 2, 2])), 2);
    }

    #[test]
    fn idempotent_powers() {
        assert_eq!(idempotent_power(&FiniteSemigroup::left_projection(2), 0), 1);
        assert_eq!(idempotent_power(&FiniteSemigroup::cyclic(3), 1), 3);
        assert_eq!(idempotent_power(&FiniteSemigroup::cyclic(4), 2), 2);
    }

    #[test]
    fn factorization_examples() {
        let left = FiniteSemigroup::left_projection(2);
        let f = ramseyan_factorization_up(&left, &up(&[0], &[1]));
        assert_eq!((f.head, f.rep, f.color), (w(&[0]), w(&[1]), 1));

        let z3 = FiniteSemigroup::cyclic(3);
        let f = ramseyan_factorization_up(&z3, &up(&[0], &[1]));
        assert_eq!((f.rep, f.color), (w(&[1, 1, 1]), 0));

        let f = ramseyan_factorization_up(&z3, &up(&[0], &[0]));
        assert_eq!((f.rep, f.color), (w(&[0]), 0));
    }

    #[test]
    fn merging_examples() {
        let left = FiniteSemigroup::left_projection(2);
        assert!(merges_up(&left, &up(&[0], &[0]), 0, 1));
        assert!(!merges_up(&left, &up(&[0], &[1]), 0, 1));
        assert!(merges_up(&left, &up(&[0], &[1]), 3, 3));
        // In Z/2 the segments [0,k) and [1,k) differ by σ(0) forever.
        let z2 = FiniteSemigroup::cyclic(2);
        assert!(!merges_up(&z2, &up(&[1], &[0]), 0, 1));
        assert!(merges_up(&z2, &up(&[0], &[1]), 0, 1));
    }

    #[test]
    fn closure_examples() {
        let z4 = FiniteSemigroup::cyclic(4);
        assert_eq!(subsemigroup_closure(&z4, [2]), BTreeSet::from([0, 2]));
        assert_eq!(subsemigroup_closure(&z4, [1]), BTreeSet::from([0, 1, 2, 3]));
        assert_eq!(subsemigroup_closure(&z4, 0..4).len(), 4);
    }

    #[test]
    fn text_format() {
        let g: FiniteSemigroup = "# Z/3\nsemigroup 3\n0 1 2\n1 2 0\n2 0 1\n".parse().unwrap();
        assert_eq!(g, FiniteSemigroup::cyclic(3));
        assert_eq!(g.to_string().parse::<FiniteSemigroup>().unwrap(), g);
        assert!(matches!(
            "semigroup x".parse::<FiniteSemigroup>(),
            Err(SemigroupError::Format { line: 1, .. })
        ));
    }
}
