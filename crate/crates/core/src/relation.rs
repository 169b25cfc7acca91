//! Dense binary relations over `0..n`, stored as row-major bit matrices.

use std::fmt;

/// A binary relation on `0..n`.
///
/// Row `p` holds the set `{q : (p, q) ∈ R}` as a packed bit vector. The
/// representation is canonical, so structural equality is relation equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Relation {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Relation::empty(n);
        for p in 0..n {
            r.insert(p, p);
        }
        r
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Relation::empty(n);
        for (p, q) in pairs {
            r.insert(p, q);
        }
        r
    }

    /// Number of points the relation is defined over.
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, p: usize, q: usize) -> bool {
        debug_assert!(p < self.n && q < self.n);
        self.bits[p * self.words + q / 64] >> (q % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, p: usize, q: usize) {
        debug_assert!(p < self.n && q < self.n);
        self.bits[p * self.words + q / 64] |= 1 << (q % 64);
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row(&self, p: usize) -> &[u64] {
        &self.bits[p * self.words..(p + 1) * self.words]
    }

    /// Targets related to `p`, in increasing order.
    pub fn image(&self, p: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(p).iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * 64;
            BitIter(w).map(move |b| base + b)
        })
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |p| self.image(p).map(move |q| (p, q)))
    }

    /// Relational composition `self ; other`: `(p, q)` such that
    /// `(p, r) ∈ self` and `(r, q) ∈ other` for some `r`.
    pub fn compose(&self, other: &Relation) -> Relation {
        assert_eq!(self.n, other.n, "relation dimensions differ");
        let mut out = Relation::empty(self.n);
        for p in 0..self.n {
            let dst = p * self.words;
            for r in self.image(p) {
                let src = other.row(r);
                for (i, w) in src.iter().enumerate() {
                    out.bits[dst + i] |= w;
                }
            }
        }
        out
    }

    pub fn union_with(&mut self, other: &Relation) {
        assert_eq!(self.n, other.n, "relation dimensions differ");
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    /// Reflexive-transitive closure.
    pub fn star(&self) -> Relation {
        let mut closure = Relation::identity(self.n);
        closure.union_with(self);
        // Warshall on rows.
        for k in 0..self.n {
            let row_k: Vec<u64> = closure.row(k).to_vec();
            for p in 0..self.n {
                if closure.contains(p, k) {
                    let dst = p * self.words;
                    for (i, w) in row_k.iter().enumerate() {
                        closure.bits[dst + i] |= w;
                    }
                }
            }
        }
        closure
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
