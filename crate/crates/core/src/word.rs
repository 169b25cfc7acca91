//! Nonempty finite words and ultimately periodic words `x y^ω`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("words must be nonempty")]
    Empty,
    #[error("malformed UP word `{0}`: expected `prefix|period`")]
    Malformed(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
}

/// A nonempty string of letter indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self, WordError> {
        if letters.is_empty() {
            Err(WordError::Empty)
        } else {
            Ok(Word(letters))
        }
    }

    pub fn single(letter: usize) -> Self {
        Word(vec![letter])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self` repeated `n ≥ 1` times.
    pub fn repeat(&self, n: usize) -> Word {
        assert!(n >= 1, "repetition count must be positive");
        Word(self.0.repeat(n))
    }

    pub fn max_letter(&self) -> usize {
        *self.0.iter().max().expect("nonempty")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl std::ops::Index<usize> for Word {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

/// The ultimately periodic sequence `prefix · period^ω`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UpWord {
    pub prefix: Word,
    pub period: Word,
}

impl UpWord {
    pub fn new(prefix: Word, period: Word) -> Self {
        UpWord { prefix, period }
    }

    pub fn from_vecs(prefix: Vec<usize>, period: Vec<usize>) -> Result<Self, WordError> {
        Ok(UpWord::new(Word::new(prefix)?, Word::new(period)?))
    }

    /// The letter at position `n`.
    pub fn at(&self, n: usize) -> usize {
        let x = self.prefix.len();
        if n < x {
            self.prefix[n]
        } else {
            self.period[(n - x) % self.period.len()]
        }
    }

    pub fn max_letter(&self) -> usize {
        self.prefix.max_letter().max(self.period.max_letter())
    }

    /// Pointwise agreement of the two expansions.
    ///
    /// Both sequences are periodic from `max(|x₁|, |x₂|)` on with a common
    /// period `lcm(|y₁|, |y₂|)`, so one such window after the longer prefix
    /// decides agreement everywhere.
    pub fn equiv(&self, other: &UpWord) -> bool {
        let bound =
            self.prefix.len().max(other.prefix.len()) + lcm(self.period.len(), other.period.len());
        (0..bound).all(|n| self.at(n) == other.at(n))
    }

    /// The sequence `n ↦ self.at(n + i)`.
    pub fn drop_prefix(&self, i: usize) -> UpWord {
        let x = self.prefix.len();
        if i == 0 {
            return self.clone();
        }
        if i < x {
            return UpWord::new(Word(self.prefix.0[i..].to_vec()), self.period.clone());
        }
        let y = &self.period.0;
        let r = (i - x) % y.len();
        let mut rotated = y[r..].to_vec();
        rotated.extend_from_slice(&y[..r]);
        UpWord::new(Word(vec![rotated[0]]), Word(rotate_left(&rotated, 1)))
    }

    /// The shortest equivalent representation: primitive period and a prefix
    /// that does not end in a copy of the period's last letter.
    pub fn normalized(&self) -> UpWord {
        let y = &self.period.0;
        let root = (1..=y.len())
            .find(|&d| y.len() % d == 0 && (0..y.len()).all(|i| y[i] == y[i % d]))
            .unwrap_or(y.len());
        let mut period = y[..root].to_vec();
        let mut prefix = self.prefix.0.clone();
        while prefix.len() > 1 && prefix.last() == period.last() {
            prefix.pop();
            period.rotate_right(1);
        }
        UpWord::new(Word(prefix), Word(period))
    }

    /// Parses `up <prefix>|<period>` (the `up` keyword and surrounding
    /// parentheses are optional). Letters are whitespace separated and are
    /// either indices or names from `symbols`.
    pub fn parse(text: &str, symbols: Option<&[String]>) -> Result<UpWord, WordError> {
        let mut body = text.trim();
        if let Some(rest) = body.strip_prefix("up") {
            if rest.starts_with(char::is_whitespace) || rest.starts_with('(') {
                body = rest.trim();
            }
        }
        if body.starts_with('(') && body.ends_with(')') {
            body = body[1..body.len() - 1].trim();
        }
        let (pre, per) = body
            .split_once('|')
            .ok_or_else(|| WordError::Malformed(text.to_string()))?;
        let parse_part = |part: &str| -> Result<Word, WordError> {
            let letters = part
                .split_whitespace()
                .map(|tok| parse_letter(tok, symbols))
                .collect::<Result<Vec<_>, _>>()?;
            Word::new(letters)
        };
        Ok(UpWord::new(parse_part(pre)?, parse_part(per)?))
    }
}

fn parse_letter(tok: &str, symbols: Option<&[String]>) -> Result<usize, WordError> {
    if let Some(names) = symbols {
        if let Some(i) = names.iter().position(|s| s == tok) {
            return Ok(i);
        }
    }
    tok.parse::<usize>()
        .map_err(|_| WordError::UnknownLetter(tok.to_string()))
}

fn rotate_left(v: &[usize], k: usize) -> Vec<usize> {
    let k = k % v.len();
    let mut out = v[k..].to_vec();
    out.extend_from_slice(&v[..k]);
    out
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Debug for UpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, ({:?})^ω)", self.prefix, self.period)
    }
}

impl fmt::Display for UpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "up {}|{}", self.prefix, self.period)
    }
}
