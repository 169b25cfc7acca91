//! Interpretations by ultimately periodic boolean words.
//!
//! A set variable is a UP word over `{0, 1}`; an interpretation of `n` set
//! variables packs into one UP word over the `2^n` set-letters, where bit `i`
//! of a letter says whether variable `i` holds at that position.

use std::fmt;

use crate::word::{lcm, UpWord, Word};

use super::LogicError;

/// Values for second-order variables (boolean UP words, by index) and
/// first-order variables (numbers, by index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpInterpretation {
    pub so: Vec<UpWord>,
    pub fo: Vec<usize>,
}

impl UpInterpretation {
    pub fn second_order(so: Vec<UpWord>) -> Self {
        UpInterpretation { so, fo: Vec::new() }
    }

    /// Renders one `name = value` line per variable.
    pub fn render(&self, fo_names: &[String], so_names: &[String]) -> String {
        let mut lines = Vec::new();
        for (name, v) in fo_names.iter().zip(&self.fo) {
            lines.push(format!("{name} = {v}"));
        }
        for (name, w) in so_names.iter().zip(&self.so) {
            lines.push(format!("{name} = {}", BitWord(&w.normalized())));
        }
        lines.join("\n")
    }
}

/// Displays a boolean UP word as `bits|bits`.
pub struct BitWord<'a>(pub &'a UpWord);

impl fmt::Display for BitWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = |w: &Word| {
            w.letters()
                .iter()
                .map(|l| if *l == 0 { '0' } else { '1' })
                .collect::<String>()
        };
        write!(f, "{}|{}", bits(&self.0.prefix), bits(&self.0.period))
    }
}

/// Parses `bits|bits`, e.g. `101|0`.
pub fn parse_bit_word(text: &str) -> Option<UpWord> {
    let (pre, per) = text.trim().split_once('|')?;
    let bits = |s: &str| -> Option<Vec<usize>> {
        s.trim()
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Some(0),
                '1' => Some(1),
                _ => None,
            })
            .collect()
    };
    UpWord::from_vecs(bits(pre)?, bits(per)?).ok()
}

/// The set-letter word of `so`, aligned to the longest prefix and the least
/// common multiple of the periods. With no variables the result is the
/// constant word over the single empty letter.
pub fn interp_to_upword(so: &[UpWord]) -> UpWord {
    let prefix = so.iter().map(|w| w.prefix.len()).max().unwrap_or(1);
    let period = so.iter().fold(1, |acc, w| lcm(acc, w.period.len()));
    let letter = |n: usize| -> usize {
        so.iter()
            .enumerate()
            .map(|(i, w)| if w.at(n) != 0 { 1 << i } else { 0 })
            .sum()
    };
    let x = (0..prefix).map(letter).collect();
    let y = (prefix..prefix + period).map(letter).collect();
    UpWord::from_vecs(x, y).expect("nonempty")
}

/// Splits a set-letter word into `n` boolean words.
pub fn upword_to_interp(sigma: &UpWord, n: usize) -> Vec<UpWord> {
    let bit = |w: &Word, i: usize| {
        w.letters()
            .iter()
            .map(|&l| (l >> i) & 1)
            .collect::<Vec<_>>()
    };
    (0..n)
        .map(|i| UpWord::from_vecs(bit(&sigma.prefix, i), bit(&sigma.period, i)).expect("nonempty"))
        .collect()
}

/// The singleton `{i}`: `i` falses, a true, then falses forever.
pub fn encode_number(i: usize) -> UpWord {
    let mut prefix = vec![0; i + 1];
    prefix[i] = 1;
    UpWord::from_vecs(prefix, vec![0]).expect("nonempty")
}

/// The element of a singleton boolean word. The word is first normalized;
/// it must then have exactly one true, in its prefix, and an all-false
/// period.
pub fn decode_number(w: &UpWord, var: usize) -> Result<usize, LogicError> {
    let n = w.normalized();
    let trues: Vec<usize> = (0..n.prefix.len()).filter(|&k| n.prefix[k] != 0).collect();
    if trues.len() == 1 && n.period.letters().iter().all(|&l| l == 0) {
        Ok(trues[0])
    } else {
        Err(LogicError::NonSingletonWitness { var, word: n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(x: &[usize], y: &[usize]) -> UpWord {
        UpWord::from_vecs(x.to_vec(), y.to_vec()).unwrap()
    }

    #[test]
    fn packing() {
        assert_eq!(
            interp_to_upword(&[up(&[0], &[0]), up(&[0], &[0])]),
            up(&[0], &[0])
        );
        assert_eq!(interp_to_upword(&[up(&[1], &[0])]), up(&[1], &[0]));
        let s = interp_to_upword(&[up(&[1], &[0]), up(&[0], &[0, 1])]);
        assert_eq!(s.prefix.len(), 1);
        assert_eq!(s.period.len(), 2);
        assert_eq!(s, up(&[1], &[0, 2]));
        assert_eq!(interp_to_upword(&[]), up(&[0], &[0]));
    }

    #[test]
    fn unpacking_round_trips() {
        let vars = [up(&[1, 0], &[0, 1, 1]), up(&[0], &[1, 0])];
        let back = upword_to_interp(&interp_to_upword(&vars), 2);
        for (a, b) in vars.iter().zip(&back) {
            assert!(a.equiv(b));
        }
    }

    #[test]
    fn numbers() {
        assert_eq!(encode_number(0), up(&[1], &[0]));
        assert_eq!(encode_number(2), up(&[0, 0, 1], &[0]));
        assert_eq!(decode_number(&encode_number(5), 0).unwrap(), 5);
        assert_eq!(decode_number(&up(&[0, 1, 0, 0], &[0, 0]), 0).unwrap(), 1);
        assert!(decode_number(&up(&[1, 1], &[0]), 0).is_err());
        assert!(decode_number(&up(&[0], &[0]), 0).is_err());
        assert!(decode_number(&up(&[1], &[0, 1]), 0).is_err());
    }

    #[test]
    fn bit_words() {
        let w = parse_bit_word("101|0").unwrap();
        assert_eq!(w, up(&[1, 0, 1], &[0]));
        assert_eq!(BitWord(&w).to_string(), "101|0");
        assert!(parse_bit_word("12|0").is_none());
        assert!(parse_bit_word("1|").is_none());
    }
}
