//! Text and DOT serialization.
//!
//! ```text
//! nfa 2 2
//! initial 0
//! accepting 1
//! trans 0 1 1
//! trans 1 0 0
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{AutomatonError, BuchiNfa};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `nfa <states> <alphabet>` header")]
    MissingHeader,
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

impl fmt::Display for BuchiNfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nfa {} {}", self.state_count(), self.alphabet_size())?;
        let list = |it: &mut dyn Iterator<Item = usize>| {
            it.map(|q| q.to_string()).collect::<Vec<_>>().join(" ")
        };
        if !self.initial().is_empty() {
            writeln!(f, "initial {}", list(&mut self.initial().iter().copied()))?;
        }
        if self.accepting_states().next().is_some() {
            writeln!(f, "accepting {}", list(&mut self.accepting_states()))?;
        }
        for (p, a, q) in self.transitions() {
            writeln!(f, "trans {p} {a} {q}")?;
        }
        Ok(())
    }
}

impl FromStr for BuchiNfa {
    type Err = FormatError;

    fn from_str(text: &str) -> Result<Self, FormatError> {
        let mut header = None;
        let mut initial = Vec::new();
        let mut accepting = Vec::new();
        let mut trans = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut tokens = content.split_whitespace();
            let keyword = tokens.next().expect("nonempty line");
            let numbers = tokens
                .map(|t| {
                    t.parse::<usize>().map_err(|_| FormatError::Syntax {
                        line,
                        msg: format!("expected a number, found `{t}`"),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let syntax = |msg: &str| FormatError::Syntax {
                line,
                msg: msg.to_string(),
            };
            match keyword {
                "nfa" if header.is_some() => return Err(syntax("duplicate header")),
                "nfa" => match numbers[..] {
                    [s, a] => header = Some((s, a)),
                    _ => return Err(syntax("expected `nfa <states> <alphabet>`")),
                },
                _ if header.is_none() => return Err(FormatError::MissingHeader),
                "initial" => initial.extend(numbers),
                "accepting" => accepting.extend(numbers),
                "trans" => match numbers[..] {
                    [p, a, q] => trans.push((p, a, q)),
                    _ => return Err(syntax("expected `trans <p> <letter> <q>`")),
                },
                other => return Err(syntax(&format!("unknown directive `{other}`"))),
            }
        }
        let (states, alphabet) = header.ok_or(FormatError::MissingHeader)?;
        Ok(BuchiNfa::new(states, alphabet, trans, initial, accepting)?)
    }
}

impl BuchiNfa {
    /// Graphviz rendering; accepting states are double circles and initial
    /// states have an incoming arrow from an invisible node.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph nfa {\n  rankdir=LR;\n");
        for q in 0..self.state_count() {
            let shape = if self.is_accepting(q) {
                "doublecircle"
            } else {
                "circle"
            };
            out.push_str(&format!("  q{q} [shape={shape}, label=\"{q}\"];\n"));
        }
        for &q in self.initial() {
            out.push_str(&format!(
                "  init{q} [shape=point, style=invis];\n  init{q} -> q{q};\n"
            ));
        }
        for (p, a, q) in self.transitions() {
            out.push_str(&format!("  q{p} -> q{q} [label=\"{a}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let a = BuchiNfa::new(3, 2, [(0, 1, 2), (2, 0, 2), (1, 1, 0)], [0, 1], [2]).unwrap();
        let text = a.to_string();
        assert_eq!(text.parse::<BuchiNfa>().unwrap(), a);
    }

    #[test]
    fn comments_and_errors() {
        let a: BuchiNfa = "# demo\nnfa 1 1 # one state\ninitial 0\naccepting 0\ntrans 0 0 0\n"
            .parse()
            .unwrap();
        assert_eq!(a, BuchiNfa::universal(1));
        assert_eq!(
            "initial 0".parse::<BuchiNfa>(),
            Err(FormatError::MissingHeader)
        );
        assert!(matches!(
            "nfa 1 1\ntrans 0 0".parse::<BuchiNfa>(),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            "nfa 1 1\ntrans 0 0 1".parse::<BuchiNfa>(),
            Err(FormatError::Automaton(
                AutomatonError::StateOutOfRange { .. }
            ))
        ));
    }

    #[test]
    fn dot_marks_accepting_states() {
        let dot = BuchiNfa::universal(1).to_dot();
        assert!(dot.contains("q0 [shape=doublecircle"));
        assert!(dot.contains("q0 -> q0 [label=\"0\"]"));
    }
}
