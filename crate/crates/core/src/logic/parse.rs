//! Surface syntax.
//!
//! ```text
//! φ ::= φ & φ | !φ | ex1 x. φ | ex2 X. φ | (φ)
//!     | X < Y | X sub Y | x < y | x in X
//! ```
//!
//! `!` binds tighter than `&`, and a quantifier extends as far right as
//! possible. Identifiers starting with a lowercase letter are first-order,
//! those starting with an uppercase letter second-order.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use super::interp::{parse_bit_word, UpInterpretation};
use super::{FullFormula, MinFormula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Less,
    Sub,
    In,
    And,
    Not,
    Ex1,
    Ex2,
    Dot,
    Open,
    Close,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Less => f.write_str("`<`"),
            Tok::Sub => f.write_str("`sub`"),
            Tok::In => f.write_str("`in`"),
            Tok::And => f.write_str("`&`"),
            Tok::Not => f.write_str("`!`"),
            Tok::Ex1 => f.write_str("`ex1`"),
            Tok::Ex2 => f.write_str("`ex2`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Open => f.write_str("`(`"),
            Tok::Close => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

/// A formula with named variables as written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Surface {
    /// `X < Y` on sets.
    SetLess(String, String),
    Sub(String, String),
    /// `x < y` on numbers.
    NumLess(String, String),
    In(String, String),
    And(Box<Surface>, Box<Surface>),
    Not(Box<Surface>),
    Ex1(String, Box<Surface>),
    Ex2(String, Box<Surface>),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
    let mut out = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (line_no, col) = (li + 1, i + 1);
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let single = match c {
                '<' => Some(Tok::Less),
                '&' => Some(Tok::And),
                '!' => Some(Tok::Not),
                '.' => Some(Tok::Dot),
                '(' => Some(Tok::Open),
                ')' => Some(Tok::Close),
                _ => None,
            };
            if let Some(t) = single {
                out.push((t, line_no, col));
                i += 1;
                continue;
            }
            if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let tok = match word.as_str() {
                    "sub" => Tok::Sub,
                    "in" => Tok::In,
                    "ex1" => Tok::Ex1,
                    "ex2" => Tok::Ex2,
                    _ => Tok::Ident(word),
                };
                out.push((tok, line_no, col));
                continue;
            }
            return Err(ParseError {
                line: line_no,
                column: col,
                expected: vec!["a formula token".into()],
                found: format!("`{c}`"),
            });
        }
    }
    let (line, column) = out.last().map(|&(_, l, c)| (l, c + 1)).unwrap_or((1, 1));
    out.push((Tok::End, line, column));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn is_first_order(name: &str) -> bool {
    name.chars().next().is_some_and(|c| c.is_lowercase())
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (tok, line, column) = &self.toks[self.pos];
        ParseError {
            line: *line,
            column: *column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.to_string(),
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn formula(&mut self) -> Result<Surface, ParseError> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let right = self.unary()?;
            left = Surface::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Surface, ParseError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Surface::Not(Box::new(self.unary()?)))
            }
            Tok::Open => {
                self.bump();
                let inner = self.formula()?;
                if *self.peek() != Tok::Close {
                    return Err(self.error(&["`&`", "`)`"]));
                }
                self.bump();
                Ok(inner)
            }
            Tok::Ex1 | Tok::Ex2 => {
                let first = self.bump() == Tok::Ex1;
                let var = match self.peek().clone() {
                    Tok::Ident(v) if is_first_order(&v) == first => v,
                    _ => {
                        let what = if first {
                            "a first-order variable"
                        } else {
                            "a second-order variable"
                        };
                        return Err(self.error(&[what]));
                    }
                };
                self.bump();
                if *self.peek() != Tok::Dot {
                    return Err(self.error(&["`.`"]));
                }
                self.bump();
                let body = Box::new(self.formula()?);
                Ok(if first {
                    Surface::Ex1(var, body)
                } else {
                    Surface::Ex2(var, body)
                })
            }
            Tok::Ident(left) => {
                self.bump();
                let op = self.peek().clone();
                if !matches!(op, Tok::Less | Tok::Sub | Tok::In) {
                    return Err(self.error(&["`<`", "`sub`", "`in`"]));
                }
                self.bump();
                let Tok::Ident(right) = self.peek().clone() else {
                    return Err(self.error(&["a variable"]));
                };
                let (lf, rf) = (is_first_order(&left), is_first_order(&right));
                let atom = match op {
                    Tok::Less if lf && rf => Surface::NumLess(left, right),
                    Tok::Less if !lf && !rf => Surface::SetLess(left, right),
                    Tok::Less if lf => return Err(self.error(&["a first-order variable"])),
                    Tok::Less => return Err(self.error(&["a second-order variable"])),
                    Tok::Sub if !lf && !rf => Surface::Sub(left, right),
                    Tok::In if lf && !rf => Surface::In(left, right),
                    _ => return Err(self.error(&["a set variable"])),
                };
                self.bump();
                Ok(atom)
            }
            _ => Err(self.error(&["`!`", "`(`", "`ex1`", "`ex2`", "a variable"])),
        }
    }
}

pub fn parse_surface(text: &str) -> Result<Surface, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["`&`", "end of input"]));
    }
    Ok(f)
}

/// A parsed formula with its variables numbered in order of first
/// appearance, separately per order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedFormula {
    pub surface: Surface,
    pub fo_names: Vec<String>,
    pub so_names: Vec<String>,
}

impl ParsedFormula {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let surface = parse_surface(text)?;
        let mut fo = Vec::new();
        let mut so = Vec::new();
        collect_names(&surface, &mut fo, &mut so);
        Ok(ParsedFormula {
            surface,
            fo_names: fo,
            so_names: so,
        })
    }

    /// Whether the formula only uses set variables.
    pub fn is_minimal(&self) -> bool {
        self.fo_names.is_empty()
    }

    /// The minimal formula, when [`is_minimal`](Self::is_minimal).
    pub fn to_min(&self) -> Option<MinFormula> {
        if !self.is_minimal() {
            return None;
        }
        let so = index(&self.so_names);
        Some(to_min(&self.surface, &so))
    }

    /// The full formula. Set-level atoms are expanded through first-order
    /// quantifiers over up to two extra first-order variables, numbered after
    /// the named ones; the second component is the total first-order count.
    pub fn to_full(&self) -> (FullFormula, usize) {
        let fo = index(&self.fo_names);
        let so = index(&self.so_names);
        let base = self.fo_names.len();
        let mut used = 0;
        let f = to_full(&self.surface, &fo, &so, base, &mut used);
        (f, base + used)
    }
}

fn index(names: &[String]) -> HashMap<String, usize> {
    names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect()
}

fn collect_names(f: &Surface, fo: &mut Vec<String>, so: &mut Vec<String>) {
    let mut note = |name: &String| {
        let list = if is_first_order(name) {
            &mut *fo
        } else {
            &mut *so
        };
        if !list.contains(name) {
            list.push(name.clone());
        }
    };
    match f {
        Surface::SetLess(a, b)
        | Surface::Sub(a, b)
        | Surface::NumLess(a, b)
        | Surface::In(a, b) => {
            note(a);
            note(b);
        }
        Surface::Ex1(v, body) | Surface::Ex2(v, body) => {
            note(v);
            collect_names(body, fo, so);
        }
        Surface::And(a, b) => {
            collect_names(a, fo, so);
            collect_names(b, fo, so);
        }
        Surface::Not(a) => collect_names(a, fo, so),
    }
}

fn to_min(f: &Surface, so: &HashMap<String, usize>) -> MinFormula {
    match f {
        Surface::SetLess(a, b) => MinFormula::Less(so[a], so[b]),
        Surface::Sub(a, b) => MinFormula::Incl(so[a], so[b]),
        Surface::And(a, b) => MinFormula::and(to_min(a, so), to_min(b, so)),
        Surface::Not(a) => MinFormula::not(to_min(a, so)),
        Surface::Ex2(v, a) => MinFormula::ex2(so[v], to_min(a, so)),
        Surface::NumLess(..) | Surface::In(..) | Surface::Ex1(..) => {
            unreachable!("first-order syntax in a minimal formula")
        }
    }
}

fn to_full(
    f: &Surface,
    fo: &HashMap<String, usize>,
    so: &HashMap<String, usize>,
    base: usize,
    used: &mut usize,
) -> FullFormula {
    match f {
        Surface::NumLess(a, b) => FullFormula::FoLess(fo[a], fo[b]),
        Surface::In(a, b) => FullFormula::FoIn(fo[a], so[b]),
        Surface::Sub(a, b) => {
            // ¬∃z. z ∈ A ∧ ¬(z ∈ B)
            *used = (*used).max(1);
            let z = base;
            FullFormula::not(FullFormula::ex1(
                z,
                FullFormula::and(
                    FullFormula::FoIn(z, so[a]),
                    FullFormula::not(FullFormula::FoIn(z, so[b])),
                ),
            ))
        }
        Surface::SetLess(a, b) => {
            // ∃u ∃v. u < v ∧ u ∈ A ∧ v ∈ B
            *used = 2;
            let (u, v) = (base, base + 1);
            FullFormula::ex1(
                u,
                FullFormula::ex1(
                    v,
                    FullFormula::and(
                        FullFormula::and(FullFormula::FoLess(u, v), FullFormula::FoIn(u, so[a])),
                        FullFormula::FoIn(v, so[b]),
                    ),
                ),
            )
        }
        Surface::And(a, b) => FullFormula::and(
            to_full(a, fo, so, base, used),
            to_full(b, fo, so, base, used),
        ),
        Surface::Not(a) => FullFormula::not(to_full(a, fo, so, base, used)),
        Surface::Ex1(v, a) => FullFormula::ex1(fo[v], to_full(a, fo, so, base, used)),
        Surface::Ex2(v, a) => FullFormula::ex2(so[v], to_full(a, fo, so, base, used)),
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::SetLess(a, b) | Surface::NumLess(a, b) => write!(f, "{a} < {b}"),
            Surface::Sub(a, b) => write!(f, "{a} sub {b}"),
            Surface::In(a, b) => write!(f, "{a} in {b}"),
            Surface::And(a, b) => write!(f, "({a} & {b})"),
            Surface::Not(a) => write!(f, "!({a})"),
            Surface::Ex1(v, a) => write!(f, "(ex1 {v}. {a})"),
            Surface::Ex2(v, a) => write!(f, "(ex2 {v}. {a})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError {
    #[error("line {line}: expected `name = value`")]
    Syntax { line: usize },
    #[error("line {line}: bad value for `{name}`")]
    Value { line: usize, name: String },
    #[error("unassigned variables: {}", .0.join(", "))]
    Unassigned(Vec<String>),
}

/// Reads `X = 101|0` and `x = 3` lines and orders the values by the given
/// variable names.
pub fn parse_interpretation(
    text: &str,
    fo_names: &[String],
    so_names: &[String],
) -> Result<UpInterpretation, InterpError> {
    let mut fo: HashMap<String, usize> = HashMap::new();
    let mut so = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (name, value) = content
            .split_once('=')
            .ok_or(InterpError::Syntax { line })?;
        let (name, value) = (name.trim().to_string(), value.trim());
        let bad = || InterpError::Value {
            line,
            name: name.clone(),
        };
        if is_first_order(&name) {
            fo.insert(name.clone(), value.parse::<usize>().map_err(|_| bad())?);
        } else if name.chars().next().is_some_and(|c| c.is_uppercase()) {
            so.insert(name.clone(), parse_bit_word(value).ok_or_else(bad)?);
        } else {
            return Err(InterpError::Syntax { line });
        }
    }
    let missing: Vec<String> = fo_names
        .iter()
        .filter(|n| !fo.contains_key(*n))
        .chain(so_names.iter().filter(|n| !so.contains_key(*n)))
        .cloned()
        .collect();
    if !missing.is_empty() {
        return Err(InterpError::Unassigned(missing));
    }
    Ok(UpInterpretation {
        fo: fo_names.iter().map(|n| fo[n]).collect(),
        so: so_names.iter().map(|n| so[n].clone()).collect(),
    })
}
