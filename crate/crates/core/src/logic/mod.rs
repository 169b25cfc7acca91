//! S1S over ultimately periodic interpretations.

mod eval;
mod formula;
mod interp;
mod parse;
mod reduce;
mod translate;

use thiserror::Error;

use crate::buchi::{ex_project_witness, find_match, membership_up};
use crate::complement::ComplementError;
use crate::word::UpWord;

pub use eval::eval_direct;
pub use formula::{fo_names, so_names, FullFormula, MinFormula};
pub use interp::{
    decode_number, encode_number, interp_to_upword, parse_bit_word, upword_to_interp, BitWord,
    UpInterpretation,
};
pub use parse::{
    parse_interpretation, parse_surface, InterpError, ParseError, ParsedFormula, Surface,
};
pub use reduce::{encode_full, reduce_full, sing};
pub use translate::{
    atom_incl_nfa, atom_less_nfa, translate, translate_flat, translate_with, NodeStats,
    TranslateConfig, Translation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("variable {var} is not among the {declared} declared variables")]
    UnknownVariable { var: usize, declared: usize },
    #[error("no value for order-{order} variable {var}")]
    Unassigned { order: u8, var: usize },
    #[error("witness for first-order variable {var} is not a singleton: {word}")]
    NonSingletonWitness { var: usize, word: UpWord },
    #[error(transparent)]
    Complement(#[from] ComplementError),
}

/// Whether the set-letter word `sigma` satisfies `phi`, decided on the
/// compiled automaton.
pub fn models_up(sigma: &UpWord, phi: &MinFormula, nvars: usize) -> Result<bool, LogicError> {
    models_up_with(sigma, phi, nvars, &TranslateConfig::default())
}

pub fn models_up_with(
    sigma: &UpWord,
    phi: &MinFormula,
    nvars: usize,
    config: &TranslateConfig,
) -> Result<bool, LogicError> {
    let a = translate_with(phi, nvars, config)?.nfa;
    Ok(membership_up(&a, sigma).expect("set-letter alphabet"))
}

/// [`models_up`] on per-variable boolean words.
pub fn models_up_interp(so: &[UpWord], phi: &MinFormula) -> Result<bool, LogicError> {
    models_up(&interp_to_upword(so), phi, so.len())
}

/// A satisfying interpretation of `phi` over `nvars` set variables, if any.
pub fn sat_min(phi: &MinFormula, nvars: usize) -> Result<Option<Vec<UpWord>>, LogicError> {
    sat_min_with(phi, nvars, &TranslateConfig::default())
}

pub fn sat_min_with(
    phi: &MinFormula,
    nvars: usize,
    config: &TranslateConfig,
) -> Result<Option<Vec<UpWord>>, LogicError> {
    let a = translate_with(phi, nvars, config)?.nfa;
    Ok(find_match(&a).map(|m| upword_to_interp(&m.up_word(), nvars)))
}

/// For `so` satisfying `ex2 X. body`, values of all variables that satisfy
/// `body` and differ from `so` at most in `X`.
pub fn ex2_witness(
    x: usize,
    body: &MinFormula,
    so: &[UpWord],
) -> Result<Option<Vec<UpWord>>, LogicError> {
    let nvars = so.len();
    let a = translate(body, nvars)?;
    let pairs: Vec<(usize, usize)> = (0..1usize << nvars).map(|l| (l, l ^ (1 << x))).collect();
    let found = ex_project_witness(&a, &pairs, &interp_to_upword(so)).expect("set-letter alphabet");
    Ok(found.map(|(_, w)| upword_to_interp(&w, nvars)))
}

/// Truth of a full formula over `n1` first-order and `n2` second-order
/// variables, through the singleton reduction.
pub fn models_full_up(
    interp: &UpInterpretation,
    phi: &FullFormula,
    n1: usize,
    n2: usize,
) -> Result<bool, LogicError> {
    models_full_up_with(interp, phi, n1, n2, &TranslateConfig::default())
}

pub fn models_full_up_with(
    interp: &UpInterpretation,
    phi: &FullFormula,
    n1: usize,
    n2: usize,
    config: &TranslateConfig,
) -> Result<bool, LogicError> {
    check_full_vars(phi, n1, n2)?;
    let encoded = encode_full(interp, n1, n2)?;
    let reduced = reduce_full(phi, n1, n2);
    models_up_with(
        &interp_to_upword(&encoded),
        &reduced,
        n1 + n2 + 1,
        &singleton_hint(config, n1),
    )
}

/// First-order variables only ever matter as singletons in a reduced
/// formula: every use is guarded by a singleton constraint.
fn singleton_hint(config: &TranslateConfig, n1: usize) -> TranslateConfig {
    TranslateConfig {
        singletons: n1,
        ..*config
    }
}

fn check_full_vars(phi: &FullFormula, n1: usize, n2: usize) -> Result<(), LogicError> {
    let (b1, b2) = phi.var_bounds();
    if b1 > n1 {
        return Err(LogicError::UnknownVariable {
            var: b1 - 1,
            declared: n1,
        });
    }
    if b2 > n2 {
        return Err(LogicError::UnknownVariable {
            var: n1 + b2 - 1,
            declared: n1 + n2,
        });
    }
    Ok(())
}

/// A satisfying interpretation of a full formula, if any. Free first-order
/// variables are decoded from their singleton witnesses; the others get 0.
pub fn sat_full(
    phi: &FullFormula,
    n1: usize,
    n2: usize,
) -> Result<Option<UpInterpretation>, LogicError> {
    sat_full_with(phi, n1, n2, &TranslateConfig::default())
}

pub fn sat_full_with(
    phi: &FullFormula,
    n1: usize,
    n2: usize,
    config: &TranslateConfig,
) -> Result<Option<UpInterpretation>, LogicError> {
    let a = translate_full_with(phi, n1, n2, config)?.nfa;
    match find_match(&a) {
        Some(m) => Ok(Some(decode_full(phi, n1, n2, &m.up_word())?)),
        None => Ok(None),
    }
}

/// The automaton of `reduce_full(phi)` over `n1 + n2 + 1` set variables,
/// correct on encodings of interpretations.
pub fn translate_full_with(
    phi: &FullFormula,
    n1: usize,
    n2: usize,
    config: &TranslateConfig,
) -> Result<Translation, LogicError> {
    check_full_vars(phi, n1, n2)?;
    let reduced = reduce_full(phi, n1, n2);
    translate_with(&reduced, n1 + n2 + 1, &singleton_hint(config, n1))
}

/// Reads an interpretation back from a set-letter word accepted by
/// [`translate_full_with`]. Free first-order variables are decoded from
/// their singletons; the others get 0.
pub fn decode_full(
    phi: &FullFormula,
    n1: usize,
    n2: usize,
    sigma: &UpWord,
) -> Result<UpInterpretation, LogicError> {
    let words = upword_to_interp(sigma, n1 + n2 + 1);
    let (free_fo, _) = phi.free_vars();
    let mut fo = vec![0; n1];
    for x in free_fo {
        fo[x] = decode_number(&words[x], x)?;
    }
    Ok(UpInterpretation {
        so: words[n1..n1 + n2].to_vec(),
        fo,
    })
}
