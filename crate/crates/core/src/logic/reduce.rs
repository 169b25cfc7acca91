//! From full S1S to minimal S1S by singleton sets.
//!
//! With `n1` first-order and `n2` second-order variables, first-order
//! variable `i` becomes set variable `i`, set variable `j` becomes `n1 + j`,
//! and `n1 + n2` is the scratch variable quantified inside singleton
//! constraints.

use super::interp::{encode_number, UpInterpretation};
use super::{FullFormula, LogicError, MinFormula};
use crate::word::UpWord;

/// `x` is a singleton: `¬(X ≺ X) ∧ ∃Y. X ≺ Y`.
pub fn sing(x: usize, fresh: usize) -> MinFormula {
    MinFormula::and(
        MinFormula::not(MinFormula::Less(x, x)),
        MinFormula::ex2(fresh, MinFormula::Less(x, fresh)),
    )
}

/// The minimal formula over `n1 + n2 + 1` set variables equivalent to `phi`
/// on singleton-encoded interpretations.
pub fn reduce_full(phi: &FullFormula, n1: usize, n2: usize) -> MinFormula {
    let extra = n1 + n2;
    let mut out = translate(phi, n1, extra);
    let (free_fo, _) = phi.free_vars();
    for x in free_fo {
        out = MinFormula::and(out, sing(x, extra));
    }
    out
}

fn translate(phi: &FullFormula, n1: usize, extra: usize) -> MinFormula {
    match phi {
        FullFormula::FoLess(x, y) => MinFormula::Less(*x, *y),
        FullFormula::FoIn(x, z) => MinFormula::Incl(*x, n1 + z),
        FullFormula::And(a, b) => MinFormula::and(translate(a, n1, extra), translate(b, n1, extra)),
        FullFormula::Not(a) => MinFormula::not(translate(a, n1, extra)),
        FullFormula::Ex1(x, a) => MinFormula::ex2(
            *x,
            MinFormula::and(sing(*x, extra), translate(a, n1, extra)),
        ),
        FullFormula::Ex2(z, a) => MinFormula::ex2(n1 + z, translate(a, n1, extra)),
    }
}

/// The set-variable interpretation matching [`reduce_full`]'s numbering;
/// the scratch variable is empty.
pub fn encode_full(
    interp: &UpInterpretation,
    n1: usize,
    n2: usize,
) -> Result<Vec<UpWord>, LogicError> {
    if interp.fo.len() < n1 {
        return Err(LogicError::Unassigned {
            order: 1,
            var: interp.fo.len(),
        });
    }
    if interp.so.len() < n2 {
        return Err(LogicError::Unassigned {
            order: 2,
            var: interp.so.len(),
        });
    }
    let mut out: Vec<UpWord> = interp.fo[..n1].iter().map(|&i| encode_number(i)).collect();
    out.extend(interp.so[..n2].iter().cloned());
    out.push(UpWord::from_vecs(vec![0], vec![0]).expect("nonempty"));
    Ok(out)
}
