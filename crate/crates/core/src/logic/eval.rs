//! Direct evaluation of quantifier-free minimal formulas.

use crate::word::{lcm, UpWord};

use super::MinFormula;

/// Truth of a quantifier-free `phi` under the boolean words `so`, or `None`
/// if `phi` has a quantifier.
///
/// With `P` the longest prefix and `L` the common period, `X ⊆ Y` is decided
/// on positions below `P + L`, after which every position repeats one of
/// them. For `X ≺ Y` the least element of `X`, if any, lies below `P + L`,
/// and a later element of `Y`, if any, has a copy below `P + 2L`.
pub fn eval_direct(phi: &MinFormula, so: &[UpWord]) -> Option<bool> {
    let p = so.iter().map(|w| w.prefix.len()).max().unwrap_or(1);
    let l = so.iter().fold(1, |acc, w| lcm(acc, w.period.len()));
    eval(phi, so, p + 2 * l)
}

fn eval(phi: &MinFormula, so: &[UpWord], window: usize) -> Option<bool> {
    let holds = |v: usize, n: usize| so[v].at(n) != 0;
    match phi {
        MinFormula::Less(x, y) => {
            Some((0..window).any(|m| holds(*x, m) && (m + 1..window).any(|n| holds(*y, n))))
        }
        MinFormula::Incl(x, y) => Some((0..window).all(|n| !holds(*x, n) || holds(*y, n))),
        MinFormula::And(a, b) => Some(eval(a, so, window)? && eval(b, so, window)?),
        MinFormula::Not(a) => Some(!eval(a, so, window)?),
        MinFormula::Ex2(..) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(x: &[usize], y: &[usize]) -> UpWord {
        UpWord::from_vecs(x.to_vec(), y.to_vec()).unwrap()
    }

    #[test]
    fn atoms() {
        let so = [up(&[1], &[0]), up(&[0], &[1])];
        assert_eq!(eval_direct(&MinFormula::Less(0, 1), &so), Some(true));
        assert_eq!(eval_direct(&MinFormula::Less(1, 0), &so), Some(false));
        assert_eq!(eval_direct(&MinFormula::Incl(0, 1), &so), Some(false));
        let same = [up(&[1], &[0]), up(&[1], &[0])];
        assert_eq!(eval_direct(&MinFormula::Less(0, 1), &same), Some(false));
        assert_eq!(
            eval_direct(&MinFormula::ex2(0, MinFormula::Incl(0, 0)), &so),
            None
        );
    }

    #[test]
    fn late_witness_in_long_period() {
        // X only at 4, Y at 3 (mod 4) from position 1 on: next Y after 4 is 7.
        let so = [up(&[0, 0, 0, 0, 1], &[0]), up(&[0], &[0, 0, 1, 0])];
        assert_eq!(eval_direct(&MinFormula::Less(0, 1), &so), Some(true));
    }
}
