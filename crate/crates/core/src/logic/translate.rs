//! Compiling minimal formulas to Büchi automata.
//!
//! Each subformula is compiled over the set-letters of its own free
//! variables only; conjunction first lifts both sides to the union of their
//! variables, and quantification erases one bit of the letters. The final
//! automaton is lifted to the full variable list. Every intermediate result
//! is reduced, and where possible replaced by a deterministic automaton over
//! its syntactic color classes.

use crate::buchi::{intersection, lift, project_out, weak_intersection, BuchiNfa};
use crate::complement::{complement_with, weak_determinization, ComplementConfig};

use super::{LogicError, MinFormula};

/// Size of the automaton built for one syntax node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeStats {
    pub op: &'static str,
    pub vars: usize,
    pub states: usize,
    pub transitions: usize,
    /// Realizable colors, for complement nodes.
    pub colors: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct Translation {
    pub nfa: BuchiNfa,
    /// One entry per syntax node, children before parents.
    pub stats: Vec<NodeStats>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TranslateConfig {
    pub complement: ComplementConfig,
    /// Variables below this index are promised to hold singletons. The
    /// result is then only guaranteed on such interpretations, and negations
    /// are computed over them alone, which keeps complements small.
    pub singletons: usize,
    /// Replace intermediate automata by deterministic ones over syntactic
    /// color classes where acceptance allows it.
    pub normalize: bool,
}

impl Default for TranslateConfig {
    /// Syntactic color classes, no singleton promise.
    fn default() -> Self {
        TranslateConfig {
            complement: ComplementConfig {
                syntactic: true,
                ..ComplementConfig::default()
            },
            singletons: 0,
            normalize: true,
        }
    }
}

/// An automaton over the set-letters of `vars` (sorted); bit `k` of a letter
/// stands for `vars[k]`.
struct Local {
    vars: Vec<usize>,
    nfa: BuchiNfa,
}

fn check_var(v: usize, nvars: usize) -> Result<(), LogicError> {
    if v < nvars {
        Ok(())
    } else {
        Err(LogicError::UnknownVariable {
            var: v,
            declared: nvars,
        })
    }
}

fn less_nfa(bits: usize, x: usize, y: usize) -> BuchiNfa {
    let alphabet = 1 << bits;
    let mut trans = Vec::new();
    for l in 0..alphabet {
        for q in 0..3 {
            trans.push((q, l, q));
        }
        if l >> x & 1 == 1 {
            trans.push((0, l, 1));
        }
        if l >> y & 1 == 1 {
            trans.push((1, l, 2));
        }
    }
    BuchiNfa::from_parts(3, alphabet, trans, vec![0], vec![false, false, true])
}

fn incl_nfa(bits: usize, x: usize, y: usize) -> BuchiNfa {
    let alphabet = 1 << bits;
    let trans = (0..alphabet)
        .filter(|l| l >> x & 1 == 0 || l >> y & 1 == 1)
        .map(|l| (0, l, 0))
        .collect();
    BuchiNfa::from_parts(1, alphabet, trans, vec![0], vec![true])
}

/// Sequences in which each variable at a position in `hinted` holds exactly
/// one element. The state records which of them have been seen.
fn singletons_nfa(bits: usize, hinted: &[usize]) -> BuchiNfa {
    let mask: usize = hinted.iter().map(|&k| 1 << k).sum();
    let states = 1 << hinted.len();
    // State bit i: `hinted[i]` has occurred.
    let seen = |l: usize| -> usize {
        hinted
            .iter()
            .enumerate()
            .filter(|&(_, &k)| l >> k & 1 == 1)
            .map(|(i, _)| 1 << i)
            .sum()
    };
    let mut trans = Vec::new();
    for q in 0..states {
        for l in 0..1usize << bits {
            let s = seen(l & mask);
            if q & s == 0 {
                trans.push((q, l, q | s));
            }
        }
    }
    let mut acc = vec![false; states];
    acc[states - 1] = true;
    BuchiNfa::from_parts(states, 1 << bits, trans, vec![0], acc)
}

/// Sequences over the set-letters of `nvars` variables in which some element
/// of `x` precedes some element of `y`.
pub fn atom_less_nfa(nvars: usize, x: usize, y: usize) -> Result<BuchiNfa, LogicError> {
    check_var(x, nvars)?;
    check_var(y, nvars)?;
    Ok(less_nfa(nvars, x, y))
}

/// Sequences over the set-letters of `nvars` variables in which `x ⊆ y`.
pub fn atom_incl_nfa(nvars: usize, x: usize, y: usize) -> Result<BuchiNfa, LogicError> {
    check_var(x, nvars)?;
    check_var(y, nvars)?;
    Ok(incl_nfa(nvars, x, y))
}

pub fn translate(phi: &MinFormula, nvars: usize) -> Result<BuchiNfa, LogicError> {
    Ok(translate_with(phi, nvars, &TranslateConfig::default())?.nfa)
}

pub fn translate_with(
    phi: &MinFormula,
    nvars: usize,
    config: &TranslateConfig,
) -> Result<Translation, LogicError> {
    check_vars(phi, nvars)?;
    let mut stats = Vec::new();
    let local = compile(phi, config, &mut stats)?;
    let all: Vec<usize> = (0..nvars).collect();
    let nfa = widen(&local, &all);
    Ok(Translation { nfa, stats })
}

fn check_vars(phi: &MinFormula, nvars: usize) -> Result<(), LogicError> {
    let bound = phi.var_bound();
    if bound > nvars {
        return Err(LogicError::UnknownVariable {
            var: bound - 1,
            declared: nvars,
        });
    }
    Ok(())
}

fn compile(
    phi: &MinFormula,
    config: &TranslateConfig,
    stats: &mut Vec<NodeStats>,
) -> Result<Local, LogicError> {
    let mut colors = None;
    let (op, local) = match phi {
        MinFormula::Less(x, y) | MinFormula::Incl(x, y) => {
            let vars: Vec<usize> = if x == y {
                vec![*x]
            } else {
                vec![*x.min(y), *x.max(y)]
            };
            let pos = |v: usize| vars.iter().position(|&u| u == v).expect("atom variable");
            let nfa = match phi {
                MinFormula::Less(..) => less_nfa(vars.len(), pos(*x), pos(*y)),
                _ => incl_nfa(vars.len(), pos(*x), pos(*y)),
            };
            let op = if matches!(phi, MinFormula::Less(..)) {
                "less"
            } else {
                "incl"
            };
            (op, Local { vars, nfa })
        }
        MinFormula::And(a, b) => {
            let la = compile(a, config, stats)?;
            let lb = compile(b, config, stats)?;
            let mut vars = la.vars.clone();
            vars.extend(&lb.vars);
            vars.sort_unstable();
            vars.dedup();
            let nfa = meet(&widen(&la, &vars), &widen(&lb, &vars));
            ("and", Local { vars, nfa })
        }
        MinFormula::Not(a) => {
            let la = compile(a, config, stats)?;
            let (nfa, cstats) = complement_with(&la.nfa, &config.complement)?;
            colors = Some(cstats.colors);
            (
                "not",
                Local {
                    vars: la.vars,
                    nfa: nfa.reduce(),
                },
            )
        }
        MinFormula::Ex2(x, a) => {
            let la = compile(a, config, stats)?;
            match la.vars.iter().position(|v| v == x) {
                Some(k) => {
                    let mut vars = la.vars.clone();
                    vars.remove(k);
                    let low = (1 << k) - 1;
                    let image: Vec<usize> = (0..la.nfa.alphabet_size())
                        .map(|l| (l & low) | ((l >> (k + 1)) << k))
                        .collect();
                    let nfa = project_out(&la.nfa, &image, 1 << vars.len()).reduce();
                    ("ex2", Local { vars, nfa })
                }
                None => ("ex2", la),
            }
        }
    };
    let mut local = restrict_singletons(local, config.singletons);
    if config.normalize && matches!(op, "and" | "ex2") {
        if let Some(d) = weak_determinization(&local.nfa, config.complement.max_colors)? {
            if d.state_count() <= local.nfa.state_count() {
                local.nfa = d;
            }
        }
    }
    stats.push(NodeStats {
        op,
        vars: local.vars.len(),
        states: local.nfa.state_count(),
        transitions: local.nfa.transition_count(),
        colors,
    });
    Ok(local)
}

/// Reduced intersection, skipping the flag when one side is weak.
fn meet(a: &BuchiNfa, b: &BuchiNfa) -> BuchiNfa {
    if a.is_weak() || b.is_weak() {
        weak_intersection(a, b).reduce()
    } else {
        intersection(a, b).expect("same alphabet").reduce()
    }
}

fn restrict_singletons(local: Local, singletons: usize) -> Local {
    let hinted: Vec<usize> = (0..local.vars.len())
        .filter(|&k| local.vars[k] < singletons)
        .collect();
    if hinted.is_empty() {
        return local;
    }
    let sing = singletons_nfa(local.vars.len(), &hinted);
    let nfa = meet(&local.nfa, &sing);
    Local { nfa, ..local }
}

/// Reads `local` over the letters of `target ⊇ local.vars`.
fn widen(local: &Local, target: &[usize]) -> BuchiNfa {
    if local.vars == target {
        return local.nfa.clone();
    }
    let positions: Vec<usize> = local
        .vars
        .iter()
        .map(|v| target.iter().position(|u| u == v).expect("subset"))
        .collect();
    let view: Vec<usize> = (0..1usize << target.len())
        .map(|l| {
            positions
                .iter()
                .enumerate()
                .map(|(k, &p)| (l >> p & 1) << k)
                .sum()
        })
        .collect();
    lift(&local.nfa, &view)
}

/// The translation computed directly over the full set-letter alphabet at
/// every node, quantifiers realized by [`crate::buchi::ex_project`] and no
/// intermediate reduction.
pub fn translate_flat(
    phi: &MinFormula,
    nvars: usize,
    config: &ComplementConfig,
) -> Result<BuchiNfa, LogicError> {
    check_vars(phi, nvars)?;
    flat(phi, nvars, config)
}

fn flat(phi: &MinFormula, nvars: usize, config: &ComplementConfig) -> Result<BuchiNfa, LogicError> {
    Ok(match phi {
        MinFormula::Less(x, y) => less_nfa(nvars, *x, *y),
        MinFormula::Incl(x, y) => incl_nfa(nvars, *x, *y),
        MinFormula::And(a, b) => {
            intersection(&flat(a, nvars, config)?, &flat(b, nvars, config)?).expect("same alphabet")
        }
        MinFormula::Not(a) => complement_with(&flat(a, nvars, config)?, config)?.0,
        MinFormula::Ex2(x, a) => {
            let pairs: Vec<(usize, usize)> =
                (0..1usize << nvars).map(|l| (l, l ^ (1 << x))).collect();
            crate::buchi::ex_project(&flat(a, nvars, config)?, &pairs)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buchi::{is_satisfiable, membership_up};
    use crate::word::UpWord;

    fn up(x: &[usize], y: &[usize]) -> UpWord {
        UpWord::from_vecs(x.to_vec(), y.to_vec()).unwrap()
    }

    #[test]
    fn atoms() {
        // Letters over (X, Y): bit 0 = X, bit 1 = Y.
        let incl = atom_incl_nfa(2, 0, 1).unwrap();
        assert!(membership_up(&incl, &up(&[3], &[0])).unwrap());
        assert!(!membership_up(&incl, &up(&[1], &[0])).unwrap());
        let less = atom_less_nfa(2, 0, 1).unwrap();
        assert!(membership_up(&less, &up(&[1, 2], &[0])).unwrap());
        assert!(!membership_up(&less, &up(&[3], &[0])).unwrap());
        assert!(less.state_count() <= 3 && incl.state_count() == 1);
        assert_eq!(
            atom_less_nfa(2, 0, 2),
            Err(LogicError::UnknownVariable {
                var: 2,
                declared: 2
            })
        );
    }

    #[test]
    fn tautology_and_contradiction() {
        let t = translate(&MinFormula::Incl(0, 0), 1).unwrap();
        assert!(membership_up(&t, &up(&[1], &[0, 1])).unwrap());
        let f = translate(&MinFormula::not(MinFormula::Incl(0, 0)), 1).unwrap();
        assert!(!is_satisfiable(&f));
    }

    #[test]
    fn nonempty_via_quantifier() {
        // ex2 Y. X < Y holds iff X is nonempty.
        let phi = MinFormula::ex2(1, MinFormula::Less(0, 1));
        let a = translate(&phi, 2).unwrap();
        assert!(membership_up(&a, &up(&[0, 1], &[0])).unwrap());
        assert!(membership_up(&a, &up(&[2], &[0, 1])).unwrap());
        assert!(!membership_up(&a, &up(&[0], &[2])).unwrap());
    }

    #[test]
    fn flat_translation_agrees() {
        let phi = MinFormula::not(MinFormula::ex2(
            1,
            MinFormula::and(
                MinFormula::Less(0, 1),
                MinFormula::not(MinFormula::Incl(1, 0)),
            ),
        ));
        let a = translate(&phi, 2).unwrap();
        let b = translate_flat(&phi, 2, &ComplementConfig::default()).unwrap();
        for s in [
            up(&[0], &[0]),
            up(&[1], &[0]),
            up(&[0, 1], &[1]),
            up(&[3], &[2, 0]),
        ] {
            assert_eq!(
                membership_up(&a, &s).unwrap(),
                membership_up(&b, &s).unwrap(),
                "{s:?}"
            );
        }
    }

    #[test]
    fn stats_follow_syntax() {
        let phi = MinFormula::and(
            MinFormula::Incl(0, 1),
            MinFormula::not(MinFormula::Less(1, 0)),
        );
        let t = translate_with(&phi, 2, &TranslateConfig::default()).unwrap();
        let ops: Vec<&str> = t.stats.iter().map(|s| s.op).collect();
        assert_eq!(ops, vec!["incl", "less", "not", "and"]);
        assert!(t.stats[2].colors.is_some());
    }
}
