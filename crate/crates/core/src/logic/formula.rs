//! Formula syntax trees. Variables are indices into the caller's ordered
//! variable lists.

use std::collections::BTreeSet;

/// Minimal S1S: only second-order variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MinFormula {
    /// Some element of `X` is below some element of `Y`.
    Less(usize, usize),
    /// `X ⊆ Y`.
    Incl(usize, usize),
    And(Box<MinFormula>, Box<MinFormula>),
    Not(Box<MinFormula>),
    Ex2(usize, Box<MinFormula>),
}

/// Full S1S with first-order variables (numbers) and second-order ones
/// (sets), indexed separately.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FullFormula {
    FoLess(usize, usize),
    /// First-order variable in second-order variable.
    FoIn(usize, usize),
    And(Box<FullFormula>, Box<FullFormula>),
    Not(Box<FullFormula>),
    Ex1(usize, Box<FullFormula>),
    Ex2(usize, Box<FullFormula>),
}

impl MinFormula {
    pub fn and(a: MinFormula, b: MinFormula) -> MinFormula {
        MinFormula::And(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: MinFormula) -> MinFormula {
        MinFormula::Not(Box::new(a))
    }

    pub fn ex2(x: usize, a: MinFormula) -> MinFormula {
        MinFormula::Ex2(x, Box::new(a))
    }

    pub fn free_vars(&self) -> BTreeSet<usize> {
        match self {
            MinFormula::Less(x, y) | MinFormula::Incl(x, y) => [*x, *y].into_iter().collect(),
            MinFormula::And(a, b) => {
                let mut s = a.free_vars();
                s.extend(b.free_vars());
                s
            }
            MinFormula::Not(a) => a.free_vars(),
            MinFormula::Ex2(x, a) => {
                let mut s = a.free_vars();
                s.remove(x);
                s
            }
        }
    }

    /// One more than the largest variable index mentioned, bound or free.
    pub fn var_bound(&self) -> usize {
        match self {
            MinFormula::Less(x, y) | MinFormula::Incl(x, y) => x.max(y) + 1,
            MinFormula::And(a, b) => a.var_bound().max(b.var_bound()),
            MinFormula::Not(a) => a.var_bound(),
            MinFormula::Ex2(x, a) => (x + 1).max(a.var_bound()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            MinFormula::Less(..) | MinFormula::Incl(..) => 1,
            MinFormula::And(a, b) => 1 + a.size() + b.size(),
            MinFormula::Not(a) | MinFormula::Ex2(_, a) => 1 + a.size(),
        }
    }

    pub fn quantifiers(&self) -> usize {
        match self {
            MinFormula::Less(..) | MinFormula::Incl(..) => 0,
            MinFormula::And(a, b) => a.quantifiers() + b.quantifiers(),
            MinFormula::Not(a) => a.quantifiers(),
            MinFormula::Ex2(_, a) => 1 + a.quantifiers(),
        }
    }

    pub fn is_quantifier_free(&self) -> bool {
        self.quantifiers() == 0
    }

    /// Fully parenthesized rendering with the given variable names.
    pub fn render(&self, names: &[String]) -> String {
        match self {
            MinFormula::Less(x, y) => format!("{} < {}", names[*x], names[*y]),
            MinFormula::Incl(x, y) => format!("{} sub {}", names[*x], names[*y]),
            MinFormula::And(a, b) => format!("({} & {})", a.render(names), b.render(names)),
            MinFormula::Not(a) => format!("!({})", a.render(names)),
            MinFormula::Ex2(x, a) => format!("(ex2 {}. {})", names[*x], a.render(names)),
        }
    }
}

impl FullFormula {
    pub fn and(a: FullFormula, b: FullFormula) -> FullFormula {
        FullFormula::And(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: FullFormula) -> FullFormula {
        FullFormula::Not(Box::new(a))
    }

    pub fn ex1(x: usize, a: FullFormula) -> FullFormula {
        FullFormula::Ex1(x, Box::new(a))
    }

    pub fn ex2(x: usize, a: FullFormula) -> FullFormula {
        FullFormula::Ex2(x, Box::new(a))
    }

    /// Free first-order and second-order variables.
    pub fn free_vars(&self) -> (BTreeSet<usize>, BTreeSet<usize>) {
        match self {
            FullFormula::FoLess(x, y) => ([*x, *y].into_iter().collect(), BTreeSet::new()),
            FullFormula::FoIn(x, y) => ([*x].into_iter().collect(), [*y].into_iter().collect()),
            FullFormula::And(a, b) => {
                let (mut f, mut s) = a.free_vars();
                let (f2, s2) = b.free_vars();
                f.extend(f2);
                s.extend(s2);
                (f, s)
            }
            FullFormula::Not(a) => a.free_vars(),
            FullFormula::Ex1(x, a) => {
                let (mut f, s) = a.free_vars();
                f.remove(x);
                (f, s)
            }
            FullFormula::Ex2(x, a) => {
                let (f, mut s) = a.free_vars();
                s.remove(x);
                (f, s)
            }
        }
    }

    /// One more than the largest first-order and second-order indices used.
    pub fn var_bounds(&self) -> (usize, usize) {
        match self {
            FullFormula::FoLess(x, y) => (x.max(y) + 1, 0),
            FullFormula::FoIn(x, y) => (x + 1, y + 1),
            FullFormula::And(a, b) => {
                let (f1, s1) = a.var_bounds();
                let (f2, s2) = b.var_bounds();
                (f1.max(f2), s1.max(s2))
            }
            FullFormula::Not(a) => a.var_bounds(),
            FullFormula::Ex1(x, a) => {
                let (f, s) = a.var_bounds();
                (f.max(x + 1), s)
            }
            FullFormula::Ex2(x, a) => {
                let (f, s) = a.var_bounds();
                (f, s.max(x + 1))
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            FullFormula::FoLess(..) | FullFormula::FoIn(..) => 1,
            FullFormula::And(a, b) => 1 + a.size() + b.size(),
            FullFormula::Not(a) | FullFormula::Ex1(_, a) | FullFormula::Ex2(_, a) => 1 + a.size(),
        }
    }

    pub fn quantifiers(&self) -> usize {
        match self {
            FullFormula::FoLess(..) | FullFormula::FoIn(..) => 0,
            FullFormula::And(a, b) => a.quantifiers() + b.quantifiers(),
            FullFormula::Not(a) => a.quantifiers(),
            FullFormula::Ex1(_, a) | FullFormula::Ex2(_, a) => 1 + a.quantifiers(),
        }
    }

    /// Fully parenthesized rendering with the given variable names.
    pub fn render(&self, fo: &[String], so: &[String]) -> String {
        match self {
            FullFormula::FoLess(x, y) => format!("{} < {}", fo[*x], fo[*y]),
            FullFormula::FoIn(x, y) => format!("{} in {}", fo[*x], so[*y]),
            FullFormula::And(a, b) => format!("({} & {})", a.render(fo, so), b.render(fo, so)),
            FullFormula::Not(a) => format!("!({})", a.render(fo, so)),
            FullFormula::Ex1(x, a) => format!("(ex1 {}. {})", fo[*x], a.render(fo, so)),
            FullFormula::Ex2(x, a) => format!("(ex2 {}. {})", so[*x], a.render(fo, so)),
        }
    }
}

/// Default names `X0, X1, …` for second-order variables.
pub fn so_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("X{i}")).collect()
}

/// Default names `x0, x1, …` for first-order variables.
pub fn fo_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}
