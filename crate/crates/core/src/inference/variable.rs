use crate::fuzzy::{Degree, MembershipFunction, Universe};

/// A named linguistic state of a variable.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub name: String,
    pub mf: MembershipFunction,
}

impl Term {
    pub fn new(name: impl Into<String>, mf: MembershipFunction) -> Self {
        Term {
            name: name.into(),
            mf,
        }
    }
}

/// A named quantity over a universe together with its ordered terms.
#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticVariable {
    pub name: String,
    pub universe: Universe,
    pub terms: Vec<Term>,
}

impl LinguisticVariable {
    pub fn new(name: impl Into<String>, universe: Universe) -> Self {
        LinguisticVariable {
            name: name.into(),
            universe,
            terms: Vec::new(),
        }
    }

    pub fn with_term(mut self, name: impl Into<String>, mf: MembershipFunction) -> Self {
        self.terms.push(Term::new(name, mf));
        self
    }

    pub fn term(&self, name: &str) -> Option<&Term> {
        self.terms.iter().find(|t| t.name == name)
    }

    pub fn term_index(&self, name: &str) -> Option<usize> {
        self.terms.iter().position(|t| t.name == name)
    }

    /// Membership of `x` in every term, in declaration order.
    pub fn memberships(&self, x: f64) -> impl Iterator<Item = Degree> + '_ {
        self.terms.iter().map(move |t| t.mf.eval(x))
    }

    /// First grid point (at `resolution` samples) where no term is positive.
    pub fn coverage_gap(&self, resolution: usize) -> Option<f64> {
        let n = resolution.max(2);
        (0..n)
            .map(|k| self.universe.grid_point(k, n))
            .find(|&x| self.memberships(x).all(Degree::is_zero))
    }
}
