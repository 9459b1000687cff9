use std::collections::BTreeMap;
use std::fmt;

use super::{BasisElement, Parity};
use crate::scalar::Coefficient;

/// A finite linear combination of basis elements with coefficients in K.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<BasisElement, Coefficient>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: BasisElement) -> Self {
        Self::term(b, Coefficient::one())
    }

    pub fn term(b: BasisElement, c: Coefficient) -> Self {
        let mut out = Self::zero();
        out.add_term(b, &c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &BasisElement) -> Coefficient {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, b: BasisElement, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(&b);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(b, c.clone());
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(*b, c);
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(*b, &-c);
        }
        out
    }

    pub fn scale(&self, k: &Coefficient) -> AlgebraElement {
        if k.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(b, c)| (*b, c * k)).collect(),
        }
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }

    /// The common parity of all terms, or `None` for zero or mixed elements.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|b| b.parity());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{b}")?;
            } else if c.is_atomic_factor() {
                write!(f, "{c}*{b}")?;
            } else {
                write!(f, "({c})*{b}")?;
            }
        }
        Ok(())
    }
}
