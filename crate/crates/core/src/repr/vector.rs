use std::collections::BTreeMap;

use super::UPoly;
use crate::algebra::Parity;
use crate::scalar::{Assignment, Coefficient, HalfInt, ScalarError};

/// A vector in a polynomial realization: `even` is `f(u)`, `odd` is the
/// polynomial `g(u)` of the odd component (the vector `∂·g(∂²)` in family
/// M, the y-polynomial in family N).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyVector {
    pub even: UPoly,
    pub odd: UPoly,
}

impl PolyVector {
    pub fn new(even: UPoly, odd: UPoly) -> Self {
        PolyVector { even, odd }
    }

    pub fn even(f: UPoly) -> Self {
        PolyVector {
            even: f,
            odd: UPoly::zero(),
        }
    }

    pub fn odd(g: UPoly) -> Self {
        PolyVector {
            even: UPoly::zero(),
            odd: g,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn add(&self, o: &PolyVector) -> PolyVector {
        PolyVector::new(self.even.add(&o.even), self.odd.add(&o.odd))
    }

    pub fn sub(&self, o: &PolyVector) -> PolyVector {
        PolyVector::new(self.even.sub(&o.even), self.odd.sub(&o.odd))
    }

    pub fn scale(&self, k: &Coefficient) -> PolyVector {
        PolyVector::new(self.even.scale(k), self.odd.scale(k))
    }

    /// Parity of the underlying (unflipped) components.
    pub fn parity(&self) -> Option<Parity> {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (false, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn parity(self) -> Parity {
        match self {
            Letter::X => Parity::Even,
            Letter::Y => Parity::Odd,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Letter::X => "x",
            Letter::Y => "y",
        }
    }
}

/// A finitely supported combination of the weight basis `x_k`, `y_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightVector {
    support: BTreeMap<(HalfInt, Letter), Coefficient>,
}

impl WeightVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: HalfInt, letter: Letter) -> Self {
        Self::term(k, letter, Coefficient::one())
    }

    pub fn term(k: HalfInt, letter: Letter, c: Coefficient) -> Self {
        let mut out = Self::zero();
        out.add_term(k, letter, &c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(HalfInt, Letter), &Coefficient)> {
        self.support.iter()
    }

    pub fn coefficient(&self, k: HalfInt, letter: Letter) -> Coefficient {
        self.support.get(&(k, letter)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add_term(&mut self, k: HalfInt, letter: Letter, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        let key = (k, letter);
        let sum = match self.support.get(&key) {
            Some(existing) => existing + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.support.remove(&key);
        } else {
            self.support.insert(key, sum);
        }
    }

    pub fn add(&self, o: &WeightVector) -> WeightVector {
        let mut out = self.clone();
        for ((k, l), c) in o.terms() {
            out.add_term(*k, *l, c);
        }
        out
    }

    pub fn sub(&self, o: &WeightVector) -> WeightVector {
        let mut out = self.clone();
        for ((k, l), c) in o.terms() {
            out.add_term(*k, *l, &-c);
        }
        out
    }

    pub fn scale(&self, s: &Coefficient) -> WeightVector {
        if s.is_zero() {
            return Self::zero();
        }
        WeightVector {
            support: self.support.iter().map(|(key, c)| (*key, c * s)).collect(),
        }
    }

    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.support.keys().map(|(_, l)| l.parity());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }
}

/// A vector in one of the module realizations.
///
/// Arithmetic between different variants is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleVector {
    Poly(PolyVector),
    Weight(WeightVector),
    /// An element of a one-dimensional module.
    Scalar(Coefficient),
}

impl ModuleVector {
    pub fn even(f: UPoly) -> Self {
        ModuleVector::Poly(PolyVector::even(f))
    }

    pub fn odd(g: UPoly) -> Self {
        ModuleVector::Poly(PolyVector::odd(g))
    }

    pub fn weight(k: HalfInt, letter: Letter) -> Self {
        ModuleVector::Weight(WeightVector::basis(k, letter))
    }

    /// The zero vector of the same variant.
    pub fn zero_like(&self) -> Self {
        match self {
            ModuleVector::Poly(_) => ModuleVector::Poly(PolyVector::default()),
            ModuleVector::Weight(_) => ModuleVector::Weight(WeightVector::zero()),
            ModuleVector::Scalar(_) => ModuleVector::Scalar(Coefficient::zero()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ModuleVector::Poly(p) => p.is_zero(),
            ModuleVector::Weight(w) => w.is_zero(),
            ModuleVector::Scalar(c) => c.is_zero(),
        }
    }

    pub fn as_poly(&self) -> Option<&PolyVector> {
        match self {
            ModuleVector::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_weight(&self) -> Option<&WeightVector> {
        match self {
            ModuleVector::Weight(w) => Some(w),
            _ => None,
        }
    }

    pub fn add(&self, o: &ModuleVector) -> ModuleVector {
        match (self, o) {
            (ModuleVector::Poly(a), ModuleVector::Poly(b)) => ModuleVector::Poly(a.add(b)),
            (ModuleVector::Weight(a), ModuleVector::Weight(b)) => ModuleVector::Weight(a.add(b)),
            (ModuleVector::Scalar(a), ModuleVector::Scalar(b)) => ModuleVector::Scalar(a + b),
            _ => panic!("adding module vectors of different realizations"),
        }
    }

    pub fn sub(&self, o: &ModuleVector) -> ModuleVector {
        self.add(&o.scale(&Coefficient::from_int(-1)))
    }

    pub fn scale(&self, k: &Coefficient) -> ModuleVector {
        match self {
            ModuleVector::Poly(p) => ModuleVector::Poly(p.scale(k)),
            ModuleVector::Weight(w) => ModuleVector::Weight(w.scale(k)),
            ModuleVector::Scalar(c) => ModuleVector::Scalar(c * k),
        }
    }

    /// Parity of the stored components, ignoring any parity flip of the module.
    pub fn raw_parity(&self) -> Option<Parity> {
        match self {
            ModuleVector::Poly(p) => p.parity(),
            ModuleVector::Weight(w) => w.parity(),
            ModuleVector::Scalar(c) => (!c.is_zero()).then_some(Parity::Even),
        }
    }

    pub fn specialize(&self, assignments: &Assignment) -> Result<ModuleVector, ScalarError> {
        Ok(match self {
            ModuleVector::Poly(p) => ModuleVector::Poly(PolyVector::new(
                p.even.specialize(assignments)?,
                p.odd.specialize(assignments)?,
            )),
            ModuleVector::Weight(w) => {
                let mut out = WeightVector::zero();
                for ((k, l), c) in w.terms() {
                    out.add_term(*k, *l, &c.specialize(assignments)?);
                }
                ModuleVector::Weight(out)
            }
            ModuleVector::Scalar(c) => ModuleVector::Scalar(c.specialize(assignments)?),
        })
    }
}

impl From<PolyVector> for ModuleVector {
    fn from(p: PolyVector) -> Self {
        ModuleVector::Poly(p)
    }
}

impl From<WeightVector> for ModuleVector {
    fn from(w: WeightVector) -> Self {
        ModuleVector::Weight(w)
    }
}
