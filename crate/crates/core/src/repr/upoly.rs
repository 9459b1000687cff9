use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{Assignment, Coefficient, HalfInt, ScalarError};

/// A univariate polynomial in the formal variable `u` over K.
///
/// Coefficients are stored densely by degree with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Coefficient>,
}

impl UPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coefficient::one())
    }

    pub fn u() -> Self {
        Self::monomial(1, Coefficient::one())
    }

    pub fn constant(c: Coefficient) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(degree: usize, c: Coefficient) -> Self {
        let mut coeffs = vec![Coefficient::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Coefficient>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Coefficient {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &Coefficient) -> UPoly {
        if k.is_zero() {
            return Self::zero();
        }
        if k.is_one() {
            return self.clone();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// `(u + c)·self`.
    pub fn mul_linear(&self, c: &Coefficient) -> UPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len();
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut term = if k > 0 {
                self.coeffs[k - 1].clone()
            } else {
                Coefficient::zero()
            };
            if k < n && !c.is_zero() {
                term = &term + &(&self.coeffs[k] * c);
            }
            out.push(term);
        }
        Self::from_coeffs(out)
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Coefficient::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(out)
    }

    /// `f(u + h)`, expanded by the binomial theorem.
    pub fn shift(&self, h: HalfInt) -> UPoly {
        if h.twice() == 0 || self.coeffs.len() <= 1 {
            return self.clone();
        }
        self.shift_rational(&h.to_rational())
    }

    fn shift_rational(&self, h: &BigRational) -> UPoly {
        let n = self.coeffs.len();
        // powers of h and binomial rows
        let mut hpow = vec![BigRational::one(); n];
        for k in 1..n {
            hpow[k] = &hpow[k - 1] * h;
        }
        let mut out = vec![Coefficient::zero(); n];
        let mut binom: Vec<BigInt> = vec![BigInt::one()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                let mut next = vec![BigInt::one(); k + 1];
                for j in 1..k {
                    next[j] = &binom[j - 1] + &binom[j];
                }
                binom = next;
            }
            if c.is_zero() {
                continue;
            }
            for j in 0..=k {
                let factor = BigRational::from_integer(binom[j].clone()) * &hpow[k - j];
                if !factor.is_zero() {
                    out[j] = &out[j] + &c.scale_rational(&factor);
                }
            }
        }
        Self::from_coeffs(out)
    }

    /// `f(-u)`.
    pub fn reflect(&self) -> UPoly {
        UPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Evaluates at `u = h`.
    pub fn eval_at(&self, h: HalfInt) -> Coefficient {
        let h = h.to_rational();
        let mut acc = Coefficient::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale_rational(&h) + c;
        }
        acc
    }

    /// Drops every coefficient of degree above `cap`.
    pub fn truncate(&self, cap: usize) -> UPoly {
        Self::from_coeffs(self.coeffs.iter().take(cap + 1).cloned().collect())
    }

    pub fn specialize(&self, assignments: &Assignment) -> Result<UPoly, ScalarError> {
        Ok(Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| c.specialize(assignments))
                .collect::<Result<_, _>>()?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> UPoly {
        UPoly::from_coeffs(v.iter().map(|&k| Coefficient::from_int(k)).collect())
    }

    #[test]
    fn shift_examples() {
        assert_eq!(ints(&[0, 0, 1]).shift(HalfInt::int(1)), ints(&[1, 2, 1]));
        assert_eq!(
            UPoly::u().shift(HalfInt::from_twice(-1)),
            UPoly::from_coeffs(vec![Coefficient::ratio(-1, 2), Coefficient::one()])
        );
        assert_eq!(UPoly::one().shift(HalfInt::from_twice(7)), UPoly::one());
    }

    #[test]
    fn shift_composes() {
        let f = ints(&[3, -1, 0, 2, 5]);
        let a = f
            .shift(HalfInt::from_twice(3))
            .shift(HalfInt::from_twice(-5));
        assert_eq!(a, f.shift(HalfInt::from_twice(-2)));
    }

    #[test]
    fn linear_factor_and_eval() {
        let f = ints(&[1, 1]).mul_linear(&Coefficient::from_int(-1));
        assert_eq!(f, ints(&[-1, 0, 1]));
        assert_eq!(f.eval_at(HalfInt::from_twice(3)), Coefficient::ratio(5, 4));
        assert_eq!(f.reflect(), f);
        assert_eq!(ints(&[0, 2]).reflect(), ints(&[0, -2]));
        assert_eq!(ints(&[1, 1]).mul(&ints(&[-1, 1])), f);
    }
}
