//! Sparse multivariate polynomials over ℚ(i) in the fixed indeterminates.
//!
//! Terms are kept sorted in descending graded-lexicographic order with
//! `s < a < b < c < sigma < e1 < e2`, without zero coefficients.

use std::cmp::Ordering;
use std::fmt;

use super::gaussian::GaussianRational;

pub const NVARS: usize = 7;

/// The formal parameters of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Square root of λ.
    S = 0,
    /// α.
    A = 1,
    /// Twist parameter of ω_b.
    B = 2,
    /// Witt-embedding coefficient.
    C = 3,
    /// Intermediate-series parameter σ.
    Sigma = 4,
    /// Auxiliary scalars for candidate maps.
    E1 = 5,
    E2 = 6,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::S, Var::A, Var::B, Var::C, Var::Sigma, Var::E1, Var::E2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::Sigma => "sigma",
            Var::E1 => "e1",
            Var::E2 => "e2",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, exp: u32) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0.iter()) {
            *x += y;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(x, y)| x <= y)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut e = other.0;
        for (x, y) in e.iter_mut().zip(self.0.iter()) {
            *x -= y;
        }
        Monomial(e)
    }

    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0.iter()) {
            *x = (*x).min(*y);
        }
        Monomial(e)
    }

    pub fn pow(&self, n: u32) -> Monomial {
        let mut e = self.0;
        for x in e.iter_mut() {
            *x *= n;
        }
        Monomial(e)
    }

    fn without(&self, v: usize) -> Monomial {
        let mut e = self.0;
        e[v] = 0;
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.0[v.index()];
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, GaussianRational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), GaussianRational::one())
    }

    pub fn term(m: Monomial, c: GaussianRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(mut terms: Vec<(Monomial, GaussianRational)>) -> Self {
        terms.sort_by_key(|x| std::cmp::Reverse(x.0));
        let mut out: Vec<(Monomial, GaussianRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, GaussianRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_value(&self) -> Option<GaussianRational> {
        match self.terms.as_slice() {
            [] => Some(GaussianRational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, GaussianRational)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> GaussianRational {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m, _)) => it.fold(*m, |acc, (m, _)| acc.meet(m)),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Divides every exponent vector by `m`; `m` must divide every term.
    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (m.quotient_of(x), c.clone()))
                .collect(),
        }
    }

    /// Scales to make the leading coefficient 1.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, if negate { -&b[j].1 } else { b[j].1.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            out.push((t.0, if negate { -&t.1 } else { t.1.clone() }));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return Poly {
                terms: self.terms.iter().map(|(x, d)| (x.mul(m), d * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return other.mul(self);
        }
        let mut prod = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                prod.push((m1.mul(m2), c1 * c2));
            }
        }
        Poly::from_terms(prod)
    }

    pub fn pow(&self, n: u32) -> Poly {
        if n == 0 {
            return Poly::one();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            let mut cp = GaussianRational::one();
            for _ in 0..n {
                cp = &cp * c;
            }
            return Poly::term(m.pow(n), cp);
        }
        let mut base = self.clone();
        let mut acc = Poly::one();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division of polynomials by zero");
        if divisor.terms.len() == 1 {
            let (m, c) = &divisor.terms[0];
            if !self.terms.iter().all(|(x, _)| m.divides(x)) {
                return None;
            }
            let ci = c.inv().expect("nonzero");
            return Some(Poly {
                terms: self
                    .terms
                    .iter()
                    .map(|(x, d)| (m.quotient_of(x), d * &ci))
                    .collect(),
            });
        }
        let (lm, lc) = &divisor.terms[0];
        let lci = lc.inv().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = &c * &lci;
            rem = rem.sub(&divisor.mul(&Poly::term(qm, qc.clone())));
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Coefficients with respect to variable `v`, indexed by degree.
    pub fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut out: Vec<Vec<(Monomial, GaussianRational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].push((m.without(v), c.clone()));
        }
        // order is preserved when the v-exponent is removed uniformly
        out.into_iter().map(|terms| Poly { terms }).collect()
    }

    pub fn from_coeffs_in(v: usize, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let shift = {
                let mut e = [0; NVARS];
                e[v] = k as u32;
                Monomial(e)
            };
            for (m, x) in &c.terms {
                terms.push((m.mul(&shift), x.clone()));
            }
        }
        Poly::from_terms(terms)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_like();
            let shown = if negative { -c } else { c.clone() };
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{shown}")?;
            } else if shown.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{shown}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: Var) -> Poly {
        Poly::var(v)
    }

    fn k(n: i64) -> Poly {
        Poly::constant(GaussianRational::from_int(n))
    }

    #[test]
    fn grlex_order() {
        let s = Monomial::var(Var::S, 1);
        let a = Monomial::var(Var::A, 1);
        let s2 = Monomial::var(Var::S, 2);
        assert!(a > s);
        assert!(s2 > a);
        assert!(Monomial::ONE < s);
    }

    #[test]
    fn arithmetic_and_exact_division() {
        let a = p(Var::A);
        let num = a.mul(&a).sub(&k(1));
        let den = a.sub(&k(1));
        assert_eq!(num.div_exact(&den), Some(a.add(&k(1))));
        assert_eq!(num.div_exact(&p(Var::S)), None);
    }

    #[test]
    fn coeffs_round_trip() {
        let s = p(Var::S);
        let a = p(Var::A);
        let x = s
            .mul(&s)
            .mul(&a)
            .add(&a.pow(3))
            .sub(&s.scale(&GaussianRational::ratio(1, 2)));
        for v in 0..NVARS {
            assert_eq!(Poly::from_coeffs_in(v, &x.coeffs_in(v)), x);
        }
    }

    #[test]
    fn display() {
        let s = p(Var::S);
        let x = s
            .mul(&s)
            .scale(&GaussianRational::from_int(2))
            .sub(&p(Var::Sigma));
        assert_eq!(x.to_string(), "2*s^2 - sigma");
    }
}
