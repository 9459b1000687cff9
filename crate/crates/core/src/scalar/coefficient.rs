use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::gaussian::GaussianRational;
use super::gcd::gcd;
use super::halfint::HalfInt;
use super::poly::{Monomial, Poly, Var};
use super::ScalarError;

/// An element of ℚ(i)(s, a, b, c, σ, e1, e2) in canonical form.
///
/// The denominator is monic and coprime to the numerator; zero is `0/1`.
/// Structural equality is therefore field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coefficient {
    num: Poly,
    den: Poly,
}

pub type Assignment = BTreeMap<Var, Coefficient>;

impl Default for Coefficient {
    fn default() -> Self {
        Coefficient::zero()
    }
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::constant(GaussianRational::ratio(num, den))
    }

    pub fn half_int(h: HalfInt) -> Self {
        Self::ratio(h.twice(), 2)
    }

    pub fn rational(q: BigRational) -> Self {
        Self::constant(GaussianRational::real(q))
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn from_poly(num: Poly) -> Self {
        Coefficient {
            num,
            den: Poly::one(),
        }
    }

    /// Canonicalizes `num / den`.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_unit(num, den)
    }

    fn normalize_unit(num: Poly, den: Poly) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            Coefficient { num, den }
        } else {
            let inv = lc.inv().expect("nonzero denominator");
            Coefficient {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as an element of ℚ(i), if it is constant.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn scale(&self, q: &GaussianRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Coefficient {
            num: self.num.scale(q),
            den: self.den.clone(),
        }
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        self.scale(&GaussianRational::real(q.clone()))
    }

    pub fn arith_add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return Coefficient {
                    num,
                    den: self.den.clone(),
                };
            }
            return Self::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            // gcd(n1·d2 + n2, d2) = gcd(n2, d2) = 1
            return Coefficient {
                num: self.num.mul(&other.den).add(&other.num),
                den: other.den.clone(),
            };
        }
        if other.den.is_one() {
            return Coefficient {
                num: other.num.mul(&self.den).add(&self.num),
                den: self.den.clone(),
            };
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            return Coefficient {
                num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
                den: self.den.mul(&other.den),
            };
        }
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d2).add(&other.num.mul(&d1));
        if num.is_zero() {
            return Self::zero();
        }
        let h = gcd(&num, &g);
        let den = d1.mul(&d2).mul(&g);
        if h.is_one() {
            Coefficient { num, den }
        } else {
            Coefficient {
                num: num.div_exact(&h).expect("gcd divides"),
                den: den.div_exact(&h).expect("gcd divides"),
            }
        }
    }

    pub fn arith_neg(&self) -> Self {
        Coefficient {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn arith_sub(&self, other: &Self) -> Self {
        self.arith_add(&other.arith_neg())
    }

    pub fn arith_mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        // cross-cancel before multiplying
        let g1 = if other.den.is_one() {
            Poly::one()
        } else {
            gcd(&self.num, &other.den)
        };
        let g2 = if self.den.is_one() {
            Poly::one()
        } else {
            gcd(&other.num, &self.den)
        };
        let n1 = div_if(&self.num, &g1);
        let d2 = div_if(&other.den, &g1);
        let n2 = div_if(&other.num, &g2);
        let d1 = div_if(&self.den, &g2);
        Coefficient {
            num: n1.mul(&n2),
            den: d1.mul(&d2),
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize_unit(self.den.clone(), self.num.clone()))
    }

    pub fn arith_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.arith_mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, n: i64) -> Result<Self, ScalarError> {
        if n == 0 {
            return Ok(Self::one());
        }
        let e = n.unsigned_abs() as u32;
        // coprime numerator and denominator stay coprime under powers
        let p = Coefficient {
            num: self.num.pow(e),
            den: self.den.pow(e),
        };
        if n > 0 {
            Ok(p)
        } else {
            p.inv()
        }
    }

    /// Applies the substitution homomorphism given by `assignments`.
    pub fn specialize(&self, assignments: &Assignment) -> Result<Self, ScalarError> {
        if assignments.is_empty() {
            return Ok(self.clone());
        }
        let num = substitute(&self.num, assignments)?;
        let den = substitute(&self.den, assignments)?;
        if den.is_zero() {
            return Err(ScalarError::SpecializationPole {
                denominator: self.den.to_string(),
            });
        }
        num.arith_div(&den)
    }

    /// True when the printed form needs no parentheses as a factor.
    pub(crate) fn is_atomic_factor(&self) -> bool {
        self.den.is_one()
            && self.num.len() <= 1
            && self.num.terms().iter().all(|(_, c)| c.is_atomic())
    }
}

fn div_if(p: &Poly, g: &Poly) -> Poly {
    if g.is_one() {
        p.clone()
    } else {
        p.div_exact(g).expect("gcd divides")
    }
}

fn substitute(p: &Poly, assignments: &Assignment) -> Result<Coefficient, ScalarError> {
    let mut acc = Coefficient::zero();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut term = Coefficient::constant(c.clone());
        for (v, value) in assignments {
            let e = m.exp(v.index());
            if e > 0 {
                rest.0[v.index()] = 0;
                term = term.arith_mul(&value.powi(e as i64)?);
            }
        }
        if !rest.is_one() {
            term = term.arith_mul(&Coefficient::from_poly(Poly::term(
                rest,
                GaussianRational::one(),
            )));
        }
        acc = acc.arith_add(&term);
    }
    Ok(acc)
}

/// `λ^p` with the global branch `λ^p = s^{2p}`.
pub fn lambda_pow(p: HalfInt) -> Coefficient {
    Coefficient::var(Var::S)
        .powi(p.twice())
        .expect("s is nonzero")
}

/// A sign `±1` of the module families and the `t` parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_int(t: i64) -> Option<Sign> {
        match t {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `self^k` as ±1.
    pub fn pow(self, k: i64) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus if k.rem_euclid(2) == 0 => 1,
            Sign::Minus => -1,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// `base^{exponent_twice}` for `base = ±1`.
pub fn sign_pow(base: Sign, exponent_twice: i64) -> GaussianRational {
    GaussianRational::from_int(base.pow(exponent_twice))
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        self.arith_add(rhs)
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self.arith_sub(rhs)
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        self.arith_mul(rhs)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        self.arith_neg()
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        self.arith_add(&rhs)
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: Coefficient) -> Coefficient {
        self.arith_sub(&rhs)
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        self.arith_mul(&rhs)
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        self.arith_neg()
    }
}

impl From<Var> for Coefficient {
    fn from(v: Var) -> Self {
        Coefficient::var(v)
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_int(n)
    }
}

fn fmt_poly_factor(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let single_power = p.len() == 1
        && p.terms()[0].1.is_one()
        && p.terms()[0].0 .0.iter().filter(|&&e| e > 0).count() <= 1;
    if single_power {
        write!(f, "{p}")
    } else {
        write!(f, "({p})")
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() == 1 {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        f.write_str("/")?;
        fmt_poly_factor(&self.den, f)
    }
}

/// Monomial helper used by renderers and tests.
pub fn monomial_coefficient(m: Monomial) -> Coefficient {
    Coefficient::from_poly(Poly::term(m, GaussianRational::one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> Coefficient {
        Coefficient::var(Var::S)
    }
    fn a() -> Coefficient {
        Coefficient::var(Var::A)
    }

    #[test]
    fn additive_inverse() {
        let l = &s() * &s();
        assert!((&l + &(-&l)).is_zero());
    }

    #[test]
    fn s_squared_is_lambda() {
        assert_eq!(&s() * &s(), lambda_pow(HalfInt::int(1)));
    }

    #[test]
    fn polynomial_division_cancels() {
        let one = Coefficient::one();
        let num = &(&a() * &a()) - &one;
        let den = &a() - &one;
        assert_eq!(num.arith_div(&den).unwrap(), &a() + &one);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            s().arith_div(&Coefficient::zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert_eq!(Coefficient::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn lambda_powers() {
        assert_eq!(lambda_pow(HalfInt::HALF), s());
        let p = lambda_pow(HalfInt::from_twice(-3));
        assert_eq!(p, s().powi(-3).unwrap());
        assert!((&p * &lambda_pow(HalfInt::from_twice(3))).is_one());
        for x in HalfInt::window(6) {
            for y in HalfInt::window(6) {
                assert_eq!(&lambda_pow(x) * &lambda_pow(y), lambda_pow(x + y));
            }
        }
    }

    #[test]
    fn sign_powers() {
        assert_eq!(sign_pow(Sign::Minus, 1), GaussianRational::from_int(-1));
        assert_eq!(sign_pow(Sign::Minus, 4), GaussianRational::from_int(1));
        assert_eq!(sign_pow(Sign::Minus, -3), GaussianRational::from_int(-1));
        assert_eq!(sign_pow(Sign::Plus, 7), GaussianRational::from_int(1));
    }

    #[test]
    fn specialization() {
        let mut assign = Assignment::new();
        assign.insert(Var::A, Coefficient::zero());
        let x = &(&Coefficient::from_int(-2) * &s()) * &a();
        assert!(x.specialize(&assign).unwrap().is_zero());

        let mut half = Assignment::new();
        half.insert(Var::A, Coefficient::ratio(1, 2));
        let y = &Coefficient::one() - &(&Coefficient::from_int(2) * &a());
        assert!(y.specialize(&half).unwrap().is_zero());

        let mut one = Assignment::new();
        one.insert(Var::A, Coefficient::one());
        let z = (&a() + &Coefficient::one())
            .arith_div(&(&a() - &Coefficient::one()))
            .unwrap();
        assert!(matches!(
            z.specialize(&one),
            Err(ScalarError::SpecializationPole { .. })
        ));
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let x = Coefficient::one()
            .arith_div(&(&Coefficient::from_int(3) * &a()))
            .unwrap();
        assert!(x.denom().leading_coeff().is_one());
        assert_eq!(x.to_string(), "1/3/a");
    }
}
