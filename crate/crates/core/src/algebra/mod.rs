//! The twisted N=2 superconformal algebra as structure-constant data.

mod element;

pub use element::AlgebraElement;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::{Coefficient, HalfInt, ScalarError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// The Koszul sign `(-1)^{|x||y|}`.
    pub fn koszul(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    L,
    I,
    G,
}

impl BasisKind {
    pub fn parity(self) -> Parity {
        match self {
            BasisKind::L | BasisKind::I => Parity::Even,
            BasisKind::G => Parity::Odd,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BasisKind::L => "L",
            BasisKind::I => "I",
            BasisKind::G => "G",
        }
    }

    pub fn admits(self, index: HalfInt) -> bool {
        match self {
            BasisKind::L => index.is_integer(),
            BasisKind::I => index.is_half_odd(),
            BasisKind::G => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{kind}({index}) is not a basis element: {reason}")]
    KindIndexMismatch {
        kind: &'static str,
        index: HalfInt,
        reason: &'static str,
    },
}

/// One of `L_m`, `I_r`, `G_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    kind: BasisKind,
    index: HalfInt,
}

impl BasisElement {
    pub fn new(kind: BasisKind, index: HalfInt) -> Result<Self, AlgebraError> {
        if kind.admits(index) {
            Ok(BasisElement { kind, index })
        } else {
            Err(AlgebraError::KindIndexMismatch {
                kind: kind.symbol(),
                index,
                reason: match kind {
                    BasisKind::L => "the index of L must be an integer",
                    _ => "the index of I must lie in 1/2 + Z",
                },
            })
        }
    }

    pub fn l(m: i64) -> Self {
        BasisElement {
            kind: BasisKind::L,
            index: HalfInt::int(m),
        }
    }

    /// `I_r`; panics unless `r` is half-odd.
    pub fn i(r: HalfInt) -> Self {
        Self::new(BasisKind::I, r).expect("I index must be half-odd")
    }

    pub fn g(p: HalfInt) -> Self {
        BasisElement {
            kind: BasisKind::G,
            index: p,
        }
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn index(&self) -> HalfInt {
        self.index
    }

    pub fn parity(&self) -> Parity {
        self.kind.parity()
    }

    /// All basis elements with `|2·index| <= bound`, ordered L, I, G by index.
    pub fn window(bound: i64) -> Vec<BasisElement> {
        let mut out = Vec::new();
        for kind in [BasisKind::L, BasisKind::I, BasisKind::G] {
            for h in HalfInt::window(bound) {
                if kind.admits(h) {
                    out.push(BasisElement { kind, index: h });
                }
            }
        }
        out
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind.symbol(), self.index)
    }
}

/// The six families of listed structure constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BracketFamily {
    /// `[L_m, L_n]`
    LL,
    /// `[L_m, I_r]`
    LI,
    /// `[L_m, G_p]`
    LG,
    /// `[I_r, G_p]`
    IG,
    /// `[G_p, G_q]` with `p + q` integral
    GGInteger,
    /// `[G_p, G_q]` with `p + q` half-odd
    GGHalf,
}

impl BracketFamily {
    pub const ALL: [BracketFamily; 6] = [
        BracketFamily::LL,
        BracketFamily::LI,
        BracketFamily::LG,
        BracketFamily::IG,
        BracketFamily::GGInteger,
        BracketFamily::GGHalf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BracketFamily::LL => "LL",
            BracketFamily::LI => "LI",
            BracketFamily::LG => "LG",
            BracketFamily::IG => "IG",
            BracketFamily::GGInteger => "GG-int",
            BracketFamily::GGHalf => "GG-half",
        }
    }
}

impl FromStr for BracketFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        BracketFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!("unknown bracket family `{s}` (expected LL, LI, LG, IG, GG-int, GG-half)")
            })
    }
}

impl fmt::Display for BracketFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The bracket of the twisted N=2 algebra.
///
/// `flipped` lists structure-constant families whose sign is negated; the
/// standard algebra has none. Perturbed algebras exist for mutation testing
/// of the verification suites.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Algebra {
    flipped: BTreeSet<BracketFamily>,
}

impl Algebra {
    pub fn standard() -> Self {
        Self::default()
    }

    pub fn with_flipped_sign(family: BracketFamily) -> Self {
        let mut flipped = BTreeSet::new();
        flipped.insert(family);
        Algebra { flipped }
    }

    pub fn is_standard(&self) -> bool {
        self.flipped.is_empty()
    }

    pub fn flipped(&self) -> impl Iterator<Item = BracketFamily> + '_ {
        self.flipped.iter().copied()
    }

    fn signed(&self, family: BracketFamily, c: BigRational) -> BigRational {
        if self.flipped.contains(&family) {
            -c
        } else {
            c
        }
    }

    /// `[G_p, G_q]` from the listed formula (no symmetrization).
    pub fn listed_gg(&self, p: HalfInt, q_: HalfInt) -> Option<(BigRational, BasisElement)> {
        let sum = p + q_;
        let sign = if p.twice().rem_euclid(2) == 0 { 1 } else { -1 };
        let (c, target, family) = if sum.is_integer() {
            (
                q(2 * sign, 1),
                BasisElement::l(sum.as_integer().unwrap()),
                BracketFamily::GGInteger,
            )
        } else {
            // (-1)^{2p+1} (p - q)
            (
                q(-sign * (p - q_).twice(), 2),
                BasisElement::i(sum),
                BracketFamily::GGHalf,
            )
        };
        if c.is_zero() {
            None
        } else {
            Some((self.signed(family, c), target))
        }
    }

    /// Bracket of two basis elements as `coefficient · basis`, or `None` for zero.
    pub fn bracket_basis(
        &self,
        x: &BasisElement,
        y: &BasisElement,
    ) -> Option<(BigRational, BasisElement)> {
        use BasisKind::*;
        let (a, b) = (x.index, y.index);
        let result = match (x.kind, y.kind) {
            (L, L) => {
                let c = q((a - b).twice(), 2);
                let m = (a + b).as_integer().unwrap();
                Some((self.signed(BracketFamily::LL, c), BasisElement::l(m)))
            }
            (L, I) => Some((
                self.signed(BracketFamily::LI, q(-b.twice(), 2)),
                BasisElement::i(a + b),
            )),
            (L, G) => {
                // m/2 - p
                let c = q(a.twice() - 2 * b.twice(), 4);
                Some((self.signed(BracketFamily::LG, c), BasisElement::g(a + b)))
            }
            (I, G) => Some((
                self.signed(BracketFamily::IG, BigRational::one()),
                BasisElement::g(a + b),
            )),
            (G, G) => self.listed_gg(a, b),
            (I, I) => None,
            // unlisted orientations of even-even or even-odd pairs
            (I, L) | (G, L) | (G, I) => self.bracket_basis(y, x).map(|(c, e)| (-c, e)),
        };
        result.filter(|(c, _)| !c.is_zero())
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                if let Some((c, e)) = self.bracket_basis(bx, by) {
                    let coeff = (cx * cy).scale_rational(&c);
                    out.add_term(e, &coeff);
                }
            }
        }
        out
    }

    /// `[x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]]`.
    pub fn super_jacobi_defect(
        &self,
        x: &BasisElement,
        y: &BasisElement,
        z: &BasisElement,
    ) -> AlgebraElement {
        let (ex, ey, ez) = (
            AlgebraElement::basis(*x),
            AlgebraElement::basis(*y),
            AlgebraElement::basis(*z),
        );
        let first = self.bracket(&ex, &self.bracket(&ey, &ez));
        let second = self.bracket(&self.bracket(&ex, &ey), &ez);
        let third = self.bracket(&ey, &self.bracket(&ex, &ez));
        let sign = Coefficient::from_int(x.parity().koszul(y.parity()));
        first.sub(&second).sub(&third.scale(&sign))
    }
}

/// The automorphism `ω_b` extended linearly.
pub fn omega(b: &Coefficient, x: &AlgebraElement) -> Result<AlgebraElement, ScalarError> {
    let mut out = AlgebraElement::zero();
    for (e, c) in x.terms() {
        let k = e.index();
        let power = b.powi(k.twice())?;
        let (coeff, image) = match e.kind() {
            BasisKind::L => (-&power, BasisElement::l(-k.as_integer().unwrap())),
            BasisKind::I => (power, BasisElement::i(-k)),
            BasisKind::G => (&power * &Coefficient::i(), BasisElement::g(-k)),
        };
        out.add_term(image, &(&coeff * c));
    }
    Ok(out)
}

/// `𝕃_m = L_m + c·I_{m-1/2}`.
pub fn witt_embed(m: i64, c: &Coefficient) -> AlgebraElement {
    let mut out = AlgebraElement::basis(BasisElement::l(m));
    out.add_term(BasisElement::i(HalfInt::int(m) - HalfInt::HALF), c);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Var;

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn el(b: BasisElement) -> AlgebraElement {
        AlgebraElement::basis(b)
    }

    #[test]
    fn listed_brackets() {
        let alg = Algebra::standard();
        assert_eq!(
            alg.bracket(&el(BasisElement::l(2)), &el(BasisElement::l(-1))),
            el(BasisElement::l(1)).scale(&Coefficient::from_int(3))
        );
        assert!(alg
            .bracket(&el(BasisElement::i(h(1))), &el(BasisElement::i(h(3))))
            .is_zero());
        assert_eq!(
            alg.bracket(&el(BasisElement::g(h(1))), &el(BasisElement::g(h(1)))),
            el(BasisElement::l(1)).scale(&Coefficient::from_int(-2))
        );
        assert_eq!(
            alg.bracket(&el(BasisElement::g(h(1))), &el(BasisElement::g(h(2)))),
            el(BasisElement::i(h(3))).scale(&Coefficient::ratio(-1, 2))
        );
    }

    #[test]
    fn kind_index_validation() {
        assert!(BasisElement::new(BasisKind::I, HalfInt::int(1)).is_err());
        assert!(BasisElement::new(BasisKind::L, h(1)).is_err());
        assert!(BasisElement::new(BasisKind::G, h(1)).is_ok());
    }

    #[test]
    fn jacobi_examples() {
        let alg = Algebra::standard();
        assert!(alg
            .super_jacobi_defect(
                &BasisElement::l(1),
                &BasisElement::l(-1),
                &BasisElement::l(0)
            )
            .is_zero());
        assert!(alg
            .super_jacobi_defect(
                &BasisElement::g(h(1)),
                &BasisElement::g(h(-1)),
                &BasisElement::g(h(0))
            )
            .is_zero());
        assert!(alg
            .super_jacobi_defect(
                &BasisElement::l(2),
                &BasisElement::i(h(1)),
                &BasisElement::g(h(-2))
            )
            .is_zero());
    }

    #[test]
    fn omega_examples() {
        let b = Coefficient::var(Var::B);
        assert_eq!(
            omega(&b, &el(BasisElement::l(0))).unwrap(),
            el(BasisElement::l(0)).scale(&Coefficient::from_int(-1))
        );
        assert_eq!(
            omega(&b, &el(BasisElement::g(h(1)))).unwrap(),
            el(BasisElement::g(h(-1))).scale(&(&b * &Coefficient::i()))
        );
        assert_eq!(
            omega(&b, &el(BasisElement::i(h(-1)))).unwrap(),
            el(BasisElement::i(h(1))).scale(&b.inv().unwrap())
        );
    }

    #[test]
    fn witt_embedding_closes() {
        let alg = Algebra::standard();
        let c = Coefficient::var(Var::C);
        let lhs = alg.bracket(&witt_embed(1, &c), &witt_embed(-1, &c));
        assert_eq!(lhs, witt_embed(0, &c).scale(&Coefficient::from_int(2)));
        let lhs = alg.bracket(&witt_embed(2, &c), &witt_embed(-1, &c));
        assert!(lhs
            .sub(&witt_embed(1, &c).scale(&Coefficient::from_int(3)))
            .is_zero());
    }

    #[test]
    fn flipped_sign_changes_bracket() {
        let alg = Algebra::with_flipped_sign(BracketFamily::IG);
        let (c, e) = alg
            .bracket_basis(&BasisElement::i(h(1)), &BasisElement::g(h(0)))
            .unwrap();
        assert_eq!(c, -BigRational::one());
        assert_eq!(e, BasisElement::g(h(1)));
        assert_eq!(
            "gg-half".parse::<BracketFamily>(),
            Ok(BracketFamily::GGHalf)
        );
    }
}
