//! Expression front end: a recursive-descent parser with its AST, and the
//! renderers that print values back in the same grammar.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? INT)?
//! atom  := INT | IDENT | SYM '(' index ')' | LETTER '_' '{' index '}' | '(' expr ')'
//! index := '-'? INT ('/' INT)?
//! ```

mod render;

pub use render::{render_coefficient, render_element, render_vector};

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, BasisElement, BasisKind};
use crate::repr::{Family, Letter, ModuleVector, PolyVector, UPoly, WeightVector};
use crate::scalar::{Coefficient, HalfInt, ScalarError, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error(transparent)]
    KindIndex(#[from] AlgebraError),
    #[error("{message}")]
    Type { message: String },
    #[error("`{text}` is not a vector of family {family}")]
    FamilyMismatch { family: Family, text: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        pos,
        message: message.into(),
    }
}

fn type_error(message: impl Into<String>) -> ParseError {
    ParseError::Type {
        message: message.into(),
    }
}

/// Parse tree of an expression. Parentheses leave no node of their own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Int(BigInt),
    Param(Var),
    ImaginaryUnit,
    /// A polynomial variable of a vector grammar, such as `d`.
    PolyVar(char),
    /// `L(m)`, `I(r)`, `G(p)`; the index is validated during evaluation.
    Basis(BasisKind, HalfInt),
    /// `x_{k}` or `y_{k}`.
    Weight(Letter, HalfInt),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, ch) = chars[k];
        if ch.is_whitespace() {
            k += 1;
        } else if ch.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Int(digits.parse().expect("digits"))));
        } else if ch.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_alphanumeric() {
                k += 1;
            }
            out.push((
                pos,
                Tok::Ident(chars[start..k].iter().map(|(_, c)| c).collect()),
            ));
        } else if "+-*/^()_{}".contains(ch) {
            out.push((pos, Tok::Sym(ch)));
            k += 1;
        } else {
            return Err(syntax(pos, format!("unexpected character `{ch}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    k: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.k).map_or(self.end, |(p, _)| *p)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.k).map(|(_, t)| t)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.k += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected `{c}`")))
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.k += 1;
                Ok(n)
            }
            _ => Err(syntax(self.pos(), "expected an integer")),
        }
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Ast::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Ast, ParseError> {
        if self.eat('-') {
            Ok(Ast::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Ast, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let negative = self.eat('-');
        let n = self.int()?;
        let n = if negative { -n } else { n };
        let e = n
            .to_i64()
            .ok_or_else(|| syntax(pos, "exponent out of range"))?;
        Ok(Ast::Pow(Box::new(base), e))
    }

    fn index(&mut self) -> Result<HalfInt, ParseError> {
        let pos = self.pos();
        let negative = self.eat('-');
        let num = self.int()?;
        let num = if negative { -num } else { num };
        let twice = if self.eat('/') {
            let den = self.int()?;
            if den == BigInt::from(2) {
                num
            } else if den == BigInt::from(1) {
                num * 2
            } else {
                return Err(syntax(pos, "indices must have denominator 1 or 2"));
            }
        } else {
            num * 2
        };
        twice
            .to_i64()
            .map(HalfInt::from_twice)
            .ok_or_else(|| syntax(pos, "index out of range"))
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.k += 1;
                Ok(Ast::Int(n))
            }
            Some(Tok::Sym('(')) => {
                self.k += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                self.k += 1;
                let kind = match name.as_str() {
                    "L" => Some(BasisKind::L),
                    "I" => Some(BasisKind::I),
                    "G" => Some(BasisKind::G),
                    _ => None,
                };
                if let Some(kind) = kind {
                    self.expect('(')?;
                    let idx = self.index()?;
                    self.expect(')')?;
                    return Ok(Ast::Basis(kind, idx));
                }
                if (name == "x" || name == "y") && self.eat('_') {
                    self.expect('{')?;
                    let idx = self.index()?;
                    self.expect('}')?;
                    let letter = if name == "x" { Letter::X } else { Letter::Y };
                    return Ok(Ast::Weight(letter, idx));
                }
                match name.as_str() {
                    "i" => Ok(Ast::ImaginaryUnit),
                    "d" | "x" | "y" => Ok(Ast::PolyVar(name.chars().next().unwrap())),
                    _ => Var::from_name(&name)
                        .map(Ast::Param)
                        .ok_or_else(|| syntax(pos, format!("unknown identifier `{name}`"))),
                }
            }
            Some(Tok::Sym(c)) => Err(syntax(pos, format!("unexpected `{c}`"))),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

/// Parses text into an AST without interpreting it.
pub fn parse_ast(text: &str) -> Result<Ast, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        k: 0,
        end: text.len(),
    };
    let ast = p.expr()?;
    if p.k < p.toks.len() {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(ast)
}

// binding strength: sums 1, products 2, unary minus 3, powers 4, atoms 5
fn level(a: &Ast) -> u8 {
    match a {
        Ast::Add(..) | Ast::Sub(..) => 1,
        Ast::Mul(..) | Ast::Div(..) => 2,
        Ast::Neg(_) => 3,
        Ast::Pow(..) => 4,
        _ => 5,
    }
}

fn wrap(a: &Ast, min: u8) -> String {
    if level(a) >= min {
        render_ast(a)
    } else {
        format!("({})", render_ast(a))
    }
}

/// Renders an AST so that parsing the text yields the same tree.
pub fn render_ast(a: &Ast) -> String {
    match a {
        Ast::Int(n) => n.to_string(),
        Ast::Param(v) => v.name().to_string(),
        Ast::ImaginaryUnit => "i".to_string(),
        Ast::PolyVar(c) => c.to_string(),
        Ast::Basis(k, h) => format!("{}({h})", k.symbol()),
        Ast::Weight(l, h) => format!("{}_{{{h}}}", l.symbol()),
        Ast::Neg(x) => format!("-{}", wrap(x, 3)),
        Ast::Add(x, y) => format!("{} + {}", wrap(x, 1), wrap(y, 2)),
        Ast::Sub(x, y) => format!("{} - {}", wrap(x, 1), wrap(y, 2)),
        Ast::Mul(x, y) => format!("{}*{}", wrap(x, 2), wrap(y, 3)),
        Ast::Div(x, y) => format!("{}/{}", wrap(x, 2), wrap(y, 3)),
        Ast::Pow(x, e) => format!("{}^{e}", wrap(x, 5)),
    }
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_ast(self))
    }
}

/// What kind of value an expression is evaluated as.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Context {
    Scalar,
    Element,
    /// A polynomial in the named variable.
    Poly(char),
    Weight,
}

#[derive(Clone, Debug)]
enum Value {
    Scalar(Coefficient),
    Element(AlgebraElement),
    Poly(UPoly),
    Weight(WeightVector),
}

impl Value {
    fn describe(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Element(_) => "algebra element",
            Value::Poly(_) => "polynomial",
            Value::Weight(_) => "weight vector",
        }
    }

    /// Promotes a scalar to the vector type of the context.
    fn promote(self, ctx: Context) -> Value {
        match (self, ctx) {
            (Value::Scalar(c), Context::Poly(_)) => Value::Poly(UPoly::constant(c)),
            (v, _) => v,
        }
    }
}

fn eval(a: &Ast, ctx: Context) -> Result<Value, ParseError> {
    Ok(match a {
        Ast::Int(n) => Value::Scalar(Coefficient::rational(n.clone().into())),
        Ast::Param(v) => Value::Scalar(Coefficient::var(*v)),
        Ast::ImaginaryUnit => Value::Scalar(Coefficient::i()),
        Ast::PolyVar(c) => match ctx {
            Context::Poly(want) if want == *c => Value::Poly(UPoly::u()),
            _ => return Err(type_error(format!("variable `{c}` is not allowed here"))),
        },
        Ast::Basis(kind, h) => match ctx {
            Context::Element => {
                Value::Element(AlgebraElement::basis(BasisElement::new(*kind, *h)?))
            }
            _ => {
                return Err(type_error(format!(
                    "basis symbol {}({h}) is not allowed here",
                    kind.symbol()
                )))
            }
        },
        Ast::Weight(l, h) => match ctx {
            Context::Weight => Value::Weight(WeightVector::basis(*h, *l)),
            _ => {
                return Err(type_error(format!(
                    "weight vector {}_{{{h}}} is not allowed here",
                    l.symbol()
                )))
            }
        },
        Ast::Neg(x) => scale(eval(x, ctx)?, &Coefficient::from_int(-1)),
        Ast::Add(x, y) => add(eval(x, ctx)?, eval(y, ctx)?, ctx, false)?,
        Ast::Sub(x, y) => add(eval(x, ctx)?, eval(y, ctx)?, ctx, true)?,
        Ast::Mul(x, y) => mul(eval(x, ctx)?, eval(y, ctx)?)?,
        Ast::Div(x, y) => match eval(y, ctx)? {
            Value::Scalar(d) => scale(eval(x, ctx)?, &Coefficient::one().arith_div(&d)?),
            other => {
                return Err(type_error(format!(
                    "cannot divide by a {}",
                    other.describe()
                )))
            }
        },
        Ast::Pow(x, e) => match eval(x, ctx)? {
            Value::Scalar(c) => Value::Scalar(c.powi(*e)?),
            Value::Poly(p) if *e >= 0 => {
                let mut acc = UPoly::one();
                for _ in 0..*e {
                    acc = acc.mul(&p);
                }
                Value::Poly(acc)
            }
            other => {
                return Err(type_error(format!(
                    "cannot raise a {} to the power {e}",
                    other.describe()
                )))
            }
        },
    })
}

fn scale(v: Value, k: &Coefficient) -> Value {
    match v {
        Value::Scalar(c) => Value::Scalar(&c * k),
        Value::Element(x) => Value::Element(x.scale(k)),
        Value::Poly(p) => Value::Poly(p.scale(k)),
        Value::Weight(w) => Value::Weight(w.scale(k)),
    }
}

fn add(x: Value, y: Value, ctx: Context, subtract: bool) -> Result<Value, ParseError> {
    let y = if subtract {
        scale(y, &Coefficient::from_int(-1))
    } else {
        y
    };
    Ok(match (x.promote(ctx), y.promote(ctx)) {
        (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a + &b),
        (Value::Element(a), Value::Element(b)) => Value::Element(a.add(&b)),
        (Value::Poly(a), Value::Poly(b)) => Value::Poly(a.add(&b)),
        (Value::Weight(a), Value::Weight(b)) => Value::Weight(a.add(&b)),
        (a, b) => {
            return Err(type_error(format!(
                "cannot add a {} and a {}",
                a.describe(),
                b.describe()
            )))
        }
    })
}

fn mul(x: Value, y: Value) -> Result<Value, ParseError> {
    Ok(match (x, y) {
        (Value::Scalar(a), b) | (b, Value::Scalar(a)) => scale(b, &a),
        (Value::Poly(a), Value::Poly(b)) => Value::Poly(a.mul(&b)),
        (a, b) => {
            return Err(type_error(format!(
                "cannot multiply a {} by a {}",
                a.describe(),
                b.describe()
            )))
        }
    })
}

fn finish_scalar(v: Value) -> Result<Coefficient, ParseError> {
    match v {
        Value::Scalar(c) => Ok(c),
        other => Err(type_error(format!(
            "expected a scalar, found a {}",
            other.describe()
        ))),
    }
}

pub fn parse_scalar(text: &str) -> Result<Coefficient, ParseError> {
    finish_scalar(eval(&parse_ast(text)?, Context::Scalar)?)
}

/// Parses a linear combination of `L(m)`, `I(r)`, `G(p)`.
pub fn parse_element(text: &str) -> Result<AlgebraElement, ParseError> {
    match eval(&parse_ast(text)?, Context::Element)? {
        Value::Element(x) => Ok(x),
        Value::Scalar(c) if c.is_zero() => Ok(AlgebraElement::zero()),
        other => Err(type_error(format!(
            "expected an algebra element, found a {}",
            other.describe()
        ))),
    }
}

fn parse_poly(text: &str, var: char, family: Family) -> Result<UPoly, ParseError> {
    let mismatch = |e: ParseError| match e {
        ParseError::Type { .. } => ParseError::FamilyMismatch {
            family,
            text: text.trim().to_string(),
        },
        e => e,
    };
    match eval(&parse_ast(text)?, Context::Poly(var)).map_err(mismatch)? {
        Value::Poly(p) => Ok(p),
        Value::Scalar(c) => Ok(UPoly::constant(c)),
        _ => Err(ParseError::FamilyMismatch {
            family,
            text: text.trim().to_string(),
        }),
    }
}

/// Parses a vector of `family` in that family's syntax.
///
/// Family M is a polynomial in `d`, where `d^{2j+e}` is the parity-`e`
/// monomial. N uses `f(x) | g(y)`, the Witt families a polynomial in `x`,
/// A sums of `x_{k}`/`y_{k}` terms. The trivial module takes a scalar.
pub fn parse_vector(text: &str, family: Family) -> Result<ModuleVector, ParseError> {
    match family {
        Family::M => {
            let p = parse_poly(text, 'd', family)?;
            let (mut even, mut odd) = (Vec::new(), Vec::new());
            for (k, c) in p.coeffs().iter().enumerate() {
                let (target, j) = if k % 2 == 0 {
                    (&mut even, k / 2)
                } else {
                    (&mut odd, k / 2)
                };
                if target.len() <= j {
                    target.resize(j + 1, Coefficient::zero());
                }
                target[j] = c.clone();
            }
            Ok(ModuleVector::Poly(PolyVector::new(
                UPoly::from_coeffs(even),
                UPoly::from_coeffs(odd),
            )))
        }
        Family::N => {
            let (left, right) = text
                .split_once('|')
                .ok_or_else(|| ParseError::FamilyMismatch {
                    family,
                    text: text.trim().to_string(),
                })?;
            Ok(ModuleVector::Poly(PolyVector::new(
                parse_poly(left, 'x', family)?,
                parse_poly(right, 'y', family)?,
            )))
        }
        Family::Omega | Family::OmegaDeformed => {
            Ok(ModuleVector::even(parse_poly(text, 'x', family)?))
        }
        Family::A => match eval(&parse_ast(text)?, Context::Weight) {
            Ok(Value::Weight(w)) => Ok(ModuleVector::Weight(w)),
            Ok(Value::Scalar(c)) if c.is_zero() => Ok(ModuleVector::Weight(WeightVector::zero())),
            Ok(_) | Err(ParseError::Type { .. }) => Err(ParseError::FamilyMismatch {
                family,
                text: text.trim().to_string(),
            }),
            Err(e) => Err(e),
        },
        Family::Trivial => Ok(ModuleVector::Scalar(parse_scalar(text)?)),
    }
}

/// Parses a specialization `var=value` pair as used on the command line.
pub fn parse_assignment(text: &str) -> Result<(Var, Coefficient), ParseError> {
    let (name, value) = text
        .split_once('=')
        .ok_or_else(|| syntax(0, format!("expected `name=value`, found `{text}`")))?;
    let var = Var::from_name(name.trim())
        .ok_or_else(|| syntax(0, format!("unknown parameter `{}`", name.trim())))?;
    Ok((var, parse_scalar(value)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Sign;

    #[test]
    fn element_examples() {
        let x = parse_element("2*L(3) - I(1/2)").unwrap();
        assert_eq!(x.coefficient(&BasisElement::l(3)), Coefficient::from_int(2));
        assert_eq!(
            x.coefficient(&BasisElement::i(HalfInt::from_twice(1))),
            Coefficient::from_int(-1)
        );
        assert_eq!(x.len(), 2);
        let c = Coefficient::var(Var::C);
        assert_eq!(
            parse_element("L(0) + c*I(-1/2)").unwrap(),
            crate::algebra::witt_embed(0, &c)
        );
        assert!(matches!(
            parse_element("I(1)"),
            Err(ParseError::KindIndex(_))
        ));
        assert!(matches!(
            parse_element("G(1/3)"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn vector_examples() {
        let v = parse_vector("d^2 + 3*d^5", Family::M).unwrap();
        let expect = PolyVector::new(UPoly::u(), UPoly::monomial(2, Coefficient::from_int(3)));
        assert_eq!(v, ModuleVector::Poly(expect));

        let v = parse_vector("x_{0} - 2*y_{1/2}", Family::A).unwrap();
        let mut w = WeightVector::basis(HalfInt::ZERO, Letter::X);
        w.add_term(
            HalfInt::from_twice(1),
            Letter::Y,
            &Coefficient::from_int(-2),
        );
        assert_eq!(v, ModuleVector::Weight(w));

        let v = parse_vector("x^2 | 0", Family::N).unwrap();
        assert_eq!(
            v,
            ModuleVector::even(UPoly::monomial(2, Coefficient::one()))
        );

        assert!(matches!(
            parse_vector("x_{0}", Family::M),
            Err(ParseError::FamilyMismatch { .. })
        ));
        assert!(matches!(
            parse_vector("d", Family::A),
            Err(ParseError::FamilyMismatch { .. })
        ));
    }

    #[test]
    fn scalar_grammar() {
        let c = parse_scalar("(a^2 - 1)/(a - 1)").unwrap();
        assert_eq!(c, parse_scalar("a + 1").unwrap());
        assert_eq!(parse_scalar("i^2").unwrap(), Coefficient::from_int(-1));
        assert_eq!(
            parse_scalar("s^-2").unwrap(),
            crate::scalar::lambda_pow(HalfInt::int(-1))
        );
        assert!(matches!(
            parse_scalar("1/(a - a)"),
            Err(ParseError::Scalar(_))
        ));
        assert!(matches!(
            parse_scalar("2 +"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(parse_scalar("q"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn rendered_values_reparse() {
        let x = parse_element("(a+1)/(a-1)*G(-3/2) - sigma*L(2) + i*I(5/2)").unwrap();
        assert_eq!(parse_element(&render_element(&x)).unwrap(), x);
        let v = parse_vector("-s/a + (1 - i)*d^3 - d^4", Family::M).unwrap();
        assert_eq!(
            parse_vector(&render_vector(Family::M, &v), Family::M).unwrap(),
            v
        );
        let _ = Sign::Plus;
    }

    #[test]
    fn ast_round_trip_examples() {
        for text in [
            "-(a - b)^2",
            "a - (b - c)",
            "a/(b*c)",
            "-a^-2",
            "(-a)^3 - -b",
            "L(1/2) + x_{-3/2}",
        ] {
            let ast = parse_ast(text).unwrap();
            assert_eq!(parse_ast(&render_ast(&ast)).unwrap(), ast, "{text}");
        }
    }

    #[test]
    fn assignments() {
        let (v, c) = parse_assignment("a=1/2").unwrap();
        assert_eq!(v, Var::A);
        assert_eq!(c, Coefficient::ratio(1, 2));
        assert!(parse_assignment("q=1").is_err());
    }
}
