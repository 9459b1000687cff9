//! Text rendering in the same grammar the parser accepts.

use crate::algebra::AlgebraElement;
use crate::repr::{Family, Letter, ModuleVector, UPoly};
use crate::scalar::Coefficient;

/// Joins `(coefficient, symbol)` terms as `2*L(3) - I(1/2)`; an empty
/// symbol denotes a bare scalar term.
pub(crate) fn render_terms<'a>(
    terms: impl IntoIterator<Item = (&'a Coefficient, String)>,
) -> String {
    let mut out = String::new();
    for (c, sym) in terms {
        let (negative, body) = term_body(c, &sym);
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn term_body(c: &Coefficient, sym: &str) -> (bool, String) {
    let text = c.to_string();
    let (negative, magnitude) = match text.strip_prefix('-') {
        Some(_) if c.is_atomic_factor() => (true, (-c).to_string()),
        _ => (false, text),
    };
    if sym.is_empty() {
        return (negative, magnitude);
    }
    let atomic = c.is_atomic_factor();
    let body = if magnitude == "1" {
        sym.to_string()
    } else if atomic {
        format!("{magnitude}*{sym}")
    } else {
        format!("({magnitude})*{sym}")
    };
    (negative, body)
}

pub fn render_coefficient(c: &Coefficient) -> String {
    c.to_string()
}

pub fn render_element(x: &AlgebraElement) -> String {
    render_terms(x.terms().map(|(b, c)| (c, b.to_string())))
}

fn power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

fn render_upoly(p: &UPoly, var: &str) -> String {
    render_terms(
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c, power(var, k))),
    )
}

/// Renders a vector of `family` in that family's input syntax.
pub fn render_vector(family: Family, v: &ModuleVector) -> String {
    match v {
        ModuleVector::Poly(p) => match family {
            Family::N => format!(
                "{} | {}",
                render_upoly(&p.even, "x"),
                render_upoly(&p.odd, "y")
            ),
            Family::Omega | Family::OmegaDeformed => render_upoly(&p.even, "x"),
            _ => {
                // d^{2j} for even u^j, d^{2j+1} for odd u^j, ascending in d
                let n = p.even.coeffs().len().max(p.odd.coeffs().len());
                let mut terms = Vec::new();
                for j in 0..n {
                    terms.push((p.even.coeff(j), power("d", 2 * j)));
                    terms.push((p.odd.coeff(j), power("d", 2 * j + 1)));
                }
                let terms: Vec<_> = terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
                render_terms(terms.iter().map(|(c, s)| (c, s.clone())))
            }
        },
        ModuleVector::Weight(w) => render_terms(w.terms().map(|((k, l), c)| {
            let letter = match l {
                Letter::X => "x",
                Letter::Y => "y",
            };
            (c, format!("{letter}_{{{k}}}"))
        })),
        ModuleVector::Scalar(c) => render_coefficient(c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BasisElement;
    use crate::repr::WeightVector;
    use crate::scalar::{HalfInt, Var};

    #[test]
    fn element_rendering() {
        let mut x = AlgebraElement::term(BasisElement::l(3), Coefficient::from_int(2));
        x.add_term(
            BasisElement::i(HalfInt::from_twice(1)),
            &Coefficient::from_int(-1),
        );
        assert_eq!(render_element(&x), "2*L(3) - I(1/2)");
        let c = Coefficient::var(Var::C);
        assert_eq!(
            render_element(&crate::algebra::witt_embed(0, &c)),
            "L(0) + c*I(-1/2)"
        );
        assert_eq!(render_element(&AlgebraElement::zero()), "0");
    }

    #[test]
    fn vector_rendering() {
        let s = Coefficient::var(Var::S);
        let v = ModuleVector::odd(UPoly::constant(s.clone()));
        assert_eq!(render_vector(Family::M, &v), "s*d");
        let v = ModuleVector::even(UPoly::from_coeffs(vec![
            Coefficient::one(),
            &s + &Coefficient::one(),
        ]));
        assert_eq!(render_vector(Family::M, &v), "1 + (s + 1)*d^2");
        let mut w = WeightVector::basis(HalfInt::ZERO, Letter::X);
        w.add_term(
            HalfInt::from_twice(1),
            Letter::Y,
            &Coefficient::from_int(-2),
        );
        assert_eq!(
            render_vector(Family::A, &ModuleVector::Weight(w)),
            "x_{0} - 2*y_{1/2}"
        );
        let v = ModuleVector::even(UPoly::monomial(2, Coefficient::one()));
        assert_eq!(render_vector(Family::N, &v), "x^2 | 0");
    }
}
