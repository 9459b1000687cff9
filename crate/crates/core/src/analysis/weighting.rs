//! The weighting functor on M_t(λ,α) and its comparison with A_t(σ).

use super::report::AxiomReport;
use crate::algebra::{AlgebraElement, BasisElement};
use crate::expr::render_coefficient;
use crate::repr::{
    act, Family, Letter, ModuleSpec, ModuleVector, PolyVector, ReprError, UPoly, WeightVector,
};
use crate::scalar::{Coefficient, HalfInt};

/// An element `even_coeff·w_n + odd_coeff·v_n` of `M/ker(μ̄_n)M`, where
/// `w_n` and `v_n` are the classes of `𝟙` and `∂𝟙` and `n = weight_index`.
///
/// Reduction modulo `ker(μ̄_n)` is evaluation at `u = n`, because M is
/// free over `ℂ[∂²]` with basis `{𝟙, ∂𝟙}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightClassVector {
    pub weight_index: HalfInt,
    pub even_coeff: Coefficient,
    pub odd_coeff: Coefficient,
}

impl WeightClassVector {
    /// `ŵ_n = λ^n w_{-n}` (letter x) or `v̂_n = λ^n v_{-n}` (letter y).
    pub fn hat(spec: &ModuleSpec, n: HalfInt, letter: Letter) -> Result<Self, ReprError> {
        let lam = spec.lambda_pow(n)?;
        let (even_coeff, odd_coeff) = match letter {
            Letter::X => (lam, Coefficient::zero()),
            Letter::Y => (Coefficient::zero(), lam),
        };
        Ok(WeightClassVector {
            weight_index: -n,
            even_coeff,
            odd_coeff,
        })
    }

    /// Coordinates in the rescaled basis `ŵ_m, v̂_m` with `m = -weight_index`.
    pub fn hat_coordinates(
        &self,
        spec: &ModuleSpec,
    ) -> Result<(HalfInt, Coefficient, Coefficient), ReprError> {
        let m = -self.weight_index;
        let inv = spec.lambda_pow(-m)?;
        Ok((m, &self.even_coeff * &inv, &self.odd_coeff * &inv))
    }
}

/// Acts on the representative and reduces at the shifted weight. A
/// generator of index `h` moves the class at `n` to `n - h`.
pub fn weighting_act(
    spec: &ModuleSpec,
    x: &BasisElement,
    w: &WeightClassVector,
) -> Result<WeightClassVector, ReprError> {
    let rep = ModuleVector::Poly(PolyVector::new(
        UPoly::constant(w.even_coeff.clone()),
        UPoly::constant(w.odd_coeff.clone()),
    ));
    let img = act(spec, &AlgebraElement::basis(*x), &rep)?;
    let n = w.weight_index - x.index();
    let p = img.as_poly().expect("family M image");
    Ok(WeightClassVector {
        weight_index: n,
        even_coeff: p.even.eval_at(n),
        odd_coeff: p.odd.eval_at(n),
    })
}

/// Compares the weighting of `spec` (family M) with `A_t(σ)` under
/// `ŵ_n ↔ x_n`, `v̂_n ↔ y_n` for `|2n| <= window` and generators with
/// `|2·index| <= gen_window`.
pub fn weighting_matches_a(
    spec: &ModuleSpec,
    sigma: &Coefficient,
    window: i64,
    gen_window: i64,
) -> Result<AxiomReport, ReprError> {
    assert_eq!(
        spec.family(),
        Family::M,
        "the weighting comparison applies to family M"
    );
    let target = ModuleSpec::a(spec.t()).with_sigma(sigma.clone());
    let mut report = AxiomReport::new(format!("weighting-t{}", spec.t()))
        .with_option("t", spec.t().value())
        .with_option("sigma", render_coefficient(sigma))
        .with_option("window", window)
        .with_option("gen_window", gen_window);
    for x in BasisElement::window(gen_window) {
        for n in HalfInt::window(window) {
            for letter in [Letter::X, Letter::Y] {
                let class = WeightClassVector::hat(spec, n, letter)?;
                let (m, ex, ey) = weighting_act(spec, &x, &class)?.hat_coordinates(spec)?;
                let a_img = act(
                    &target,
                    &AlgebraElement::basis(x),
                    &ModuleVector::weight(n, letter),
                )?;
                let w = a_img
                    .as_weight()
                    .cloned()
                    .unwrap_or_else(WeightVector::zero);
                let (ax, ay) = (w.coefficient(m, Letter::X), w.coefficient(m, Letter::Y));
                let mut defect = Vec::new();
                if ex != ax {
                    defect.push(format!(
                        "x_{{{m}}}: {} vs {}",
                        render_coefficient(&ex),
                        render_coefficient(&ax)
                    ));
                }
                if ey != ay {
                    defect.push(format!(
                        "y_{{{m}}}: {} vs {}",
                        render_coefficient(&ey),
                        render_coefficient(&ay)
                    ));
                }
                report.check(
                    "weighting coefficient equals A coefficient",
                    vec![x.to_string(), format!("{}_{{{n}}}", letter.symbol())],
                    (!defect.is_empty()).then(|| defect.join("; ")),
                );
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Sign, Var};

    fn a() -> Coefficient {
        Coefficient::var(Var::A)
    }

    #[test]
    fn single_coefficients() {
        let spec = ModuleSpec::m(Sign::Plus);
        let w0 = WeightClassVector::hat(&spec, HalfInt::ZERO, Letter::X).unwrap();
        let (m, ex, ey) = weighting_act(&spec, &BasisElement::l(1), &w0)
            .unwrap()
            .hat_coordinates(&spec)
            .unwrap();
        assert_eq!(m, HalfInt::int(1));
        assert_eq!(ex, &a() - &Coefficient::one());
        assert!(ey.is_zero());

        let n = HalfInt::from_twice(3);
        let wn = WeightClassVector::hat(&spec, n, Letter::X).unwrap();
        let (_, ex, _) = weighting_act(&spec, &BasisElement::l(0), &wn)
            .unwrap()
            .hat_coordinates(&spec)
            .unwrap();
        assert_eq!(ex, Coefficient::half_int(-n));

        let v0 = WeightClassVector::hat(&spec, HalfInt::ZERO, Letter::Y).unwrap();
        let (_, ex, _) = weighting_act(&spec, &BasisElement::g(HalfInt::HALF), &v0)
            .unwrap()
            .hat_coordinates(&spec)
            .unwrap();
        assert_eq!(ex, -&(&a() - &Coefficient::ratio(1, 2)));
    }

    #[test]
    fn matches_shifted_sigma_only() {
        let spec = ModuleSpec::m(Sign::Minus);
        let good = weighting_matches_a(&spec, &(&a() - &Coefficient::one()), 2, 2).unwrap();
        assert!(good.pass, "{:?}", good.failures.first());
        let bad = weighting_matches_a(&spec, &a(), 2, 2).unwrap();
        assert!(!bad.pass);
        assert!(bad
            .failures
            .iter()
            .any(|f| f.inputs == ["L(1)".to_string(), "x_{0}".to_string()]));
    }
}
