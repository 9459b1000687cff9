//! The canonical linear maps between module realizations and the
//! intertwiner check.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::closure::Grid;
use super::echelon::bareiss_rank;
use super::report::AxiomReport;
use super::upsilon::upsilon_member;
use crate::algebra::AlgebraElement;
use crate::expr::{render_element, render_vector};
use crate::repr::{
    act, parity_flip, twist, ModuleSpec, ModuleVector, PolyVector, ReprError, UPoly,
};
use crate::scalar::{Assignment, Coefficient, Sign, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    /// Θ: M_t(λ,α) → N_t(λ,α), `f(∂²) ↦ f(x)`, `∂g(∂²) ↦ g(y)`.
    Theta,
    /// χ: Υ_t → Π(M_{-t}(λ,½)), `∂²f ↦ ∂f`, `∂f ↦ f`.
    Chi,
    /// Ψ: M_t(λ,α) → M_t(τ,α) twisted by ω_b, with τ = b²/λ.
    Psi,
    /// ξ₁: `f + ∂g ↦ ∂²f + ∂g`, parametrizing Υ_t inside M_t(λ,0).
    XiEmbed,
    /// ξ₂: M_t(λ,0) → ℂ, the class modulo Υ_t.
    XiQuot,
    /// The candidate `𝟙 ↦ e₁∂𝟙′`, `∂𝟙 ↦ e₂𝟙′` from Π(M_t(λ,α)) to M_t(μ′,β′).
    ParitySwap,
}

impl MapKind {
    pub const ALL: [MapKind; 6] = [
        MapKind::Theta,
        MapKind::Chi,
        MapKind::Psi,
        MapKind::XiEmbed,
        MapKind::XiQuot,
        MapKind::ParitySwap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::Theta => "theta",
            MapKind::Chi => "chi",
            MapKind::Psi => "psi",
            MapKind::XiEmbed => "xi-embed",
            MapKind::XiQuot => "xi-quot",
            MapKind::ParitySwap => "parity-swap",
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        MapKind::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| {
                format!(
                    "unknown map `{s}` (expected theta, chi, psi, xi-embed, xi-quot, parity-swap)"
                )
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("{map} is not defined on {vector}")]
    DomainMismatch { map: MapKind, vector: String },
    #[error(transparent)]
    Repr(#[from] ReprError),
}

/// A linear map between two modules, evaluable on domain vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub kind: MapKind,
    pub domain: ModuleSpec,
    pub codomain: ModuleSpec,
}

fn alpha_at(spec: ModuleSpec, value: Coefficient) -> ModuleSpec {
    let a: Assignment = [(Var::A, value)].into_iter().collect();
    spec.specialize(&a).expect("no poles at constant alpha")
}

/// The map of the given kind for the sign case `t`, over symbolic parameters.
pub fn canonical_map(kind: MapKind, t: Sign) -> LinearMap {
    let (domain, codomain) = match kind {
        MapKind::Theta => (ModuleSpec::m(t), ModuleSpec::n(t)),
        MapKind::Chi => (
            alpha_at(ModuleSpec::m(t), Coefficient::zero()),
            parity_flip(&alpha_at(
                ModuleSpec::m(t.opposite()),
                Coefficient::ratio(1, 2),
            )),
        ),
        MapKind::Psi => {
            let s = Coefficient::var(Var::S);
            let b = Coefficient::var(Var::B);
            let tau = ModuleSpec::m(t).with_sqrt_lambda(b.arith_div(&s).expect("s is nonzero"));
            (ModuleSpec::m(t), twist(&tau).expect("M admits a twist"))
        }
        MapKind::XiEmbed => {
            let m0 = alpha_at(ModuleSpec::m(t), Coefficient::zero());
            (m0.clone(), m0)
        }
        MapKind::XiQuot => (
            alpha_at(ModuleSpec::m(t), Coefficient::zero()),
            ModuleSpec::trivial(),
        ),
        MapKind::ParitySwap => return parity_swap_candidate(t, t),
    };
    LinearMap {
        kind,
        domain,
        codomain,
    }
}

/// The parity-swapping candidate from Π(M_t(λ,α)) to M_{t'}(b², c) with
/// symbolic images `e1`, `e2` of the generators.
pub fn parity_swap_candidate(t: Sign, t_prime: Sign) -> LinearMap {
    LinearMap {
        kind: MapKind::ParitySwap,
        domain: parity_flip(&ModuleSpec::m(t)),
        codomain: ModuleSpec::m(t_prime)
            .with_sqrt_lambda(Coefficient::var(Var::B))
            .with_alpha(Coefficient::var(Var::C)),
    }
}

impl LinearMap {
    /// Whether the map is claimed to be a module homomorphism.
    pub fn is_module_map(&self) -> bool {
        self.kind != MapKind::XiEmbed
    }

    pub fn apply(&self, v: &ModuleVector) -> Result<ModuleVector, MapError> {
        let mismatch = || MapError::DomainMismatch {
            map: self.kind,
            vector: render_vector(self.domain.family(), v),
        };
        let p = v.as_poly().ok_or_else(mismatch)?;
        let out = match self.kind {
            MapKind::Theta => ModuleVector::Poly(p.clone()),
            MapKind::Chi => {
                if !upsilon_member(p) {
                    return Err(mismatch());
                }
                // even u·f ↦ odd f, odd g ↦ even g
                let f = UPoly::from_coeffs(p.even.coeffs().iter().skip(1).cloned().collect());
                ModuleVector::Poly(PolyVector::new(p.odd.clone(), f))
            }
            MapKind::Psi => ModuleVector::Poly(PolyVector::new(
                p.even.reflect(),
                p.odd.reflect().scale(&Coefficient::i()),
            )),
            MapKind::XiEmbed => ModuleVector::Poly(PolyVector::new(
                p.even.mul_linear(&Coefficient::zero()),
                p.odd.clone(),
            )),
            MapKind::XiQuot => ModuleVector::Scalar(p.even.coeff(0)),
            MapKind::ParitySwap => ModuleVector::Poly(PolyVector::new(
                p.odd.scale(&Coefficient::var(Var::E2)),
                p.even.scale(&Coefficient::var(Var::E1)),
            )),
        };
        Ok(out)
    }
}

/// Checks `map(x·v) = x·map(v)` for every pair.
pub fn check_intertwiner(
    map: &LinearMap,
    elements: &[AlgebraElement],
    vectors: &[ModuleVector],
) -> Result<AxiomReport, MapError> {
    let mut report = AxiomReport::new(format!("intertwine-{}", map.kind))
        .with_option("domain", map.domain.to_string())
        .with_option("codomain", map.codomain.to_string());
    let cod = map.codomain.family();
    for x in elements {
        for v in vectors {
            let lhs = map.apply(&act(&map.domain, x, v)?)?;
            let rhs = act(&map.codomain, x, &map.apply(v)?)?;
            let diff = lhs.sub(&rhs);
            report.check(
                "map(x·v) = x·map(v)",
                vec![render_element(x), render_vector(map.domain.family(), v)],
                (!diff.is_zero()).then(|| render_vector(cod, &diff)),
            );
        }
    }
    Ok(report)
}

/// Rank of the images of `vectors` inside a codomain grid.
pub fn image_rank(
    map: &LinearMap,
    vectors: &[ModuleVector],
    codomain_grid: &Grid,
) -> Result<usize, MapError> {
    let mut rows = Vec::new();
    for v in vectors {
        let img = map.apply(v)?;
        let (inside, outside) = codomain_grid.coordinates(&img);
        if !outside.is_empty() {
            return Err(MapError::DomainMismatch {
                map: map.kind,
                vector: render_vector(map.domain.family(), v),
            });
        }
        rows.push(inside);
    }
    Ok(bareiss_rank(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BasisElement;
    use crate::scalar::HalfInt;

    fn basis(window: i64) -> Vec<AlgebraElement> {
        BasisElement::window(window)
            .into_iter()
            .map(AlgebraElement::basis)
            .collect()
    }

    #[test]
    fn theta_examples() {
        let theta = canonical_map(MapKind::Theta, Sign::Plus);
        let v = ModuleVector::Poly(PolyVector::new(
            UPoly::monomial(2, Coefficient::one()),
            UPoly::u(),
        ));
        assert_eq!(
            render_vector(theta.codomain.family(), &theta.apply(&v).unwrap()),
            "x^2 | y"
        );
    }

    #[test]
    fn chi_and_psi_examples() {
        let chi = canonical_map(MapKind::Chi, Sign::Plus);
        assert_eq!(
            chi.apply(&ModuleVector::odd(UPoly::one())).unwrap(),
            ModuleVector::even(UPoly::one())
        );
        assert!(chi.apply(&ModuleVector::even(UPoly::one())).is_err());
        let psi = canonical_map(MapKind::Psi, Sign::Minus);
        assert_eq!(
            psi.apply(&ModuleVector::even(UPoly::u())).unwrap(),
            ModuleVector::even(UPoly::u().neg())
        );
    }

    #[test]
    fn maps_intertwine_on_small_window() {
        let vecs: Vec<ModuleVector> = Grid::polynomial(2).monomials();
        for t in [Sign::Plus, Sign::Minus] {
            for kind in [MapKind::Theta, MapKind::Psi] {
                let r = check_intertwiner(&canonical_map(kind, t), &basis(2), &vecs).unwrap();
                assert!(r.pass, "{kind} t={t}: {:?}", r.failures.first());
            }
            let ups: Vec<_> = vecs
                .iter()
                .filter(|v| v.as_poly().is_some_and(upsilon_member))
                .cloned()
                .collect();
            let r = check_intertwiner(&canonical_map(MapKind::Chi, t), &basis(2), &ups).unwrap();
            assert!(r.pass, "chi t={t}: {:?}", r.failures.first());
        }
    }

    #[test]
    fn parity_swap_fails_on_g() {
        let map = parity_swap_candidate(Sign::Plus, Sign::Plus);
        let g = vec![AlgebraElement::basis(BasisElement::g(HalfInt::from_twice(
            1,
        )))];
        let r = check_intertwiner(&map, &g, &[ModuleVector::even(UPoly::one())]).unwrap();
        assert!(!r.pass);
    }
}
