use std::fmt;
use std::str::FromStr;

use super::ReprError;
use crate::scalar::{Assignment, Coefficient, HalfInt, ScalarError, Sign, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `M_t(λ,α)` on `ℂ[∂²] ⊕ ∂ℂ[∂²]`.
    M,
    /// `N_t(λ,α)` on `ℂ[x]𝟙₀ ⊕ ℂ[y]𝟙₁`.
    N,
    /// The Witt module `Ω(λ,α)`.
    Omega,
    /// The deformed Witt module `Ω_b(λ,μ,α)` over the generators `𝕃_m`.
    OmegaDeformed,
    /// The intermediate series module `A_t(σ)`.
    A,
    /// The one-dimensional trivial module.
    Trivial,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::M => "M",
            Family::N => "N",
            Family::Omega => "Omega",
            Family::OmegaDeformed => "OmegaDeformed",
            Family::A => "A",
            Family::Trivial => "Trivial",
        }
    }

    /// Families on which every basis element of the algebra acts.
    pub fn has_full_action(self) -> bool {
        !matches!(self, Family::Omega | Family::OmegaDeformed)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "m" => Ok(Family::M),
            "n" => Ok(Family::N),
            "omega" => Ok(Family::Omega),
            "omegadeformed" | "omega-deformed" | "omega_b" => Ok(Family::OmegaDeformed),
            "a" => Ok(Family::A),
            "trivial" => Ok(Family::Trivial),
            _ => Err(format!(
                "unknown family `{s}` (expected M, N, Omega, OmegaDeformed, A, Trivial)"
            )),
        }
    }
}

/// Parameter values of a module, symbolic by default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleParams {
    /// A square root of λ.
    pub sqrt_lambda: Coefficient,
    pub alpha: Coefficient,
    /// The coefficient of the Witt embedding `L_m + μ I_{m-1/2}`.
    pub mu: Coefficient,
    pub sigma: Coefficient,
}

impl Default for ModuleParams {
    fn default() -> Self {
        ModuleParams {
            sqrt_lambda: Coefficient::var(Var::S),
            alpha: Coefficient::var(Var::A),
            mu: Coefficient::var(Var::C),
            sigma: Coefficient::var(Var::Sigma),
        }
    }
}

impl ModuleParams {
    pub fn specialize(&self, assignments: &Assignment) -> Result<Self, ScalarError> {
        Ok(ModuleParams {
            sqrt_lambda: self.sqrt_lambda.specialize(assignments)?,
            alpha: self.alpha.specialize(assignments)?,
            mu: self.mu.specialize(assignments)?,
            sigma: self.sigma.specialize(assignments)?,
        })
    }
}

/// A module of one of the families, with its sign case, parity flip,
/// optional twist by `ω_b`, and parameter values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    family: Family,
    t: Sign,
    parity_flipped: bool,
    twist: Option<Coefficient>,
    params: ModuleParams,
}

impl ModuleSpec {
    pub fn new(family: Family, t: Sign) -> Self {
        ModuleSpec {
            family,
            t,
            parity_flipped: false,
            twist: None,
            params: ModuleParams::default(),
        }
    }

    pub fn m(t: Sign) -> Self {
        Self::new(Family::M, t)
    }

    pub fn n(t: Sign) -> Self {
        Self::new(Family::N, t)
    }

    pub fn omega() -> Self {
        Self::new(Family::Omega, Sign::Plus)
    }

    pub fn omega_deformed(t: Sign) -> Self {
        Self::new(Family::OmegaDeformed, t)
    }

    pub fn a(t: Sign) -> Self {
        Self::new(Family::A, t)
    }

    pub fn trivial() -> Self {
        Self::new(Family::Trivial, Sign::Plus)
    }

    pub fn with_sqrt_lambda(mut self, s: Coefficient) -> Self {
        self.params.sqrt_lambda = s;
        self
    }

    pub fn with_alpha(mut self, a: Coefficient) -> Self {
        self.params.alpha = a;
        self
    }

    pub fn with_mu(mut self, c: Coefficient) -> Self {
        self.params.mu = c;
        self
    }

    pub fn with_sigma(mut self, sigma: Coefficient) -> Self {
        self.params.sigma = sigma;
        self
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn t(&self) -> Sign {
        self.t
    }

    pub fn is_parity_flipped(&self) -> bool {
        self.parity_flipped
    }

    pub fn twist_parameter(&self) -> Option<&Coefficient> {
        self.twist.as_ref()
    }

    pub fn params(&self) -> &ModuleParams {
        &self.params
    }

    /// The same module without its twist.
    pub fn untwisted(&self) -> ModuleSpec {
        ModuleSpec {
            twist: None,
            ..self.clone()
        }
    }

    /// `λ^p` for this module's λ, as `sqrt_lambda^{2p}`.
    pub fn lambda_pow(&self, p: HalfInt) -> Result<Coefficient, ScalarError> {
        self.params.sqrt_lambda.powi(p.twice())
    }

    /// Substitutes into every parameter (and the twist parameter).
    pub fn specialize(&self, assignments: &Assignment) -> Result<ModuleSpec, ScalarError> {
        Ok(ModuleSpec {
            params: self.params.specialize(assignments)?,
            twist: self
                .twist
                .as_ref()
                .map(|b| b.specialize(assignments))
                .transpose()?,
            ..self.clone()
        })
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        let body = match self.family {
            Family::M | Family::N => format!(
                "{}_{}(sqrt_lambda={}, alpha={})",
                self.family, self.t, p.sqrt_lambda, p.alpha
            ),
            Family::Omega => format!("Omega(sqrt_lambda={}, alpha={})", p.sqrt_lambda, p.alpha),
            Family::OmegaDeformed => format!(
                "OmegaDeformed_{}(sqrt_lambda={}, mu={}, alpha={})",
                self.t, p.sqrt_lambda, p.mu, p.alpha
            ),
            Family::A => format!("A_{}(sigma={})", self.t, p.sigma),
            Family::Trivial => "Trivial".to_string(),
        };
        let body = if self.parity_flipped {
            format!("Pi({body})")
        } else {
            body
        };
        match &self.twist {
            Some(b) => write!(f, "{body}^omega[{b}]"),
            None => f.write_str(&body),
        }
    }
}

/// Π: toggles the parity labels of the module.
pub fn parity_flip(spec: &ModuleSpec) -> ModuleSpec {
    ModuleSpec {
        parity_flipped: !spec.parity_flipped,
        ..spec.clone()
    }
}

/// The module twisted by `ω_b` with `b` the twist indeterminate.
pub fn twist(spec: &ModuleSpec) -> Result<ModuleSpec, ReprError> {
    twist_by(spec, &Coefficient::var(Var::B))
}

/// The module with action precomposed with `ω_b`.
pub fn twist_by(spec: &ModuleSpec, b: &Coefficient) -> Result<ModuleSpec, ReprError> {
    if !spec.family.has_full_action() {
        return Err(ReprError::UnsupportedGenerator {
            family: spec.family,
            element: format!("omega_{b}"),
        });
    }
    if spec.twist.is_some() {
        return Err(ReprError::AlreadyTwisted);
    }
    if b.is_zero() {
        return Err(ReprError::Scalar(ScalarError::DivisionByZero));
    }
    Ok(ModuleSpec {
        twist: Some(b.clone()),
        ..spec.clone()
    })
}
