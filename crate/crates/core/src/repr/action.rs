use super::{Family, Letter, ModuleSpec, ModuleVector, PolyVector, ReprError, WeightVector};
use crate::algebra::{omega, Algebra, AlgebraElement, BasisElement, BasisKind};
use num_rational::BigRational;

use crate::scalar::{sign_pow, Coefficient, HalfInt};

fn qi(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Action of an algebra element on a module vector, extended bilinearly.
pub fn act(
    spec: &ModuleSpec,
    x: &AlgebraElement,
    v: &ModuleVector,
) -> Result<ModuleVector, ReprError> {
    if let Some(b) = spec.twist_parameter() {
        let y = omega(b, x)?;
        return act(&spec.untwisted(), &y, v);
    }
    check_vector(spec, v)?;
    if spec.family() == Family::OmegaDeformed {
        let mut out = v.zero_like();
        for (m, k) in witt_decomposition(spec, x)? {
            out = out.add(&act_witt_generator(spec, m, v)?.scale(&k));
        }
        return Ok(out);
    }
    let mut out = v.zero_like();
    for (e, c) in x.terms() {
        out = out.add(&act_basis(spec, e, v)?.scale(c));
    }
    Ok(out)
}

/// `x(yv) - (-1)^{|x||y|} y(xv) - [x,y]v`.
///
/// `x` and `y` must be homogeneous; zero elements count as even.
pub fn module_axiom_defect(
    algebra: &Algebra,
    spec: &ModuleSpec,
    x: &AlgebraElement,
    y: &AlgebraElement,
    v: &ModuleVector,
) -> Result<ModuleVector, ReprError> {
    let px = x.parity().unwrap_or(crate::algebra::Parity::Even);
    let py = y.parity().unwrap_or(crate::algebra::Parity::Even);
    let xy = act(spec, x, &act(spec, y, v)?)?;
    let yx = act(spec, y, &act(spec, x, v)?)?;
    let br = act(spec, &algebra.bracket(x, y), v)?;
    let sign = Coefficient::from_int(px.koszul(py));
    Ok(xy.sub(&yx.scale(&sign)).sub(&br))
}

fn check_vector(spec: &ModuleSpec, v: &ModuleVector) -> Result<(), ReprError> {
    let ok = match spec.family() {
        Family::M | Family::N => matches!(v, ModuleVector::Poly(_)),
        Family::Omega | Family::OmegaDeformed => {
            matches!(v, ModuleVector::Poly(p) if p.odd.is_zero())
        }
        Family::A => matches!(v, ModuleVector::Weight(_)),
        Family::Trivial => matches!(v, ModuleVector::Scalar(_)),
    };
    if ok {
        Ok(())
    } else {
        Err(ReprError::FamilyMismatch {
            family: spec.family(),
        })
    }
}

fn unsupported(spec: &ModuleSpec, what: impl ToString) -> ReprError {
    ReprError::UnsupportedGenerator {
        family: spec.family(),
        element: what.to_string(),
    }
}

/// Writes `x` as `Σ k_m 𝕃_m` for the module's μ, or fails.
fn witt_decomposition(
    spec: &ModuleSpec,
    x: &AlgebraElement,
) -> Result<Vec<(i64, Coefficient)>, ReprError> {
    let mu = &spec.params().mu;
    let mut out = Vec::new();
    let mut rest = x.clone();
    for (e, k) in x.terms() {
        if e.kind() != BasisKind::L {
            continue;
        }
        let m = e.index().as_integer().expect("L index is integral");
        out.push((m, k.clone()));
        rest = rest.sub(&crate::algebra::witt_embed(m, mu).scale(k));
    }
    let leftover = rest.terms().next().map(|(e, _)| *e);
    match leftover {
        None => Ok(out),
        Some(e) => Err(unsupported(spec, e)),
    }
}

fn act_witt_generator(
    spec: &ModuleSpec,
    m: i64,
    v: &ModuleVector,
) -> Result<ModuleVector, ReprError> {
    let f = &v.as_poly().expect("checked above").even;
    let p = spec.params();
    let mh = HalfInt::int(m);
    let main = f
        .shift(mh)
        .mul_linear(&p.alpha.scale_rational(&mh.to_rational()))
        .scale(&spec.lambda_pow(mh)?);
    let shifted = mh - HalfInt::HALF;
    let coeff = &(&p.mu * &spec.lambda_pow(shifted)?).scale(&sign_pow(spec.t(), shifted.twice()));
    let deform = f.shift(shifted).scale(coeff);
    Ok(ModuleVector::even(main.sub(&deform)))
}

fn act_basis(
    spec: &ModuleSpec,
    e: &BasisElement,
    v: &ModuleVector,
) -> Result<ModuleVector, ReprError> {
    match (spec.family(), v) {
        (Family::M | Family::N, ModuleVector::Poly(pv)) => {
            Ok(ModuleVector::Poly(act_rank_two(spec, e, pv)?))
        }
        (Family::Omega, ModuleVector::Poly(pv)) => {
            if e.kind() != BasisKind::L {
                return Err(unsupported(spec, e));
            }
            let m = e.index();
            let f = pv
                .even
                .shift(m)
                .mul_linear(&spec.params().alpha.scale_rational(&m.to_rational()))
                .scale(&spec.lambda_pow(m)?);
            Ok(ModuleVector::even(f))
        }
        (Family::A, ModuleVector::Weight(w)) => {
            Ok(ModuleVector::Weight(act_intermediate(spec, e, w)))
        }
        (Family::Trivial, ModuleVector::Scalar(_)) => Ok(ModuleVector::Scalar(Coefficient::zero())),
        _ => Err(ReprError::FamilyMismatch {
            family: spec.family(),
        }),
    }
}

/// The rank-two action shared by families M and N.
fn act_rank_two(
    spec: &ModuleSpec,
    e: &BasisElement,
    v: &PolyVector,
) -> Result<PolyVector, ReprError> {
    let p = spec.params();
    let k = e.index();
    let kq = k.to_rational();
    let lam = spec.lambda_pow(k)?;
    let t = spec.t();
    let half = Coefficient::ratio(1, 2);
    let out = match e.kind() {
        BasisKind::L => {
            let even = v
                .even
                .shift(k)
                .mul_linear(&p.alpha.scale_rational(&kq))
                .scale(&lam);
            let beta = &p.alpha + &half;
            let odd = v
                .odd
                .shift(k)
                .mul_linear(&beta.scale_rational(&kq))
                .scale(&lam);
            PolyVector::new(even, odd)
        }
        BasisKind::I => {
            let tr = sign_pow(t, k.twice());
            let ce = (&lam * &p.alpha).scale(&tr).scale_rational(&qi(-2));
            let co = (&lam * &(&Coefficient::one() - &p.alpha.scale_rational(&qi(2)))).scale(&tr);
            PolyVector::new(v.even.shift(k).scale(&ce), v.odd.shift(k).scale(&co))
        }
        BasisKind::G => {
            let to_odd = lam.scale(&sign_pow(t, k.twice()));
            let to_even = lam.scale(&sign_pow(t.opposite(), k.twice()));
            // (u + 2pα)
            let lin = p.alpha.scale_rational(&(kq * qi(2)));
            let even = v.odd.shift(k).mul_linear(&lin).scale(&to_even);
            let odd = v.even.shift(k).scale(&to_odd);
            PolyVector::new(even, odd)
        }
    };
    Ok(out)
}

/// The action on `A_t(σ)`.
fn act_intermediate(spec: &ModuleSpec, e: &BasisElement, w: &WeightVector) -> WeightVector {
    let sigma = &spec.params().sigma;
    let t = spec.t();
    let h = e.index();
    let hq = h.to_rational();
    let one = Coefficient::one();
    let half = Coefficient::ratio(1, 2);
    let mut out = WeightVector::zero();
    for ((k, letter), c) in w.terms() {
        let kc = Coefficient::half_int(*k);
        let (coeff, target) = match (e.kind(), letter) {
            // (-k + σm)
            (BasisKind::L, Letter::X) => (&sigma.scale_rational(&hq) - &kc, Letter::X),
            // (-k + m(σ+1/2))
            (BasisKind::L, Letter::Y) => (&(sigma + &half).scale_rational(&hq) - &kc, Letter::Y),
            // -2 t^{2r} (σ+1)
            (BasisKind::I, Letter::X) => (
                (sigma + &one)
                    .scale(&sign_pow(t, h.twice()))
                    .scale_rational(&qi(-2)),
                Letter::X,
            ),
            // -t^{2r} (2σ+1)
            (BasisKind::I, Letter::Y) => (
                -&(&sigma.scale_rational(&qi(2)) + &one).scale(&sign_pow(t, h.twice())),
                Letter::Y,
            ),
            (BasisKind::G, Letter::X) => (Coefficient::constant(sign_pow(t, h.twice())), Letter::Y),
            // (-t)^{2p} (-k + (2σ+1)p)
            (BasisKind::G, Letter::Y) => (
                (&(&sigma.scale_rational(&qi(2)) + &one).scale_rational(&hq) - &kc)
                    .scale(&sign_pow(t.opposite(), h.twice())),
                Letter::X,
            ),
        };
        out.add_term(*k + h, target, &(&coeff * c));
    }
    out
}
