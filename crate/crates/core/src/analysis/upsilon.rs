//! The submodule Υ_t of `M_t(λ,0)` and invariance checks.

use super::closure::{generators, Grid};
use super::report::AxiomReport;
use crate::expr::{render_element, render_vector};
use crate::repr::{act, ModuleSpec, ModuleVector, PolyVector, ReprError};

/// True iff the even part has zero constant term.
pub fn upsilon_member(v: &PolyVector) -> bool {
    v.even.coeff(0).is_zero()
}

/// [`upsilon_member`] on module vectors; non-polynomial vectors are never members.
pub fn upsilon_member_vector(v: &ModuleVector) -> bool {
    v.as_poly().is_some_and(upsilon_member)
}

/// Checks that every windowed generator maps every grid monomial satisfying
/// `membership` to a vector satisfying it.
pub fn invariance_check(
    spec: &ModuleSpec,
    membership: &(dyn Fn(&ModuleVector) -> bool + Sync),
    window: i64,
    deg_cap: usize,
) -> Result<AxiomReport, ReprError> {
    let mut report = AxiomReport::new("invariance")
        .with_option("module", spec.to_string())
        .with_option("window", window)
        .with_option("deg_cap", deg_cap as u64);
    let grid = Grid::for_family(spec.family(), deg_cap, deg_cap as i64);
    let family = spec.family();
    for v in grid.monomials().into_iter().filter(|v| membership(v)) {
        for x in generators(spec, window) {
            let img = act(spec, &x, &v)?;
            let ok = membership(&img);
            report.check(
                "x·v stays in the subspace",
                vec![render_element(&x), render_vector(family, &v)],
                (!ok).then(|| render_vector(family, &img)),
            );
        }
    }
    Ok(report)
}

/// Checks that every windowed generator sends the class of 𝟙 to zero in
/// `M/Υ`, i.e. maps 𝟙 into Υ.
pub fn quotient_trivial_check(spec: &ModuleSpec, window: i64) -> Result<AxiomReport, ReprError> {
    let mut report = AxiomReport::new("quotient-trivial")
        .with_option("module", spec.to_string())
        .with_option("window", window);
    let one = ModuleVector::even(crate::repr::UPoly::one());
    for x in generators(spec, window) {
        let img = act(spec, &x, &one)?;
        let ok = upsilon_member_vector(&img);
        report.check(
            "x·1 lies in Upsilon",
            vec![render_element(&x)],
            (!ok).then(|| format!("constant term {}", img.as_poly().unwrap().even.coeff(0))),
        );
    }
    Ok(report)
}
