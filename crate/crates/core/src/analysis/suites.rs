//! Verification suites assembled into reports.

use rayon::prelude::*;

use super::closure::{
    generators, simplicity_probe, Coord, Grid, ProbeConfig, TruncatedSubspace, Verdict,
};
use super::maps::{
    canonical_map, check_intertwiner, image_rank, parity_swap_candidate, LinearMap, MapKind,
};
use super::report::AxiomReport;
use super::upsilon::{invariance_check, quotient_trivial_check, upsilon_member_vector};
use super::weighting::weighting_matches_a;
use crate::algebra::{omega, witt_embed, Algebra, AlgebraElement, BasisElement};
use crate::expr::{render_element, render_vector};
use crate::repr::{
    act, module_axiom_defect, parity_flip, twist, vector_parity, Family, Letter, ModuleSpec,
};
use crate::scalar::{Assignment, Coefficient, HalfInt, Sign, Var};

/// Windows and caps shared by the suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// `|2·index|` bound for the superalgebra axioms and ω_b.
    pub algebra_window: i64,
    /// `|2·index|` bound for generators acting on modules.
    pub module_window: i64,
    /// Largest u-degree of polynomial test vectors.
    pub deg_cap: usize,
    /// `|2k|` bound for weight test vectors.
    pub weight_window: i64,
    /// `|2n|` and generator bound for the weighting comparison.
    pub weighting_window: i64,
    /// `|m|, |n|` bound for the Witt embedding checks.
    pub witt_range: i64,
    /// Largest degree of test vectors in the deformed Witt module check.
    pub witt_deg_cap: usize,
    pub max_rounds: usize,
    /// Parameter specializations applied to every module.
    pub assignments: Assignment,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            algebra_window: 3,
            module_window: 2,
            deg_cap: 6,
            weight_window: 4,
            weighting_window: 4,
            witt_range: 3,
            witt_deg_cap: 4,
            max_rounds: 24,
            assignments: Assignment::new(),
        }
    }
}

impl SuiteConfig {
    pub fn probe(&self) -> ProbeConfig {
        ProbeConfig {
            window: self.module_window,
            deg_cap: self.deg_cap,
            weight_window: self.weight_window,
            max_rounds: self.max_rounds,
        }
    }
}

fn basis_elements(window: i64) -> Vec<AlgebraElement> {
    BasisElement::window(window)
        .into_iter()
        .map(AlgebraElement::basis)
        .collect()
}

/// Pairwise bracket axioms and the super Jacobi identity on the window.
pub fn algebra_axioms(alg: &Algebra, window: i64) -> AxiomReport {
    let mut report = AxiomReport::new("algebra-axioms").with_option("window", window);
    let basis = BasisElement::window(window);
    for x in &basis {
        for y in &basis {
            let (ex, ey) = (AlgebraElement::basis(*x), AlgebraElement::basis(*y));
            let xy = alg.bracket(&ex, &ey);
            let yx = alg.bracket(&ey, &ex);
            let sign = Coefficient::from_int(x.parity().koszul(y.parity()));
            let sum = xy.add(&yx.scale(&sign));
            report.check(
                "[x,y] + (-1)^{|x||y|}[y,x] = 0",
                vec![x.to_string(), y.to_string()],
                (!sum.is_zero()).then(|| render_element(&sum)),
            );
            let graded = xy.is_zero() || xy.parity() == Some(x.parity() + y.parity());
            report.check(
                "[x,y] has parity |x|+|y|",
                vec![x.to_string(), y.to_string()],
                (!graded).then(|| render_element(&xy)),
            );
            if x.parity().is_odd() && y.parity().is_odd() {
                let (p, q) = (x.index(), y.index());
                let ok = alg.listed_gg(p, q) == alg.listed_gg(q, p);
                report.check(
                    "listed [G_p,G_q] is symmetric in p and q",
                    vec![x.to_string(), y.to_string()],
                    (!ok)
                        .then(|| format!("{:?} vs {:?}", alg.listed_gg(p, q), alg.listed_gg(q, p))),
                );
            }
        }
    }
    let rows: Vec<Vec<(BasisElement, BasisElement, AlgebraElement)>> = basis
        .par_iter()
        .map(|x| {
            let mut out = Vec::new();
            for y in &basis {
                for z in &basis {
                    out.push((*y, *z, alg.super_jacobi_defect(x, y, z)));
                }
            }
            out
        })
        .collect();
    for (x, row) in basis.iter().zip(rows) {
        for (y, z, d) in row {
            report.check(
                "super Jacobi",
                vec![x.to_string(), y.to_string(), z.to_string()],
                (!d.is_zero()).then(|| render_element(&d)),
            );
        }
    }
    report
}

/// `ω_b([x,y]) = [ω_b x, ω_b y]` and parity preservation on the window.
pub fn omega_homomorphism(alg: &Algebra, window: i64) -> AxiomReport {
    let mut report = AxiomReport::new("omega-homomorphism").with_option("window", window);
    let b = Coefficient::var(Var::B);
    let basis = basis_elements(window);
    for x in &basis {
        let wx = omega(&b, x).expect("b is nonzero");
        report.check(
            "omega_b preserves parity",
            vec![render_element(x)],
            (wx.parity() != x.parity()).then(|| render_element(&wx)),
        );
        for y in &basis {
            let wy = omega(&b, y).expect("b is nonzero");
            let lhs = omega(&b, &alg.bracket(x, y)).expect("b is nonzero");
            let rhs = alg.bracket(&wx, &wy);
            let d = lhs.sub(&rhs);
            report.check(
                "omega_b([x,y]) = [omega_b(x), omega_b(y)]",
                vec![render_element(x), render_element(y)],
                (!d.is_zero()).then(|| render_element(&d)),
            );
        }
    }
    report
}

/// The embedded Witt algebra and the deformed Witt module axiom.
pub fn witt_suite(
    alg: &Algebra,
    range: i64,
    deg_cap: usize,
    assignments: &Assignment,
) -> AxiomReport {
    let mut report = AxiomReport::new("witt")
        .with_option("range", range)
        .with_option("deg_cap", deg_cap as u64);
    let c = Coefficient::var(Var::C);
    for m in -range..=range {
        for n in -range..=range {
            let lhs = alg.bracket(&witt_embed(m, &c), &witt_embed(n, &c));
            let d = lhs.sub(&witt_embed(m + n, &c).scale(&Coefficient::from_int(m - n)));
            report.check(
                "[LL_m, LL_n] = (m-n) LL_{m+n}",
                vec![m.to_string(), n.to_string()],
                (!d.is_zero()).then(|| render_element(&d)),
            );
        }
    }
    for t in [Sign::Plus, Sign::Minus] {
        let spec = specialize(&ModuleSpec::omega_deformed(t), assignments);
        let vectors = Grid::even_polynomial(deg_cap).monomials();
        for m in -range..=range {
            for n in -range..=range {
                let (x, y) = (
                    witt_embed(m, &spec.params().mu),
                    witt_embed(n, &spec.params().mu),
                );
                for v in &vectors {
                    let outcome = (|| {
                        let xy = act(&spec, &x, &act(&spec, &y, v)?)?;
                        let yx = act(&spec, &y, &act(&spec, &x, v)?)?;
                        let rhs = act(&spec, &witt_embed(m + n, &spec.params().mu), v)?;
                        Ok::<_, crate::repr::ReprError>(
                            xy.sub(&yx).sub(&rhs.scale(&Coefficient::from_int(m - n))),
                        )
                    })();
                    let defect = match outcome {
                        Ok(d) if d.is_zero() => None,
                        Ok(d) => Some(render_vector(Family::OmegaDeformed, &d)),
                        Err(e) => Some(e.to_string()),
                    };
                    report.check(
                        "LL_m(LL_n f) - LL_n(LL_m f) = (m-n) LL_{m+n} f",
                        vec![
                            format!("t={t}"),
                            m.to_string(),
                            n.to_string(),
                            render_vector(Family::OmegaDeformed, v),
                        ],
                        defect,
                    );
                }
            }
        }
    }
    report
}

fn specialize(spec: &ModuleSpec, assignments: &Assignment) -> ModuleSpec {
    // an assignment only touches free parameters, so a pole here means a
    // specialization of s to zero; keep the symbolic module in that case
    spec.specialize(assignments)
        .unwrap_or_else(|_| spec.clone())
}

/// The test vectors of a module: grid monomials.
pub fn test_vectors(
    spec: &ModuleSpec,
    deg_cap: usize,
    weight_window: i64,
) -> Vec<crate::repr::ModuleVector> {
    Grid::for_family(spec.family(), deg_cap, weight_window).monomials()
}

/// One check as (identity, inputs, defect).
type Check = (String, Vec<String>, Option<String>);

/// Module axiom defects and grading compatibility for `spec`.
pub fn module_axioms(
    alg: &Algebra,
    spec: &ModuleSpec,
    window: i64,
    deg_cap: usize,
    weight_window: i64,
) -> AxiomReport {
    let mut report = AxiomReport::new(format!("module-axioms {spec}"))
        .with_option("module", spec.to_string())
        .with_option("window", window)
        .with_option("deg_cap", deg_cap as u64)
        .with_option("weight_window", weight_window);
    let gens = generators(spec, window);
    let vectors = test_vectors(spec, deg_cap, weight_window);
    let family = spec.family();
    let rows: Vec<Vec<Check>> = gens
        .par_iter()
        .map(|x| {
            let mut out = Vec::new();
            for v in &vectors {
                if family.has_full_action() && family != Family::Trivial {
                    let img = act(spec, x, v);
                    let defect = match &img {
                        Ok(img) if img.is_zero() => None,
                        Ok(img) => {
                            let want = match (x.parity(), vector_parity(spec, v)) {
                                (Some(px), Some(pv)) => Some(px + pv),
                                _ => None,
                            };
                            (vector_parity(spec, img) != want).then(|| render_vector(family, img))
                        }
                        Err(e) => Some(e.to_string()),
                    };
                    out.push((
                        "x·v has parity |x|+|v|".to_string(),
                        vec![render_element(x), render_vector(family, v)],
                        defect,
                    ));
                }
                for y in &gens {
                    let defect = match module_axiom_defect(alg, spec, x, y, v) {
                        Ok(d) if d.is_zero() => None,
                        Ok(d) => Some(render_vector(family, &d)),
                        Err(e) => Some(e.to_string()),
                    };
                    out.push((
                        "x(yv) - (-1)^{|x||y|}y(xv) = [x,y]v".to_string(),
                        vec![
                            render_element(x),
                            render_element(y),
                            render_vector(family, v),
                        ],
                        defect,
                    ));
                }
            }
            out
        })
        .collect();
    for (identity, inputs, defect) in rows.into_iter().flatten() {
        report.check(identity, inputs, defect);
    }
    report
}

/// Every module realization checked by `report-all`.
pub fn shipped_modules(assignments: &Assignment) -> Vec<ModuleSpec> {
    let mut out = Vec::new();
    for t in [Sign::Plus, Sign::Minus] {
        out.push(ModuleSpec::m(t));
        out.push(ModuleSpec::n(t));
    }
    out.push(ModuleSpec::omega());
    for t in [Sign::Plus, Sign::Minus] {
        out.push(ModuleSpec::omega_deformed(t));
    }
    for t in [Sign::Plus, Sign::Minus] {
        out.push(ModuleSpec::a(t));
    }
    out.push(parity_flip(&ModuleSpec::m(Sign::Plus)));
    out.push(twist(&ModuleSpec::m(Sign::Minus)).expect("M admits a twist"));
    out.push(twist(&ModuleSpec::a(Sign::Plus)).expect("A admits a twist"));
    out.iter().map(|s| specialize(s, assignments)).collect()
}

fn alpha_zero(spec: ModuleSpec) -> ModuleSpec {
    let a: Assignment = [(Var::A, Coefficient::zero())].into_iter().collect();
    spec.specialize(&a).expect("no poles at alpha = 0")
}

/// Υ_t (and its N counterpart) at α = 0: invariance, trivial quotient, and
/// failure of invariance at generic α.
pub fn upsilon_suite(window: i64, deg_cap: usize) -> AxiomReport {
    let mut report = AxiomReport::new("upsilon")
        .with_option("window", window)
        .with_option("deg_cap", deg_cap as u64);
    for t in [Sign::Plus, Sign::Minus] {
        for base in [ModuleSpec::m(t), ModuleSpec::n(t)] {
            let zero = alpha_zero(base.clone());
            match invariance_check(&zero, &upsilon_member_vector, window, deg_cap) {
                Ok(r) => report.absorb(r),
                Err(e) => report.check("invariance", vec![zero.to_string()], Some(e.to_string())),
            }
            match quotient_trivial_check(&zero, window) {
                Ok(r) => report.absorb(r),
                Err(e) => report.check("quotient", vec![zero.to_string()], Some(e.to_string())),
            }
            let generic = invariance_check(&base, &upsilon_member_vector, window, deg_cap);
            let defect = match generic {
                Ok(r) if r.pass => {
                    Some("invariance unexpectedly holds at generic alpha".to_string())
                }
                Ok(r) => {
                    let w = &r.failures[0];
                    report.options.insert(
                        format!("generic_witness {base}"),
                        format!("{} -> {}", w.inputs.join(" on "), w.defect).into(),
                    );
                    None
                }
                Err(e) => Some(e.to_string()),
            };
            report.check(
                "invariance fails at generic alpha",
                vec![base.to_string()],
                defect,
            );
        }
    }
    report
}

/// The Υ/π truncation: every grid monomial except the even constant.
pub fn upsilon_truncation(deg_cap: usize) -> TruncatedSubspace {
    let grid = Grid::polynomial(deg_cap);
    let members: Vec<_> = grid
        .monomials()
        .into_iter()
        .filter(upsilon_member_vector)
        .collect();
    TruncatedSubspace::span(&grid, &members)
}

fn weight_span(window: i64, keep: impl Fn(&Coord) -> bool) -> TruncatedSubspace {
    let grid = Grid::weights(window);
    let members: Vec<_> = grid
        .cells()
        .iter()
        .filter(|c| keep(c))
        .map(|c| c.vector(Coefficient::one()))
        .collect();
    TruncatedSubspace::span(&grid, &members)
}

/// Expected outcome of one probe.
enum Expect {
    Simple,
    Proper(TruncatedSubspace),
}

/// Runs the simplicity probes whose verdicts are predicted.
pub fn simplicity_suite(cfg: &ProbeConfig) -> AxiomReport {
    let mut report = AxiomReport::new("simplicity")
        .with_option("window", cfg.window)
        .with_option("deg_cap", cfg.deg_cap as u64)
        .with_option("weight_window", cfg.weight_window)
        .with_option("max_rounds", cfg.max_rounds as u64);
    let sigma_at = |v: Coefficient| {
        let a: Assignment = [(Var::Sigma, v)].into_iter().collect();
        a
    };
    let mut cases: Vec<(ModuleSpec, Expect)> = Vec::new();
    for t in [Sign::Plus, Sign::Minus] {
        for base in [ModuleSpec::m(t), ModuleSpec::n(t)] {
            cases.push((base.clone(), Expect::Simple));
            cases.push((
                alpha_zero(base),
                Expect::Proper(upsilon_truncation(cfg.deg_cap)),
            ));
        }
        let a = ModuleSpec::a(t);
        cases.push((a.clone(), Expect::Simple));
        let no_x0 = weight_span(cfg.weight_window, |c| {
            *c != Coord::Weight {
                k: HalfInt::ZERO,
                letter: Letter::X,
            }
        });
        cases.push((
            a.specialize(&sigma_at(Coefficient::from_int(-1))).unwrap(),
            Expect::Proper(no_x0),
        ));
        let y0 = weight_span(cfg.weight_window, |c| {
            *c == Coord::Weight {
                k: HalfInt::ZERO,
                letter: Letter::Y,
            }
        });
        cases.push((
            a.specialize(&sigma_at(Coefficient::ratio(-1, 2))).unwrap(),
            Expect::Proper(y0),
        ));
    }
    let verdicts: Vec<_> = cases
        .par_iter()
        .map(|(spec, _)| simplicity_probe(spec, cfg))
        .collect();
    for ((spec, expect), verdict) in cases.iter().zip(verdicts) {
        let defect = match (verdict, expect) {
            (Err(e), _) => Some(e.to_string()),
            (Ok(Verdict::NoProperInvariantFound), Expect::Simple) => None,
            (Ok(Verdict::ProperInvariantFound(found)), Expect::Proper(want))
                if found.basis == want.basis =>
            {
                None
            }
            (Ok(Verdict::ProperInvariantFound(found)), _) => Some(format!(
                "proper invariant subspace of dimension {} found: {}",
                found.dim(),
                found
                    .basis_vectors()
                    .iter()
                    .map(|v| render_vector(spec.family(), v))
                    .collect::<Vec<_>>()
                    .join(", ")
            )),
            (Ok(v), _) => Some(format!("verdict {}", v.label())),
        };
        let identity = match expect {
            Expect::Simple => "probe finds no proper invariant subspace",
            Expect::Proper(_) => "probe finds the predicted invariant subspace",
        };
        report.check(identity, vec![spec.to_string()], defect);
    }
    report
}

fn intertwine_into(
    report: &mut AxiomReport,
    map: &LinearMap,
    elements: &[AlgebraElement],
    vectors: &[crate::repr::ModuleVector],
) {
    match check_intertwiner(map, elements, vectors) {
        Ok(r) => report.absorb(r),
        Err(e) => report.check(
            "intertwiner",
            vec![map.kind.to_string()],
            Some(e.to_string()),
        ),
    }
}

/// The canonical maps and the parity-swap obstruction.
pub fn maps_suite(window: i64, deg_cap: usize) -> AxiomReport {
    let mut report = AxiomReport::new("maps")
        .with_option("window", window)
        .with_option("deg_cap", deg_cap as u64);
    let elements = basis_elements(window);
    let grid = Grid::polynomial(deg_cap);
    let all = grid.monomials();
    let ups: Vec<_> = all
        .iter()
        .filter(|v| upsilon_member_vector(v))
        .cloned()
        .collect();
    for t in [Sign::Plus, Sign::Minus] {
        for (kind, vectors) in [
            (MapKind::Theta, &all),
            (MapKind::Psi, &all),
            (MapKind::Chi, &ups),
        ] {
            let map = canonical_map(kind, t);
            intertwine_into(&mut report, &map, &elements, vectors);
            let rank = image_rank(&map, vectors, &grid);
            let want = vectors.len();
            report.check(
                "map is injective on the grid",
                vec![format!("{kind} t={t}")],
                match rank {
                    Ok(r) if r == want => None,
                    Ok(r) => Some(format!("rank {r} of {want}")),
                    Err(e) => Some(e.to_string()),
                },
            );
        }

        let xi1 = canonical_map(MapKind::XiEmbed, t);
        let xi2 = canonical_map(MapKind::XiQuot, t);
        let small = Grid::polynomial(deg_cap.saturating_sub(1));
        let coords = small.monomials();
        report.check(
            "xi1 is injective",
            vec![format!("t={t}")],
            match image_rank(&xi1, &coords, &grid) {
                Ok(r) if r == coords.len() => None,
                Ok(r) => Some(format!("rank {r} of {}", coords.len())),
                Err(e) => Some(e.to_string()),
            },
        );
        for v in &coords {
            let img = xi1.apply(v).expect("xi1 is total");
            report.check(
                "xi1 lands in Upsilon",
                vec![render_vector(Family::M, v)],
                (!upsilon_member_vector(&img)).then(|| render_vector(Family::M, &img)),
            );
            let q = xi2.apply(&img).expect("xi2 is total");
            report.check(
                "xi2 o xi1 = 0",
                vec![render_vector(Family::M, v)],
                (!q.is_zero()).then(|| render_vector(Family::Trivial, &q)),
            );
        }
        intertwine_into(&mut report, &xi2, &elements, &all);

        for t_prime in [Sign::Plus, Sign::Minus] {
            let candidate = parity_swap_candidate(t, t_prime);
            let defect = match check_intertwiner(&candidate, &elements, &all) {
                Ok(r) if r.pass => Some("candidate unexpectedly intertwines".to_string()),
                Ok(r) => {
                    let g_failure = r.failures.iter().find(|f| f.inputs[0].starts_with('G'));
                    match g_failure {
                        Some(f) => {
                            report.options.insert(
                                format!("parity_swap_witness t={t} t'={t_prime}"),
                                format!("{} -> {}", f.inputs.join(" on "), f.defect).into(),
                            );
                            None
                        }
                        None => Some("candidate fails, but not on any G_p".to_string()),
                    }
                }
                Err(e) => Some(e.to_string()),
            };
            report.check(
                "parity-swap candidate fails on some G_p",
                vec![format!("t={t}"), format!("t'={t_prime}")],
                defect,
            );
        }
    }
    report
}

/// The weighting functor against A_t(α-1) for both t, plus the σ = α control.
pub fn weighting_suite(window: i64) -> AxiomReport {
    let mut report = AxiomReport::new("weighting").with_option("window", window);
    let a = Coefficient::var(Var::A);
    let shifted = &a - &Coefficient::one();
    for t in [Sign::Plus, Sign::Minus] {
        let spec = ModuleSpec::m(t);
        match weighting_matches_a(&spec, &shifted, window, window) {
            Ok(r) => report.absorb(r),
            Err(e) => report.check("weighting", vec![format!("t={t}")], Some(e.to_string())),
        }
        let control = weighting_matches_a(&spec, &a, window, window);
        let defect = match control {
            Ok(r) if r.pass => Some("control sigma = a unexpectedly matches".to_string()),
            Ok(_) => None,
            Err(e) => Some(e.to_string()),
        };
        report.check(
            "control sigma = a does not match",
            vec![format!("t={t}")],
            defect,
        );
    }
    report
}

/// Every suite, in a fixed order.
pub fn all_suites(alg: &Algebra, cfg: &SuiteConfig) -> Vec<AxiomReport> {
    let modules = shipped_modules(&cfg.assignments);
    type Job<'a> = Box<dyn Fn() -> Vec<AxiomReport> + Send + Sync + 'a>;
    let jobs: Vec<Job> = vec![
        Box::new(|| vec![algebra_axioms(alg, cfg.algebra_window)]),
        Box::new(|| vec![omega_homomorphism(alg, cfg.algebra_window)]),
        Box::new(|| {
            vec![witt_suite(
                alg,
                cfg.witt_range,
                cfg.witt_deg_cap,
                &cfg.assignments,
            )]
        }),
        Box::new(|| {
            modules
                .iter()
                .map(|m| module_axioms(alg, m, cfg.module_window, cfg.deg_cap, cfg.weight_window))
                .collect()
        }),
        Box::new(|| vec![upsilon_suite(cfg.module_window, cfg.deg_cap)]),
        Box::new(|| vec![simplicity_suite(&cfg.probe())]),
        Box::new(|| vec![maps_suite(cfg.module_window, cfg.deg_cap)]),
        Box::new(|| vec![weighting_suite(cfg.weighting_window)]),
    ];
    jobs.par_iter()
        .map(|j| j())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
