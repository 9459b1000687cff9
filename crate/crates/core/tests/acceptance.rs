//! Acceptance criteria. Each prints one `criterion N: PASS|FAIL` line; the
//! process fails if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use twisted_n2::algebra::{Algebra, BracketFamily};
use twisted_n2::analysis::closure::ProbeConfig;
use twisted_n2::analysis::report::AxiomReport;
use twisted_n2::analysis::suites::{
    algebra_axioms, maps_suite, module_axioms, omega_homomorphism, simplicity_suite, upsilon_suite,
    weighting_suite, witt_suite,
};
use twisted_n2::repr::ModuleSpec;
use twisted_n2::scalar::{Assignment, Sign};

type Criterion<'a> = (usize, &'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_report(r: &AxiomReport, extra: bool) -> Outcome {
    let mut detail = format!("{} checks, {} failures", r.checks_run, r.failures.len());
    if let Some(f) = r.failures.first() {
        detail.push_str(&format!(
            "; first: {} [{}]: {}",
            f.identity,
            f.inputs.join(", "),
            f.defect
        ));
    }
    Outcome {
        pass: r.pass && r.checks_run > 0 && extra,
        detail,
    }
}

fn only(r: &AxiomReport, identity: &str) -> AxiomReport {
    let mut out = AxiomReport::new(&r.suite);
    out.failures = r
        .failures
        .iter()
        .filter(|f| f.identity == identity)
        .cloned()
        .collect();
    out.pass = out.failures.is_empty();
    out.checks_run = r.checks_run;
    out
}

fn criterion_1(axioms: &AxiomReport, elapsed: Duration) -> Outcome {
    let relevant = [
        "[x,y] + (-1)^{|x||y|}[y,x] = 0",
        "super Jacobi",
        "[x,y] has parity |x|+|y|",
    ];
    let mut r = AxiomReport::new("algebra-axioms");
    r.checks_run = axioms.checks_run;
    r.failures = axioms
        .failures
        .iter()
        .filter(|f| relevant.contains(&f.identity.as_str()))
        .cloned()
        .collect();
    r.pass = r.failures.is_empty();
    let mut o = from_report(&r, elapsed < Duration::from_secs(120));
    o.detail
        .push_str(&format!("; {:.1}s", elapsed.as_secs_f64()));
    o
}

fn criterion_3() -> Outcome {
    let alg = Algebra::standard();
    let mut specs = Vec::new();
    for t in [Sign::Plus, Sign::Minus] {
        specs.push(ModuleSpec::m(t));
        specs.push(ModuleSpec::n(t));
        specs.push(ModuleSpec::omega_deformed(t));
        specs.push(ModuleSpec::a(t));
    }
    specs.push(ModuleSpec::omega());
    let reports = specs.iter().map(|s| module_axioms(&alg, s, 5, 6, 4));
    from_report(&AxiomReport::aggregate("modules", reports), true)
}

fn criterion_5() -> Outcome {
    from_report(&simplicity_suite(&ProbeConfig::default()), true)
}

fn criterion_6() -> Outcome {
    let r = maps_suite(5, 6);
    let witnesses = r
        .options
        .keys()
        .filter(|k| k.starts_with("parity_swap_witness"))
        .count();
    let mut o = from_report(&r, witnesses == 4);
    if let Some((k, v)) = r
        .options
        .iter()
        .find(|(k, _)| k.starts_with("parity_swap_witness"))
    {
        o.detail.push_str(&format!("; {k}: {v}"));
    }
    o
}

fn criterion_10() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_tn2");
    let status = |extra: &[&str]| {
        Command::new(bin)
            .arg("report-all")
            .args(extra)
            .output()
            .expect("run tn2")
            .status
            .code()
    };
    let shipped = status(&[]);
    let mut detail = format!("shipped exit {shipped:?}");
    let mut pass = shipped == Some(0);
    for f in BracketFamily::ALL {
        let code = status(&["--mutate", f.name()]);
        detail.push_str(&format!(", {f} exit {code:?}"));
        pass &= code == Some(1);
    }
    Outcome { pass, detail }
}

fn main() {
    let alg = Algebra::standard();
    let start = Instant::now();
    let axioms = algebra_axioms(&alg, 6);
    let elapsed = start.elapsed();

    let criteria: Vec<Criterion> = vec![
        (
            1,
            "superalgebra axioms, |2 index| <= 6",
            Box::new(|| criterion_1(&axioms, elapsed)),
        ),
        (
            2,
            "[G,G] sign cases agree under p <-> q",
            Box::new(|| {
                from_report(
                    &only(&axioms, "listed [G_p,G_q] is symmetric in p and q"),
                    true,
                )
            }),
        ),
        (3, "module axioms for every family", Box::new(criterion_3)),
        (
            4,
            "Upsilon invariance and trivial quotient",
            Box::new(|| from_report(&upsilon_suite(5, 6), true)),
        ),
        (5, "simplicity probes", Box::new(criterion_5)),
        (
            6,
            "canonical maps and the parity-swap obstruction",
            Box::new(criterion_6),
        ),
        (
            7,
            "omega_b is a homomorphism",
            Box::new(|| from_report(&omega_homomorphism(&alg, 6), true)),
        ),
        (
            8,
            "weighting functor against A_t(alpha-1)",
            Box::new(|| from_report(&weighting_suite(4), true)),
        ),
        (
            9,
            "Witt embedding and Omega_b module",
            Box::new(|| from_report(&witt_suite(&alg, 3, 4, &Assignment::new()), true)),
        ),
        (
            10,
            "report-all exit status and mutations",
            Box::new(criterion_10),
        ),
    ];

    let mut failed = 0;
    for (n, name, run) in criteria {
        let o = run();
        println!("criterion {n}: {}", if o.pass { "PASS" } else { "FAIL" });
        println!("    {name}: {}", o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
