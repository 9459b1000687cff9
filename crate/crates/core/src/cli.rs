//! The `tn2` command-line front end.
//!
//! Exit status is 0 when every check passes or a single evaluation
//! succeeds. Verification failures exit with 1; usage and parse errors with 2.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{Algebra, BracketFamily};
use crate::analysis::closure::{closure, generators, simplicity_probe, Grid, ProbeConfig, Verdict};
use crate::analysis::maps::{canonical_map, check_intertwiner, parity_swap_candidate, MapKind};
use crate::analysis::report::AxiomReport;
use crate::analysis::suites::{
    algebra_axioms, all_suites, module_axioms, omega_homomorphism, SuiteConfig,
};
use crate::analysis::upsilon::upsilon_member_vector;
use crate::analysis::weighting::weighting_matches_a;
use crate::expr::{
    parse_assignment, parse_element, parse_scalar, parse_vector, render_coefficient, render_vector,
};
use crate::repr::{act, parity_flip, twist, Family, ModuleSpec};
use crate::scalar::{Assignment, Coefficient, Sign, Var};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "tn2",
    version,
    about = "Exact verification for the twisted N=2 superconformal algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Also write one JSON file per suite into this directory.
    #[arg(long, global = true)]
    report_dir: Option<PathBuf>,
    /// Flip the sign of one bracket family (mutation testing).
    #[arg(long, global = true, hide = true)]
    mutate: Option<BracketFamily>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
struct ModuleArgs {
    /// Module family: M, N, Omega, OmegaDeformed, A.
    #[arg(long, default_value = "M")]
    family: Family,
    /// Sign case t = 1 or -1.
    #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_sign)]
    t: Sign,
    /// Parameter specialization such as `a=0` or `sigma=-1/2`; repeatable.
    #[arg(long = "set", value_parser = parse_set)]
    set: Vec<(Var, Coefficient)>,
    /// Apply the parity change functor.
    #[arg(long)]
    parity_flip: bool,
    /// Twist by the automorphism omega_b.
    #[arg(long)]
    twist: bool,
}

#[derive(Args, Debug, Clone)]
struct Windows {
    /// Bound on |2·index| of generators.
    #[arg(long, default_value_t = 2)]
    window: i64,
    /// Largest u-degree of polynomial test vectors.
    #[arg(long, default_value_t = 6)]
    deg_cap: usize,
    /// Bound on |2k| of weight test vectors (family A).
    #[arg(long, default_value_t = 4)]
    weight_window: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Algebra axioms on a window, plus the omega_b homomorphism check.
    VerifyAlgebra {
        #[arg(long, default_value_t = 3)]
        window: i64,
    },
    /// Module axioms for one family.
    VerifyModule {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        windows: Windows,
    },
    /// Evaluate a single action x·v.
    Act {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        element: String,
        #[arg(long)]
        vector: String,
    },
    /// Truncated submodule generated by seed vectors.
    Closure {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        windows: Windows,
        /// Seed vector; repeatable.
        #[arg(long = "seed", required = true)]
        seeds: Vec<String>,
        #[arg(long, default_value_t = 24)]
        max_rounds: usize,
    },
    /// Closure from every monomial; reports any proper invariant subspace.
    Simplicity {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        windows: Windows,
        #[arg(long, default_value_t = 24)]
        max_rounds: usize,
    },
    /// Check that a canonical map commutes with the action.
    Intertwine {
        /// Map name, for example psi or parity-swap.
        #[arg(long)]
        map: MapKind,
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_sign)]
        t: Sign,
        /// Sign of the codomain for parity-swap.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        t_prime: Option<Sign>,
        #[arg(long, default_value_t = 2)]
        window: i64,
        #[arg(long, default_value_t = 6)]
        deg_cap: usize,
    },
    /// Compare the weighting of M_t(lambda, alpha) with A_t(sigma).
    Weighting {
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_sign)]
        t: Sign,
        /// Bound on |2n| and on |2·index| of generators.
        #[arg(long, default_value_t = 4)]
        window: i64,
        /// The sigma to compare against.
        #[arg(long, default_value = "a-1", allow_hyphen_values = true)]
        sigma: String,
    },
    /// Every suite with the shipped configuration.
    ReportAll {
        #[arg(long, default_value_t = 3)]
        algebra_window: i64,
        #[command(flatten)]
        windows: Windows,
        #[arg(long, default_value_t = 4)]
        weighting_window: i64,
        #[arg(long = "set", value_parser = parse_set)]
        set: Vec<(Var, Coefficient)>,
    },
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    s.trim()
        .trim_start_matches('+')
        .parse::<i64>()
        .ok()
        .and_then(Sign::from_int)
        .ok_or_else(|| format!("t must be 1 or -1, found `{s}`"))
}

fn parse_set(s: &str) -> Result<(Var, Coefficient), String> {
    parse_assignment(s).map_err(|e| e.to_string())
}

/// An error that ends the run with a usage status.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

impl ModuleArgs {
    fn spec(&self) -> Result<ModuleSpec, Usage> {
        let base = match self.family {
            Family::M => ModuleSpec::m(self.t),
            Family::N => ModuleSpec::n(self.t),
            Family::Omega => ModuleSpec::omega(),
            Family::OmegaDeformed => ModuleSpec::omega_deformed(self.t),
            Family::A => ModuleSpec::a(self.t),
            Family::Trivial => ModuleSpec::trivial(),
        };
        let assignments: Assignment = self.set.iter().cloned().collect();
        let mut spec = base.specialize(&assignments)?;
        if self.parity_flip {
            spec = parity_flip(&spec);
        }
        if self.twist {
            spec = twist(&spec)?;
        }
        Ok(spec)
    }
}

/// What a subcommand produced.
enum Outcome {
    Reports(Vec<AxiomReport>),
    /// A single evaluation: text and JSON renderings.
    Value(String, serde_json::Value),
}

fn execute(cli: &Cli) -> Result<Outcome, Usage> {
    let alg = match cli.mutate {
        Some(f) => Algebra::with_flipped_sign(f),
        None => Algebra::standard(),
    };
    Ok(match &cli.command {
        Command::VerifyAlgebra { window } => Outcome::Reports(vec![
            algebra_axioms(&alg, *window),
            omega_homomorphism(&alg, *window),
        ]),
        Command::VerifyModule { module, windows } => {
            let spec = module.spec()?;
            Outcome::Reports(vec![module_axioms(
                &alg,
                &spec,
                windows.window,
                windows.deg_cap,
                windows.weight_window,
            )])
        }
        Command::Act {
            module,
            element,
            vector,
        } => {
            let spec = module.spec()?;
            let x = parse_element(element)?;
            let v = parse_vector(vector, spec.family())?;
            let out = render_vector(spec.family(), &act(&spec, &x, &v)?);
            Outcome::Value(
                out.clone(),
                json!({ "module": spec.to_string(), "result": out }),
            )
        }
        Command::Closure {
            module,
            windows,
            seeds,
            max_rounds,
        } => {
            let spec = module.spec()?;
            let family = spec.family();
            let seeds = seeds
                .iter()
                .map(|s| parse_vector(s, family))
                .collect::<Result<Vec<_>, _>>()?;
            let grid = Grid::for_family(family, windows.deg_cap, windows.weight_window);
            let sub = closure(&spec, &seeds, &grid, windows.window, *max_rounds)?;
            let basis: Vec<String> = sub
                .basis_vectors()
                .iter()
                .map(|v| render_vector(family, v))
                .collect();
            let text = format!(
                "dimension {} of {}{}{}\n{}",
                sub.dim(),
                grid.len(),
                if sub.truncation_loss {
                    " (truncation loss)"
                } else {
                    ""
                },
                if sub.converged {
                    ""
                } else {
                    " (not converged)"
                },
                basis.join("\n")
            );
            Outcome::Value(
                text,
                json!({
                    "module": spec.to_string(),
                    "dimension": sub.dim(),
                    "grid_size": grid.len(),
                    "truncation_loss": sub.truncation_loss,
                    "converged": sub.converged,
                    "rounds": sub.rounds,
                    "basis": basis,
                }),
            )
        }
        Command::Simplicity {
            module,
            windows,
            max_rounds,
        } => {
            let spec = module.spec()?;
            let cfg = ProbeConfig {
                window: windows.window,
                deg_cap: windows.deg_cap,
                weight_window: windows.weight_window,
                max_rounds: *max_rounds,
            };
            let verdict = simplicity_probe(&spec, &cfg)?;
            let (detail, basis) = match &verdict {
                Verdict::ProperInvariantFound(sub) => (
                    format!("dimension {} of {}", sub.dim(), sub.grid.len()),
                    sub.basis_vectors()
                        .iter()
                        .map(|v| render_vector(spec.family(), v))
                        .collect(),
                ),
                Verdict::Inconclusive(why) => (why.clone(), Vec::new()),
                Verdict::NoProperInvariantFound => (String::new(), Vec::new()),
            };
            let mut text = format!("{spec}: {}", verdict.label());
            if !detail.is_empty() {
                text.push_str(&format!(" ({detail})"));
            }
            for b in &basis {
                text.push_str(&format!("\n  {b}"));
            }
            Outcome::Value(
                text,
                json!({ "module": spec.to_string(), "verdict": verdict.label(), "detail": detail, "basis": basis }),
            )
        }
        Command::Intertwine {
            map,
            t,
            t_prime,
            window,
            deg_cap,
        } => {
            let map = match map {
                MapKind::ParitySwap => parity_swap_candidate(*t, t_prime.unwrap_or(*t)),
                kind => canonical_map(*kind, *t),
            };
            let mut vectors = Grid::polynomial(*deg_cap).monomials();
            if map.kind == MapKind::Chi {
                vectors.retain(upsilon_member_vector);
            }
            let elements = generators(&map.domain, *window);
            let mut report =
                check_intertwiner(&map, &elements, &vectors)?.with_option("window", *window);
            report
                .options
                .insert("module_map".into(), map.is_module_map().into());
            Outcome::Reports(vec![report])
        }
        Command::Weighting { t, window, sigma } => {
            let sigma = parse_scalar(sigma)?;
            let spec = ModuleSpec::m(*t);
            Outcome::Reports(vec![weighting_matches_a(&spec, &sigma, *window, *window)?])
        }
        Command::ReportAll {
            algebra_window,
            windows,
            weighting_window,
            set,
        } => {
            let cfg = SuiteConfig {
                algebra_window: *algebra_window,
                module_window: windows.window,
                deg_cap: windows.deg_cap,
                weight_window: windows.weight_window,
                weighting_window: *weighting_window,
                assignments: set.iter().cloned().collect(),
                ..SuiteConfig::default()
            };
            Outcome::Reports(all_suites(&alg, &cfg))
        }
    })
}

fn weighting_summary(cli: &Cli, report: &AxiomReport) -> Option<String> {
    let Command::Weighting { sigma, .. } = &cli.command else {
        return None;
    };
    let shown = parse_scalar(sigma)
        .map(|s| render_coefficient(&s))
        .unwrap_or_default();
    let expected = render_coefficient(&(&Coefficient::var(Var::A) - &Coefficient::one()));
    let shown = if shown == expected {
        "alpha-1".to_string()
    } else {
        shown
    };
    Some(if report.pass {
        format!("weighting of M_t(lambda,alpha) matches A_t({shown})\n")
    } else {
        format!("weighting of M_t(lambda,alpha) does not match A_t({shown})\n")
    })
}

/// Options recorded on an aggregated report.
fn command_options(cmd: &Command) -> Vec<(&'static str, serde_json::Value)> {
    match cmd {
        Command::VerifyAlgebra { window } => vec![("window", (*window).into())],
        Command::ReportAll {
            algebra_window,
            windows,
            weighting_window,
            set,
        } => {
            let mut out = vec![
                ("algebra_window", (*algebra_window).into()),
                ("window", windows.window.into()),
                ("deg_cap", (windows.deg_cap as u64).into()),
                ("weight_window", windows.weight_window.into()),
                ("weighting_window", (*weighting_window).into()),
            ];
            if !set.is_empty() {
                let shown: Vec<String> = set
                    .iter()
                    .map(|(v, c)| format!("{}={}", v.name(), render_coefficient(c)))
                    .collect();
                out.push(("set", shown.into()));
            }
            out
        }
        _ => Vec::new(),
    }
}

fn file_stem(suite: &str) -> String {
    suite
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

fn write_report_dir(
    dir: &Path,
    reports: &[AxiomReport],
    total: &AxiomReport,
) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    for (k, r) in reports.iter().enumerate() {
        fs::write(
            dir.join(format!("{k:02}-{}.json", file_stem(&r.suite))),
            r.to_json(),
        )?;
    }
    fs::write(dir.join("summary.json"), total.to_json())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return status;
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };

    let (body, status) = match outcome {
        Outcome::Value(text, value) => match cli.format {
            Format::Text => (format!("{text}\n"), EXIT_PASS),
            Format::Json => (
                format!("{}\n", serde_json::to_string_pretty(&value).expect("json")),
                EXIT_PASS,
            ),
        },
        Outcome::Reports(reports) => {
            let name = match &cli.command {
                Command::ReportAll { .. } => "report-all".to_string(),
                _ if reports.len() == 1 => reports[0].suite.clone(),
                Command::VerifyAlgebra { .. } => "verify-algebra".to_string(),
                _ => "report".to_string(),
            };
            let mut total = if reports.len() == 1 {
                reports[0].clone()
            } else {
                AxiomReport::aggregate(name, reports.clone())
            };
            for (k, v) in command_options(&cli.command) {
                total.options.entry(k.to_string()).or_insert(v);
            }
            if let Some(m) = cli.mutate {
                total.options.insert("mutate".into(), m.name().into());
            }
            if let Some(dir) = &cli.report_dir {
                if let Err(e) = write_report_dir(dir, &reports, &total) {
                    let _ = writeln!(err, "error: cannot write reports to {}: {e}", dir.display());
                    return EXIT_USAGE;
                }
            }
            let status = if total.pass { EXIT_PASS } else { EXIT_FAIL };
            let body = match cli.format {
                Format::Json => format!("{}\n", total.to_json()),
                Format::Text => {
                    let mut s = String::new();
                    if reports.len() > 1 {
                        for r in &reports {
                            s.push_str(&r.to_text());
                        }
                    }
                    s.push_str(&total.to_text());
                    if let Some(line) = weighting_summary(&cli, &total) {
                        s.push_str(&line);
                    }
                    s
                }
            };
            (body, status)
        }
    };

    let written = match &cli.output {
        Some(path) => fs::write(path, body.as_bytes()),
        None => out.write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    status
}
