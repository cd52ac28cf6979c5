//! Command-line surface for the covariant symmetrization engine.
//!
//! Subcommands compute and render the Taylor operators of the double
//! exponential map, verify them against the pinned reference tables, count
//! terms against the Fibonacci law, run the bialgebra identity suite, and
//! cross-check the series against closed-form geodesic geometry.
//!
//! Reports go to stdout as JSON and are byte-identical across runs for
//! identical invocations; timings are human-side diagnostics and go to
//! stderr.

use clap::{Parser, Subcommand, ValueEnum};
use covsym::constcurv::{h_numeric, h_series_linear, Surface, TangentVector};
use covsym::fixtures::{fixture, MAX_FIXTURE_DEGREE};
use covsym::selfcheck::{run_hopf_suite, HopfConfig};
use covsym::{taylor_operator, QPoly, Rational};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "covsym",
    version,
    about = "Exact Taylor operators of the double exponential map via covariant symmetrization"
)]
struct Cli {
    /// Worker-thread hint; accepted for compatibility, results are identical
    /// for any value (the current engine is single-threaded).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the degree-n Taylor operator and render it.
    Compute {
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the rendering to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare computed operators against the pinned reference tables.
    Verify {
        /// Highest degree to check (the tables cover 1..=10).
        #[arg(long, default_value_t = MAX_FIXTURE_DEGREE, value_parser = clap::value_parser!(u32).range(1..=MAX_FIXTURE_DEGREE as i64))]
        max_n: u32,
        /// Testing aid: corrupt one reference coefficient to exercise the
        /// failure path.
        #[arg(long, hide = true)]
        inject_fixture_error: bool,
    },
    /// Count the terms of the degree-n operator against the Fibonacci law.
    Count {
        #[arg(value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
    },
    /// Run the exact bialgebra identity suite.
    SelfcheckHopf {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        generators: u32,
        /// Maximum word length of the exhaustive sweep.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        /// Number of seeded random elements.
        #[arg(long, default_value_t = 100)]
        trials: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Cross-check the series against closed-form geodesic geometry.
    Oracle {
        #[arg(long, value_enum)]
        surface: SurfaceArg,
        /// Geodesic parameter |v| (sphere requires < 1.0).
        #[arg(long)]
        vnorm: f64,
        /// Series truncation order.
        #[arg(long, default_value_t = 10)]
        order: u32,
        /// Central-difference step.
        #[arg(long, default_value_t = 1e-4)]
        eps: f64,
        /// Pass tolerance for the finite-difference comparisons.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum SurfaceArg {
    Sphere,
    Hyperbolic,
    Flat,
}

impl From<SurfaceArg> for Surface {
    fn from(s: SurfaceArg) -> Surface {
        match s {
            SurfaceArg::Sphere => Surface::Sphere,
            SurfaceArg::Hyperbolic => Surface::Hyperbolic,
            SurfaceArg::Flat => Surface::Flat,
        }
    }
}

#[derive(Serialize)]
struct Report {
    command: String,
    parameters: serde_json::Map<String, serde_json::Value>,
    checks: Vec<CheckRow>,
    exit_code: u8,
}

#[derive(Serialize)]
struct CheckRow {
    name: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

impl CheckRow {
    fn pass(name: impl Into<String>) -> Self {
        CheckRow {
            name: name.into(),
            status: "pass",
            detail: None,
        }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckRow {
            name: name.into(),
            status: "fail",
            detail: Some(detail.into()),
        }
    }
}

fn emit_report(
    command: &str,
    parameters: serde_json::Map<String, serde_json::Value>,
    checks: Vec<CheckRow>,
) -> u8 {
    let exit_code = if checks.iter().all(|c| c.status == "pass") {
        0
    } else {
        1
    };
    let report = Report {
        command: command.to_string(),
        parameters,
        checks,
        exit_code,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serialization")
    );
    exit_code
}

#[derive(Serialize)]
struct PolyJson {
    n: u32,
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct TermJson {
    num: String,
    den: String,
    word: Vec<u16>,
}

fn poly_json(n: u32, p: &QPoly) -> PolyJson {
    PolyJson {
        n,
        terms: p
            .iter()
            .map(|(word, coeff)| TermJson {
                num: coeff.numer().to_string(),
                den: coeff.denom().to_string(),
                word: word.letters().to_vec(),
            })
            .collect(),
    }
}

fn params(entries: &[(&str, serde_json::Value)]) -> serde_json::Map<String, serde_json::Value> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn cmd_compute(n: u32, format: Format, out: Option<PathBuf>) -> Result<u8, String> {
    if n > 30 {
        eprintln!(
            "warning: degrees above 30 grow quickly in time and memory \
             (the term count roughly multiplies by 1.6 per degree)"
        );
    }
    let poly = taylor_operator(n);
    let rendered = match format {
        Format::Text => poly.to_text(),
        Format::Latex => poly.to_latex(),
        Format::Json => serde_json::to_string(&poly_json(n, &poly)).expect("poly serialization"),
    };
    match out {
        Some(path) => {
            let mut file = std::fs::File::create(&path)
                .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            writeln!(file, "{rendered}")
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        }
        None => println!("{rendered}"),
    }
    Ok(0)
}

fn first_difference(expected: &QPoly, actual: &QPoly) -> Option<String> {
    for (word, want) in expected.iter() {
        let got = actual.coeff(word);
        if got != *want {
            return Some(format!(
                "word {:?}: expected {want}, actual {got}",
                word.letters()
            ));
        }
    }
    for (word, got) in actual.iter() {
        if expected.coeff(word).is_zero() {
            return Some(format!(
                "word {:?}: expected 0, actual {got}",
                word.letters()
            ));
        }
    }
    None
}

fn cmd_verify(max_n: u32, inject_error: bool) -> u8 {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let mut expected = fixture(n).expect("fixture range").expected;
        if inject_error && n == max_n {
            // Perturb one coefficient so the mismatch path is observable.
            expected =
                &expected + &QPoly::from_term(covsym::QWord::new(&[n as u16]), Rational::ONE);
        }
        let actual = taylor_operator(n);
        let name = format!("table-H{n}");
        match first_difference(&expected, &actual) {
            None => checks.push(CheckRow::pass(name)),
            Some(diff) => checks.push(CheckRow::fail(name, diff)),
        }
    }
    emit_report("verify", params(&[("max_n", max_n.into())]), checks)
}

fn fibonacci(k: u32) -> u128 {
    // φ_1 = φ_2 = 1.
    let (mut a, mut b) = (1u128, 1u128);
    for _ in 2..k {
        let next = a.checked_add(b).expect("Fibonacci overflows u128");
        a = b;
        b = next;
    }
    if k == 1 {
        1
    } else {
        b
    }
}

fn cmd_count(n: u32) -> u8 {
    let count = taylor_operator(n).num_terms() as u128;
    let fib = fibonacci(n - 1);
    let name = format!("term-count-H{n}");
    let check = if count == fib {
        CheckRow::pass(name)
    } else {
        CheckRow::fail(
            name,
            format!("term count {count} != Fibonacci value {fib}"),
        )
    };
    emit_report(
        "count",
        params(&[
            ("n", n.into()),
            ("terms", count.to_string().into()),
            ("fibonacci", fib.to_string().into()),
        ]),
        vec![check],
    )
}

fn cmd_selfcheck(generators: u32, max_degree: u32, trials: u32, seed: u64) -> u8 {
    let cfg = HopfConfig {
        generators,
        max_len: max_degree as usize,
        trials,
        seed,
    };
    let checks = run_hopf_suite(&cfg)
        .into_iter()
        .map(|r| {
            let name = format!("{} ({} cases)", r.name, r.cases);
            match r.failure {
                None => CheckRow::pass(name),
                Some(f) => CheckRow::fail(name, f),
            }
        })
        .collect();
    emit_report(
        "selfcheck-hopf",
        params(&[
            ("generators", generators.into()),
            ("max_degree", max_degree.into()),
            ("trials", trials.into()),
            ("seed", seed.into()),
        ]),
        checks,
    )
}

fn json_f64(x: f64) -> serde_json::Value {
    serde_json::Number::from_f64(x)
        .map(serde_json::Value::Number)
        .unwrap_or(serde_json::Value::Null)
}

fn cmd_oracle(surface: Surface, vnorm: f64, order: u32, eps: f64, tol: f64) -> Result<u8, String> {
    if !vnorm.is_finite() || vnorm < 0.0 {
        return Err(format!("vnorm must be finite and nonnegative, got {vnorm}"));
    }
    if surface == Surface::Sphere && vnorm >= 1.0 {
        return Err(format!("sphere oracle requires vnorm < 1.0, got {vnorm}"));
    }
    if !(eps > 0.0) || !(tol > 0.0) {
        return Err("eps and tol must be positive".to_string());
    }

    let x = surface.base_point();
    let v = TangentVector([0.0, vnorm, 0.0]);
    let w = TangentVector([0.0, 0.0, 1.0]);

    let err = |e: covsym::Error| format!("oracle out of domain: {e}");
    let plus = h_numeric(surface, &x, &v, &w.scale(eps)).map_err(err)?;
    let minus = h_numeric(surface, &x, &v, &w.scale(-eps)).map_err(err)?;
    let fd_vector = plus.sub(&minus).scale(1.0 / (2.0 * eps));
    let fd = surface.metric_dot(&fd_vector, &w);

    let series = h_series_linear(surface.curvature_sign(), vnorm, order);
    let closed = match surface {
        Surface::Flat => 1.0,
        Surface::Sphere => {
            if vnorm == 0.0 {
                1.0
            } else {
                vnorm / vnorm.sin()
            }
        }
        Surface::Hyperbolic => {
            if vnorm == 0.0 {
                1.0
            } else {
                vnorm / vnorm.sinh()
            }
        }
    };

    let mut checks = Vec::new();
    let mut compare = |name: &str, a: f64, b: f64, bound: f64| {
        let error = (a - b).abs();
        if error <= bound {
            checks.push(CheckRow::pass(name));
        } else {
            checks.push(CheckRow::fail(
                name,
                format!("|{a} - {b}| = {error} > {bound}"),
            ));
        }
    };
    compare("fd-vs-series", fd, series, tol);
    compare("fd-vs-closed-form", fd, closed, tol);
    compare("series-vs-closed-form", series, closed, tol);

    // The second geodesic leg collinear with the first extends it exactly.
    let collinear = h_numeric(surface, &x, &v, &v.scale(eps)).map_err(err)?;
    let collinear_residual = collinear.sub(&v.scale(1.0 + eps)).sup_norm();
    if collinear_residual <= 1e-12 {
        checks.push(CheckRow::pass("collinear-extension"));
    } else {
        checks.push(CheckRow::fail(
            "collinear-extension",
            format!("residual {collinear_residual} > 1e-12"),
        ));
    }

    if surface == Surface::Flat {
        let h = h_numeric(surface, &x, &v, &w).map_err(err)?;
        let residual = h.sub(&v.add(&w)).sup_norm();
        if residual <= 1e-12 {
            checks.push(CheckRow::pass("flat-additivity"));
        } else {
            checks.push(CheckRow::fail(
                "flat-additivity",
                format!("residual {residual} > 1e-12"),
            ));
        }
    }

    let surface_name = match surface {
        Surface::Flat => "flat",
        Surface::Sphere => "sphere",
        Surface::Hyperbolic => "hyperbolic",
    };
    Ok(emit_report(
        "oracle",
        params(&[
            ("surface", surface_name.into()),
            ("vnorm", json_f64(vnorm)),
            ("order", order.into()),
            ("eps", json_f64(eps)),
            ("tol", json_f64(tol)),
            ("finite_difference", json_f64(fd)),
            ("series", json_f64(series)),
            ("closed_form", json_f64(closed)),
            ("abs_error_fd_series", json_f64((fd - series).abs())),
            ("abs_error_fd_closed", json_f64((fd - closed).abs())),
        ]),
        checks,
    ))
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Compute { n, format, out } => cmd_compute(n, format, out),
        Command::Verify {
            max_n,
            inject_fixture_error,
        } => Ok(cmd_verify(max_n, inject_fixture_error)),
        Command::Count { n } => Ok(cmd_count(n)),
        Command::SelfcheckHopf {
            generators,
            max_degree,
            trials,
            seed,
        } => Ok(cmd_selfcheck(generators, max_degree, trials, seed)),
        Command::Oracle {
            surface,
            vnorm,
            order,
            eps,
            tol,
        } => cmd_oracle(surface.into(), vnorm, order, eps, tol),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let code = match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    };
    eprintln!("timing: {:.3}s", start.elapsed().as_secs_f64());
    ExitCode::from(code)
}
