//! The `hochcyc` command line: `validate`, `homology`, `audit`, `pair` and
//! `gallery`. Exit codes: 0 when every check passes, 1 when a mathematical
//! check fails, 2 for unusable input.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Carrier, Element};
use crate::chern::json::{carrier_from_spec, cocycle_from_json, matrix_from_json};
use crate::chern::{conjugation_invariance_test, pair_even, pair_odd};
use crate::constructions::{build, Built};
use crate::engine::{
    cyclic_homology, hochschild_cohomology, hochschild_homology, inner_action_audit, morita_audit, operator_identity_audit,
    periodic_cyclic, sbi_audit, Coefficients, Engine, HcMethod, HomologyReport, Parity, DEFAULT_SIZE_CAP,
};
use crate::error::{Error, Result};
use crate::gallery::{self, acceptance, Outcome, Settings};

#[derive(Parser, Debug)]
#[command(name = "hochcyc", version, about = "Exact Hochschild and cyclic homology, cyclic cocycles and Chern pairings")]
pub struct Cli {
    /// Largest chain space any computation may build.
    #[arg(long, global = true)]
    pub size_cap: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    Hh,
    Hc,
    Hp,
    Cohomology,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Sbi,
    Inner,
    Morita,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoeffArg {
    /// `A` as a bimodule over itself.
    A,
    /// The dual bimodule `A*`.
    Dual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an algebra, construction or cocycle spec.
    Validate { file: PathBuf },
    /// Compute HH, HC, HP or Hochschild cohomology dimensions.
    Homology {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = TheoryArg::Hh)]
        theory: TheoryArg,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// quotient, cyclic or bB; the others cross-check when they fit.
        #[arg(long, default_value = "quotient")]
        method: String,
        #[arg(long, value_enum, default_value_t = CoeffArg::Dual)]
        coeff: CoeffArg,
        #[arg(long, value_enum, default_value_t = ParityArg::Even)]
        parity: ParityArg,
    },
    /// Audit operator identities, the SBI sequence, inner actions or Morita maps.
    Audit {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Suite::Identities)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Matrix size for the Morita suite.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// JSON file `{"u": element, "a": element}` for the inner suite.
        #[arg(long)]
        elements: Option<PathBuf>,
    },
    /// Pair a cyclic cocycle with an idempotent or invertible matrix.
    Pair {
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(long)]
        element: PathBuf,
        /// An invertible `u_t` over `Q(t)`: test constancy of the pairing with `u_t e u_t^-1`.
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// List the gallery, run one entry, or run the acceptance suite.
    Gallery {
        name: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

/// What a command produced: a report and whether every check passed.
pub struct Response {
    pub report: Value,
    pub text: String,
    pub passed: bool,
}

impl Response {
    fn ok(report: Value, text: String) -> Self {
        Response { report, text, passed: true }
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let raw = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn finite(path: &Path) -> Result<Algebra> {
    build(&read_json(path)?)?.into_finite()
}

fn error_name(e: &Error) -> String {
    let s = format!("{e:?}");
    s.chars().take_while(|c| c.is_alphanumeric()).collect()
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<Response> {
    let cap = cli.size_cap.unwrap_or(DEFAULT_SIZE_CAP);
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Homology { file, theory, max_degree, method, coeff, parity } => {
            let a = finite(file)?;
            let eng = Engine::with_cap(&a, cap);
            let r = homology(&eng, *theory, *max_degree, method, *coeff, *parity)?;
            Ok(Response::ok(r.to_json(), r.to_text()))
        }
        Command::Audit { file, suite, max_degree, k, elements } => audit(file, *suite, *max_degree, *k, elements.as_deref(), cap),
        Command::Pair { cocycle, element, family } => pair(cocycle, element, family.as_deref()),
        Command::Gallery { name, all } => {
            let settings = Settings { size_cap: cli.size_cap.unwrap_or(gallery::GALLERY_SIZE_CAP) };
            gallery_cmd(name.as_deref(), *all, &settings)
        }
    }
}

fn validate(file: &Path) -> Result<Response> {
    let v = read_json(file)?;
    if v.get("kind").is_some() {
        let phi = cocycle_from_json(&v)?;
        let text = format!("{} cochain of degree {} on {}: cyclic and closed", phi.kind(), phi.degree(), phi.carrier().name());
        return Ok(Response::ok(json!({"valid": true, "cocycle": phi.to_json()}), text));
    }
    Ok(match build(&v)? {
        Built::Finite(a) => {
            let report = json!({
                "valid": true, "algebra": a.name(), "finite": true, "dimension": a.dim(),
                "field": a.field().to_json(), "commutative": a.is_commutative(),
            });
            Response::ok(report, format!("{}: associative unital algebra of dimension {} over {}", a.name(), a.dim(), a.field()))
        }
        Built::Based(b) => {
            let report = json!({"valid": true, "algebra": b.name(), "finite": false, "field": b.field().to_json()});
            Response::ok(report, format!("{}: algebra on a labelled basis over {}", b.name(), b.field()))
        }
    })
}

fn homology(eng: &Engine, theory: TheoryArg, max_n: usize, method: &str, coeff: CoeffArg, parity: ParityArg) -> Result<HomologyReport> {
    match theory {
        TheoryArg::Hh => hochschild_homology(eng, max_n),
        TheoryArg::Hc => {
            let m = HcMethod::parse(method).ok_or_else(|| Error::Parse(format!("unknown method {method:?}")))?;
            cyclic_homology(eng, max_n, m)
        }
        TheoryArg::Hp => periodic_cyclic(eng, if parity == ParityArg::Even { Parity::Even } else { Parity::Odd }, max_n),
        TheoryArg::Cohomology => {
            hochschild_cohomology(eng, if coeff == CoeffArg::A { Coefficients::Regular } else { Coefficients::Dual }, max_n)
        }
    }
}

fn inner_elements(a: &Algebra, path: Option<&Path>) -> Result<(Element, Element)> {
    let f = a.field();
    match path {
        Some(p) => {
            let v = read_json(p)?;
            let get = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("elements file needs {k:?}")));
            Ok((Element::from_json(f, get("u")?)?, Element::from_json(f, get("a")?)?))
        }
        None => {
            let a_el = a.labels().last().map(|l| Element::basis(f, l.clone())).unwrap_or_else(|| Element::zero(f));
            Ok((a.unit(), a_el))
        }
    }
}

fn audit(file: &Path, suite: Suite, max_n: usize, k: usize, elements: Option<&Path>, cap: usize) -> Result<Response> {
    let a = finite(file)?;
    let eng = Engine::with_cap(&a, cap);
    let (report, passed, text) = match suite {
        Suite::Identities => {
            let checks = operator_identity_audit(&eng, max_n)?;
            let passed = checks.iter().all(|c| c.passed);
            let text = checks.iter().map(|c| format!("{} {} @ {}", if c.passed { "ok" } else { "FAIL" }, c.identity, c.degree)).collect::<Vec<_>>().join("\n");
            (json!({"algebra": a.name(), "suite": "identities", "checks": checks, "passed": passed}), passed, text)
        }
        Suite::Sbi => {
            let r = sbi_audit(&eng, max_n)?;
            let text = r.nodes.iter().map(|n| format!("{} {} dim {}", if n.exact { "exact" } else { "NOT EXACT" }, n.node, n.dim)).collect::<Vec<_>>().join("\n");
            (json!({"algebra": a.name(), "suite": "sbi", "audit": r, "passed": r.exact}), r.exact, text)
        }
        Suite::Inner => {
            let (u, x) = inner_elements(&a, elements)?;
            let r = inner_action_audit(&eng, &u, &x, max_n)?;
            (json!({"algebra": a.name(), "suite": "inner", "audit": r, "passed": r.passed}), r.passed, format!("inner actions trivial on HH: {}", r.passed))
        }
        Suite::Morita => {
            let r = morita_audit(k, &a, max_n, cap)?;
            let text = format!("Tr o i_* = id {:?}, HH(A) {:?}, HH(M_{k}(A)) {:?}", r.retraction, r.hh_a, r.hh_mk);
            (json!({"algebra": a.name(), "suite": "morita", "audit": r, "passed": r.passed}), r.passed, text)
        }
    };
    Ok(Response { report, text, passed })
}

fn pair(cocycle: &Path, element: &Path, family: Option<&Path>) -> Result<Response> {
    let phi = cocycle_from_json(&read_json(cocycle)?)?;
    let carrier = match read_json(element)?.get("algebra") {
        Some(spec) => carrier_from_spec(spec)?,
        None => phi.carrier().clone(),
    };
    let m = matrix_from_json(carrier.clone(), &read_json(element)?)?;
    if let Some(fam) = family {
        let u = matrix_from_json(carrier, &read_json(fam)?)?;
        let v = conjugation_invariance_test(&phi, &m, &u)?;
        let text = format!("value {} (d/dt {}), constant {}, passed {}", v.value, v.derivative, v.constant, v.passed);
        return Ok(Response { report: v.to_json(), text, passed: v.passed });
    }
    let p = if phi.degree() % 2 == 0 { pair_even(&phi, &m)? } else { pair_odd(&phi, &m)? };
    let text = format!("{} (degree {}, within window: {})", p.value, p.degree, p.within_window);
    Ok(Response::ok(p.to_json(), text))
}

fn gallery_cmd(name: Option<&str>, all: bool, settings: &Settings) -> Result<Response> {
    if all {
        let outcomes = acceptance::run_all(settings);
        return Ok(outcomes_response(&outcomes));
    }
    match name {
        Some(n) => {
            let o = gallery::run_entry(n, settings)?;
            Ok(Response { report: o.to_json(), text: o.to_text(), passed: o.passed })
        }
        None => {
            let list: Vec<Value> = gallery::entries().iter().map(|e| json!({"name": e.name, "about": e.about, "spec": e.spec})).collect();
            let text = gallery::entries().iter().map(|e| format!("{:<20} {}", e.name, e.about)).collect::<Vec<_>>().join("\n");
            Ok(Response::ok(json!({"entries": list}), text))
        }
    }
}

fn outcomes_response(outcomes: &[Outcome]) -> Response {
    let passed = outcomes.iter().all(|o| o.passed);
    let text = outcomes.iter().map(Outcome::to_text).collect::<String>();
    Response { report: json!({"passed": passed, "criteria": outcomes.iter().map(Outcome::to_json).collect::<Vec<_>>()}), text, passed }
}

/// Parses `args`, runs the command, prints the report and returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(r) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&r.report).expect("report serializes")),
                Format::Text => println!("{}", r.text),
            }
            if r.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&json!({"error": error_name(&e), "message": e.to_string()})).expect("json")),
                Format::Text => println!("error: {e}"),
            }
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}
