//! `algext`: command-line driver for the algebra kernel.
//!
//! Exit codes: 0 on success (including expected negative verdicts such as an
//! infeasible counterexample system), 2 when the mathematics says no and a
//! structured failure report is printed, 1 on bad input or internal errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use algext::algebra::{element_from_json, ExtensionJson};
use algext::extensions::{
    condition_star_check, counterexample_build, counterexample_verify, fdss_envelope, lift_subalgebra,
    matricial_envelope, Complement, FeasibilityVerdict, NuChoice, StarOutcome, StarProblem,
};
use algext::generate::{generate_random_extension, DimProfile, Rng64};
use algext::linalg::Subspace;
use algext::regular::unit_regular_witness;
use algext::structure::{division_matrix_units, index_of_nilpotence, is_matricial, radical, verify_extension, wedderburn};
use algext::{AlgElement, AlgError, Algebra, ExtensionInstance, Field, FieldDescriptor};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "algext", version, about = "Exact computations with finite-dimensional associative algebras")]
struct Cli {
    /// Algebra or extension instance (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print the full JSON report instead of a text summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Radical, Wedderburn components and matricial verdict of an algebra.
    Analyze,
    /// Basis of the Jacobson radical and its index of nilpotence.
    Radical,
    /// A certified subalgebra containing given elements of an extension.
    Envelope {
        #[arg(long, value_enum)]
        kind: EnvelopeKind,
        #[command(flatten)]
        elements: ElementArgs,
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Matrix units of a semisimple algebra (over division algebras if needed).
    Split,
    /// An idempotent of J fixing the J-parts of given elements and commuting
    /// with a lifted complement.
    Centralize {
        #[command(flatten)]
        elements: ElementArgs,
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Builds and solves the window system of the counterexample.
    Counterexample {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        /// Sanity mode with nu = 0, where the system must be feasible.
        #[arg(long)]
        nu_zero: bool,
    },
    /// Unit-regularity witnesses x y x = x, x u x = x.
    Unitregular {
        /// Comma-separated coordinates of one element.
        #[arg(long)]
        element: Option<String>,
        /// Number of seeded random elements when no element is given.
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// Re-verifies the class claims of an extension instance.
    VerifyExtension,
    /// A seeded random extension instance.
    Generate {
        /// For example `J=2;Q=1,1` or `J=2,1:2;Q=1:2`.
        #[arg(long)]
        profile: String,
        /// `Q`, `Q(i)`, `F<p>`, `F<p>(t)` or a JSON field descriptor.
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EnvelopeKind {
    Matricial,
    Fdss,
}

#[derive(Args, Debug)]
struct ElementArgs {
    /// JSON file with a list of elements (lists of coordinate strings).
    #[arg(long)]
    elements: Option<PathBuf>,
    /// Number of seeded random elements when no file is given.
    #[arg(long, default_value_t = 2)]
    count: usize,
}

/// Used when `--input` is absent: the instance is generated from the seed.
#[derive(Args, Debug)]
struct InstanceArgs {
    #[arg(long)]
    profile: Option<String>,
    #[arg(long, default_value = "Q")]
    field: String,
}

/// A command's outcome before printing.
enum Outcome {
    Success { data: Value, summary: Vec<String> },
    Failure { data: Value, summary: Vec<String> },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Alg(AlgError),
}

impl From<AlgError> for CliError {
    fn from(e: AlgError) -> Self {
        CliError::Alg(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// Errors that are answers about the input rather than problems with it.
fn is_verdict(e: &AlgError) -> bool {
    use AlgError::*;
    matches!(
        e,
        NotSemisimple
            | NotSplit
            | NotSimple
            | NotMatricial(_)
            | NotRegularElement
            | InfeasibleSystem(_)
            | NotAUnit
            | NotUnital
            | NotSeparable
            | CertificateMissing(_)
            | NotASplitting(_)
            | NotAComplement(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let result = run(&cli).or_else(|e| match e {
        CliError::Alg(e) if is_verdict(&e) => Ok(Outcome::Failure {
            data: json!({ "error": e.code(), "message": e.to_string() }),
            summary: vec![format!("{}: {e}", e.code())],
        }),
        e => Err(e),
    });
    match result {
        Ok(Outcome::Success { data, summary }) => {
            emit(&cli, name, "ok", data, &summary);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failure { data, summary }) => {
            emit(&cli, name, "failure", data, &summary);
            ExitCode::from(2)
        }
        Err(e) => {
            let (code, message) = match e {
                CliError::Usage(m) => ("UsageError", m),
                CliError::Alg(e) => (e.code(), e.to_string()),
            };
            if cli.json {
                out(&pretty(&json!({ "command": name, "status": "error", "error": code, "message": message })));
            } else {
                eprintln!("error [{code}]: {message}");
            }
            ExitCode::from(1)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze => "analyze",
        Command::Radical => "radical",
        Command::Envelope { .. } => "envelope",
        Command::Split => "split",
        Command::Centralize { .. } => "centralize",
        Command::Counterexample { .. } => "counterexample",
        Command::Unitregular { .. } => "unitregular",
        Command::VerifyExtension => "verify-extension",
        Command::Generate { .. } => "generate",
    }
}

/// Prints a line, ignoring a closed pipe.
fn out(line: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn emit(cli: &Cli, name: &str, status: &str, data: Value, summary: &[String]) {
    if !cli.json {
        for line in summary {
            out(line);
        }
    } else if matches!(cli.command, Command::Generate { .. }) {
        // the instance itself, so it can be fed back through --input
        out(&pretty(&data));
    } else {
        out(&pretty(&json!({ "command": name, "status": status, "seed": cli.seed, "result": data })));
    }
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Analyze => analyze(&load_algebra(cli)?),
        Command::Radical => radical_report(&load_algebra(cli)?),
        Command::Split => split(&load_algebra(cli)?),
        Command::Envelope { kind, elements, instance } => {
            let ext = load_or_generate(cli, instance, *kind)?;
            let xs = load_elements(cli, ext.algebra(), elements)?;
            envelope(&ext, &xs, *kind)
        }
        Command::Centralize { elements, instance } => {
            let ext = load_or_generate(cli, instance, EnvelopeKind::Matricial)?;
            let xs = load_elements(cli, ext.algebra(), elements)?;
            centralize(&ext, &xs)
        }
        Command::Counterexample { p, n, nu_zero } => counterexample(*p, *n, *nu_zero),
        Command::Unitregular { element, count } => {
            let a = load_algebra(cli)?;
            let xs = match element {
                Some(s) => {
                    let coords: Vec<String> = s.split(',').map(|c| c.trim().to_string()).collect();
                    vec![element_from_json(&a, &coords)?]
                }
                None => random_elements(&a, cli.seed, *count, true),
            };
            unitregular(&a, &xs)
        }
        Command::VerifyExtension => verify(&load_extension(cli)?),
        Command::Generate { profile, field } => generate(cli.seed, field, profile),
    }
}

fn read_input(cli: &Cli) -> CliResult<(String, PathBuf)> {
    let path = cli.input.clone().ok_or_else(|| CliError::Usage("--input FILE is required".into()))?;
    let text = read(&path)?;
    Ok((text, path))
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

/// An algebra file, or the ambient algebra of an extension file.
fn load_algebra(cli: &Cli) -> CliResult<Algebra> {
    let (text, _) = read_input(cli)?;
    if let Ok(ext) = serde_json::from_str::<ExtensionJson>(&text) {
        return Ok(Algebra::from_json(&ext.algebra)?);
    }
    Ok(Algebra::parse_json(&text)?)
}

fn load_extension(cli: &Cli) -> CliResult<ExtensionInstance> {
    let (text, _) = read_input(cli)?;
    Ok(ExtensionInstance::parse_json(&text)?)
}

fn load_or_generate(cli: &Cli, args: &InstanceArgs, kind: EnvelopeKind) -> CliResult<ExtensionInstance> {
    if cli.input.is_some() {
        return load_extension(cli);
    }
    let default = match kind {
        EnvelopeKind::Matricial => "J=2;Q=1,1",
        EnvelopeKind::Fdss => "J=2,1:2;Q=1:2",
    };
    let f = parse_field(&args.field)?;
    let profile = DimProfile::parse(args.profile.as_deref().unwrap_or(default))?;
    Ok(generate_random_extension(cli.seed, &f, &profile)?.instance)
}

fn load_elements(cli: &Cli, a: &Algebra, args: &ElementArgs) -> CliResult<Vec<AlgElement>> {
    match &args.elements {
        Some(path) => {
            let raw: Vec<Vec<String>> = serde_json::from_str(&read(path)?)
                .map_err(|e| CliError::Alg(AlgError::Parse(e.to_string())))?;
            raw.iter().map(|v| element_from_json(a, v).map_err(CliError::from)).collect()
        }
        None => Ok(random_elements(a, cli.seed, args.count, false)),
    }
}

/// Seeded random elements; with `singular`, products `x y²`, which are
/// often non-units.
fn random_elements(a: &Algebra, seed: u64, count: usize, singular: bool) -> Vec<AlgElement> {
    let mut rng = Rng64::seed_from_u64(seed);
    let f = a.field();
    let mut draw = || -> AlgElement { (0..a.dim()).map(|_| f.random(&mut rng)).collect() };
    (0..count)
        .map(|_| {
            let x = draw();
            if singular {
                let y = draw();
                a.mul3(&x, &y, &y)
            } else {
                x
            }
        })
        .collect()
}

fn parse_field(s: &str) -> CliResult<Field> {
    let s = s.trim();
    if s.starts_with('{') {
        let d: FieldDescriptor = serde_json::from_str(s).map_err(|e| AlgError::Parse(e.to_string()))?;
        return Ok(Field::make(&d)?);
    }
    let bad = || CliError::Usage(format!("unrecognized field `{s}`"));
    match s {
        "Q" => return Ok(Field::rationals()),
        "Q(i)" => {
            let q = Field::rationals();
            return Ok(Field::extension(&q, vec![q.one(), q.zero(), q.one()], "i")?);
        }
        _ => {}
    }
    let rest = s.strip_prefix("GF").or_else(|| s.strip_prefix('F')).ok_or_else(bad)?;
    let rest = rest.strip_prefix('_').unwrap_or(rest);
    if let Some(p) = rest.strip_suffix("(t)") {
        let p: u64 = p.parse().map_err(|_| bad())?;
        return Ok(Field::rational_functions(p, "t")?);
    }
    let p: u64 = rest.parse().map_err(|_| bad())?;
    Ok(Field::prime(p)?)
}

fn fmt_vecs(a: &Algebra, vs: &[AlgElement]) -> Vec<Vec<String>> {
    vs.iter().map(|v| a.format_element(v)).collect()
}

fn analyze(a: &Algebra) -> CliResult<Outcome> {
    let w = wedderburn(a)?;
    let matricial = w.is_matricial();
    let components: Vec<Value> = w.components.iter().map(|c| json!({ "n": c.n, "d": c.d })).collect();
    let mut summary = vec![
        format!("field: {}", a.field()),
        format!("dimension: {}", a.dim()),
        format!("radical dimension: {}", w.radical.dim()),
        format!("semisimple: {}", w.is_semisimple()),
        format!("matricial: {matricial}"),
    ];
    for c in &w.components {
        summary.push(format!("component: M_{}(D), dim D = {}", c.n, c.d));
    }
    let data = json!({
        "dim": a.dim(),
        "semisimple": w.is_semisimple(),
        "matricial": matricial,
        "components": components,
        "wedderburn": w.to_json(),
    });
    Ok(Outcome::Success { data, summary })
}

fn radical_report(a: &Algebra) -> CliResult<Outcome> {
    let rad = radical(a)?;
    let class = nilpotency_class(a, &rad);
    let mut summary = vec![format!("radical dimension: {}", rad.dim())];
    if class > 0 {
        summary.push(format!("nilpotency class: rad^{class} = 0"));
    }
    let mut data = json!({ "dim": rad.dim(), "basis": fmt_vecs(a, rad.basis()), "nilpotency_class": class });
    if rad.dim() == 0 {
        let index = index_of_nilpotence(a)?;
        summary.push(format!("index of nilpotence of A: {index}"));
        data["index_of_nilpotence"] = json!(index);
    }
    Ok(Outcome::Success { data, summary })
}

/// Least `k` with `N^k = 0`.
fn nilpotency_class(a: &Algebra, n: &Subspace) -> usize {
    let mut power = n.clone();
    let mut k = 1;
    while power.dim() > 0 {
        let products = power.basis().iter().flat_map(|x| n.basis().iter().map(|y| a.mul(x, y))).collect();
        power = a.span(products);
        k += 1;
    }
    if n.dim() == 0 {
        0
    } else {
        k
    }
}

fn split(a: &Algebra) -> CliResult<Outcome> {
    let verdict = is_matricial(a)?;
    if let Some(units) = verdict.units.filter(|_| verdict.reason.is_none()) {
        units.verify(a)?;
        let summary = vec![format!("matricial: blocks {:?}", units.sizes)];
        return Ok(Outcome::Success { data: json!({ "matricial": true, "units": units.to_json(a) }), summary });
    }
    if radical(a)?.dim() != 0 {
        return Err(AlgError::NotSemisimple.into());
    }
    let blocks = division_matrix_units(a)?;
    let summary = blocks.iter().map(|b| format!("block: M_{}(D), dim D = {}", b.n(), b.division_basis.len())).collect();
    let data: Vec<Value> = blocks
        .iter()
        .map(|b| {
            json!({
                "n": b.n(),
                "units": b.units.iter().map(|row| fmt_vecs(a, row)).collect::<Vec<_>>(),
                "division_basis": fmt_vecs(a, &b.division_basis),
            })
        })
        .collect();
    Ok(Outcome::Success { data: json!({ "matricial": false, "blocks": data }), summary })
}

fn envelope(ext: &ExtensionInstance, xs: &[AlgElement], kind: EnvelopeKind) -> CliResult<Outcome> {
    let r = ext.algebra();
    let (space, basis, trace, certificate, line) = match kind {
        EnvelopeKind::Matricial => {
            let out = matricial_envelope(ext, xs)?;
            let line = format!("certificate: matrix units, blocks {:?}", out.certificate.sizes);
            let cert = json!(out.certificate.to_json(&out.algebra));
            (out.space, out.basis, out.trace, cert, line)
        }
        EnvelopeKind::Fdss => {
            let out = fdss_envelope(ext, xs)?;
            let line = format!("certificate: radical of S is zero ({} components)", out.certificate.components.len());
            let cert = json!(out.certificate.to_json());
            (out.space, out.basis, out.trace, cert, line)
        }
    };
    let summary = vec![
        format!("dim R: {}, dim J: {}", r.dim(), ext.ideal().dim()),
        format!("elements: {}", xs.len()),
        format!("envelope dimension: {}", space.dim()),
        format!("route: {:?}", trace.route),
        line,
    ];
    let data = json!({
        "dim": space.dim(),
        "elements": fmt_vecs(r, xs),
        "basis": fmt_vecs(r, &basis),
        "trace": trace.to_json(r),
        "certificate": certificate,
    });
    Ok(Outcome::Success { data, summary })
}

fn centralize(ext: &ExtensionInstance, xs: &[AlgElement]) -> CliResult<Outcome> {
    let pres = &ext.presentation;
    let r = ext.algebra();
    let f = r.field();
    let (t, _) = lift_subalgebra(pres, &Subspace::full(f, pres.quotient.dim()))?;
    let split = Complement::new(f, &t, ext.ideal())?;
    let ys: Vec<AlgElement> = xs.iter().map(|x| split.split(x).1).collect();
    let problem = StarProblem::Algebra { r: r.clone(), j: ext.ideal().clone(), t: t.clone(), y: ys.clone() };
    match condition_star_check(&problem)? {
        StarOutcome::Found { e, route } => {
            let summary = vec![
                format!("complement dimension: {}", t.dim()),
                format!("route: {route:?}"),
                format!("e: [{}]", r.format_element(&e).join(", ")),
            ];
            let data = json!({
                "route": route,
                "complement": fmt_vecs(r, t.basis()),
                "y": fmt_vecs(r, &ys),
                "e": r.format_element(&e),
            });
            Ok(Outcome::Success { data, summary })
        }
        StarOutcome::Failed(report) => {
            let summary = vec![format!("no idempotent: {}", report.reason)];
            Ok(Outcome::Failure { data: json!(report), summary })
        }
    }
}

fn counterexample(p: u64, n: usize, nu_zero: bool) -> CliResult<Outcome> {
    let nu = if nu_zero { NuChoice::Zero } else { NuChoice::Jordan };
    let sys = counterexample_build(p, n, nu)?;
    sys.check_window()?;
    let verdict = counterexample_verify(&sys)?;
    let report = sys.report(&verdict);
    let name = match verdict {
        FeasibilityVerdict::Infeasible { .. } => "Infeasible",
        FeasibilityVerdict::Feasible { .. } => "Feasible",
    };
    let summary = vec![
        format!("p = {p}, n = {n}, nu = {:?}", nu),
        format!("unknowns: {}, equations: {}", report.unknowns, report.equations),
        format!("verdict: {name}"),
    ];
    Ok(Outcome::Success { data: json!(report), summary })
}

fn unitregular(a: &Algebra, xs: &[AlgElement]) -> CliResult<Outcome> {
    let mut summary = Vec::new();
    let mut witnesses = Vec::new();
    for x in xs {
        let w = unit_regular_witness(a, x)?;
        w.verify(a)?;
        summary.push(format!(
            "x = [{}]: y = [{}], unit {}",
            a.format_element(x).join(", "),
            a.format_element(&w.y).join(", "),
            if w.unit.is_some() { "found" } else { "not found" }
        ));
        witnesses.push(w.to_json(a));
    }
    Ok(Outcome::Success { data: json!({ "witnesses": witnesses }), summary })
}

fn verify(ext: &ExtensionInstance) -> CliResult<Outcome> {
    let v = verify_extension(ext)?;
    let summary = vec![
        format!("ideal ({:?}, dim {}): {}", v.ideal.claimed, v.ideal_dim, if v.ideal.holds { "holds" } else { "fails" }),
        format!(
            "quotient ({:?}, dim {}): {}",
            v.quotient.claimed,
            v.quotient_dim,
            if v.quotient.holds { "holds" } else { "fails" }
        ),
    ];
    let data = json!(v);
    Ok(if v.all_hold() { Outcome::Success { data, summary } } else { Outcome::Failure { data, summary } })
}

fn generate(seed: u64, field: &str, profile: &str) -> CliResult<Outcome> {
    let f = parse_field(field)?;
    let gen = generate_random_extension(seed, &f, &DimProfile::parse(profile)?)?;
    let inst = gen.instance;
    let summary = vec![
        format!("field: {f}"),
        format!("dim R: {}", inst.algebra().dim()),
        format!("dim J: {}", inst.ideal().dim()),
        format!("classes: ideal {:?}, quotient {:?}", inst.ideal_class, inst.quotient_class),
    ];
    Ok(Outcome::Success { data: json!(inst.to_json()), summary })
}
