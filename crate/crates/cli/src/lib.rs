//! Command line front end: argument parsing, dispatch and rendering.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a computation
//! is undefined (pole, division by zero, wrong ring), 2 on usage errors,
//! including malformed expressions.

pub mod expr;

use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::Ratio;
use serde_json::{json, Value};

use qsuper_core::dual::{verify_dual_hopf, verify_uq_relations, Functional, Pairing};
use qsuper_core::hopf::{antipode, coproduct, counit, star, verify_coactions, verify_hopf};
use qsuper_core::qfun::little_jacobi;
use qsuper_core::repn::{
    cases, closed_form_case, gram_entries, haar, inner, matrix_coefficients, verify_closed_forms, verify_completeness,
    verify_corep, verify_cross_sigma_orthogonality, verify_e_products, verify_haar_zeta, verify_integral,
    verify_peter_weyl_formula, verify_power_formulas, verify_projection_formula, CorepIndex, Form,
};
use qsuper_core::spheres::{
    characters_of_s_infinity, check_witness, find_relations, sphere_basis_check, verify_coideal,
    verify_infinity_relations, verify_m, RelationKind, SphereParams,
};
use qsuper_core::superalg::{bigrade, verify_associativity, BiDegree, Element, Ring};
use qsuper_core::{Report, Route, Scalar};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(expr::ParseError),
    Compute(qsuper_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Compute(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<expr::ParseError> for CliError {
    fn from(e: expr::ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<qsuper_core::Error> for CliError {
    fn from(e: qsuper_core::Error) -> Self {
        CliError::Compute(e)
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RingArg {
    #[value(name = "B")]
    B,
    #[value(name = "Bsigma")]
    Bsigma,
    #[value(name = "Asigma")]
    Asigma,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Ring {
        match r {
            RingArg::B => Ring::B,
            RingArg::Bsigma => Ring::Bsigma,
            RingArg::Asigma => Ring::Asigma,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormArg {
    R,
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Stated,
    Derived,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Stated => Route::Stated,
            RouteArg::Derived => Route::Derived,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SphereCheck {
    Relations,
    Basis,
    Characters,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Superalg,
    Hopf,
    Coaction,
    Dual,
    Corep,
    Formulas,
    Haar,
    PeterWeyl,
    Completeness,
    Spheres,
    All,
}

const SUITES: [Suite; 10] = [
    Suite::Superalg,
    Suite::Hopf,
    Suite::Coaction,
    Suite::Dual,
    Suite::Corep,
    Suite::Formulas,
    Suite::Haar,
    Suite::PeterWeyl,
    Suite::Completeness,
    Suite::Spheres,
];

#[derive(Debug, Parser)]
#[command(name = "qsuper", version, about = "Exact computation in the quantum super group A(sigma)")]
pub struct Cli {
    /// Ring for expression arguments.
    #[arg(long, global = true, value_enum, default_value = "Asigma")]
    pub ring: RingArg,
    /// Also evaluate scalar results numerically, e.g. `q=-1/2`.
    #[arg(long, global = true, value_name = "q=RATIONAL")]
    pub numeric: Option<String>,
    /// Degree bound for verification suites and sphere basis checks.
    #[arg(long, global = true)]
    pub degree: Option<u32>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Bound each memo table to this many entries.
    #[arg(long, global = true, value_name = "N")]
    pub cache_size: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an expression.
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Coproduct.
    Delta {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Counit.
    Eps {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Antipode.
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Star involution.
    Star {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The (m, n) bigrading.
    Grade {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Pair a functional word in k, K (= k^-1), e, f with an element.
    Pair {
        #[arg(allow_hyphen_values = true)]
        functional: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Use the printed value of e(b) instead of the calibrated sign.
        #[arg(long)]
        uncalibrated: bool,
    },
    /// Haar functional.
    Haar {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Inner product `<x, y>`.
    Inner {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(long, value_enum, default_value = "r")]
        form: FormArg,
    },
    /// Little t-Jacobi polynomial in base t^-2.
    Jacobi(JacobiArgs),
    /// Matrix coefficients of an irreducible corepresentation.
    Matcoef {
        #[arg(long = "twoL")]
        two_l: i64,
        #[arg(long, default_value_t = 0)]
        s: u8,
        /// Also evaluate the closed forms and compare.
        #[arg(long)]
        closed_form: bool,
        #[arg(long, value_enum, default_value = "derived")]
        route: RouteArg,
    },
    /// Inner products between matrix coefficients.
    Gram {
        #[arg(long = "twoL-max")]
        two_l_max: i64,
    },
    /// Quantum super spheres.
    Sphere(SphereArgs),
    /// Run verification suites; exits 1 on any failure.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Check formulas as stated instead of in corrected form.
        #[arg(long, value_enum, default_value = "derived")]
        route: RouteArg,
    },
}

#[derive(Debug, Args)]
pub struct JacobiArgs {
    pub n: u32,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub alpha: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub beta: i64,
    /// Substitute z = zeta.
    #[arg(long)]
    pub zeta: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "params")]
pub struct SphereTarget {
    /// Comma separated scalar expressions.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub infinity: bool,
}

#[derive(Debug, Args)]
pub struct SphereArgs {
    #[command(flatten)]
    pub target: SphereTarget,
    #[arg(long, value_enum, default_value = "relations")]
    pub check: SphereCheck,
}

/// What a command produced.
pub struct Output {
    pub text: String,
    pub json: Value,
    /// A verification inside the command failed.
    pub failed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, failed: false }
    }
}

/// Result of one invocation, before printing.
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Invocation { code: 2, stdout: String::new(), stderr: rendered }
            } else {
                Invocation { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    let json = cli.json;
    match execute(&cli) {
        Ok(out) => {
            let stdout = if json {
                format!("{}\n", serde_json::to_string_pretty(&out.json).expect("serializable"))
            } else if out.text.ends_with('\n') {
                out.text
            } else {
                format!("{}\n", out.text)
            };
            Invocation { code: if out.failed { 1 } else { 0 }, stdout, stderr: String::new() }
        }
        Err(e) => Invocation { code: e.exit_code(), stdout: String::new(), stderr: format!("{e}\n") },
    }
}

fn parse_numeric(s: &str) -> CliResult<f64> {
    let v =
        s.strip_prefix("q=").ok_or_else(|| CliError::Usage(format!("--numeric expects q=<rational>, got '{s}'")))?;
    let r = Ratio::<i64>::from_str(v.trim())
        .map_err(|_| CliError::Usage(format!("--numeric expects a rational value, got '{v}'")))?;
    Ok(*r.numer() as f64 / *r.denom() as f64)
}

fn scalar_output(cli: &Cli, head: Value, label: &str, v: &Scalar) -> CliResult<Output> {
    let mut j = head;
    j["text"] = json!(v.to_string());
    j["value"] = v.to_json();
    let mut text = format!("{label}{v}");
    if let Some(arg) = &cli.numeric {
        let q = parse_numeric(arg)?;
        let z = v.eval_numeric(Complex64::new(q, 0.0))?;
        j["numeric"] = json!({"q": q, "re": z.re, "im": z.im});
        text.push_str(&format!("\n  at q = {q}: {}", render_complex(z)));
    }
    Ok(Output::ok(text, j))
}

fn render_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{} - {}i", z.re, -z.im)
    } else {
        format!("{} + {}i", z.re, z.im)
    }
}

fn element_output(command: &str, input: &str, x: &Element) -> Output {
    Output::ok(
        x.to_string(),
        json!({"command": command, "input": input, "ring": x.ring().name(), "text": x.to_string(), "value": x.to_json()}),
    )
}

fn reject_numeric(cli: &Cli) -> CliResult<()> {
    if cli.numeric.is_some() {
        return Err(CliError::Usage("--numeric applies only to scalar-valued commands".into()));
    }
    Ok(())
}

fn execute(cli: &Cli) -> CliResult<Output> {
    if let Some(n) = cli.cache_size {
        qsuper_core::cache::set_cache_limit(n);
    }
    let ring: Ring = cli.ring.into();
    let el = |s: &str| expr::element(s, ring);
    match &cli.command {
        Command::Nf { expr } => {
            reject_numeric(cli)?;
            Ok(element_output("nf", expr, &el(expr)?))
        }
        Command::Delta { expr } => {
            reject_numeric(cli)?;
            let x = el(expr)?;
            let d = coproduct(&x);
            Ok(Output::ok(
                d.to_string(),
                json!({"command": "delta", "input": expr, "ring": x.ring().name(), "text": d.to_string(), "value": d.to_json()}),
            ))
        }
        Command::Eps { expr } => {
            let v = counit(&el(expr)?);
            scalar_output(cli, json!({"command": "eps", "input": expr}), "", &v)
        }
        Command::Antipode { expr } => {
            reject_numeric(cli)?;
            Ok(element_output("antipode", expr, &antipode(&el(expr)?)?))
        }
        Command::Star { expr } => {
            reject_numeric(cli)?;
            Ok(element_output("star", expr, &star(&el(expr)?)?))
        }
        Command::Grade { expr } => {
            reject_numeric(cli)?;
            let (text, j) = match bigrade(&el(expr)?) {
                BiDegree::Homogeneous(m, n) => (format!("({m}, {n})"), json!([m, n])),
                BiDegree::Mixed => ("mixed".to_string(), json!("mixed")),
            };
            Ok(Output::ok(text, json!({"command": "grade", "input": expr, "bidegree": j})))
        }
        Command::Pair { functional, expr, uncalibrated } => {
            let phi = Functional::parse(functional).map_err(|e| CliError::Usage(e.to_string()))?;
            let p = if *uncalibrated { Pairing::uncalibrated() } else { Pairing::calibrated() };
            let v = p.eval(&phi, &el(expr)?);
            let head = json!({"command": "pair", "functional": functional, "input": expr, "e_sign": p.e_sign});
            let mut out = scalar_output(cli, head, "", &v)?;
            out.text.push_str(&format!("\n  (e(b) sign {})", p.e_sign));
            Ok(out)
        }
        Command::Haar { expr } => {
            let v = haar(&el(expr)?)?;
            scalar_output(cli, json!({"command": "haar", "input": expr}), "", &v)
        }
        Command::Inner { x, y, form } => {
            let f = match form {
                FormArg::R => Form::R,
                FormArg::L => Form::L,
            };
            let v = inner(f, &el(x)?, &el(y)?)?;
            let head = json!({"command": "inner", "form": format!("{f:?}"), "left": x, "right": y});
            scalar_output(cli, head, "", &v)
        }
        Command::Jacobi(a) => {
            reject_numeric(cli)?;
            jacobi(a)
        }
        Command::Matcoef { two_l, s, closed_form, route } => {
            reject_numeric(cli)?;
            matcoef(*two_l, *s, *closed_form, (*route).into())
        }
        Command::Gram { two_l_max } => {
            reject_numeric(cli)?;
            gram(*two_l_max)
        }
        Command::Sphere(a) => {
            reject_numeric(cli)?;
            sphere(a, cli.degree.unwrap_or(2))
        }
        Command::Verify { suite, route } => {
            reject_numeric(cli)?;
            Ok(verify(*suite, cli.degree.unwrap_or(3), (*route).into()))
        }
    }
}

fn jacobi(a: &JacobiArgs) -> CliResult<Output> {
    let p = little_jacobi(a.n, a.alpha, a.beta, &Scalar::t_pow(-2));
    let mut j = json!({
        "command": "jacobi", "n": a.n, "alpha": a.alpha, "beta": a.beta, "base": "t^-2",
        "text": p.to_string(), "polynomial": p.to_json(),
    });
    let mut text = p.to_string();
    if a.zeta {
        let x = p.eval_element(&Element::zeta());
        j["at_zeta"] = x.to_json();
        text = format!("{text}\n  at z = zeta: {x}");
    }
    Ok(Output::ok(text, j))
}

fn half(two: i64) -> String {
    if two % 2 == 0 {
        format!("{}", two / 2)
    } else {
        format!("{two}/2")
    }
}

fn matcoef(two_l: i64, s: u8, closed: bool, route: Route) -> CliResult<Output> {
    if s > 1 {
        return Err(CliError::Usage("--s must be 0 or 1".into()));
    }
    if !(0..=qsuper_core::repn::DEFAULT_MAX_TWO_L).contains(&two_l) {
        return Err(CliError::Usage(format!("--twoL must lie in 0..={}", qsuper_core::repn::DEFAULT_MAX_TWO_L)));
    }
    let m = matrix_coefficients(two_l, s)?;
    let mut text = format!("l = {}, s = {s} (unnormalized basis)\n", half(two_l));
    let idx: Vec<i64> = (0..=two_l).map(|k| 2 * k - two_l).collect();
    for &i in &idx {
        for &jj in &idx {
            text.push_str(&format!("m'[{}, {}] = {}\n", half(i), half(jj), m.entry(i, jj)));
        }
    }
    let mut j = json!({"command": "matcoef", "matrix": m.to_json()});
    let law = verify_corep(&m);
    let mut failed = !law.passed();
    text.push_str(&law.to_string());
    if closed {
        let mut rows = Vec::new();
        let mut agree = true;
        for &i in &idx {
            let mut row = Vec::new();
            for &jj in &idx {
                let ci = CorepIndex::new(two_l, i, jj, s)?;
                let mut forms = Vec::new();
                for case in cases(&ci) {
                    let cf = closed_form_case(&ci, case, route)?;
                    agree &= &cf == m.entry(i, jj);
                    forms.push(json!({"case": format!("{case:?}"), "text": cf.to_string()}));
                }
                row.push(Value::Array(forms));
            }
            rows.push(Value::Array(row));
        }
        failed |= !agree;
        text.push_str(&format!(
            "closed forms ({route:?}) {} the coproduct\n",
            if agree { "agree with" } else { "disagree with" }
        ));
        j["closed_forms"] = json!({"route": format!("{route:?}"), "agree": agree, "entries": rows});
    }
    j["corep_law"] = report_json(&law);
    Ok(Output { text, json: j, failed })
}

fn gram(two_l_max: i64) -> CliResult<Output> {
    if !(0..=3).contains(&two_l_max) {
        return Err(CliError::Usage("--twoL-max must lie in 0..=3".into()));
    }
    let entries = gram_entries(two_l_max)?;
    let mut text = String::new();
    let mut list = Vec::new();
    for e in entries.iter().filter(|e| !e.value.is_zero()) {
        text.push_str(&format!("<{}, {}>_{:?} = {}\n", e.left, e.right, e.form, e.value));
        list.push(
            json!({"form": format!("{:?}", e.form), "left": e.left, "right": e.right, "value": e.value.to_string()}),
        );
    }
    text.push_str(&format!("{} pairs, {} nonzero\n", entries.len(), list.len()));
    Ok(Output::ok(text, json!({"command": "gram", "twoL_max": two_l_max, "pairs": entries.len(), "nonzero": list})))
}

fn sphere_params(t: &SphereTarget) -> CliResult<SphereParams> {
    if t.infinity {
        return Ok(SphereParams::Infinity);
    }
    let raw = t.alpha.as_deref().unwrap_or_default();
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!("--alpha expects three comma separated values, got '{raw}'")));
    }
    let mut v = Vec::new();
    for p in parts {
        let x = expr::element(p, Ring::Asigma)?;
        v.push(expr::as_scalar(&x).ok_or_else(|| CliError::Usage(format!("'{p}' is not a scalar")))?);
    }
    let arr: [Scalar; 3] = v.try_into().expect("three values");
    Ok(SphereParams::alpha(arr)?)
}

fn sphere(a: &SphereArgs, degree: u32) -> CliResult<Output> {
    let p = sphere_params(&a.target)?;
    let mut j = json!({"command": "sphere", "params": p.to_string()});
    let mut text = format!("sphere {p}\n");
    let mut failed = false;
    match a.check {
        SphereCheck::Relations => {
            j["check"] = json!("relations");
            let mut list = Vec::new();
            for kind in RelationKind::ALL {
                let w = find_relations(&p, kind);
                let r = check_witness(&p, &w);
                failed |= !r.passed();
                text.push_str(&w.to_string());
                list.push(w.to_json());
            }
            j["relations"] = Value::Array(list);
        }
        SphereCheck::Basis => {
            j["check"] = json!("basis");
            let r = sphere_basis_check(&p, degree);
            failed = !r.passed();
            text.push_str(&r.to_string());
            j["report"] = report_json(&r);
        }
        SphereCheck::Characters => {
            if p != SphereParams::Infinity {
                return Err(CliError::Usage("--check characters needs --infinity".into()));
            }
            j["check"] = json!("characters");
            let ch = characters_of_s_infinity()?;
            let rows: Vec<Value> =
                ch.iter().map(|c| json!(c.iter().map(|x| x.to_string()).collect::<Vec<_>>())).collect();
            for c in &ch {
                text.push_str(&format!("(y-1, y0, y1) = ({}, {}, {})\n", c[0], c[1], c[2]));
            }
            j["characters"] = Value::Array(rows);
        }
    }
    Ok(Output { text, json: j, failed })
}

fn report_json(r: &Report) -> Value {
    let mut j = r.to_json();
    j["passed"] = json!(r.passed());
    j
}

fn suite_reports(suite: Suite, degree: u32, route: Route) -> Vec<Report> {
    let d = degree as i64;
    match suite {
        Suite::Superalg => vec![verify_associativity(200, degree, 1)],
        Suite::Hopf => vec![verify_hopf(degree)],
        Suite::Coaction => vec![verify_coactions(degree)],
        Suite::Dual => vec![verify_uq_relations(degree), verify_dual_hopf(50)],
        Suite::Corep => {
            let mut law = Report::new(format!("corepresentation law, 2l <= {d}"));
            for two_l in 0..=d {
                for s in 0..=1 {
                    match matrix_coefficients(two_l, s) {
                        Ok(m) => law.merge(verify_corep(&m)),
                        Err(e) => law.check(false, format!("2l={two_l} s={s}"), e, "matrix"),
                    }
                }
            }
            vec![law, verify_closed_forms(d, route)]
        }
        Suite::Formulas => vec![verify_power_formulas(degree), verify_projection_formula(degree)],
        Suite::Haar => vec![verify_integral(degree), verify_haar_zeta(degree)],
        Suite::PeterWeyl => {
            let mut v = vec![verify_peter_weyl_formula(d), verify_e_products(d, route)];
            if route == Route::Stated {
                v.push(verify_cross_sigma_orthogonality(d));
            }
            v
        }
        Suite::Completeness => vec![verify_completeness(degree, d)],
        Suite::Spheres => {
            vec![verify_m(&[-0.5, -2.0]), verify_coideal(&SphereParams::Infinity), verify_infinity_relations(route)]
        }
        Suite::All => SUITES.iter().flat_map(|&s| suite_reports(s, degree, route)).collect(),
    }
}

fn verify(suite: Suite, degree: u32, route: Route) -> Output {
    let reports = suite_reports(suite, degree, route);
    let passed = reports.iter().all(|r| r.passed());
    let mut text: String = reports.iter().map(|r| r.to_string()).collect();
    text.push_str(if passed { "all checks passed\n" } else { "verification failed\n" });
    let name = suite.to_possible_value().expect("named").get_name().to_string();
    let j = json!({
        "command": "verify", "suite": name, "degree": degree, "route": format!("{route:?}"),
        "passed": passed, "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
    });
    Output { text, json: j, failed: !passed }
}
