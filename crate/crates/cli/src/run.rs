use std::ffi::OsString;
use std::io::Write;

use clap::{ArgGroup, Parser, ValueEnum};
use omega_core::omega::{
    compare_results, cross_check, evaluate, CrossCheckReport, Method, OmegaError, OmegaProblem,
    OmegaResult,
};
use omega_core::symfun::{Alphabet, SymfunError};
use omega_core::{FactoredRational, Monomial, Polynomial};

use crate::parse::parse_expression_with;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

/// Exact MacMahon Omega elimination of lambda^k / prod(1 - x*lambda) prod(1 - y/lambda).
#[derive(Parser, Debug)]
#[command(name = "omega", version)]
#[command(group(ArgGroup::new("input").required(true).args(["expr", "k"])))]
struct Args {
    /// Expression such as "omega(lambda / ((1-x1*lambda)*(1-y/lambda)))".
    #[arg(long, conflicts_with_all = ["k", "x", "y"])]
    expr: Option<String>,

    /// Power of lambda in the numerator.
    #[arg(long, requires = "x")]
    k: Option<u32>,

    /// Comma-separated X letters, e.g. "x1,x2,q^2*t".
    #[arg(long, requires = "k")]
    x: Option<String>,

    /// Comma-separated Y letters.
    #[arg(long, requires = "k")]
    y: Option<String>,

    #[arg(long, value_enum, default_value_t = MethodArg::Schur)]
    method: MethodArg,

    /// Total-degree cutoff for the series oracle and for --check.
    #[arg(long, default_value_t = 8)]
    truncate: u32,

    /// Run all three evaluators and compare them.
    #[arg(long)]
    check: bool,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Name of lambda when the numerator is 1.
    #[arg(long)]
    lambda: Option<String>,

    /// Extra X letters specialized to 0 after evaluation; needed when k >= n.
    #[arg(long, default_value_t = 0)]
    pad: usize,

    /// Adds a spurious term to the Schur numerator (negative control for --check).
    #[arg(long, hide = true)]
    corrupt_numerator: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Schur,
    Lagrange,
    Series,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Disagreement(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Disagreement(_) => EXIT_DISAGREEMENT,
            Failure::Precondition(_) => EXIT_PRECONDITION,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Disagreement(m) | Failure::Precondition(m) => m,
        }
    }

    fn from_omega(e: OmegaError, pad: usize) -> Failure {
        match e {
            OmegaError::KTooLarge { k, n } => {
                let suggested = pad + (k as usize + 1 - n);
                Failure::Precondition(format!("{e}; rerun with --pad {suggested}"))
            }
            OmegaError::MethodDisagreement { .. } => Failure::Disagreement(e.to_string()),
            OmegaError::Symfun(
                SymfunError::PreconditionViolated { .. }
                | SymfunError::RepeatedGenerators
                | SymfunError::NotAVariable(_)
                | SymfunError::NotSymmetric,
            ) => Failure::Precondition(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(&args) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn execute(args: &Args) -> Result<(String, i32), Failure> {
    let problem = build_problem(args)?;
    if args.check {
        let report = check(args, &problem)?;
        let text = match args.format {
            Format::Text => report.to_string(),
            Format::Json => to_json(&report),
        };
        let code = if report.all_passed() {
            EXIT_OK
        } else {
            EXIT_DISAGREEMENT
        };
        return Ok((text, code));
    }
    let methods: &[Method] = match args.method {
        MethodArg::Schur => &[Method::Schur],
        MethodArg::Lagrange => &[Method::Lagrange],
        MethodArg::Series => &[Method::Series],
        MethodArg::All => &[Method::Schur, Method::Lagrange, Method::Series],
    };
    let mut results = Vec::new();
    for &m in methods {
        let mut r = evaluate(&problem, m, args.pad, args.truncate)
            .map_err(|e| Failure::from_omega(e, args.pad))?;
        if args.corrupt_numerator && m == Method::Schur {
            r = corrupt(&problem, r)?;
        }
        results.push(r);
    }
    let text = match (args.format, results.as_slice()) {
        (Format::Text, [single]) => single.value.to_string(),
        (Format::Text, many) => many
            .iter()
            .map(|r| format!("{}: {}", r.method, r.value))
            .collect::<Vec<_>>()
            .join("\n"),
        (Format::Json, [single]) => to_json(single),
        (Format::Json, many) => to_json(&many),
    };
    Ok((text, EXIT_OK))
}

fn check(args: &Args, problem: &OmegaProblem) -> Result<CrossCheckReport, Failure> {
    let fail = |e| Failure::from_omega(e, args.pad);
    let padded = problem.zero_pad(args.pad);
    if !args.corrupt_numerator {
        return cross_check(&padded.problem, args.truncate).map_err(fail);
    }
    let p = &padded.problem;
    let schur = corrupt(
        p,
        evaluate(p, Method::Schur, 0, args.truncate).map_err(fail)?,
    )?;
    let lagrange = evaluate(p, Method::Lagrange, 0, args.truncate).map_err(fail)?;
    let series = evaluate(p, Method::Series, 0, args.truncate).map_err(fail)?;
    compare_results(p, args.truncate, &schur, &lagrange, &series).map_err(fail)
}

/// Adds the first `X` letter to the numerator.
fn corrupt(problem: &OmegaProblem, r: OmegaResult) -> Result<OmegaResult, Failure> {
    let extra = Polynomial::from(problem.x().letters()[0].clone());
    let factors = r
        .value
        .denominator_factors()
        .iter()
        .map(|d| (d.factor.clone(), d.multiplicity));
    let value = FactoredRational::new(r.value.numerator() + &extra, factors)
        .map_err(|e| Failure::Input(e.to_string()))?;
    Ok(OmegaResult { value, ..r })
}

fn build_problem(args: &Args) -> Result<OmegaProblem, Failure> {
    let problem = if let Some(src) = &args.expr {
        let lambda = args.lambda.as_deref().unwrap_or("lambda");
        let ast = parse_expression_with(src, lambda).map_err(|e| Failure::Input(e.to_string()))?;
        if args.lambda.is_some() && ast.lambda_name.name() != lambda {
            return Err(Failure::Input(format!(
                "the numerator names lambda `{}` but --lambda is `{lambda}`",
                ast.lambda_name
            )));
        }
        ast.to_problem()
    } else {
        let k = args.k.expect("clap enforces --k");
        let x = parse_letters(args.x.as_deref().unwrap_or(""), "--x")?;
        let y = parse_letters(args.y.as_deref().unwrap_or(""), "--y")?;
        OmegaProblem::new(k, Alphabet::new(x), Alphabet::new(y))
    };
    problem.map_err(|e| Failure::Input(e.to_string()))
}

fn parse_letters(list: &str, flag: &str) -> Result<Vec<Monomial>, Failure> {
    if list.trim().is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|item| {
            let p: Polynomial = item.parse().map_err(|e| {
                Failure::Input(format!(
                    "{flag}: cannot parse letter `{}`: {e}",
                    item.trim()
                ))
            })?;
            match p.as_term() {
                Some((m, c)) if *c == 1.into() && !m.is_one() => Ok(m.clone()),
                _ => Err(Failure::Input(format!(
                    "{flag}: letter `{}` must be a product of variable powers",
                    item.trim()
                ))),
            }
        })
        .collect()
}

fn to_json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("results serialize")
}
