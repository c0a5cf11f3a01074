use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use orthorec_core::diffop::DiffOp;
use orthorec_core::engine::{recurrence_for, Mode, RecurrenceResult};
use orthorec_core::families::FamilySpec;
use orthorec_core::oracle::{check_relation, BasisPrefix};
use orthorec_core::parse::{parse_operator, parse_xpoly};
use orthorec_core::render::recurrence_text;
use orthorec_core::Error;

/// Recurrence for the coefficients of solutions of a linear differential
/// equation expanded in a classical orthogonal polynomial basis.
#[derive(Parser, Debug)]
#[command(name = "orthorec", version)]
struct Cli {
    /// Operator, e.g. '(1-x^2)*Dx^2 - x*Dx + 4'. `Dx` is d/dx.
    operator: String,
    /// chebyshev, gegenbauer:LAMBDA, jacobi:ALPHA,BETA, laguerre:ALPHA,
    /// hermite or taylor.
    #[arg(long, default_value = "chebyshev")]
    basis: String,
    /// auto, standard, theta, endpoint:+1, endpoint:-1 or taylor.
    #[arg(long, default_value = "auto")]
    mode: String,
    /// text or json.
    #[arg(long, default_value = "text")]
    format: String,
    /// Name of the coefficient sequence.
    #[arg(long, default_value = "u")]
    name: String,
    /// Polynomial f in x: checks num.[psi_n](f) = den.[psi_n](L f) exactly.
    #[arg(long)]
    check: Option<String>,
    /// Second operator: use the symmetric product of both operators.
    #[arg(long)]
    product: Option<String>,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::UnknownFamily(_)
        | Error::InvalidSymbol(_)
        | Error::ReservedSymbol(_)
        | Error::TooManySymbols(_) => 1,
        _ => 2,
    }
}

struct Output {
    result: RecurrenceResult,
    check: Option<bool>,
}

fn run(cli: &Cli) -> Result<Output, Error> {
    if cli.format != "text" && cli.format != "json" {
        return Err(Error::Unsupported(format!("unknown format '{}'", cli.format)));
    }
    let mut mode = Mode::parse(&cli.mode)?;
    let spec = if cli.basis == "taylor" {
        if matches!(mode, Mode::Auto) {
            mode = Mode::Taylor;
        }
        None
    } else {
        Some(FamilySpec::parse(&cli.basis)?)
    };
    if spec.is_none() && mode != Mode::Taylor {
        return Err(Error::Unsupported(format!("mode {mode} needs an orthogonal basis")));
    }
    let mut l: DiffOp = parse_operator(&cli.operator)?;
    if let Some(p) = &cli.product {
        l = l.symmetric_product(&parse_operator(p)?)?;
    }
    let result = recurrence_for(&l, spec.as_ref(), mode)?;
    let check = match &cli.check {
        None => None,
        Some(s) => {
            let f = parse_xpoly(s)?;
            let lf = l.apply(&f);
            let deg = f.degree().unwrap_or(0).max(lf.degree().unwrap_or(0));
            let basis = match &spec {
                Some(sp) if mode != Mode::Taylor => BasisPrefix::build(sp, deg.max(1))?,
                _ => BasisPrefix::taylor(deg.max(1)),
            };
            Some(check_relation(&result.fraction, &l, &f, &basis)?)
        }
    };
    Ok(Output { result, check })
}

fn coeff_strings(op: &orthorec_core::shift::ShiftOp) -> Vec<String> {
    op.coeffs().iter().map(|c| c.to_string()).collect()
}

fn render(cli: &Cli, out: &Output) -> String {
    let r = &out.result;
    let line = recurrence_text(&r.recurrence, &cli.name);
    if cli.format == "json" {
        let mut v = json!({
            "order": r.recurrence.len().saturating_sub(1),
            "coefficients": r.recurrence.iter().map(|p| orthorec_core::render::poly_to_string(p)).collect::<Vec<_>>(),
            "numerator": coeff_strings(r.fraction.num()),
            "denominator": coeff_strings(r.fraction.den()),
            "hypotheses": r.hypotheses.conditions,
            "mode": r.mode.to_string(),
            "basis": r.basis,
            "recurrence": line,
        });
        if let Some(c) = out.check {
            v["check"] = json!(c);
        }
        return format!("{}\n", serde_json::to_string_pretty(&v).expect("json"));
    }
    let mut s = format!("{line}\n");
    s.push_str(&format!("mode: {}\n", r.mode));
    s.push_str(&format!("basis: {}\n", r.basis));
    s.push_str(&format!("fraction: {}\n", r.fraction));
    s.push_str("hypotheses:\n");
    for h in &r.hypotheses.conditions {
        s.push_str(&format!("  - {h}\n"));
    }
    if let Some(c) = out.check {
        s.push_str(&format!("check: {}\n", if c { "pass" } else { "fail" }));
    }
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", render(&cli, &out));
            if out.check == Some(false) {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
