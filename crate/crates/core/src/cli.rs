//! The `barnes` command line: eval, verify and bench.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rug::{Complex, Float};
use serde::Serialize;
use serde_json::{json, Value};

use crate::barnes::{
    log_barnes_g, log_g_asymptotic_shifted, log_g_binet, log_g_hermite, log_g_psi_quadrature, BarnesMethod, LogG,
};
use crate::error::{Error, Result};
use crate::eval::{ComplexResult, Method};
use crate::glaisher::{log_glaisher, GlaisherMethod};
use crate::multigamma::log_multigamma;
use crate::precision::{log10_abs_c, PrecisionContext};
use crate::report::decimal;
use crate::special::{clausen_cl2, digamma, hurwitz_zeta, hurwitz_zeta_prime_neg1, log_gamma, trigamma};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const FUNCTIONS: [&str; 10] = [
    "barnes-g",
    "log-barnes-g",
    "multigamma",
    "loggamma",
    "digamma",
    "trigamma",
    "hurwitz-zeta",
    "zeta-prime-neg1-z",
    "clausen",
    "glaisher",
];

#[derive(Debug, Parser)]
#[command(name = "barnes", version, about = "Arbitrary-precision Barnes G, multiple gamma and related functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Decimal digits of the result.
    #[arg(long, default_value_t = 30)]
    pub digits: u32,
    /// Emit JSON instead of plain text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a function.
    Eval {
        /// One of barnes-g, log-barnes-g, multigamma, loggamma, digamma,
        /// trigamma, hurwitz-zeta, zeta-prime-neg1-z, clausen, glaisher.
        function: String,
        /// Arguments: reals or "a+bi" literals. multigamma takes n then z,
        /// hurwitz-zeta takes s then z. Put complex literals with a leading
        /// minus after `--`.
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
        #[command(flatten)]
        common: Common,
        /// Method tag, where the function has more than one.
        #[arg(long)]
        method: Option<String>,
    },
    /// Run the identity suite ("all" or one group).
    Verify {
        #[arg(default_value = "all")]
        selection: String,
        #[command(flatten)]
        common: Common,
        /// Pass threshold on log10 of the residual; default −(digits − 5).
        #[arg(long, allow_hyphen_values = true)]
        tolerance_log10: Option<f64>,
    },
    /// Work and wall time across precisions.
    Bench {
        /// glaisher or barnes-g.
        target: String,
        /// Comma-separated digit counts.
        #[arg(long, value_delimiter = ',', default_value = "30")]
        digits: Vec<u32>,
        /// Argument of G for the barnes-g target.
        #[arg(long, default_value = "10", allow_negative_numbers = true)]
        z: String,
        /// Restrict to one method.
        #[arg(long)]
        method: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

/// Parse a real literal.
pub fn parse_real(s: &str, bits: u32) -> Result<Float> {
    let p = Float::parse(s.trim()).map_err(|e| Error::InvalidArgument(format!("bad number '{s}': {e}")))?;
    Ok(Float::with_val(bits, p))
}

/// Parse "a", "bi", "a+bi" or "a-bi".
pub fn parse_complex(s: &str, bits: u32) -> Result<Complex> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex::with_val(bits, parse_real(&t, bits)?));
    };
    // split at the last sign that is not a leading sign or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        x => x,
    };
    Ok(Complex::with_val(bits, (parse_real(re, bits)?, parse_real(im, bits)?)))
}

/// Real or complex output value.
#[derive(Debug, Clone, PartialEq)]
pub enum OutputValue {
    Real(String),
    Complex { re: String, im: String },
}

/// One evaluated value.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub value: OutputValue,
    pub err_log10: f64,
    pub method: String,
    pub digits: u32,
    pub elapsed_ms: f64,
}

fn finite_or(x: f64) -> f64 {
    if x.is_finite() {
        x
    } else if x > 0.0 {
        f64::MAX
    } else {
        f64::MIN
    }
}

impl OutputRecord {
    pub fn to_json(&self) -> Value {
        let value = match &self.value {
            OutputValue::Real(s) => json!(s),
            OutputValue::Complex { re, im } => json!({ "re": re, "im": im }),
        };
        json!({
            "value": value,
            "err_log10": finite_or(self.err_log10),
            "method": self.method,
            "digits": self.digits,
            "elapsed_ms": self.elapsed_ms,
        })
    }

    pub fn to_line(&self) -> String {
        let v = match &self.value {
            OutputValue::Real(s) => s.clone(),
            OutputValue::Complex { re, im } => format!("{re} {im}i"),
        };
        format!(
            "value={v} err_log10={:.1} method={} digits={} elapsed_ms={:.3}",
            self.err_log10, self.method, self.digits, self.elapsed_ms
        )
    }
}

/// Imaginary parts below the error estimate are rounding residue and print as real.
fn render(z: &Complex, err_log10: f64, digits: u32) -> OutputValue {
    if z.imag().is_zero() || crate::precision::log10_abs(z.imag()) < err_log10 {
        OutputValue::Real(decimal(z.real(), digits))
    } else {
        OutputValue::Complex {
            re: decimal(z.real(), digits),
            im: decimal(z.imag(), digits),
        }
    }
}

fn want_args(function: &str, args: &[String], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(Error::InvalidArgument(format!("{function} takes {n} argument(s), got {}", args.len())));
    }
    Ok(())
}

fn no_method(function: &str, method: &Option<String>) -> Result<()> {
    match method {
        Some(m) => Err(Error::InvalidArgument(format!("{function} has no method '{m}'"))),
        None => Ok(()),
    }
}

/// log G(z) by a named route; the integral routes compute log G(w+1) at w = z − 1.
fn log_g_by(method: Option<&str>, z: &Complex, ctx: &PrecisionContext) -> Result<LogG> {
    let Some(tag) = method else {
        return log_barnes_g(z, ctx);
    };
    let route = match BarnesMethod::from_tag(tag) {
        Some(BarnesMethod::HermiteIntegral) => log_g_hermite,
        Some(BarnesMethod::BinetIntegral) => log_g_binet,
        Some(BarnesMethod::AsymptoticShifted) => log_g_asymptotic_shifted,
        Some(BarnesMethod::PsiQuadrature) => log_g_psi_quadrature,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "barnes-g method must be one of hermite, binet, asymptotic, psi-quadrature; got '{tag}'"
            )))
        }
    };
    let w = Complex::with_val(ctx.bits(), z - 1u32);
    Ok(LogG::Value(route(&w, ctx)?))
}

fn exp_result(r: ComplexResult) -> ComplexResult {
    let bits = r.value.prec().0;
    let v = Complex::with_val(bits, r.value.exp_ref());
    // relative error of the log becomes absolute error of the value
    let err = r.err_log10 + log10_abs_c(&v).max(0.0);
    ComplexResult::new(v, err, r.method, r.evaluations)
}

/// Evaluate `function` at `args`.
pub fn eval(function: &str, args: &[String], digits: u32, method: Option<String>) -> Result<OutputRecord> {
    if !(10..=5000).contains(&digits) {
        return Err(Error::InvalidArgument(format!("digits must be in [10, 5000], got {digits}")));
    }
    let ctx = PrecisionContext::new(digits);
    let bits = ctx.bits();
    let start = Instant::now();
    let arg = |i: usize| parse_complex(&args[i], bits);
    let result: ComplexResult = match function {
        "barnes-g" | "log-barnes-g" => {
            want_args(function, args, 1)?;
            match log_g_by(method.as_deref(), &arg(0)?, &ctx)? {
                LogG::Zero => {
                    let zero = if function == "barnes-g" {
                        Complex::new(bits)
                    } else {
                        Complex::with_val(bits, (Float::with_val(bits, rug::float::Special::NegInfinity), 0))
                    };
                    ComplexResult::new(zero, f64::NEG_INFINITY, Method::Barnes(BarnesMethod::RecurrenceShift), 0)
                }
                LogG::Value(r) if function == "barnes-g" => exp_result(r),
                LogG::Value(r) => r,
            }
        }
        "multigamma" => {
            want_args(function, args, 2)?;
            no_method(function, &method)?;
            let n: u32 = args[0]
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("multigamma order must be a positive integer, got '{}'", args[0])))?;
            if n == 0 {
                return Err(Error::InvalidArgument("multigamma order must be ≥ 1".into()));
            }
            log_multigamma(n, &arg(1)?, &ctx).map(exp_result)?
        }
        "loggamma" => {
            want_args(function, args, 1)?;
            no_method(function, &method)?;
            log_gamma(&arg(0)?, &ctx)?
        }
        "digamma" => {
            want_args(function, args, 1)?;
            no_method(function, &method)?;
            digamma(&arg(0)?, &ctx)?
        }
        "trigamma" => {
            want_args(function, args, 1)?;
            no_method(function, &method)?;
            trigamma(&arg(0)?, &ctx)?
        }
        "hurwitz-zeta" => {
            want_args(function, args, 2)?;
            no_method(function, &method)?;
            hurwitz_zeta(&parse_real(&args[0], bits)?, &arg(1)?, &ctx)?
        }
        "zeta-prime-neg1-z" => {
            want_args(function, args, 1)?;
            no_method(function, &method)?;
            hurwitz_zeta_prime_neg1(&arg(0)?, &ctx)?
        }
        "clausen" => {
            want_args(function, args, 1)?;
            no_method(function, &method)?;
            clausen_cl2(&parse_real(&args[0], bits)?, &ctx)?.into_complex()
        }
        "glaisher" => {
            want_args(function, args, 0)?;
            let m = match method.as_deref() {
                None => GlaisherMethod::OddZetaSeries,
                Some(tag) => GlaisherMethod::from_tag(tag).ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "glaisher method must be one of zeta-prime-2, odd-zeta-series, barnes-half, log-integral; got '{tag}'"
                    ))
                })?,
            };
            exp_result(log_glaisher(m, &ctx)?.into_complex())
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown function '{function}', expected one of {}",
                FUNCTIONS.join(", ")
            )))
        }
    };
    Ok(OutputRecord {
        value: render(&result.value, result.err_log10, digits),
        err_log10: result.err_log10,
        method: result.method.tag(),
        digits,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// One bench row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub digits: u32,
    pub method: String,
    /// Series terms or integrand evaluations.
    pub terms: u64,
    pub elapsed_ms: f64,
}

pub fn bench(target: &str, digits: &[u32], z: &str, method: Option<&str>) -> Result<Vec<BenchRow>> {
    if digits.is_empty() || digits.iter().any(|d| !(10..=2000).contains(d)) {
        return Err(Error::InvalidArgument("bench digits must be a nonempty list within [10, 2000]".into()));
    }
    let mut rows = Vec::new();
    for &d in digits {
        let ctx = PrecisionContext::new(d);
        match target {
            "glaisher" => {
                let methods: Vec<GlaisherMethod> = match method {
                    None => GlaisherMethod::ALL.to_vec(),
                    Some(tag) => vec![GlaisherMethod::from_tag(tag)
                        .ok_or_else(|| Error::InvalidArgument(format!("unknown glaisher method '{tag}'")))?],
                };
                for m in methods {
                    let t = Instant::now();
                    let r = log_glaisher(m, &ctx)?;
                    rows.push(BenchRow {
                        digits: d,
                        method: r.method.tag(),
                        terms: r.evaluations,
                        elapsed_ms: t.elapsed().as_secs_f64() * 1e3,
                    });
                }
            }
            "barnes-g" => {
                let zc = parse_complex(z, ctx.bits())?;
                let tags: Vec<&str> = match method {
                    None => vec!["hermite", "binet", "asymptotic", "psi-quadrature"],
                    Some(t) => vec![t],
                };
                for tag in tags {
                    let t = Instant::now();
                    let r = log_g_by(Some(tag), &zc, &ctx)?.finite(z)?;
                    rows.push(BenchRow {
                        digits: d,
                        method: r.method.tag(),
                        terms: r.evaluations,
                        elapsed_ms: t.elapsed().as_secs_f64() * 1e3,
                    });
                }
            }
            _ => return Err(Error::InvalidArgument(format!("bench target must be glaisher or barnes-g, got '{target}'"))),
        }
    }
    Ok(rows)
}

/// Run a parsed command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match cli.command {
        Command::Eval {
            function,
            args,
            common,
            method,
        } => eval(&function, &args, common.digits, method).map(|rec| {
            let line = if common.json { rec.to_json().to_string() } else { rec.to_line() };
            let _ = writeln!(out, "{line}");
            EXIT_OK
        }),
        Command::Verify {
            selection,
            common,
            tolerance_log10,
        } => {
            if !(10..=5000).contains(&common.digits) {
                Err(Error::InvalidArgument(format!("digits must be in [10, 5000], got {}", common.digits)))
            } else {
                let ctx = PrecisionContext::new(common.digits);
                let tol = tolerance_log10.unwrap_or_else(|| verify::default_tolerance_log10(common.digits));
                verify::run(&selection, &ctx, tol).map(|reports| {
                    if common.json {
                        let _ = writeln!(out, "{}", serde_json::to_string(&reports).unwrap_or_default());
                    } else {
                        for r in &reports {
                            let _ = writeln!(
                                out,
                                "{} {} residual_log10={:.1} tolerance_log10={:.1}{}",
                                r.identity_id,
                                r.status,
                                r.residual_log10,
                                r.tolerance_log10,
                                r.note.as_ref().map(|n| format!(" note=\"{n}\"")).unwrap_or_default()
                            );
                        }
                    }
                    let failed = verify::failures(&reports);
                    let _ = writeln!(err, "{} identities, {failed} failed", reports.len());
                    if failed > 0 {
                        EXIT_IDENTITY_FAILURE
                    } else {
                        EXIT_OK
                    }
                })
            }
        }
        Command::Bench {
            target,
            digits,
            z,
            method,
            json,
        } => bench(&target, &digits, &z, method.as_deref()).map(|rows| {
            if json {
                let _ = writeln!(out, "{}", serde_json::to_string(&rows).unwrap_or_default());
            } else {
                let _ = writeln!(out, "digits method terms elapsed_ms");
                for r in rows {
                    let _ = writeln!(out, "{} {} {} {:.3}", r.digits, r.method, r.terms, r.elapsed_ms);
                }
            }
            EXIT_OK
        }),
    };
    outcome.unwrap_or_else(|e| {
        let _ = writeln!(err, "{e}");
        EXIT_USAGE
    })
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    execute(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        let b = 64;
        let c = |s: &str| {
            let z = parse_complex(s, b).unwrap();
            (z.real().to_f64(), z.imag().to_f64())
        };
        assert_eq!(c("1.5"), (1.5, 0.0));
        assert_eq!(c("-2"), (-2.0, 0.0));
        assert_eq!(c("1+2i"), (1.0, 2.0));
        assert_eq!(c("1 - 2i"), (1.0, -2.0));
        assert_eq!(c("-i"), (0.0, -1.0));
        assert_eq!(c("3i"), (0.0, 3.0));
        assert_eq!(c("1e-2+1e+1i"), (0.01, 10.0));
        assert!(parse_complex("abc", b).is_err());
    }

    #[test]
    fn barnes_g_at_four() {
        let r = eval("barnes-g", &["4".into()], 30, None).unwrap();
        let OutputValue::Real(v) = r.value else { panic!() };
        assert!(v.starts_with("2.0000000000000000000000000000"), "{v}");
        assert!(r.err_log10 <= -30.0);
    }

    #[test]
    fn bad_digits_and_names() {
        assert!(eval("barnes-g", &["4".into()], 5, None).is_err());
        assert!(eval("nope", &[], 30, None).is_err());
        assert!(eval("loggamma", &["1".into(), "2".into()], 30, None).is_err());
        assert!(eval("barnes-g", &["4".into()], 30, Some("closed-form".into())).is_err());
    }

    #[test]
    fn domain_errors_keep_their_name() {
        let e = eval("loggamma", &["-1.5".into()], 20, None).unwrap_err();
        assert_eq!(e.name(), "DomainError");
    }

    #[test]
    fn glaisher_bench_term_law() {
        let rows = bench("glaisher", &[30, 100], "10", Some("odd-zeta-series")).unwrap();
        assert_eq!(rows.iter().map(|r| r.terms).collect::<Vec<_>>(), vec![50, 167]);
    }
}
