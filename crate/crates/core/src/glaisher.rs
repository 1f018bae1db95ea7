//! Glaisher–Kinkelin constant.

use rayon::prelude::*;
use rug::{Complex, Float};

use crate::barnes::log_g_psi_quadrature;
use crate::error::{Error, Result};
use crate::eval::{Method, RealResult};
use crate::numerics::quadrature::integrate_semi_infinite;
use crate::precision::{log10_abs, log10_add, PrecisionContext};
use crate::special::constants::{euler_gamma, log_two_pi};
use crate::special::gamma::rounding_log10;
use crate::special::zeta::{zeta_minus_one_series, zeta_prime_2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GlaisherMethod {
    ZetaPrime2,
    OddZetaSeries,
    BarnesHalf,
    LogIntegral,
}

impl GlaisherMethod {
    pub const ALL: [GlaisherMethod; 4] = [
        GlaisherMethod::ZetaPrime2,
        GlaisherMethod::OddZetaSeries,
        GlaisherMethod::BarnesHalf,
        GlaisherMethod::LogIntegral,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            GlaisherMethod::ZetaPrime2 => "zeta-prime-2",
            GlaisherMethod::OddZetaSeries => "odd-zeta-series",
            GlaisherMethod::BarnesHalf => "barnes-half",
            GlaisherMethod::LogIntegral => "log-integral",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.tag() == tag)
    }
}

fn tagged(v: Float, err: f64, m: GlaisherMethod, evals: u64) -> RealResult {
    RealResult::new(v, err, Method::Glaisher(m), evals)
}

/// Number of odd-zeta terms for `digits` decimal digits: ⌈(digits/2)·log₂10⌉.
pub fn odd_zeta_terms(digits: u32) -> u32 {
    (f64::from(digits) / 2.0 * std::f64::consts::LOG2_10).ceil() as u32
}

/// log2/12 + (1/36) Σ_{k=1}^{N} (ζ(2k+1)−1)(28 + 3/(1+k) − 6/(2+k)).
/// Terms are computed in parallel and added in index order.
pub fn odd_zeta_partial_sum(terms: u32, ctx: &PrecisionContext) -> Result<Float> {
    let bits = ctx.bits();
    let values: Vec<Float> = (1..=terms)
        .into_par_iter()
        .map(|k| {
            let z = zeta_minus_one_series(2 * k + 1, ctx)?.value;
            let w = Float::with_val(bits, 28u32) + Float::with_val(bits, 3u32) / (1 + k)
                - Float::with_val(bits, 6u32) / (2 + k);
            Ok(z * w)
        })
        .collect::<Result<_>>()?;
    let mut acc = Float::new(bits);
    for v in values {
        acc += v;
    }
    Ok(Float::with_val(bits, 2).ln() / 12u32 + acc / 36u32)
}

/// log A by the selected method.
pub fn log_glaisher(method: GlaisherMethod, ctx: &PrecisionContext) -> Result<RealResult> {
    let bits = ctx.bits();
    let pi = ctx.pi();
    let pi2 = Float::with_val(bits, pi.square_ref());
    match method {
        GlaisherMethod::ZetaPrime2 => {
            // γ/12 − ζ′(2)/(2π²) + log(2π)/12
            let zp = zeta_prime_2(ctx)?;
            let v = euler_gamma(ctx) / 12u32 - Float::with_val(bits, &zp.value / (pi2 * 2u32))
                + log_two_pi(ctx) / 12u32;
            let err = log10_add(zp.err_log10, rounding_log10(&Complex::with_val(bits, &v), bits));
            Ok(tagged(v, err, method, zp.evaluations))
        }
        GlaisherMethod::OddZetaSeries => {
            let n = odd_zeta_terms(ctx.digits());
            let v = odd_zeta_partial_sum(n, ctx)?;
            // Σ_{k>N} (ζ(2k+1)−1)·(7/9 + …) ≤ 4^{−N}/3
            let tail = -f64::from(n) * 4f64.log10() - 3f64.log10();
            let err = log10_add(tail, rounding_log10(&Complex::with_val(bits, &v), bits));
            Ok(tagged(v, err, method, u64::from(n)))
        }
        GlaisherMethod::BarnesHalf => {
            // log A = 1/12 + log2/36 − logπ/6 − (2/3) log G(1/2)
            let half = Complex::with_val(bits, (-0.5, 0));
            let g = log_g_psi_quadrature(&half, ctx)?;
            let v = Float::with_val(bits, 1) / 12u32 + Float::with_val(bits, 2).ln() / 36u32
                - Float::with_val(bits, pi.ln_ref()) / 6u32
                - Float::with_val(bits, g.value.real() * 2u32) / 3u32;
            let err = log10_add(g.err_log10, rounding_log10(&Complex::with_val(bits, &v), bits));
            Ok(tagged(v, err, method, g.evaluations))
        }
        GlaisherMethod::LogIntegral => {
            // log A = (1 + log 2π)/12 − (1/(2π²)) ∫₀^∞ x log x/(eˣ−1) dx
            let r = integrate_semi_infinite(
                |x: &Float| Float::with_val(bits, x.ln_ref()) * x / Float::with_val(bits, x.exp_m1_ref()),
                1.0,
                ctx,
            )?;
            let v = (log_two_pi(ctx) + 1u32) / 12u32 - Float::with_val(bits, &r.value / (pi2 * 2u32));
            let err = log10_add(r.err_log10 - 1.0, rounding_log10(&Complex::with_val(bits, &v), bits));
            Ok(tagged(v, err, method, r.evaluations))
        }
    }
}

/// Partial-sum errors of the odd-zeta series and the fitted decay rate.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorCurve {
    /// (N, log10 |partial sum − reference|)
    pub points: Vec<(u32, f64)>,
    /// Least-squares slope of log10 error against N.
    pub slope: f64,
}

/// Errors of the first `max_terms` partial sums against the same series
/// evaluated at digits + 20.
pub fn glaisher_series_error_curve(max_terms: u32, ctx: &PrecisionContext) -> Result<ErrorCurve> {
    if max_terms < 4 {
        return Err(Error::InvalidArgument("error curve needs at least 4 terms".into()));
    }
    let wide = PrecisionContext::new(ctx.digits() + 20);
    let reference = log_glaisher(GlaisherMethod::OddZetaSeries, &wide)?.value;
    let bits = wide.bits();
    let weights: Vec<Float> = (1..=max_terms)
        .into_par_iter()
        .map(|k| {
            let z = zeta_minus_one_series(2 * k + 1, &wide)?.value;
            let w = Float::with_val(bits, 28u32) + Float::with_val(bits, 3u32) / (1 + k)
                - Float::with_val(bits, 6u32) / (2 + k);
            Ok(z * w / 36u32)
        })
        .collect::<Result<_>>()?;
    let mut partial = Float::with_val(bits, 2).ln() / 12u32;
    let mut points = Vec::with_capacity(max_terms as usize);
    for (i, t) in weights.iter().enumerate() {
        partial += t;
        let e = log10_abs(&Float::with_val(bits, &partial - &reference));
        points.push((i as u32 + 1, e));
    }
    let floor = -f64::from(ctx.digits());
    let fit: Vec<(f64, f64)> = points
        .iter()
        .filter(|(_, e)| e.is_finite() && *e > floor)
        .map(|&(n, e)| (f64::from(n), e))
        .collect();
    Ok(ErrorCurve {
        slope: least_squares_slope(&fit),
        points,
    })
}

fn least_squares_slope(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len() as f64;
    if n < 2.0 {
        return f64::NAN;
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}
