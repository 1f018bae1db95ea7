//! log Γ, ψ and ψ⁽¹⁾.

use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::eval::{ComplexResult, Method};
use crate::numerics::exact::bernoulli_float;
use crate::numerics::quadrature::integrate_semi_infinite;
use crate::precision::{log10_abs_c, log10_add, PrecisionContext};
use crate::special::constants::log_two_pi;
use crate::special::{bose, is_nonpositive_integer, TWO_PI};

/// Principal-branch log Γ(z) for Re z > 0 by the second Binet formula
///
/// log Γ(w) = (w − ½) log w − w + ½ log 2π + 2∫₀^∞ arctan(x/w)/(e^{2πx} − 1) dx
///
/// applied at w = z + m with Re w ≥ 1, then log Γ(z) = log Γ(w) − Σ log(z+j).
pub fn log_gamma(z: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("Γ at {}", z.real().to_f64())));
    }
    if *z.real() <= 0 {
        return Err(Error::Domain("log_gamma requires Re z > 0".into()));
    }
    let bits = ctx.bits();
    let shift = (1.0 - z.real().to_f64()).ceil().max(0.0) as u32;
    let w = Complex::with_val(bits, z + shift);
    let two_pi = ctx.pi() * 2u32;

    let (integral, err, evals) = if w.imag().is_zero() {
        let wr = w.real().clone();
        let r = integrate_semi_infinite(
            |x: &Float| Float::with_val(bits, x / &wr).atan() * bose(x, &two_pi),
            TWO_PI,
            ctx,
        )?;
        (Complex::with_val(bits, (r.value, 0)), r.err_log10, r.evaluations)
    } else {
        let w_inv = Complex::with_val(bits, w.recip_ref());
        let r = integrate_semi_infinite(
            |x: &Float| Complex::with_val(bits, &w_inv * x).atan() * bose(x, &two_pi),
            TWO_PI,
            ctx,
        )?;
        (r.value, r.err_log10, r.evaluations)
    };

    let ln_w = Complex::with_val(bits, w.ln_ref());
    let mut v = Complex::with_val(bits, &w - Float::with_val(bits, 0.5)) * &ln_w;
    v -= &w;
    v += log_two_pi(ctx) / 2u32;
    v += integral * 2u32;
    for j in 0..shift {
        v -= Complex::with_val(bits, z + j).ln();
    }
    let err = log10_add(err + 2f64.log10(), rounding_log10(&v, bits));
    Ok(ComplexResult::new(v, err, Method::BinetLogGamma, evals))
}

/// Real convenience wrapper for log Γ(x), x > 0.
pub fn log_gamma_real(x: &Float, ctx: &PrecisionContext) -> Result<crate::eval::RealResult> {
    let r = log_gamma(&Complex::with_val(ctx.bits(), (x, 0)), ctx)?;
    Ok(r.map(|c| c.real().clone()))
}

pub(crate) fn rounding_log10(v: &Complex, bits: u32) -> f64 {
    -(f64::from(bits) - 4.0) * std::f64::consts::LOG10_2 + log10_abs_c(v).max(0.0)
}

/// Bernoulli tail of ψ at |w| large: log w − 1/(2w) − Σ B₂ₖ/(2k w^{2k}).
/// Returns the value and log10 of the first omitted term.
fn digamma_asymptotic(w: &Complex, target_log10: f64, bits: u32) -> (Complex, f64, u64) {
    let mut v = Complex::with_val(bits, w.ln_ref());
    let inv = Complex::with_val(bits, w.recip_ref());
    v -= Complex::with_val(bits, &inv / 2u32);
    let inv2 = Complex::with_val(bits, inv.square_ref());
    let mut pow = inv2.clone();
    let mut last = f64::INFINITY;
    let mut k = 1u32;
    loop {
        let t = Complex::with_val(bits, &pow * bernoulli_float(2 * k, bits)) / (2 * k);
        let mag = log10_abs_c(&t);
        if mag < target_log10 || mag > last {
            return (v, mag.min(last), u64::from(k));
        }
        v -= t;
        last = mag;
        pow *= &inv2;
        k += 1;
    }
}

/// ψ(z) via reflection into Re z ≥ ½, upward recurrence to |z + m| ≥ 0.4·D
/// (D the working digits), then the Bernoulli asymptotic tail.
pub fn digamma(z: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("ψ at {}", z.real().to_f64())));
    }
    let bits = ctx.bits();
    if *z.real() < 0.5 {
        // ψ(z) = ψ(1 − z) − π cot(πz)
        let one_minus = Complex::with_val(bits, 1 - z);
        let r = digamma(&one_minus, ctx)?;
        let piz = Complex::with_val(bits, z * ctx.pi());
        let cot = Complex::with_val(bits, piz.tan_ref()).recip();
        let v = r.value - cot * ctx.pi();
        return Ok(ComplexResult::new(v, r.err_log10, Method::AsymptoticDigamma, r.evaluations));
    }
    Ok(digamma_shifted(z, ctx))
}

fn digamma_shifted(z: &Complex, ctx: &PrecisionContext) -> ComplexResult {
    let bits = ctx.bits();
    let radius = (0.4 * f64::from(ctx.working_digits())).max(8.0);
    let mut w = z.clone();
    let mut correction = Complex::new(bits);
    let mut m = 0u64;
    while Complex::with_val(64, w.abs_ref()).real().to_f64() < radius {
        correction += Complex::with_val(bits, w.recip_ref());
        w += 1u32;
        m += 1;
    }
    let target = -f64::from(ctx.working_digits()) - 2.0;
    let (v, tail, terms) = digamma_asymptotic(&w, target, bits);
    let v = v - correction;
    let err = log10_add(tail, rounding_log10(&v, bits) + (m as f64 + 1.0).log10());
    ComplexResult::new(v, err, Method::AsymptoticDigamma, m + terms)
}

/// ψ⁽¹⁾(z) = ζ(2, z).
pub fn trigamma(z: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("ψ⁽¹⁾ at {}", z.real().to_f64())));
    }
    let s = ctx.float(2);
    crate::special::zeta::hurwitz_zeta(&s, z, ctx)
}
