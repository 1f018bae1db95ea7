use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::eval::{ComplexResult, Method};
use crate::numerics::exact::superfactorial;
use crate::precision::{log10_add, PrecisionContext};
use crate::special::clausen::clausen_cl2;
use crate::special::constants::log_two_pi;
use crate::special::gamma::rounding_log10;
use crate::special::{is_nonpositive_integer, log_gamma};

use super::methods::{log_g_asymptotic_shifted, psi_path_integral};
use super::BarnesMethod;

/// log G(z), or the information that G(z) vanishes.
#[derive(Debug, Clone, PartialEq)]
pub enum LogG {
    /// z is a non-positive integer.
    Zero,
    Value(ComplexResult),
}

impl LogG {
    pub fn is_zero(&self) -> bool {
        matches!(self, LogG::Zero)
    }

    pub fn value(&self) -> Option<&ComplexResult> {
        match self {
            LogG::Zero => None,
            LogG::Value(v) => Some(v),
        }
    }

    /// The finite value, or ZeroFactor naming `what`.
    pub fn finite(self, what: impl Into<String>) -> Result<ComplexResult> {
        match self {
            LogG::Zero => Err(Error::ZeroFactor(what.into())),
            LogG::Value(v) => Ok(v),
        }
    }
}

const EXACT_INTEGER_LIMIT: u32 = 256;

fn tagged(v: Complex, err: f64, m: BarnesMethod, evals: u64) -> LogG {
    LogG::Value(ComplexResult::new(v, err, Method::Barnes(m), evals))
}

/// log G(z) anywhere in the plane.
///
/// * non-positive integers: [`LogG::Zero`]
/// * small positive integers: exact superfactorial
/// * Re z > 0: recurrence shift plus the large-z expansion
/// * negative reals: reflection through the Clausen function
/// * otherwise: x ψ(x) integrated along 0 → ±i → z−1±i → z−1
pub fn log_barnes_g(z: &Complex, ctx: &PrecisionContext) -> Result<LogG> {
    let bits = ctx.bits();
    if is_nonpositive_integer(z) {
        return Ok(LogG::Zero);
    }
    if z.imag().is_zero() && z.real().is_integer() && *z.real() <= EXACT_INTEGER_LIMIT {
        let n = z.real().to_u32_saturating().unwrap_or(1);
        let sf = superfactorial(n - 1);
        let v = Complex::with_val(bits, (Float::with_val(bits, &sf).ln(), 0));
        let err = rounding_log10(&v, bits);
        return Ok(tagged(v, err, BarnesMethod::RecurrenceShift, 1));
    }
    if *z.real() > 0 {
        // log G(z) = log G(z+1) − log Γ(z)
        let up = log_g_asymptotic_shifted(z, ctx)?;
        let lg = log_gamma(z, ctx)?;
        let v = up.value - &lg.value;
        let err = log10_add(log10_add(up.err_log10, lg.err_log10), rounding_log10(&v, bits));
        return Ok(tagged(v, err, BarnesMethod::AsymptoticShifted, up.evaluations + lg.evaluations));
    }
    if z.imag().is_zero() {
        return negative_real(z.real(), ctx);
    }
    contour(z, ctx)
}

/// G(−y) = (−1)^{⌊y/2⌋−1} G(y+2) |sin(πy)/π|^{y+1} exp(Cl₂(2π(y−⌊y⌋))/(2π)), y > 0.
fn negative_real(x: &Float, ctx: &PrecisionContext) -> Result<LogG> {
    let bits = ctx.bits();
    let pi = ctx.pi();
    let y = Float::with_val(bits, -x);
    let fl = Float::with_val(bits, y.floor_ref());
    let frac = Float::with_val(bits, &y - &fl);

    let y2 = Complex::with_val(bits, (Float::with_val(bits, &y + 2u32), 0));
    let g = log_barnes_g(&y2, ctx)?.finite("G(y+2)")?;
    let sin = Float::with_val(bits, Float::with_val(bits, &pi * &y).sin_ref()) / &pi;
    let ln_sin = sin.abs().ln() * Float::with_val(bits, &y + 1u32);
    let cl = clausen_cl2(&(frac * &pi * 2u32), ctx)?;
    let mut v = g.value + ln_sin + Float::with_val(bits, &cl.value / (pi.clone() * 2u32));
    // ⌊y/2⌋ − 1 odd ⇒ G(−y) < 0
    let half_floor = Float::with_val(bits, &y / 2u32).floor().to_f64() as i64;
    if (half_floor - 1).rem_euclid(2) == 1 {
        v += Complex::with_val(bits, (0, &pi));
    }
    let err = log10_add(log10_add(g.err_log10, cl.err_log10), rounding_log10(&v, bits));
    Ok(tagged(v, err, BarnesMethod::Reflection, g.evaluations + cl.evaluations))
}

/// G(z) = (2π)^{(z−1)/2} exp(−(z−1)(z−2)/2 + ∫_γ x ψ(x) dx), γ avoiding the
/// negative real axis through ±i.
fn contour(z: &Complex, ctx: &PrecisionContext) -> Result<LogG> {
    let bits = ctx.bits();
    let side = if z.imag().is_sign_negative() { -1 } else { 1 };
    let zm1 = Complex::with_val(bits, z - 1u32);
    let i = Complex::with_val(bits, (0, side));
    let points = [
        Complex::new(bits),
        i.clone(),
        Complex::with_val(bits, &zm1 + &i),
        zm1.clone(),
    ];
    let r = psi_path_integral(&points, 1, ctx)?;
    let mut v = Complex::with_val(bits, &zm1 * log_two_pi(ctx)) / 2u32;
    v -= Complex::with_val(bits, &zm1 * Complex::with_val(bits, z - 2u32)) / 2u32;
    v += r.value;
    let err = log10_add(r.err_log10, rounding_log10(&v, bits));
    Ok(tagged(v, err, BarnesMethod::PsiQuadrature, r.evaluations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::{log10_abs, log10_abs_c};

    fn value(z: Complex, ctx: &PrecisionContext) -> Complex {
        log_barnes_g(&z, ctx).unwrap().value().unwrap().value.clone()
    }

    #[test]
    fn zeros_and_integers() {
        let ctx = PrecisionContext::new(30);
        assert!(log_barnes_g(&ctx.complex(-3), &ctx).unwrap().is_zero());
        assert!(log_barnes_g(&ctx.complex(0), &ctx).unwrap().is_zero());
        let v = value(ctx.complex(6), &ctx);
        let want = Float::with_val(ctx.bits(), 288).ln();
        assert!(log10_abs(&(v.real().clone() - want)) < -30.0);
        let r = log_barnes_g(&ctx.complex(6), &ctx).unwrap();
        assert_eq!(r.value().unwrap().method, Method::Barnes(BarnesMethod::RecurrenceShift));
    }

    #[test]
    fn recurrence_across_branches() {
        // G(z+1) = Γ(z) G(z) evaluated by different dispatcher branches
        let ctx = PrecisionContext::new(30);
        let bits = ctx.bits();
        for z in [(-0.5, 0.0), (-1.5, 0.0), (-2.25, 0.0), (-0.5, 0.75), (-3.2, -0.4)] {
            let zc = ctx.complex(z);
            let z1 = Complex::with_val(bits, &zc + 1u32);
            let a = value(zc.clone(), &ctx);
            let b = value(z1.clone(), &ctx);
            // Γ(z) = Γ(z+m)/∏(z+j)
            let m = 5u32;
            let mut lg = log_gamma(&Complex::with_val(bits, &zc + m), &ctx).unwrap().value;
            for j in 0..m {
                lg -= Complex::with_val(bits, &zc + j).ln();
            }
            let mut d = Complex::with_val(bits, &b - &a) - lg;
            let turns = (d.imag().to_f64() / std::f64::consts::TAU).round();
            d -= Complex::with_val(bits, (0, turns)) * ctx.pi() * 2u32;
            assert!(log10_abs_c(&d) < -28.0, "z = {z:?}: {d}");
        }
    }

    #[test]
    fn sign_on_negative_axis() {
        // G(z) = G(z+1)/Γ(z): negative on (−2, 0), positive on (−4, −2)
        let ctx = PrecisionContext::new(20);
        for (x, negative) in [(-0.5, true), (-1.5, true), (-2.5, false), (-3.5, false), (-4.5, true)] {
            let v = value(ctx.complex(x), &ctx);
            let is_neg = (v.imag().to_f64() - std::f64::consts::PI).abs() < 1e-10;
            assert_eq!(is_neg, negative, "x = {x}");
        }
    }
}
