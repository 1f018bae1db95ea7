//! Independent evaluations of log G(z+1).

use std::cell::RefCell;

use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::eval::{ComplexResult, Method};
use crate::numerics::exact::{bernoulli_float, bernoulli_poly};
use crate::numerics::quadrature::{integrate_path, integrate_semi_infinite, integrate_semi_infinite_with, SemiInfinite};
use crate::precision::{log10_abs_c, log10_add, PrecisionContext};
use crate::special::constants::{log_two_pi, zeta_prime_0};
use crate::special::gamma::rounding_log10;
use crate::special::zeta::{glaisher_log, zeta_prime_neg};
use crate::special::{bose, digamma, log_gamma, TWO_PI};

use super::BarnesMethod;

fn require_right_half(z: &Complex, what: &str) -> Result<()> {
    if *z.real() <= 0 {
        return Err(Error::Domain(format!("{what} requires Re z > 0")));
    }
    Ok(())
}

fn tagged(v: Complex, err: f64, m: BarnesMethod, evals: u64) -> ComplexResult {
    ComplexResult::new(v, err, Method::Barnes(m), evals)
}

/// log G(z+1) = (z²/2)(log z − 3/2) − z ζ′(0) + ζ′(−1) − ∫₀^∞ x log(x²+z²)/(e^{2πx}−1) dx
pub fn log_g_hermite(z: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    require_right_half(z, "log_g_hermite")?;
    let bits = ctx.bits();
    let two_pi = ctx.pi() * 2u32;
    let r = if z.imag().is_zero() {
        let z2 = Float::with_val(bits, z.real().square_ref());
        integrate_semi_infinite(
            |x: &Float| (Float::with_val(bits, x.square_ref()) + &z2).ln() * x * bose(x, &two_pi),
            TWO_PI,
            ctx,
        )?
        .into_complex()
    } else {
        let z2 = Complex::with_val(bits, z.square_ref());
        integrate_semi_infinite(
            |x: &Float| {
                Complex::with_val(bits, &z2 + Float::with_val(bits, x.square_ref())).ln() * x * bose(x, &two_pi)
            },
            TWO_PI,
            ctx,
        )?
    };
    let ln_z = Complex::with_val(bits, z.ln_ref());
    let z2 = Complex::with_val(bits, z.square_ref());
    let mut v = z2 * (ln_z - Float::with_val(bits, 1.5)) / 2u32;
    v -= Complex::with_val(bits, z * zeta_prime_0(ctx));
    v += zeta_prime_neg(1, ctx)?;
    v -= r.value;
    let err = log10_add(r.err_log10, rounding_log10(&v, bits));
    Ok(tagged(v, err, BarnesMethod::HermiteIntegral, r.evaluations))
}

/// 1/(1−e^{−x}) − 1/x − 1/2 − x/12, by its Bernoulli series near 0.
fn binet_bracket(x: &Float, bits: u32) -> Float {
    if *x < 0.5 {
        let x2 = Float::with_val(bits, x.square_ref());
        // Σ_{k≥2} B₂ₖ x^{2k−1}/(2k)!
        let mut p = Float::with_val(bits, x * &x2) / 24u32;
        let mut acc = Float::new(bits);
        let mut k = 2u32;
        loop {
            let t = Float::with_val(bits, &p * bernoulli_float(2 * k, bits));
            let small = t.is_zero() || (t.get_exp().unwrap_or(0) < acc.get_exp().unwrap_or(0) - bits as i32 - 4);
            acc += t;
            if small {
                return acc;
            }
            p *= &x2;
            p /= (2 * k + 1) * (2 * k + 2);
            k += 1;
        }
    }
    let e = Float::with_val(bits, -x).exp_m1();
    let mut v = -e.recip();
    v -= Float::with_val(bits, x.recip_ref());
    v -= 0.5f64;
    v -= Float::with_val(bits, x / 12u32);
    v
}

/// log G(z+1) = z log Γ(z) + z²/4 − (log z/2) B₂(z) − log A
///   + ∫₀^∞ e^{−zx}/x² · (1/(1−e^{−x}) − 1/x − 1/2 − x/12) dx
pub fn log_g_binet(z: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    require_right_half(z, "log_g_binet")?;
    let bits = ctx.bits();
    let decay = z.real().to_f64();
    let opts = SemiInfinite::new(decay).first_break((2.0 / decay).min(4.0));
    let r = if z.imag().is_zero() {
        let zr = z.real().clone();
        integrate_semi_infinite_with(
            |x: &Float| {
                let k = Float::with_val(bits, -Float::with_val(bits, &zr * x)).exp();
                k * binet_bracket(x, bits) / Float::with_val(bits, x.square_ref())
            },
            &opts,
            ctx,
        )?
        .into_complex()
    } else {
        integrate_semi_infinite_with(
            |x: &Float| {
                let k = Complex::with_val(bits, -Complex::with_val(bits, z * x)).exp();
                k * (binet_bracket(x, bits) / Float::with_val(bits, x.square_ref()))
            },
            &opts,
            ctx,
        )?
    };
    let lg = log_gamma(z, ctx)?;
    let ln_z = Complex::with_val(bits, z.ln_ref());
    let mut v = Complex::with_val(bits, z * &lg.value);
    v += Complex::with_val(bits, z.square_ref()) / 4u32;
    v -= ln_z * bernoulli_poly(2, z, ctx) / 2u32;
    v -= glaisher_log(ctx)?;
    v += r.value;
    let err = log10_add(log10_add(r.err_log10, lg.err_log10 + log10_abs_c(z)), rounding_log10(&v, bits));
    Ok(tagged(v, err, BarnesMethod::BinetIntegral, r.evaluations + lg.evaluations))
}

/// Leading part of the large-z expansion:
/// (z²/2)(log z − 3/2) − log z/12 − z ζ′(0) + ζ′(−1).
fn asymptotic_head(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let bits = ctx.bits();
    let ln_z = Complex::with_val(bits, z.ln_ref());
    let z2 = Complex::with_val(bits, z.square_ref());
    let mut v = z2 * Complex::with_val(bits, &ln_z - Float::with_val(bits, 1.5)) / 2u32;
    v -= ln_z / 12u32;
    v -= Complex::with_val(bits, z * zeta_prime_0(ctx));
    v += zeta_prime_neg(1, ctx)?;
    Ok(v)
}

/// k-th correction B_{2k+2}/(4k(k+1) z^{2k}) given z^{−2k}.
fn asymptotic_term(k: u32, inv_pow: &Complex, bits: u32) -> Complex {
    let b = bernoulli_float(2 * k + 2, bits) / (4 * k * (k + 1));
    Complex::with_val(bits, inv_pow * b)
}

/// log G(z+1) from the first `terms` corrections of the large-z expansion.
/// Returns the value and log10 of the magnitude of the first omitted term,
/// without judging whether that is small enough.
pub fn log_g_asymptotic_truncated(z: &Complex, terms: u32, ctx: &PrecisionContext) -> Result<(ComplexResult, f64)> {
    require_right_half(z, "log_g_asymptotic")?;
    let bits = ctx.bits();
    let mut v = asymptotic_head(z, ctx)?;
    let inv2 = Complex::with_val(bits, z.square_ref()).recip();
    let mut pow = inv2.clone();
    for k in 1..=terms {
        v += asymptotic_term(k, &pow, bits);
        pow *= &inv2;
    }
    let omitted = log10_abs_c(&asymptotic_term(terms + 1, &pow, bits));
    let err = log10_add(omitted, rounding_log10(&v, bits));
    Ok((tagged(v, err, BarnesMethod::AsymptoticShifted, u64::from(terms)), omitted))
}

/// Truncated large-z expansion with a fixed number of terms; fails with
/// InsufficientDecay when the first omitted term exceeds 10^{−digits}.
pub fn log_g_asymptotic(z: &Complex, terms: u32, ctx: &PrecisionContext) -> Result<ComplexResult> {
    let (r, omitted) = log_g_asymptotic_truncated(z, terms, ctx)?;
    let target = -f64::from(ctx.digits());
    if omitted > target {
        return Err(Error::InsufficientDecay {
            abs_z: 10f64.powf(log10_abs_c(z)),
            best_log10: omitted,
            target_log10: target,
        });
    }
    Ok(r)
}

/// Large-z expansion truncated at the first term below the working
/// tolerance. Fails with InsufficientDecay if the terms start growing first.
pub fn log_g_asymptotic_auto(z: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    require_right_half(z, "log_g_asymptotic")?;
    let bits = ctx.bits();
    let target = -f64::from(ctx.working_digits()) - 2.0;
    let mut v = asymptotic_head(z, ctx)?;
    let inv2 = Complex::with_val(bits, z.square_ref()).recip();
    let mut pow = inv2.clone();
    let mut last = f64::INFINITY;
    let mut k = 1u32;
    loop {
        let t = asymptotic_term(k, &pow, bits);
        let mag = log10_abs_c(&t);
        if mag < target {
            let err = log10_add(mag, rounding_log10(&v, bits));
            return Ok(tagged(v, err, BarnesMethod::AsymptoticShifted, u64::from(k)));
        }
        if mag > last {
            return Err(Error::InsufficientDecay {
                abs_z: 10f64.powf(log10_abs_c(z)),
                best_log10: last,
                target_log10: target,
            });
        }
        v += t;
        last = mag;
        pow *= &inv2;
        k += 1;
    }
}

/// Radius beyond which the automatic expansion reaches working precision.
pub(crate) fn asymptotic_radius(ctx: &PrecisionContext) -> f64 {
    0.4 * f64::from(ctx.working_digits()) + 2.0
}

/// Σ_{j=0}^{m} log Γ(z+j) = (m+1) log Γ(z) + Σ_{i=0}^{m−1} (m−i) log(z+i)
fn sum_log_gamma(z: &Complex, m: u32, ctx: &PrecisionContext) -> Result<ComplexResult> {
    let bits = ctx.bits();
    let lg = log_gamma(z, ctx)?;
    let mut v = Complex::with_val(bits, &lg.value * (m + 1));
    for i in 0..m {
        v += Complex::with_val(bits, z + i).ln() * (m - i);
    }
    let err = log10_add(lg.err_log10 + f64::from(m + 1).log10(), rounding_log10(&v, bits));
    Ok(ComplexResult::new(v, err, lg.method, lg.evaluations))
}

/// log G(z+1) for Re z > −1: recurrence shift to |z+m| beyond the
/// asymptotic radius, automatic expansion there, and one log Γ for the
/// accumulated Γ factors.
pub fn log_g_asymptotic_shifted(z: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    if *z.real() <= -1 {
        return Err(Error::Domain("log_g_asymptotic_shifted requires Re z > −1".into()));
    }
    let bits = ctx.bits();
    let radius = asymptotic_radius(ctx);
    let mut m = 0u32;
    while Complex::with_val(64, z + m).abs().real().to_f64() < radius {
        m += 1;
    }
    let w = Complex::with_val(bits, z + m);
    let a = log_g_asymptotic_auto(&w, ctx)?;
    if m == 0 {
        return Ok(a);
    }
    // log G(z+1) = log G(z+m+1) − Σ_{j=1}^{m} log Γ(z+j)
    let z1 = Complex::with_val(bits, z + 1u32);
    let s = sum_log_gamma(&z1, m - 1, ctx)?;
    let v = a.value - s.value;
    let err = log10_add(log10_add(a.err_log10, s.err_log10), rounding_log10(&v, bits));
    Ok(tagged(v, err, BarnesMethod::AsymptoticShifted, a.evaluations + s.evaluations))
}

/// log G(z+1) = z(1−z)/2 + (z/2) log 2π + ∫₀^z x ψ(x) dx along the straight
/// segment, valid for Re z > −1; for −2 < Re z ≤ −1 the pole at x = −1 is
/// split off as an explicit log(z+1) term.
pub fn log_g_psi_quadrature(z: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    if *z.real() <= -2 {
        return Err(Error::Domain("log_g_psi_quadrature requires Re z > −2".into()));
    }
    let bits = ctx.bits();
    let continued = *z.real() <= -1;
    if continued && z.imag().is_zero() && *z.real() == -1 {
        return Err(Error::ZeroFactor("G(0) = 0".into()));
    }
    let zero = Complex::new(bits);
    let r = if continued {
        // x ψ(x) − 1/(x+1) = x ψ(x+2) − 2
        psi_path_integral(&[zero, z.clone()], 2, ctx)?
    } else {
        psi_path_integral(&[zero, z.clone()], 1, ctx)?
    };
    let mut v = Complex::with_val(bits, z * Complex::with_val(bits, 1 - z)) / 2u32;
    v += Complex::with_val(bits, z * log_two_pi(ctx)) / 2u32;
    v += r.value;
    if continued {
        v += Complex::with_val(bits, z + 1u32).ln();
    }
    let err = log10_add(r.err_log10, rounding_log10(&v, bits));
    Ok(tagged(v, err, BarnesMethod::PsiQuadrature, r.evaluations))
}

/// ∫ (x ψ(x+m) − m) dx along a polyline. For m = 1 the integrand equals
/// x ψ(x); for m = 2 it equals x ψ(x) − 1/(x+1).
pub(crate) fn psi_path_integral(points: &[Complex], m: u32, ctx: &PrecisionContext) -> Result<ComplexResult> {
    let bits = ctx.bits();
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let r = integrate_path(
        |x: &Complex| {
            let arg = Complex::with_val(bits, x + m);
            match digamma(&arg, ctx) {
                Ok(p) => Complex::with_val(bits, x * &p.value) - m,
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    Complex::with_val(bits, (f64::NAN, f64::NAN))
                }
            }
        },
        points,
        ctx,
    );
    if let Some(e) = failure.into_inner() {
        return Err(match e {
            Error::Pole(p) => Error::PathCrossesPole(p),
            other => other,
        });
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::log10_abs;

    fn diff(a: &Complex, b: &Complex) -> f64 {
        log10_abs_c(&Complex::with_val(a.prec().0, a - b))
    }

    #[test]
    fn integer_anchors() {
        let ctx = PrecisionContext::new(30);
        let ln2 = Float::with_val(ctx.bits(), 2).ln();
        for (z, want) in [(1, 0.0), (2, 0.0)] {
            let zc = ctx.complex(z);
            for v in [
                log_g_hermite(&zc, &ctx).unwrap(),
                log_g_binet(&zc, &ctx).unwrap(),
                log_g_psi_quadrature(&zc, &ctx).unwrap(),
                log_g_asymptotic_shifted(&zc, &ctx).unwrap(),
            ] {
                assert!(diff(&v.value, &ctx.complex(want)) < -30.0, "z = {z}, {:?}", v.method);
            }
        }
        let three = log_g_hermite(&ctx.complex(3), &ctx).unwrap().value;
        assert!(log10_abs(&(three.real().clone() - &ln2)) < -30.0);
    }

    #[test]
    fn bracket_switch_is_continuous() {
        let bits = 300;
        let below = binet_bracket(&Float::with_val(bits, 0.4999999), bits);
        let above = binet_bracket(&Float::with_val(bits, 0.5), bits);
        assert!(log10_abs(&(below - above)) < -8.0);
    }

    #[test]
    fn asymptotic_first_correction_sign() {
        // +B₄/(8z²) = −1/(240 z²)
        let ctx = PrecisionContext::new(30);
        let z = ctx.complex(100);
        let (zero, _) = log_g_asymptotic_truncated(&z, 0, &ctx).unwrap();
        let (one, _) = log_g_asymptotic_truncated(&z, 1, &ctx).unwrap();
        let d = Complex::with_val(ctx.bits(), &one.value - &zero.value);
        let want = Float::with_val(ctx.bits(), -1) / 2_400_000u32;
        assert!(log10_abs(&(d.real().clone() - want)) < -35.0);
    }

    #[test]
    fn asymptotic_reports_insufficient_decay() {
        let ctx = PrecisionContext::new(30);
        assert!(matches!(
            log_g_asymptotic(&ctx.complex(2), 12, &ctx),
            Err(Error::InsufficientDecay { .. })
        ));
        assert!(log_g_asymptotic(&ctx.complex(60), 12, &ctx).is_ok());
    }

    #[test]
    fn complex_methods_agree() {
        let ctx = PrecisionContext::new(30);
        let z = ctx.complex((0.5, 1.0));
        let h = log_g_hermite(&z, &ctx).unwrap().value;
        let b = log_g_binet(&z, &ctx).unwrap().value;
        let p = log_g_psi_quadrature(&z, &ctx).unwrap().value;
        let a = log_g_asymptotic_shifted(&z, &ctx).unwrap().value;
        for (name, v) in [("binet", &b), ("psi", &p), ("asymptotic", &a)] {
            assert!(diff(&h, v) < -28.0, "{name}: {}", diff(&h, v));
        }
    }

    #[test]
    fn psi_quadrature_at_imaginary_unit_matches_shifted_asymptotic() {
        let ctx = PrecisionContext::new(30);
        let z = ctx.complex((0, 1));
        let p = log_g_psi_quadrature(&z, &ctx).unwrap().value;
        let a = log_g_asymptotic_shifted(&z, &ctx).unwrap().value;
        assert!(diff(&p, &a) < -28.0, "{}", diff(&p, &a));
    }

    #[test]
    fn psi_quadrature_continuation_recurrence() {
        // log G(z+2) = log G(z+1) + log Γ(z+1), with z+1 in the continued strip
        let ctx = PrecisionContext::new(30);
        let z = ctx.complex((-1.4, 0.3));
        let inner = log_g_psi_quadrature(&z, &ctx).unwrap().value;
        let z1 = Complex::with_val(ctx.bits(), &z + 1u32);
        let outer = log_g_psi_quadrature(&z1, &ctx).unwrap().value;
        // Γ(z+1) for Re(z+1) < 0 via log Γ(z+2) − log(z+1)
        let z2 = Complex::with_val(ctx.bits(), &z + 2u32);
        let lg2 = log_gamma(&z2, &ctx).unwrap().value - Complex::with_val(ctx.bits(), z1.ln_ref());
        let d = Complex::with_val(ctx.bits(), &outer - &inner) - lg2;
        // compare modulo 2πi
        let im = d.imag().to_f64();
        let turns = (im / std::f64::consts::TAU).round();
        let d = d - Complex::with_val(ctx.bits(), (0, turns)) * ctx.pi() * 2u32;
        assert!(log10_abs_c(&d) < -28.0, "{d}");
        assert!(matches!(log_g_psi_quadrature(&ctx.complex(-1), &ctx), Err(Error::ZeroFactor(_))));
    }
}
