//! Hurwitz and Riemann zeta values and derivatives.

use rug::ops::Pow;
use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::eval::{ComplexResult, Method, RealResult};
use crate::numerics::exact::{bernoulli_float, bernoulli_number, factorial, harmonic};
use crate::numerics::quadrature::{integrate_semi_infinite, integrate_semi_infinite_with, SemiInfinite};
use crate::precision::{log10_abs, log10_add, PrecisionContext};
use crate::special::constants::{euler_gamma, log_two_pi, ConstantKey, ConstantsCache};
use crate::special::gamma::rounding_log10;
use crate::special::{bose, TWO_PI};

/// ζ(s, z) for real s ≠ 1 and Re z > 0 from the Hermite integral
///
/// ζ(s,w) = w^{−s}/2 + w^{1−s}/(s−1) + 2∫₀^∞ sin(s·arctan(x/w)) / ((x²+w²)^{s/2}(e^{2πx}−1)) dx
///
/// evaluated at w = z + m with Re w ≥ 1, the first m terms of the defining
/// sum being added back.
pub fn hurwitz_zeta(s: &Float, z: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    if *s == 1 {
        return Err(Error::PoleAtOne);
    }
    if *z.real() <= 0 {
        return Err(Error::Domain("hurwitz_zeta requires Re z > 0".into()));
    }
    let bits = ctx.bits();
    let s = Float::with_val(bits, s);
    let shift = (1.0 - z.real().to_f64()).ceil().max(0.0) as u32;
    let w = Complex::with_val(bits, z + shift);
    let two_pi = ctx.pi() * 2u32;
    let half_s = Float::with_val(bits, &s / 2u32);

    let r = if w.imag().is_zero() {
        let wr = w.real().clone();
        let w2 = Float::with_val(bits, wr.square_ref());
        integrate_semi_infinite(
            |x: &Float| {
                let angle = Float::with_val(bits, x / &wr).atan() * &s;
                let rad = (Float::with_val(bits, x.square_ref()) + &w2).ln() * &half_s;
                angle.sin() * (-rad).exp() * bose(x, &two_pi)
            },
            TWO_PI,
            ctx,
        )?
        .into_complex()
    } else {
        let w_inv = Complex::with_val(bits, w.recip_ref());
        let w2 = Complex::with_val(bits, w.square_ref());
        integrate_semi_infinite(
            |x: &Float| {
                let angle = Complex::with_val(bits, &w_inv * x).atan() * &s;
                let rad = Complex::with_val(bits, &w2 + Float::with_val(bits, x.square_ref())).ln() * &half_s;
                angle.sin() * (-rad).exp() * bose(x, &two_pi)
            },
            TWO_PI,
            ctx,
        )?
    };

    let ln_w = Complex::with_val(bits, w.ln_ref());
    let w_neg_s = Complex::with_val(bits, &ln_w * &s).neg_exp();
    let mut v = Complex::with_val(bits, &w_neg_s / 2u32);
    let s_minus_1 = Float::with_val(bits, &s - 1u32);
    v += Complex::with_val(bits, &w_neg_s * &w) / &s_minus_1;
    v += r.value * 2u32;
    for j in 0..shift {
        let t = Complex::with_val(bits, z + j).ln() * &s;
        v += t.neg_exp();
    }
    let err = log10_add(r.err_log10 + 2f64.log10(), rounding_log10(&v, bits));
    Ok(ComplexResult::new(v, err, Method::HermiteZeta, r.evaluations))
}

trait NegExp {
    fn neg_exp(self) -> Self;
}

impl NegExp for Complex {
    fn neg_exp(self) -> Self {
        (-self).exp()
    }
}

/// ζ′(−1, z) for Re z > 0:
///
/// z²/2·log z − z²/4 − z/2·log z + 2z∫₀^∞ arctan(x/z)/(e^{2πx}−1) dx
///   + ∫₀^∞ x log(x²+z²)/(e^{2πx}−1) dx
pub fn hurwitz_zeta_prime_neg1(z: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    if *z.real() <= 0 {
        return Err(Error::Domain("ζ′(−1, z) requires Re z > 0".into()));
    }
    let bits = ctx.bits();
    let two_pi = ctx.pi() * 2u32;
    let r = if z.imag().is_zero() {
        let zr = z.real().clone();
        let z2 = Float::with_val(bits, zr.square_ref());
        let two_z = Float::with_val(bits, &zr * 2u32);
        integrate_semi_infinite(
            |x: &Float| {
                let a = Float::with_val(bits, x / &zr).atan() * &two_z;
                let l = (Float::with_val(bits, x.square_ref()) + &z2).ln() * x;
                (a + l) * bose(x, &two_pi)
            },
            TWO_PI,
            ctx,
        )?
        .into_complex()
    } else {
        let z_inv = Complex::with_val(bits, z.recip_ref());
        let z2 = Complex::with_val(bits, z.square_ref());
        let two_z = Complex::with_val(bits, z * 2u32);
        integrate_semi_infinite(
            |x: &Float| {
                let a = Complex::with_val(bits, &z_inv * x).atan() * &two_z;
                let l = Complex::with_val(bits, &z2 + Float::with_val(bits, x.square_ref())).ln() * x;
                (a + l) * bose(x, &two_pi)
            },
            TWO_PI,
            ctx,
        )?
    };
    let ln_z = Complex::with_val(bits, z.ln_ref());
    let z2 = Complex::with_val(bits, z.square_ref());
    let mut v = Complex::with_val(bits, &z2 * &ln_z) / 2u32;
    v -= Complex::with_val(bits, &z2 / 4u32);
    v -= Complex::with_val(bits, z * &ln_z) / 2u32;
    v += r.value;
    let err = log10_add(r.err_log10, rounding_log10(&v, bits));
    Ok(ComplexResult::new(v, err, Method::HermiteZetaPrime, r.evaluations))
}

/// ζ′(−1) = 2∫₀^∞ x log x/(e^{2πx}−1) dx, uncached.
pub fn zeta_prime_neg1_integral(ctx: &PrecisionContext) -> Result<RealResult> {
    let bits = ctx.bits();
    let two_pi = ctx.pi() * 2u32;
    let r = integrate_semi_infinite(
        |x: &Float| Float::with_val(bits, x.ln_ref()) * x * bose(x, &two_pi),
        TWO_PI,
        ctx,
    )?;
    Ok(RealResult::new(
        r.value * 2u32,
        r.err_log10 + 2f64.log10(),
        Method::ZetaPrimeIntegral,
        r.evaluations,
    ))
}

/// ζ′(1 − 2m) and ζ′(−2m) from the differentiated functional equation,
/// uncached. Valid for k ≥ 1.
pub fn zeta_prime_neg_functional(k: u32, ctx: &PrecisionContext) -> Result<RealResult> {
    let bits = ctx.bits();
    let two_pi = ctx.pi() * 2u32;
    if k % 2 == 0 {
        // ζ′(−2m) = (−1)^m (2m)! ζ(2m+1) / (2 (2π)^{2m})
        let m = k / 2;
        let z = riemann_zeta_int(k + 1, ctx)?;
        let mut v = Float::with_val(bits, &factorial(k)) * &z.value / Float::with_val(bits, two_pi.pow(k)) / 2u32;
        if m % 2 == 1 {
            v = -v;
        }
        let err = log10_add(z.err_log10 + log10_abs(&v) - log10_abs(&z.value), -f64::from(bits) * 0.3);
        Ok(RealResult::new(v, err, Method::FunctionalEquation, z.evaluations))
    } else {
        // ζ′(1−2m) = ζ(1−2m)·[log 2π − ψ(2m) − ζ′(2m)/ζ(2m)]
        let m = (k + 1) / 2;
        let b2m = bernoulli_float(2 * m, bits);
        let zeta_neg = Float::with_val(bits, -&b2m) / (2 * m);
        let psi = Float::with_val(bits, &harmonic(2 * m - 1)) - euler_gamma(ctx);
        // ζ(2m) = (−1)^{m+1} B₂ₘ (2π)^{2m} / (2 (2m)!)
        let mut zeta_pos = Float::with_val(bits, &b2m * Float::with_val(bits, two_pi.pow(2 * m)))
            / Float::with_val(bits, &factorial(2 * m))
            / 2u32;
        if m % 2 == 0 {
            zeta_pos = -zeta_pos;
        }
        let dz = zeta_prime_int(2 * m, ctx)?;
        let bracket = log_two_pi(ctx) - psi - Float::with_val(bits, &dz.value / &zeta_pos);
        let v = zeta_neg * bracket;
        Ok(RealResult::new(v, dz.err_log10, Method::FunctionalEquation, dz.evaluations))
    }
}

/// ζ′(−k), k ≥ 1, memoized. k = 1 comes from the x log x integral, k ≥ 2
/// from the functional equation.
pub fn zeta_prime_neg(k: u32, ctx: &PrecisionContext) -> Result<Float> {
    if k == 0 {
        return Ok(crate::special::constants::zeta_prime_0(ctx));
    }
    ConstantsCache::global().get_or_try_insert(ConstantKey::ZetaPrimeNeg(k), ctx, |c| {
        if k == 1 {
            zeta_prime_neg1_integral(c).map(|r| r.value)
        } else {
            zeta_prime_neg_functional(k, c).map(|r| r.value)
        }
    })
}

/// log A = 1/12 − ζ′(−1), consistent with the cached ζ′(−1).
pub fn glaisher_log(ctx: &PrecisionContext) -> Result<Float> {
    ConstantsCache::global().get_or_try_insert(ConstantKey::GlaisherLog, ctx, |c| {
        let zp = zeta_prime_neg(1, c)?;
        Ok(Float::with_val(c.bits(), 1) / 12u32 - zp)
    })
}

/// ζ(s) for real s ≠ 1 through ζ(s, 1).
pub fn riemann_zeta(s: &Float, ctx: &PrecisionContext) -> Result<RealResult> {
    if *s == 1 {
        return Err(Error::PoleAtOne);
    }
    let r = hurwitz_zeta(s, &ctx.complex(1), ctx)?;
    Ok(r.map(|c| c.real().clone()))
}

/// ζ(s) at an integer s ≥ 2, memoized.
pub fn riemann_zeta_int(s: u32, ctx: &PrecisionContext) -> Result<RealResult> {
    if s == 1 {
        return Err(Error::PoleAtOne);
    }
    let target = -f64::from(ctx.working_digits()) / 1.0;
    let mut evals = 0;
    let v = ConstantsCache::global().get_or_try_insert(ConstantKey::Zeta(s), ctx, |c| {
        let r = riemann_zeta(&c.float(s), c)?;
        evals = r.evaluations;
        Ok(r.value)
    })?;
    Ok(RealResult::new(v, target.max(ctx.target_log10()), Method::HermiteZeta, evals))
}

fn em_cutoff(ctx: &PrecisionContext) -> u64 {
    (0.4 * f64::from(ctx.working_digits() + 2)).ceil() as u64 + 2
}

/// Σ_{k≥N} f(k) by Euler–Maclaurin given f(N), ∫_N^∞ f, and the odd
/// derivatives f^{(2i−1)}(N) supplied in order. Returns the estimate and
/// log10 of the first omitted correction, which bounds the remainder for
/// the completely monotone summands used here.
fn euler_maclaurin_tail(
    f_n: &Float,
    integral: Float,
    mut odd_derivative: impl FnMut() -> Float,
    target_log10: f64,
) -> Result<(Float, f64)> {
    let bits = f_n.prec();
    let mut est = integral + Float::with_val(bits, f_n / 2u32);
    let mut last = f64::INFINITY;
    let mut i = 1u32;
    loop {
        let d = odd_derivative();
        let b = Float::with_val(bits, &bernoulli_number(2 * i)) / Float::with_val(bits, &factorial(2 * i));
        let t = b * d;
        let mag = log10_abs(&t);
        if mag < target_log10 {
            return Ok((est, mag));
        }
        if mag > last || i > 2000 {
            return Err(Error::NonConvergence {
                what: "Euler–Maclaurin tail",
                target_log10,
                reached_log10: last,
            });
        }
        est -= t;
        last = mag;
        i += 1;
    }
}

/// Σ_{k≥N} k^{−s} by Euler–Maclaurin.
fn power_tail(s: u32, n: u64, target_log10: f64, bits: u32) -> Result<(Float, f64)> {
    let nf = Float::with_val(bits, n);
    let f_n = Float::with_val(bits, (&nf).pow(-i64::from(s)));
    let integral = Float::with_val(bits, &f_n * &nf) / (s - 1);
    // f^{(j)}(N) = (−1)^j (s)_j N^{−s−j}
    let inv = Float::with_val(bits, nf.recip_ref());
    let mut cur = f_n.clone();
    let mut j = 0u32;
    let step = move || {
        // advance to the next odd order
        loop {
            cur *= -(Float::with_val(bits, s + j)) * &inv;
            j += 1;
            if j % 2 == 1 {
                return cur.clone();
            }
        }
    };
    euler_maclaurin_tail(&f_n, integral, step, target_log10)
}

/// ζ(s) − 1 = Σ_{j≥2} j^{−s} for integer s ≥ 2: a direct sum up to a
/// cutoff N plus the Euler–Maclaurin tail at N.
pub fn zeta_minus_one_series(s: u32, ctx: &PrecisionContext) -> Result<RealResult> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!("ζ(s) − 1 series needs s ≥ 2, got {s}")));
    }
    let bits = ctx.bits();
    let target = -f64::from(ctx.working_digits()) - 2.0;
    let mut acc = Float::new(bits);
    let mut n = 2u64;
    let cutoff = em_cutoff(ctx);
    while n < cutoff {
        let t = Float::with_val(bits, Float::with_val(bits, n).pow(-i64::from(s)));
        let small = log10_abs(&t) < target;
        acc += t;
        n += 1;
        if small {
            // remaining terms are below tolerance; bound them by the integral
            let tail = Float::with_val(bits, Float::with_val(bits, n).pow(1 - i64::from(s))) / (s - 1);
            let err = log10_add(log10_abs(&tail), rounding_log10(&Complex::with_val(bits, &acc), bits));
            return Ok(RealResult::new(acc, err, Method::EulerMaclaurin, n - 2));
        }
    }
    let (tail, err) = power_tail(s, n, target, bits)?;
    acc += tail;
    let err = log10_add(err, rounding_log10(&Complex::with_val(bits, &acc), bits));
    Ok(RealResult::new(acc, err, Method::EulerMaclaurin, n - 2))
}

/// ζ(s) − 1 = (1/Γ(s)) ∫₀^∞ x^{s−1}/(eˣ(eˣ−1)) dx for integer s ≥ 2.
pub fn zeta_minus_one_integral(s: u32, ctx: &PrecisionContext) -> Result<RealResult> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!("ζ(s) − 1 integral needs s ≥ 2, got {s}")));
    }
    let bits = ctx.bits();
    let inv_fact = Float::with_val(bits, &factorial(s - 1)).recip();
    let r = integrate_semi_infinite_with(
        |x: &Float| {
            let den = Float::with_val(bits, x.exp_m1_ref()) * Float::with_val(bits, x.exp_ref());
            Float::with_val(bits, x.pow(s - 1)) * &inv_fact / den
        },
        &SemiInfinite::new(1.0).first_break(2.0),
        ctx,
    )?;
    Ok(RealResult::new(r.value, r.err_log10, Method::Quadrature, r.evaluations))
}

/// ζ′(s) = −Σ log k / k^s for integer s ≥ 2 by Euler–Maclaurin, memoized.
pub fn zeta_prime_int(s: u32, ctx: &PrecisionContext) -> Result<RealResult> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!("ζ′(s) summation needs s ≥ 2, got {s}")));
    }
    let mut err = -f64::from(ctx.working_digits());
    let mut evals = 0;
    let v = ConstantsCache::global().get_or_try_insert(ConstantKey::ZetaPrime(s), ctx, |c| {
        let r = zeta_prime_int_uncached(s, c)?;
        err = r.err_log10;
        evals = r.evaluations;
        Ok(r.value)
    })?;
    Ok(RealResult::new(v, err, Method::EulerMaclaurin, evals))
}

fn zeta_prime_int_uncached(s: u32, ctx: &PrecisionContext) -> Result<RealResult> {
    let bits = ctx.bits();
    let target = -f64::from(ctx.working_digits()) - 2.0;
    let n = em_cutoff(ctx);
    let mut acc = Float::new(bits);
    for k in 2..n {
        let kf = Float::with_val(bits, k);
        acc += Float::with_val(bits, kf.ln_ref()) * Float::with_val(bits, kf.pow(-i64::from(s)));
    }
    let nf = Float::with_val(bits, n);
    let ln_n = Float::with_val(bits, nf.ln_ref());
    let n_pow = Float::with_val(bits, (&nf).pow(-i64::from(s)));
    let f_n = Float::with_val(bits, &n_pow * &ln_n);
    let sm1 = Float::with_val(bits, s - 1);
    // ∫_N^∞ x^{−s} log x dx = N^{1−s}(log N/(s−1) + 1/(s−1)²)
    let integral = Float::with_val(bits, &n_pow * &nf)
        * (Float::with_val(bits, &ln_n / &sm1) + Float::with_val(bits, sm1.square_ref()).recip());
    // f^{(m)}(N) = N^{−s−m}(a_m log N + b_m)
    let inv = Float::with_val(bits, nf.recip_ref());
    let mut a = Float::with_val(bits, 1);
    let mut b = Float::new(bits);
    let mut scale = n_pow.clone();
    let mut m = 0u32;
    let step = || loop {
        let c = Float::with_val(bits, s + m);
        let new_b = -Float::with_val(bits, &c * &b) + &a;
        a *= -c;
        b = new_b;
        scale *= &inv;
        m += 1;
        if m % 2 == 1 {
            return (Float::with_val(bits, &a * &ln_n) + &b) * &scale;
        }
    };
    let (tail, err) = euler_maclaurin_tail(&f_n, integral, step, target)?;
    acc += tail;
    let err = log10_add(err, rounding_log10(&Complex::with_val(bits, &acc), bits));
    Ok(RealResult::new(-acc, err, Method::EulerMaclaurin, n))
}

/// ζ′(2) = −Σ log k / k².
pub fn zeta_prime_2(ctx: &PrecisionContext) -> Result<RealResult> {
    zeta_prime_int(2, ctx)
}
