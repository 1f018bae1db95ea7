//! Multiple gamma functions Γₙ.

use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

use crate::barnes::{log_barnes_g, log_g_hermite};
use crate::error::{Error, Result};
use crate::eval::{ComplexResult, Method, RealResult};
use crate::numerics::exact::{bernoulli_float, bernoulli_number, binomial, double_factorial, factorial, harmonic, stirling_subset};
use crate::numerics::quadrature::integrate_semi_infinite;
use crate::precision::{log10_abs_c, log10_add, PrecisionContext};
use crate::report::IdentityReport;
use crate::special::constants::zeta_prime_0;
use crate::special::gamma::rounding_log10;
use crate::special::zeta::zeta_prime_neg;
use crate::special::{bose, log_gamma, TWO_PI};

/// Highest order accepted by [`log_multigamma`] unless overridden.
pub const DEFAULT_MAX_ORDER: u32 = 6;

/// Coefficients of ∏_{j=1}^{n−1} (x + j − 1/2), constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PknCoefficients {
    pub n: u32,
    pub coeffs: Vec<Rational>,
}

impl PknCoefficients {
    pub fn as_floats(&self, bits: u32) -> Vec<Float> {
        self.coeffs.iter().map(|c| Float::with_val(bits, c)).collect()
    }
}

pub fn pkn_coefficients(n: u32) -> Result<PknCoefficients> {
    if n == 0 {
        return Err(Error::InvalidArgument("pkn_coefficients needs n ≥ 1".into()));
    }
    let mut coeffs = vec![Rational::from(1)];
    for j in 1..n {
        let c = Rational::from((2 * j - 1, 2));
        let mut next = vec![Rational::new(); coeffs.len() + 1];
        for (k, a) in coeffs.iter().enumerate() {
            next[k] += Rational::from(a * &c);
            next[k + 1] += a;
        }
        coeffs = next;
    }
    Ok(PknCoefficients { n, coeffs })
}

fn zeta_prime_at(k: u32, ctx: &PrecisionContext) -> Result<Float> {
    if k == 0 {
        Ok(zeta_prime_0(ctx))
    } else {
        zeta_prime_neg(k, ctx)
    }
}

/// 2(−1)^{p/2}∫ x^p arctan(x/w) (odd order p+1) or −(−1)^{(p+1)/2}∫ x^p log(x²+w²)
/// (even order p+1), each against 1/(e^{2πx}−1).
fn order_integral(p: u32, w: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    let bits = ctx.bits();
    let two_pi = ctx.pi() * 2u32;
    let real = w.imag().is_zero();
    let r = if p % 2 == 0 {
        let r = if real {
            let wr = w.real().clone();
            integrate_semi_infinite(
                |x: &Float| Float::with_val(bits, x / &wr).atan() * Float::with_val(bits, x.pow(p)) * bose(x, &two_pi),
                TWO_PI,
                ctx,
            )?
            .into_complex()
        } else {
            let w_inv = Complex::with_val(bits, w.recip_ref());
            integrate_semi_infinite(
                |x: &Float| {
                    Complex::with_val(bits, &w_inv * x).atan() * (Float::with_val(bits, x.pow(p)) * bose(x, &two_pi))
                },
                TWO_PI,
                ctx,
            )?
        };
        let sign: i32 = if (p / 2) % 2 == 0 { 2 } else { -2 };
        r.map(|v| v * sign)
    } else {
        let r = if real {
            let w2 = Float::with_val(bits, w.real().square_ref());
            integrate_semi_infinite(
                |x: &Float| {
                    (Float::with_val(bits, x.square_ref()) + &w2).ln() * Float::with_val(bits, x.pow(p)) * bose(x, &two_pi)
                },
                TWO_PI,
                ctx,
            )?
            .into_complex()
        } else {
            let w2 = Complex::with_val(bits, w.square_ref());
            integrate_semi_infinite(
                |x: &Float| {
                    Complex::with_val(bits, &w2 + Float::with_val(bits, x.square_ref())).ln()
                        * (Float::with_val(bits, x.pow(p)) * bose(x, &two_pi))
                },
                TWO_PI,
                ctx,
            )?
        };
        let sign: i32 = if ((p + 1) / 2) % 2 == 0 { -1 } else { 1 };
        r.map(|v| v * sign)
    };
    Ok(r)
}

/// log Γ_N(w+1) for N ≥ 2 and Re w > 0 from the integral representation
///
/// (N−1)! log Γ_N(w+1) = s·[w^N (log w − H_N)/N − Σ_{k=0}^{N−1} (−1)^k C(N−1,k) ζ′(−k) w^{N−1−k}
///                          − Σ_{k=1}^{N−2} (−1)^k k! {N−1,k} log Γ_{k+1}(w+1)] + I_N
///
/// with s = +1 for odd N and −1 for even N, `lower[j]` holding log Γ_{j+2}(w+1).
fn prop_order(order: u32, w: &Complex, lower: &[ComplexResult], ctx: &PrecisionContext) -> Result<ComplexResult> {
    let bits = ctx.bits();
    let p = order - 1;
    let ln_w = Complex::with_val(bits, w.ln_ref());
    let h = Float::with_val(bits, &harmonic(order));
    let w_pow = |e: u32| Complex::with_val(bits, w.pow(e));
    let mut bracket = Complex::with_val(bits, w_pow(order) * (ln_w - h)) / order;
    for k in 0..=p {
        let c = Float::with_val(bits, &binomial(p, k)) * zeta_prime_at(k, ctx)?;
        let t = w_pow(p - k) * c;
        if k % 2 == 0 {
            bracket -= t;
        } else {
            bracket += t;
        }
    }
    let mut err = f64::NEG_INFINITY;
    let mut evals = 0;
    for k in 1..p {
        let weight = Integer::from(factorial(k) * stirling_subset(p, k));
        let l = &lower[(k - 1) as usize];
        err = log10_add(err, l.err_log10 + weight.to_f64().log10());
        let t = Complex::with_val(bits, &l.value * &weight);
        if k % 2 == 0 {
            bracket -= t;
        } else {
            bracket += t;
        }
    }
    if order % 2 == 0 {
        bracket = -bracket;
    }
    let i = order_integral(p, w, ctx)?;
    evals += i.evaluations;
    let total = bracket + i.value;
    let fact = Float::with_val(bits, &factorial(p));
    let v = total / &fact;
    let err = log10_add(log10_add(err, i.err_log10) - fact.to_f64().log10(), rounding_log10(&v, bits));
    Ok(ComplexResult::new(v, err, Method::MultigammaIntegral, evals))
}

/// log Γ_k(w+1) for k = 2..=order at one w with Re w > 0, lowest first.
fn ladder(order: u32, w: &Complex, ctx: &PrecisionContext) -> Result<Vec<ComplexResult>> {
    let mut out: Vec<ComplexResult> = Vec::new();
    if order >= 2 {
        let g = log_g_hermite(w, ctx)?;
        out.push(g.map(|v| -v).with_method(Method::MultigammaIntegral));
    }
    for k in 3..=order {
        let next = prop_order(k, w, &out, ctx)?;
        out.push(next);
    }
    Ok(out)
}

/// log Γₙ(z) for Re z > 0 with the default order cap.
pub fn log_multigamma(n: u32, z: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    log_multigamma_capped(n, z, DEFAULT_MAX_ORDER, ctx)
}

/// log Γₙ(z). Orders 1 and 2 use log Γ and −log G; higher orders use the
/// integral representation at z − 1 when Re z > 1, and otherwise at z
/// followed by log Γₙ(z) = log Γₙ(z+1) + log Γₙ₋₁(z).
pub fn log_multigamma_capped(n: u32, z: &Complex, max_order: u32, ctx: &PrecisionContext) -> Result<ComplexResult> {
    if n == 0 || n > max_order {
        return Err(Error::InvalidArgument(format!("multigamma order must be in 1..={max_order}, got {n}")));
    }
    if *z.real() <= 0 {
        return Err(Error::Domain("log_multigamma requires Re z > 0".into()));
    }
    let bits = ctx.bits();
    match n {
        1 => return log_gamma(z, ctx).map(|r| r.with_method(Method::MultigammaIntegral)),
        2 => {
            let g = log_barnes_g(z, ctx)?.finite("G(z)")?;
            return Ok(g.map(|v| -v).with_method(Method::MultigammaIntegral));
        }
        _ => {}
    }
    if *z.real() > 1 {
        let w = Complex::with_val(bits, z - 1u32);
        return Ok(ladder(n, &w, ctx)?.pop().expect("order ≥ 3"));
    }
    // log Γₙ(z) = log Γₙ(z+1) + Σ_{k=1}^{n−1} ... unrolled as a ladder at w = z:
    // log Γ_k(z) = log Γ_k(z+1) + log Γ_{k−1}(z), log Γ_1(z) = log Γ(z)
    let up = ladder(n, z, ctx)?;
    let lg = log_gamma(z, ctx)?;
    let mut acc = lg.value.clone();
    let mut err = lg.err_log10;
    let mut evals = lg.evaluations;
    for r in &up {
        acc += &r.value;
        err = log10_add(err, r.err_log10);
        evals += r.evaluations;
    }
    let err = log10_add(err, rounding_log10(&acc, bits));
    Ok(ComplexResult::new(acc, err, Method::MultigammaIntegral, evals))
}

/// 2 log Γ₃(z+1) = z³(log z − H₃)/3 − (z² ζ′(0) − 2z ζ′(−1) + ζ′(−2)) − log G(z+1)
///                 − 2∫₀^∞ x² arctan(x/z)/(e^{2πx}−1) dx,
/// returned as log Γ₃(z+1).
pub fn log_gamma3_integral(z: &Complex, ctx: &PrecisionContext) -> Result<ComplexResult> {
    if *z.real() <= 0 {
        return Err(Error::Domain("log_gamma3_integral requires Re z > 0".into()));
    }
    let bits = ctx.bits();
    let two_pi = ctx.pi() * 2u32;
    let i = if z.imag().is_zero() {
        let zr = z.real().clone();
        integrate_semi_infinite(
            |x: &Float| Float::with_val(bits, x / &zr).atan() * Float::with_val(bits, x.square_ref()) * bose(x, &two_pi),
            TWO_PI,
            ctx,
        )?
        .into_complex()
    } else {
        let z_inv = Complex::with_val(bits, z.recip_ref());
        integrate_semi_infinite(
            |x: &Float| Complex::with_val(bits, &z_inv * x).atan() * (Float::with_val(bits, x.square_ref()) * bose(x, &two_pi)),
            TWO_PI,
            ctx,
        )?
    };
    let g = log_g_hermite(z, ctx)?;
    let ln_z = Complex::with_val(bits, z.ln_ref());
    let z2 = Complex::with_val(bits, z.square_ref());
    let z3 = Complex::with_val(bits, &z2 * z);
    let h3 = Float::with_val(bits, &harmonic(3));
    let mut v = z3 * (ln_z - h3) / 3u32;
    v -= z2 * zeta_prime_0(ctx);
    v += Complex::with_val(bits, z * zeta_prime_neg(1, ctx)?) * 2u32;
    v -= zeta_prime_neg(2, ctx)?;
    v -= &g.value;
    v -= i.value * 2u32;
    v /= 2u32;
    let err = log10_add(log10_add(i.err_log10, g.err_log10), rounding_log10(&v, bits));
    Ok(ComplexResult::new(v, err, Method::MultigammaIntegral, i.evaluations + g.evaluations))
}

fn gamma3_head(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let bits = ctx.bits();
    let ln_z = Complex::with_val(bits, z.ln_ref());
    let z2 = Complex::with_val(bits, z.square_ref());
    let z3 = Complex::with_val(bits, &z2 * z);
    let zp0 = zeta_prime_0(ctx);
    let zp1 = zeta_prime_neg(1, ctx)?;
    let zp2 = zeta_prime_neg(2, ctx)?;
    // (z³/3)(log z − 11/6)
    let mut v = z3 * Complex::with_val(bits, &ln_z - Float::with_val(bits, 11) / 6u32) / 3u32;
    // − (z²/2)(log z − 3/2 + 2ζ′(0))
    let inner = Complex::with_val(bits, &ln_z - Float::with_val(bits, 1.5)) + Float::with_val(bits, &zp0 * 2u32);
    v -= z2 * inner / 2u32;
    v += Complex::with_val(bits, &ln_z / 12u32);
    v += Complex::with_val(bits, z * (Float::with_val(bits, &zp1 * 2u32) + &zp0));
    v -= zp1;
    v -= zp2;
    Ok(v)
}

/// Even and odd correction terms of order k for 2 log Γ₃(z+1).
fn gamma3_terms(k: u32, z: &Complex, bits: u32) -> (Complex, Complex) {
    let b = bernoulli_float(2 * k + 2, bits);
    let k = k as i32;
    let even = Complex::with_val(bits, z.pow(-2 * k)) * Float::with_val(bits, &b / (4 * k * (k + 1)));
    let odd = Complex::with_val(bits, z.pow(1 - 2 * k)) * (b / (2 * (k + 1) * (2 * k - 1)));
    (even, odd)
}

/// log Γ₃(z+1) from `terms` corrections of its large-z expansion, with
/// log10 of the larger first omitted term.
pub fn log_gamma3_asymptotic_truncated(z: &Complex, terms: u32, ctx: &PrecisionContext) -> Result<(ComplexResult, f64)> {
    if *z.real() <= 0 {
        return Err(Error::Domain("log_gamma3_asymptotic requires Re z > 0".into()));
    }
    let bits = ctx.bits();
    let mut v = gamma3_head(z, ctx)?;
    for k in 1..=terms {
        let (e, o) = gamma3_terms(k, z, bits);
        v -= e;
        v += o;
    }
    let (e, o) = gamma3_terms(terms + 1, z, bits);
    // halve for log Γ₃
    let omitted = log10_abs_c(&e).max(log10_abs_c(&o)) - 2f64.log10();
    v /= 2u32;
    let err = log10_add(omitted, rounding_log10(&v, bits));
    Ok((ComplexResult::new(v, err, Method::TripleGammaAsymptotic, u64::from(terms)), omitted))
}

/// Truncated expansion that fails with InsufficientDecay when the first
/// omitted term exceeds 10^{−digits}.
pub fn log_gamma3_asymptotic(z: &Complex, terms: u32, ctx: &PrecisionContext) -> Result<ComplexResult> {
    let (r, omitted) = log_gamma3_asymptotic_truncated(z, terms, ctx)?;
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

/// log Γₙ(1/2) in closed form:
///
/// −(n−1)! log Γₙ(1/2) = −(2n−3)!! log π / 2ⁿ + log 2 Σ_{k=1}^{n−1} P_k B_{k+1}/((k+1) 2^k)
///                      + Σ_{k=1}^{n−1} (2^{k+1}−1)/2^k · P_k ζ′(−k)
///
/// with P_k the coefficients of ∏_{j=1}^{n−1}(x + j − 1/2).
pub fn multigamma_half(n: u32, ctx: &PrecisionContext) -> Result<RealResult> {
    let pk = pkn_coefficients(n)?;
    let bits = ctx.bits();
    let ln_pi = Float::with_val(bits, ctx.pi().ln_ref());
    let ln2 = Float::with_val(bits, 2).ln();
    let df = double_factorial(2 * i64::from(n) - 3)?;
    let mut rhs = -(Float::with_val(bits, &df) * ln_pi) / Float::with_val(bits, 2u32).pow(n);
    let mut b_sum = Rational::new();
    for k in 1..n {
        let t = Rational::from(&pk.coeffs[k as usize] * bernoulli_number(k + 1)) / (Integer::from(k + 1) << k);
        b_sum += t;
    }
    rhs += ln2 * Float::with_val(bits, &b_sum);
    for k in 1..n {
        let w = Rational::from(&pk.coeffs[k as usize] * Rational::from(((Integer::from(1) << (k + 1)) - 1u32, Integer::from(1) << k)));
        rhs += zeta_prime_neg(k, ctx)? * Float::with_val(bits, &w);
    }
    let v = -rhs / Float::with_val(bits, &factorial(n - 1));
    let err = rounding_log10(&Complex::with_val(bits, &v), bits) + 1.0;
    Ok(RealResult::new(v, err, Method::MultigammaHalf, 0))
}

/// Both sides of the z = 1 specializations of the order-(2n+1) and
/// order-2n representations:
///
/// 2(−1)ⁿ ∫₀^∞ x^{2n} arctan x/(e^{2πx}−1) dx = H_{2n+1}/(2n+1) + Σ_{k=0}^{2n} (−1)^k C(2n,k) ζ′(−k)
/// (−1)ⁿ ∫₀^∞ x^{2n−1} log(1+x²)/(e^{2πx}−1) dx = H_{2n}/(2n) + Σ_{k=0}^{2n−1} (−1)^k C(2n−1,k) ζ′(−k)
pub fn verify_int1_int2(n: u32, ctx: &PrecisionContext, tolerance_log10: f64) -> Result<(IdentityReport, IdentityReport)> {
    if n == 0 {
        return Err(Error::InvalidArgument("verify_int1_int2 needs n ≥ 1".into()));
    }
    let bits = ctx.bits();
    let two_pi = ctx.pi() * 2u32;
    let sign = if n % 2 == 0 { 1 } else { -1 };

    let i1 = integrate_semi_infinite(
        |x: &Float| Float::with_val(bits, x.atan_ref()) * Float::with_val(bits, x.pow(2 * n)) * bose(x, &two_pi),
        TWO_PI,
        ctx,
    )?;
    let lhs1 = i1.value * (2 * sign);
    let mut rhs1 = Float::with_val(bits, &harmonic(2 * n + 1)) / (2 * n + 1);
    for k in 0..=2 * n {
        let t = Float::with_val(bits, &binomial(2 * n, k)) * zeta_prime_at(k, ctx)?;
        if k % 2 == 0 {
            rhs1 += t;
        } else {
            rhs1 -= t;
        }
    }

    let i2 = integrate_semi_infinite(
        |x: &Float| {
            (Float::with_val(bits, x.square_ref()) + 1u32).ln() * Float::with_val(bits, x.pow(2 * n - 1)) * bose(x, &two_pi)
        },
        TWO_PI,
        ctx,
    )?;
    let lhs2 = i2.value * sign;
    let mut rhs2 = Float::with_val(bits, &harmonic(2 * n)) / (2 * n);
    for k in 0..2 * n {
        let t = Float::with_val(bits, &binomial(2 * n - 1, k)) * zeta_prime_at(k, ctx)?;
        if k % 2 == 0 {
            rhs2 += t;
        } else {
            rhs2 -= t;
        }
    }
    let d = ctx.digits();
    Ok((
        IdentityReport::real(format!("int1.n={n}"), &lhs1, &rhs1, d, tolerance_log10),
        IdentityReport::real(format!("int2.n={n}"), &lhs2, &rhs2, d, tolerance_log10),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::log10_abs;

    fn c(ctx: &PrecisionContext, x: f64) -> Complex {
        ctx.complex(x)
    }

    fn close(a: &Complex, b: &Complex, tol: f64) {
        let d = log10_abs_c(&Complex::with_val(a.prec().0, a - b));
        assert!(d < tol, "{a} vs {b}: {d}");
    }

    #[test]
    fn pkn_small_orders() {
        assert_eq!(pkn_coefficients(1).unwrap().coeffs, vec![Rational::from(1)]);
        assert_eq!(pkn_coefficients(2).unwrap().coeffs, vec![Rational::from((1, 2)), Rational::from(1)]);
        assert_eq!(
            pkn_coefficients(3).unwrap().coeffs,
            vec![Rational::from((3, 4)), Rational::from(2), Rational::from(1)]
        );
        assert!(pkn_coefficients(0).is_err());
    }

    #[test]
    fn pkn_constant_term_is_double_factorial_ratio() {
        for n in 1..=12u32 {
            let p = pkn_coefficients(n).unwrap();
            let want = Rational::from((double_factorial(2 * i64::from(n) - 3).unwrap(), Integer::from(1) << (n - 1)));
            assert_eq!(p.coeffs[0], want, "n = {n}");
            assert_eq!(*p.coeffs.last().unwrap(), 1);
        }
    }

    #[test]
    fn unit_argument_vanishes() {
        let ctx = PrecisionContext::new(30);
        for n in 1..=4 {
            let v = log_multigamma(n, &c(&ctx, 1.0), &ctx).unwrap().value;
            assert!(log10_abs_c(&v) < -29.0, "n = {n}: {v}");
        }
    }

    #[test]
    fn recurrence_stack() {
        let ctx = PrecisionContext::new(30);
        let bits = ctx.bits();
        for n in 2..=4u32 {
            for z in [0.5, 1.0, 1.5, 2.5] {
                let zc = c(&ctx, z);
                let z1 = Complex::with_val(bits, &zc + 1u32);
                let up = log_multigamma(n + 1, &z1, &ctx).unwrap().value;
                let here = log_multigamma(n + 1, &zc, &ctx).unwrap().value;
                let lower = log_multigamma(n, &zc, &ctx).unwrap().value;
                let r = up - here + lower;
                assert!(log10_abs_c(&r) < -28.0, "n = {n}, z = {z}: {r}");
            }
        }
    }

    #[test]
    fn half_closed_form_matches_integral_route() {
        let ctx = PrecisionContext::new(30);
        for n in 1..=4 {
            let closed = multigamma_half(n, &ctx).unwrap().value;
            let numeric = log_multigamma(n, &c(&ctx, 0.5), &ctx).unwrap().value;
            assert!(log10_abs(&(numeric.real().clone() - &closed)) < -27.0, "n = {n}");
        }
    }

    #[test]
    fn third_order_routes_agree() {
        let ctx = PrecisionContext::new(30);
        let bits = ctx.bits();
        for z in [1.0, 2.0, 5.0] {
            let zc = c(&ctx, z);
            let direct = log_gamma3_integral(&zc, &ctx).unwrap().value;
            let generic = log_multigamma(3, &Complex::with_val(bits, &zc + 1u32), &ctx).unwrap().value;
            close(&direct, &generic, -28.0);
        }
    }

    #[test]
    fn triple_asymptotic_leading_odd_coefficient() {
        // the k = 1 odd correction to 2 log Γ₃(z+1) is −1/(120 z)
        let ctx = PrecisionContext::new(30);
        let z = c(&ctx, 1000.0);
        let (a, _) = log_gamma3_asymptotic_truncated(&z, 0, &ctx).unwrap();
        let (b, _) = log_gamma3_asymptotic_truncated(&z, 1, &ctx).unwrap();
        let d = Complex::with_val(ctx.bits(), &b.value - &a.value) * 2u32;
        let odd = Float::with_val(ctx.bits(), -1) / 120_000u32;
        let even = Float::with_val(ctx.bits(), 1) / 240_000_000u32;
        let want = odd + even;
        assert!(log10_abs(&(d.real().clone() - want)) < -30.0);
    }

    #[test]
    fn triple_asymptotic_error_below_first_omitted_term() {
        let ctx = PrecisionContext::new(30);
        let z = c(&ctx, 50.0);
        let i = log_gamma3_integral(&z, &ctx).unwrap().value;
        for terms in 1..=8 {
            let (a, omitted) = log_gamma3_asymptotic_truncated(&z, terms, &ctx).unwrap();
            close(&a.value, &i, omitted);
        }
        // the odd-power tail decays like z^{−2n−1}; 14 terms reach 10^{−30} at z = 50
        assert!(log_gamma3_asymptotic(&z, 14, &ctx).is_ok());
        assert!(matches!(log_gamma3_asymptotic(&c(&ctx, 3.0), 6, &ctx), Err(Error::InsufficientDecay { .. })));
    }

    #[test]
    fn int1_int2_small_n() {
        let ctx = PrecisionContext::new(30);
        for n in 1..=2 {
            let (a, b) = verify_int1_int2(n, &ctx, -25.0).unwrap();
            assert!(a.passed(), "{a:?}");
            assert!(b.passed(), "{b:?}");
        }
    }

    #[test]
    fn order_cap_and_domain() {
        let ctx = PrecisionContext::new(20);
        assert!(log_multigamma(7, &c(&ctx, 2.0), &ctx).is_err());
        assert!(log_multigamma(0, &c(&ctx, 2.0), &ctx).is_err());
        assert!(matches!(log_multigamma(3, &c(&ctx, -0.5), &ctx), Err(Error::Domain(_))));
    }
}
