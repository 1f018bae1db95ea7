use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::eval::{Method, RealResult};
use crate::precision::{log10_add, PrecisionContext};
use crate::special::clausen::{catalan, clausen_cl2};
use crate::special::constants::log_two_pi;
use crate::special::gamma::rounding_log10;
use crate::special::zeta::{glaisher_log, zeta_prime_neg};
use crate::special::{log_gamma_real, trigamma};

use super::dispatch::log_barnes_g;
use super::BarnesMethod;

/// Rational arguments with a closed form for log G.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialValueKey {
    Half,
    Quarter,
    ThreeQuarters,
    Third,
    TwoThirds,
}

impl SpecialValueKey {
    pub const ALL: [SpecialValueKey; 5] = [
        SpecialValueKey::Half,
        SpecialValueKey::Quarter,
        SpecialValueKey::ThreeQuarters,
        SpecialValueKey::Third,
        SpecialValueKey::TwoThirds,
    ];

    /// The argument as (numerator, denominator).
    pub fn argument(&self) -> (u32, u32) {
        match self {
            SpecialValueKey::Half => (1, 2),
            SpecialValueKey::Quarter => (1, 4),
            SpecialValueKey::ThreeQuarters => (3, 4),
            SpecialValueKey::Third => (1, 3),
            SpecialValueKey::TwoThirds => (2, 3),
        }
    }
}

fn ratio(num: u32, den: u32, bits: u32) -> Float {
    Float::with_val(bits, num) / den
}

/// log G(1/3) − log G(2/3)
/// = (1/3) log 2π − (1/6) log 3 − log Γ(1/3) + (2π² − 3ψ⁽¹⁾(1/3))/(18π√3)
fn third_ratio(ctx: &PrecisionContext) -> Result<Float> {
    let bits = ctx.bits();
    let pi = ctx.pi();
    let sqrt3 = Float::with_val(bits, 3).sqrt();
    let ln3 = Float::with_val(bits, 3).ln();
    let lg = log_gamma_real(&ratio(1, 3, bits), ctx)?.value;
    let tg = trigamma(&Complex::with_val(bits, ratio(1, 3, bits)), ctx)?.value.real().clone();
    let num = Float::with_val(bits, pi.square_ref()) * 2u32 - tg * 3u32;
    let den = Float::with_val(bits, &pi * &sqrt3) * 18u32;
    Ok(log_two_pi(ctx) / 3u32 - ln3 / 6u32 - lg + num / den)
}

/// Closed-form log G at a rational point, assembled from γ-free constants:
/// log A, Catalan's constant, log Γ and ψ⁽¹⁾ at the same denominator.
pub fn special_value(key: SpecialValueKey, ctx: &PrecisionContext) -> Result<RealResult> {
    let bits = ctx.bits();
    let pi = ctx.pi();
    let ln2 = Float::with_val(bits, 2).ln();
    let ln_pi = Float::with_val(bits, pi.ln_ref());
    let log_a = glaisher_log(ctx)?;
    let v = match key {
        SpecialValueKey::Half => {
            ratio(1, 8, bits) + Float::with_val(bits, &ln2 / 24u32) - Float::with_val(bits, &ln_pi / 4u32)
                - log_a * 1.5f64
        }
        SpecialValueKey::Quarter | SpecialValueKey::ThreeQuarters => {
            let g = catalan(ctx)?;
            let lg = log_gamma_real(&ratio(1, 4, bits), ctx)?.value;
            let quarter = ratio(3, 32, bits) - Float::with_val(bits, &g / Float::with_val(bits, &pi * 4u32))
                - Float::with_val(bits, &lg * 0.75f64)
                - Float::with_val(bits, &log_a * 1.125f64);
            if key == SpecialValueKey::Quarter {
                quarter
            } else {
                quarter + g / Float::with_val(bits, &pi * 2u32) - ln2 / 8u32 - ln_pi / 4u32 + lg
            }
        }
        SpecialValueKey::Third | SpecialValueKey::TwoThirds => {
            let sqrt3 = Float::with_val(bits, 3).sqrt();
            let ln3 = Float::with_val(bits, 3).ln();
            let lg = log_gamma_real(&ratio(1, 3, bits), ctx)?.value;
            let tg = trigamma(&Complex::with_val(bits, ratio(1, 3, bits)), ctx)?.value.real().clone();
            let third = ratio(1, 9, bits) + ln3 / 72u32
                + Float::with_val(bits, &pi / Float::with_val(bits, &sqrt3 * 18u32))
                - lg * ratio(2, 3, bits)
                - log_a * ratio(4, 3, bits)
                - tg / (Float::with_val(bits, &sqrt3 * &pi) * 12u32);
            if key == SpecialValueKey::Third {
                third
            } else {
                third - third_ratio(ctx)?
            }
        }
    };
    let err = rounding_log10(&Complex::with_val(bits, &v), bits) + 1.0;
    Ok(RealResult::new(v, err, Method::Barnes(BarnesMethod::ClosedForm), 0))
}

/// |log(G(1+z)/G(1−z)) + z log(sin πz/π) + Cl₂(2πz)/(2π)| for 0 < z < 1,
/// the G values coming from the dispatcher.
pub fn reflection_residual(z: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if !(*z > 0 && *z < 1) {
        return Err(Error::InvalidArgument("reflection residual needs 0 < z < 1".into()));
    }
    let bits = ctx.bits();
    let pi = ctx.pi();
    let plus = log_barnes_g(&Complex::with_val(bits, (Float::with_val(bits, 1u32 + z), 0)), ctx)?
        .finite("G(1+z)")?;
    let minus = log_barnes_g(&Complex::with_val(bits, (Float::with_val(bits, 1u32 - z), 0)), ctx)?
        .finite("G(1−z)")?;
    let lhs = Float::with_val(bits, plus.value.real() - minus.value.real());
    let sin = Float::with_val(bits, Float::with_val(bits, &pi * z).sin_ref()) / &pi;
    let cl = clausen_cl2(&(Float::with_val(bits, &pi * z) * 2u32), ctx)?;
    let rhs = -(sin.ln() * z) - cl.value / (pi * 2u32);
    Ok((lhs - rhs).abs())
}

/// |log G(nz) − log RHS| for the n-fold multiplication formula
///
/// G(nz) = e^{ζ′(−1)(1−n²)} n^{n²z²/2 − nz + 5/12} (2π)^{(n−1)(1−nz)/2} ∏_{i,j<n} G(z + (i+j)/n)
///
/// with the imaginary part of the difference reduced modulo 2π.
pub fn multiplication_residual(n: u32, z: &Complex, ctx: &PrecisionContext) -> Result<Float> {
    if n < 2 {
        return Err(Error::InvalidArgument("multiplication residual needs n ≥ 2".into()));
    }
    let bits = ctx.bits();
    let nz = Complex::with_val(bits, z * n);
    let lhs = log_barnes_g(&nz, ctx)?.finite(format!("G({n}z)"))?;
    let n2 = n * n;
    let mut rhs = Complex::with_val(bits, zeta_prime_neg(1, ctx)? * (1i64 - i64::from(n2)));
    let z2 = Complex::with_val(bits, z.square_ref());
    let expo = z2 * n2 / 2u32 - nz.clone() + ratio(5, 12, bits);
    rhs += expo * Float::with_val(bits, n).ln();
    let tp = Complex::with_val(bits, 1 - nz.clone()) * (n - 1) / 2u32;
    rhs += tp * log_two_pi(ctx);
    let mut err = lhs.err_log10;
    for i in 0..n {
        for j in 0..n {
            let arg = Complex::with_val(bits, z + ratio(i + j, n, bits));
            let g = log_barnes_g(&arg, ctx)?.finite(format!("G(z + {}/{n})", i + j))?;
            err = log10_add(err, g.err_log10);
            rhs += g.value;
        }
    }
    let mut d = lhs.value - rhs;
    let turns = (d.imag().to_f64() / std::f64::consts::TAU).round();
    d -= Complex::with_val(bits, (0, turns)) * ctx.pi() * 2u32;
    Ok(d.abs().real().clone())
}
