//! Clausen function Cl₂ and Catalan's constant.

use rug::Float;

use crate::error::Result;
use crate::eval::{Method, RealResult};
use crate::numerics::exact::bernoulli_number;
use crate::precision::{log10_abs, log10_add, PrecisionContext};
use crate::special::constants::{ConstantKey, ConstantsCache};

/// Cl₂(θ) = −∫₀^θ log|2 sin(t/2)| dt for real θ.
///
/// θ is reduced to (−π, π]; on [0, π] the power series
/// θ − θ log θ + Σ |B₂ₖ| θ^{2k+1} / (2k (2k+1)!) converges at least like 4^{−k}.
pub fn clausen_cl2(theta: &Float, ctx: &PrecisionContext) -> Result<RealResult> {
    let bits = ctx.bits();
    let pi = ctx.pi();
    let two_pi = Float::with_val(bits, &pi * 2u32);
    let mut t = Float::with_val(bits, theta);
    let turns = Float::with_val(bits, &t / &two_pi).round();
    t -= turns * &two_pi;
    if t > pi {
        t -= &two_pi;
    }
    let negate = t.is_sign_negative();
    if negate {
        t = -t;
    }
    if t.is_zero() {
        return Ok(RealResult::new(Float::new(bits), f64::NEG_INFINITY, Method::ClausenSeries, 0));
    }

    let target = -f64::from(ctx.working_digits()) - 2.0;
    let t2 = Float::with_val(bits, t.square_ref());
    let mut acc = Float::with_val(bits, &t - Float::with_val(bits, t.ln_ref()) * &t);
    // p = θ^{2k+1} / (2k+1)!
    let mut p = t.clone();
    let mut k = 1u32;
    let mut last;
    loop {
        p *= &t2;
        p /= (2 * k) * (2 * k + 1);
        let b = Float::with_val(bits, bernoulli_number(2 * k).abs());
        let term = b * &p / (2 * k);
        last = log10_abs(&term);
        acc += term;
        if last < target + log10_abs(&acc).min(0.0) {
            break;
        }
        k += 1;
    }
    if negate {
        acc = -acc;
    }
    let err = log10_add(last, log10_abs(&acc) - f64::from(bits) * std::f64::consts::LOG10_2 + 1.0);
    Ok(RealResult::new(acc, err, Method::ClausenSeries, u64::from(k)))
}

/// Catalan's constant G = Cl₂(π/2), memoized.
pub fn catalan(ctx: &PrecisionContext) -> Result<Float> {
    ConstantsCache::global().get_or_try_insert(ConstantKey::Catalan, ctx, |c| {
        let half_pi = c.pi() / 2u32;
        clausen_cl2(&half_pi, c).map(|r| r.value)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_digits() {
        let ctx = PrecisionContext::new(40);
        let g = catalan(&ctx).unwrap();
        let expect = Float::with_val(ctx.bits(), Float::parse("0.9159655941772190150546035149323841107741").unwrap());
        assert!(Float::with_val(ctx.bits(), &g - &expect).abs() < 1e-39);
    }

    #[test]
    fn periodic_and_odd() {
        let ctx = PrecisionContext::new(30);
        let x = ctx.float(1.25);
        let a = clausen_cl2(&x, &ctx).unwrap().value;
        let shifted = Float::with_val(ctx.bits(), &x + ctx.pi() * 6u32);
        let b = clausen_cl2(&shifted, &ctx).unwrap().value;
        let c = clausen_cl2(&(-x), &ctx).unwrap().value;
        assert!(Float::with_val(ctx.bits(), &a - &b).abs() < 1e-29);
        assert!(Float::with_val(ctx.bits(), &a + &c).abs() < 1e-29);
    }

    #[test]
    fn vanishes_at_multiples_of_pi() {
        let ctx = PrecisionContext::new(30);
        for k in 0..4u32 {
            let v = clausen_cl2(&(ctx.pi() * k), &ctx).unwrap().value;
            assert!(v.abs() < 1e-28, "k = {k}");
        }
    }
}
