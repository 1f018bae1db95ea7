use rug::Float;

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method};
use crate::precision::{log10_abs, PrecisionContext};

/// Default cap on the number of terms `sum_series` will take.
pub const MAX_TERMS: u64 = 2_000_000;

/// Σ_{k≥1} term(k), stopping at the first N whose tail bound
/// `tail_bound(N)` ≥ |Σ_{k>N} term(k)| is below the working tolerance.
pub fn sum_series<T, B>(term: T, tail_bound: B, ctx: &PrecisionContext) -> Result<EvalResult<Float>>
where
    T: Fn(u64) -> Float,
    B: Fn(u64) -> Float,
{
    sum_series_capped(term, tail_bound, MAX_TERMS, ctx)
}

pub fn sum_series_capped<T, B>(
    term: T,
    tail_bound: B,
    max_terms: u64,
    ctx: &PrecisionContext,
) -> Result<EvalResult<Float>>
where
    T: Fn(u64) -> Float,
    B: Fn(u64) -> Float,
{
    let target = -f64::from(ctx.working_digits());
    let mut acc = ctx.float(0);
    let mut last = f64::INFINITY;
    for n in 1..=max_terms {
        acc += term(n);
        let tail = log10_abs(&tail_bound(n));
        last = tail;
        if tail < target {
            let rounding = -f64::from(ctx.bits()) * std::f64::consts::LOG10_2 + log10_abs(&acc).max(0.0);
            return Ok(EvalResult::new(acc, tail.max(rounding), Method::Series, n));
        }
    }
    Err(Error::NonConvergence {
        what: "series summation",
        target_log10: target,
        reached_log10: last,
    })
}

/// Σ_{k≥1} term(k) where `remainder(N)` returns an estimate of
/// Σ_{k>N} term(k) together with a bound on that estimate's error. Stops at
/// the first N whose bound is below the working tolerance and returns the
/// partial sum plus the estimate.
pub fn sum_series_with_tail<T, R>(term: T, remainder: R, ctx: &PrecisionContext) -> Result<EvalResult<Float>>
where
    T: Fn(u64) -> Float,
    R: Fn(u64) -> (Float, Float),
{
    let target = -f64::from(ctx.working_digits());
    let mut acc = ctx.float(0);
    let mut last = f64::INFINITY;
    for n in 1..=MAX_TERMS {
        acc += term(n);
        let (estimate, bound) = remainder(n);
        last = log10_abs(&bound);
        if last < target {
            acc += estimate;
            let rounding = -f64::from(ctx.bits()) * std::f64::consts::LOG10_2 + log10_abs(&acc).max(0.0);
            return Ok(EvalResult::new(acc, last.max(rounding), Method::Series, n));
        }
    }
    Err(Error::NonConvergence {
        what: "series summation with tail estimate",
        target_log10: target,
        reached_log10: last,
    })
}
