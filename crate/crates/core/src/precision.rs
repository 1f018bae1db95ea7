//! Precision bookkeeping.
//!
//! A [`PrecisionContext`] is passed explicitly to every evaluation. The
//! requested `digits` define the accuracy contract; `guard` extra decimal
//! digits are carried internally and discarded when results are reported.

use rug::{Complex, Float};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    digits: u32,
    guard: u32,
}

impl PrecisionContext {
    /// Context with the default guard policy `10 + 5·⌈log10 digits⌉`.
    pub fn new(digits: u32) -> Self {
        let digits = digits.max(1);
        Self {
            digits,
            guard: default_guard(digits),
        }
    }

    /// Context with an explicit guard; guards below 10 are raised to 10.
    pub fn with_guard(digits: u32, guard: u32) -> Self {
        Self {
            digits: digits.max(1),
            guard: guard.max(10),
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Binary precision of working values.
    pub fn bits(&self) -> u32 {
        (f64::from(self.working_digits()) * LOG2_10).ceil() as u32 + 8
    }

    /// Same requested digits with `extra` additional guard digits.
    pub fn widened(&self, extra: u32) -> Self {
        Self {
            digits: self.digits,
            guard: self.guard + extra,
        }
    }

    /// log10 of the absolute tolerance internal engines aim for.
    pub fn target_log10(&self) -> f64 {
        -(f64::from(self.digits) + f64::from(self.guard) / 2.0)
    }

    pub fn float<T>(&self, v: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.bits(), v)
    }

    pub fn complex<T>(&self, v: T) -> Complex
    where
        Complex: rug::Assign<T>,
    {
        Complex::with_val(self.bits(), v)
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.bits(), rug::float::Constant::Pi)
    }
}

fn default_guard(digits: u32) -> u32 {
    let lg = f64::from(digits).log10().ceil().max(0.0) as u32;
    10 + 5 * lg
}

/// log10 of |x|, `-inf` for zero.
pub fn log10_abs(x: &Float) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let (m, e) = x.to_f64_exp();
    m.abs().log10() + f64::from(e) * std::f64::consts::LOG10_2
}

/// log10 of |z|, `-inf` for zero.
pub fn log10_abs_c(z: &Complex) -> f64 {
    let a = log10_abs(z.real());
    let b = log10_abs(z.imag());
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if hi == f64::NEG_INFINITY {
        return hi;
    }
    hi + 0.5 * (1.0 + 10f64.powf(2.0 * (lo - hi))).log10()
}

/// Combine independent error estimates given as log10 magnitudes.
pub fn log10_add(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if hi == f64::NEG_INFINITY {
        return hi;
    }
    hi + (1.0 + 10f64.powf(lo - hi)).log10()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_policy() {
        assert_eq!(PrecisionContext::new(30).guard(), 20);
        assert_eq!(PrecisionContext::new(100).guard(), 20);
        assert_eq!(PrecisionContext::new(101).guard(), 25);
        assert_eq!(PrecisionContext::new(1).guard(), 10);
        assert_eq!(PrecisionContext::with_guard(30, 3).guard(), 10);
        assert_eq!(PrecisionContext::new(30).working_digits(), 50);
    }

    #[test]
    fn bits_cover_working_digits() {
        let ctx = PrecisionContext::new(30);
        assert!(f64::from(ctx.bits()) >= 50.0 * LOG2_10);
    }

    #[test]
    fn log10_helpers() {
        let x = Float::with_val(64, 1e-20);
        assert!((log10_abs(&x) + 20.0).abs() < 1e-9);
        assert_eq!(log10_abs(&Float::new(64)), f64::NEG_INFINITY);
        let z = Complex::with_val(64, (3, 4));
        assert!((log10_abs_c(&z) - 5f64.log10()).abs() < 1e-12);
        assert!((log10_add(-3.0, -3.0) - (-3.0 + 2f64.log10())).abs() < 1e-12);
    }
}
