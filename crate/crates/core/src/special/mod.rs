//! Gamma, zeta and Clausen functions at arbitrary precision.

pub mod clausen;
pub mod constants;
pub mod gamma;
pub mod zeta;

use rug::{Complex, Float};

pub use clausen::{catalan, clausen_cl2};
pub use constants::{euler_gamma, log_two_pi, zeta_prime_0, ConstantKey, ConstantsCache};
pub use gamma::{digamma, log_gamma, log_gamma_real, trigamma};
pub use zeta::{
    glaisher_log, hurwitz_zeta, hurwitz_zeta_prime_neg1, riemann_zeta, zeta_minus_one_integral,
    zeta_minus_one_series, zeta_prime_2, zeta_prime_int, zeta_prime_neg,
};

/// Decay rate of the Bose kernel, used as a truncation hint.
pub const TWO_PI: f64 = std::f64::consts::TAU;

/// 1/(e^{2πx} − 1)
pub(crate) fn bose(x: &Float, two_pi: &Float) -> Float {
    let t = Float::with_val(x.prec(), two_pi * x);
    t.exp_m1().recip()
}

/// 1/(e^{2πx} + 1)
pub(crate) fn fermi(x: &Float, two_pi: &Float) -> Float {
    let t = Float::with_val(x.prec(), two_pi * x);
    (t.exp() + 1u32).recip()
}

pub(crate) fn is_nonpositive_integer(z: &Complex) -> bool {
    z.imag().is_zero() && *z.real() <= 0 && z.real().is_integer()
}
