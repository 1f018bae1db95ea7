//! Precision-independent building blocks: exact sequences, quadrature and
//! series summation.

pub mod exact;
pub mod quadrature;
pub mod series;

pub use exact::{
    bell_number, bernoulli_number, bernoulli_poly, double_factorial, hankel_bell_det, harmonic,
    stirling_subset, ExactRational,
};
pub use quadrature::{integrate_finite, integrate_path, integrate_semi_infinite, QuadValue, SemiInfinite};
pub use series::sum_series;
