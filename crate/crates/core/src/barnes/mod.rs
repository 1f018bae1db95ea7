//! Barnes G-function.

mod dispatch;
mod identities;
mod methods;

pub use dispatch::{log_barnes_g, LogG};
pub use identities::{multiplication_residual, reflection_residual, special_value, SpecialValueKey};
pub use methods::{
    log_g_asymptotic, log_g_asymptotic_auto, log_g_asymptotic_shifted, log_g_asymptotic_truncated, log_g_binet,
    log_g_hermite, log_g_psi_quadrature,
};

/// Route used to evaluate log G.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BarnesMethod {
    HermiteIntegral,
    BinetIntegral,
    AsymptoticShifted,
    PsiQuadrature,
    Reflection,
    ClosedForm,
    RecurrenceShift,
}

impl BarnesMethod {
    pub fn tag(&self) -> &'static str {
        match self {
            BarnesMethod::HermiteIntegral => "hermite",
            BarnesMethod::BinetIntegral => "binet",
            BarnesMethod::AsymptoticShifted => "asymptotic",
            BarnesMethod::PsiQuadrature => "psi-quadrature",
            BarnesMethod::Reflection => "reflection",
            BarnesMethod::ClosedForm => "closed-form",
            BarnesMethod::RecurrenceShift => "recurrence",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        [
            BarnesMethod::HermiteIntegral,
            BarnesMethod::BinetIntegral,
            BarnesMethod::AsymptoticShifted,
            BarnesMethod::PsiQuadrature,
            BarnesMethod::Reflection,
            BarnesMethod::ClosedForm,
            BarnesMethod::RecurrenceShift,
        ]
        .into_iter()
        .find(|m| m.tag() == tag)
    }
}
