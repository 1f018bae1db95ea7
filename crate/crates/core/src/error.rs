use thiserror::Error;

/// Failure modes shared by every evaluation routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("NonConvergence: {what} did not reach 1e{target_log10:.0} (last estimate 1e{reached_log10:.1})")]
    NonConvergence {
        what: &'static str,
        target_log10: f64,
        reached_log10: f64,
    },
    #[error("Pole: {0} is a pole")]
    Pole(String),
    #[error("PoleAtOne: s = 1 is the pole of the zeta function")]
    PoleAtOne,
    #[error("DomainError: {0}")]
    Domain(String),
    #[error("InsufficientDecay: asymptotic series at |z| = {abs_z:.3} stalls at 1e{best_log10:.1}, target 1e{target_log10:.0}")]
    InsufficientDecay {
        abs_z: f64,
        best_log10: f64,
        target_log10: f64,
    },
    #[error("PathCrossesPole: integration path passes through a pole near {0}")]
    PathCrossesPole(String),
    #[error("ZeroFactor: G vanishes at {0}")]
    ZeroFactor(String),
    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable short name of the variant, used by the CLI and the C bindings.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonConvergence { .. } => "NonConvergence",
            Error::Pole(_) => "Pole",
            Error::PoleAtOne => "PoleAtOne",
            Error::Domain(_) => "DomainError",
            Error::InsufficientDecay { .. } => "InsufficientDecay",
            Error::PathCrossesPole(_) => "PathCrossesPole",
            Error::ZeroFactor(_) => "ZeroFactor",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
