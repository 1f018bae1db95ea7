use std::fmt;

use rug::{Complex, Float};

use crate::barnes::BarnesMethod;
use crate::glaisher::GlaisherMethod;

/// Which formula produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Quadrature,
    Series,
    /// Second Binet formula for log Γ.
    BinetLogGamma,
    /// Bernoulli asymptotic tail for ψ.
    AsymptoticDigamma,
    /// Hermite integral for ζ(s, z).
    HermiteZeta,
    /// Hermite integral for ζ′(−1, z).
    HermiteZetaPrime,
    /// ζ′(−1) = 2∫ x log x/(e^{2πx} − 1).
    ZetaPrimeIntegral,
    /// ζ′(−k) from the differentiated functional equation.
    FunctionalEquation,
    /// Euler–Maclaurin summation.
    EulerMaclaurin,
    /// Bernoulli series for Cl₂ after removing θ(1 − log θ).
    ClausenSeries,
    /// Recursive solver over the odd/even multiple gamma integrals.
    MultigammaIntegral,
    /// Triple gamma large-z expansion.
    TripleGammaAsymptotic,
    /// Closed form of Γₙ(1/2).
    MultigammaHalf,
    Barnes(BarnesMethod),
    Glaisher(GlaisherMethod),
}

impl Method {
    pub fn tag(&self) -> String {
        match self {
            Method::Quadrature => "quadrature".into(),
            Method::Series => "series".into(),
            Method::BinetLogGamma => "binet-log-gamma".into(),
            Method::AsymptoticDigamma => "asymptotic-digamma".into(),
            Method::HermiteZeta => "hermite-zeta".into(),
            Method::HermiteZetaPrime => "hermite-zeta-prime".into(),
            Method::ZetaPrimeIntegral => "zeta-prime-integral".into(),
            Method::FunctionalEquation => "functional-equation".into(),
            Method::EulerMaclaurin => "euler-maclaurin".into(),
            Method::ClausenSeries => "clausen-series".into(),
            Method::MultigammaIntegral => "multigamma-integral".into(),
            Method::TripleGammaAsymptotic => "triple-gamma-asymptotic".into(),
            Method::MultigammaHalf => "multigamma-half".into(),
            Method::Barnes(m) => format!("barnes/{}", m.tag()),
            Method::Glaisher(m) => format!("glaisher/{}", m.tag()),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

/// A computed value with its error estimate and provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult<T> {
    pub value: T,
    /// Estimated upper bound on log10 of the absolute error.
    pub err_log10: f64,
    pub method: Method,
    /// Integrand or term evaluations spent.
    pub evaluations: u64,
}

pub type RealResult = EvalResult<Float>;
pub type ComplexResult = EvalResult<Complex>;

impl<T> EvalResult<T> {
    pub fn new(value: T, err_log10: f64, method: Method, evaluations: u64) -> Self {
        Self {
            value,
            err_log10,
            method,
            evaluations,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> EvalResult<U> {
        EvalResult {
            value: f(self.value),
            err_log10: self.err_log10,
            method: self.method,
            evaluations: self.evaluations,
        }
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }
}

impl EvalResult<Float> {
    pub fn into_complex(self) -> EvalResult<Complex> {
        self.map(|v| {
            let prec = v.prec();
            Complex::with_val(prec, (v, 0))
        })
    }
}
