//! Identity reports and decimal rendering.

use std::fmt;

use rug::{Complex, Float};
use serde::Serialize;

use crate::precision::{log10_abs, log10_abs_c};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Known-suspect entry; reported but never counted as a failure.
    Flagged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        })
    }
}

/// One checked identity: both sides, the residual and the verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub lhs: String,
    pub rhs: String,
    #[serde(serialize_with = "finite")]
    pub residual_log10: f64,
    #[serde(serialize_with = "finite")]
    pub tolerance_log10: f64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl IdentityReport {
    fn from_parts(id: impl Into<String>, lhs: String, rhs: String, residual_log10: f64, tolerance_log10: f64) -> Self {
        let status = if residual_log10 <= tolerance_log10 { Status::Pass } else { Status::Fail };
        Self {
            identity_id: id.into(),
            lhs,
            rhs,
            residual_log10,
            tolerance_log10,
            status,
            note: None,
        }
    }

    pub fn real(id: impl Into<String>, lhs: &Float, rhs: &Float, digits: u32, tolerance_log10: f64) -> Self {
        let r = log10_abs(&Float::with_val(lhs.prec(), lhs - rhs));
        Self::from_parts(id, decimal(lhs, digits), decimal(rhs, digits), r, tolerance_log10)
    }

    pub fn complex(id: impl Into<String>, lhs: &Complex, rhs: &Complex, digits: u32, tolerance_log10: f64) -> Self {
        let r = log10_abs_c(&Complex::with_val(lhs.prec(), lhs - rhs));
        Self::from_parts(id, decimal_c(lhs, digits), decimal_c(rhs, digits), r, tolerance_log10)
    }

    /// Exact comparison of two integers; the residual is −∞ or 0.
    pub fn exact(id: impl Into<String>, lhs: &rug::Integer, rhs: &rug::Integer) -> Self {
        let r = if lhs == rhs { f64::NEG_INFINITY } else { 0.0 };
        Self::from_parts(id, lhs.to_string(), rhs.to_string(), r, -1.0)
    }

    /// A residual that was computed directly.
    pub fn residual(id: impl Into<String>, residual: &Float, digits: u32, tolerance_log10: f64) -> Self {
        let r = log10_abs(residual);
        Self::from_parts(id, decimal(residual, digits), "0".into(), r, tolerance_log10)
    }

    /// A check whose evaluation failed outright.
    pub fn errored(id: impl Into<String>, err: &crate::Error, tolerance_log10: f64) -> Self {
        let mut r = Self::from_parts(id, String::new(), String::new(), f64::INFINITY, tolerance_log10);
        r.note = Some(err.to_string());
        r
    }

    pub fn flagged(mut self, note: impl Into<String>) -> Self {
        self.status = Status::Flagged;
        self.note = Some(note.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// JSON has no infinities: an exact match is written as the most negative
/// double, a failed evaluation as the largest.
fn finite<S: serde::Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    let v = if x.is_nan() || *x == f64::INFINITY {
        f64::MAX
    } else if *x == f64::NEG_INFINITY {
        f64::MIN
    } else {
        *x
    };
    s.serialize_f64(v)
}

/// Scientific decimal string with `digits` significant figures.
pub fn decimal(x: &Float, digits: u32) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.to_string_radix(10, Some(digits.max(1) as usize))
}

/// "a+bi" / "a-bi" rendering.
pub fn decimal_c(z: &Complex, digits: u32) -> String {
    if z.imag().is_zero() {
        return decimal(z.real(), digits);
    }
    let im = decimal(z.imag(), digits);
    let sep = if im.starts_with('-') { "" } else { "+" };
    format!("{}{}{}i", decimal(z.real(), digits), sep, im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_tolerance() {
        let a = Float::with_val(100, 1);
        let b = Float::with_val(100, 1.0 + 1e-12);
        assert_eq!(IdentityReport::real("x", &a, &b, 20, -10.0).status, Status::Pass);
        assert_eq!(IdentityReport::real("x", &a, &b, 20, -13.0).status, Status::Fail);
        let f = IdentityReport::real("x", &a, &b, 20, -13.0).flagged("suspect");
        assert_eq!(f.status, Status::Flagged);
    }

    #[test]
    fn decimal_round_trip() {
        let x = Float::with_val(200, Float::parse("-1.234567890123456789012345").unwrap());
        let s = decimal(&x, 25);
        let back = Float::with_val(200, Float::parse(&s).unwrap());
        assert!(log10_abs(&(back - &x)) < -24.0);
        let z = Complex::with_val(64, (1.5, -2.0));
        assert_eq!(decimal_c(&z, 3), "1.50-2.00i");
    }
}
