//! Arbitrary-precision Barnes G, multiple gamma functions and the
//! Glaisher–Kinkelin constant.

pub mod barnes;
pub mod cli;
pub mod error;
pub mod eval;
pub mod glaisher;
pub mod multigamma;
pub mod numerics;
pub mod precision;
pub mod report;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use eval::{ComplexResult, EvalResult, Method, RealResult};
pub use precision::PrecisionContext;
