//! Memoized constants.
//!
//! Each entry is kept at the highest binary precision ever requested and
//! rounded on reads at lower precision. Reads take a shared lock; a miss
//! computes outside the lock and then installs the value if it is more
//! precise than what is stored.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use rug::float::Constant;
use rug::Float;

use crate::error::Result;
use crate::precision::PrecisionContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstantKey {
    EulerGamma,
    LogTwoPi,
    ZetaPrime0,
    /// ζ′(−k), k ≥ 1
    ZetaPrimeNeg(u32),
    /// log A
    GlaisherLog,
    Catalan,
    /// ζ(s) at an integer s ≥ 2
    Zeta(u32),
    /// ζ′(s) at an integer s ≥ 2
    ZetaPrime(u32),
}

#[derive(Debug, Default)]
pub struct ConstantsCache {
    values: RwLock<HashMap<ConstantKey, Float>>,
}

static GLOBAL: LazyLock<ConstantsCache> = LazyLock::new(ConstantsCache::default);

impl ConstantsCache {
    pub fn global() -> &'static ConstantsCache {
        &GLOBAL
    }

    /// Cached value at `ctx` precision, if one at least that precise exists.
    pub fn get(&self, key: ConstantKey, ctx: &PrecisionContext) -> Option<Float> {
        let bits = ctx.bits();
        let map = self.values.read().unwrap();
        map.get(&key)
            .filter(|v| v.prec() >= bits)
            .map(|v| Float::with_val(bits, v))
    }

    pub fn get_or_try_insert<F>(&self, key: ConstantKey, ctx: &PrecisionContext, compute: F) -> Result<Float>
    where
        F: FnOnce(&PrecisionContext) -> Result<Float>,
    {
        if let Some(v) = self.get(key, ctx) {
            return Ok(v);
        }
        let value = compute(ctx)?;
        let mut map = self.values.write().unwrap();
        let keep = map.get(&key).is_some_and(|old| old.prec() >= value.prec());
        if !keep {
            map.insert(key, value.clone());
        }
        Ok(Float::with_val(ctx.bits(), &value))
    }

    /// Binary precision currently stored for `key`.
    pub fn stored_precision(&self, key: ConstantKey) -> Option<u32> {
        self.values.read().unwrap().get(&key).map(Float::prec)
    }
}

/// Euler–Mascheroni γ.
pub fn euler_gamma(ctx: &PrecisionContext) -> Float {
    ConstantsCache::global()
        .get_or_try_insert(ConstantKey::EulerGamma, ctx, |c| Ok(Float::with_val(c.bits(), Constant::Euler)))
        .expect("constant evaluation cannot fail")
}

pub fn log_two_pi(ctx: &PrecisionContext) -> Float {
    ConstantsCache::global()
        .get_or_try_insert(ConstantKey::LogTwoPi, ctx, |c| Ok((c.pi() * 2u32).ln()))
        .expect("constant evaluation cannot fail")
}

/// ζ′(0) = −log(2π)/2.
pub fn zeta_prime_0(ctx: &PrecisionContext) -> Float {
    ConstantsCache::global()
        .get_or_try_insert(ConstantKey::ZetaPrime0, ctx, |c| Ok(-log_two_pi(c) / 2u32))
        .expect("constant evaluation cannot fail")
}
