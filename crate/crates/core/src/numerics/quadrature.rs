//! Double-exponential quadrature on truncated half-lines and finite
//! intervals, plus adaptive Gauss–Legendre along complex polylines.
//!
//! Integrands are evaluated at working precision and may be real or complex
//! valued through [`QuadValue`]. Node tables are computed once per binary
//! precision and shared between threads.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method};
use crate::precision::{log10_abs, log10_abs_c, log10_add, PrecisionContext};

/// Values a quadrature rule can accumulate.
pub trait QuadValue: Clone + Send + Sync {
    fn zero(bits: u32) -> Self;
    /// `self += v * w`
    fn add_weighted(&mut self, v: &Self, w: &Float);
    fn add_value(&mut self, v: &Self);
    fn scale(&mut self, h: &Float);
    fn log10_abs(&self) -> f64;
    fn log10_dist(&self, other: &Self) -> f64;
    fn is_finite_value(&self) -> bool;
}

impl QuadValue for Float {
    fn zero(bits: u32) -> Self {
        Float::new(bits)
    }
    fn add_weighted(&mut self, v: &Self, w: &Float) {
        *self += Float::with_val(self.prec(), v * w);
    }
    fn add_value(&mut self, v: &Self) {
        *self += v;
    }
    fn scale(&mut self, h: &Float) {
        *self *= h;
    }
    fn log10_abs(&self) -> f64 {
        log10_abs(self)
    }
    fn log10_dist(&self, other: &Self) -> f64 {
        log10_abs(&Float::with_val(self.prec(), self - other))
    }
    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl QuadValue for Complex {
    fn zero(bits: u32) -> Self {
        Complex::new(bits)
    }
    fn add_weighted(&mut self, v: &Self, w: &Float) {
        *self += Complex::with_val(self.prec(), v * w);
    }
    fn add_value(&mut self, v: &Self) {
        *self += v;
    }
    fn scale(&mut self, h: &Float) {
        *self *= h;
    }
    fn log10_abs(&self) -> f64 {
        log10_abs_c(self)
    }
    fn log10_dist(&self, other: &Self) -> f64 {
        log10_abs_c(&Complex::with_val(self.prec(), self - other))
    }
    fn is_finite_value(&self) -> bool {
        self.real().is_finite() && self.imag().is_finite()
    }
}

/// Quadrature options. `decay_hint` is the rate λ in the assumed e^{−λx}
/// decay of the integrand.
#[derive(Debug, Clone)]
pub struct SemiInfinite {
    pub decay_hint: f64,
    /// First panel boundary; later boundaries double. Defaults to 2π/λ,
    /// the distance of the nearest kernel poles from the real axis.
    pub first_break: Option<f64>,
    pub max_level: u32,
}

impl SemiInfinite {
    pub fn new(decay_hint: f64) -> Self {
        Self {
            decay_hint,
            first_break: None,
            max_level: 12,
        }
    }

    pub fn first_break(mut self, x: f64) -> Self {
        self.first_break = Some(x);
        self
    }
}

#[derive(Debug)]
struct Node {
    /// Normalized distance from the nearer endpoint, in (0, 1/2).
    s: Float,
    /// Normalized weight (π/4)·cosh t·sech²((π/2) sinh t).
    w: Float,
}

#[derive(Debug)]
struct Level {
    nodes: Vec<Node>,
}

type LevelKey = (u32, u32);

static TANH_SINH_LEVELS: LazyLock<RwLock<HashMap<LevelKey, Arc<Level>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn t_max(bits: u32) -> f64 {
    // sech²u ≈ 4e^{−2u} must fall below 2^{−bits−40}
    let u = (f64::from(bits) + 40.0) * std::f64::consts::LN_2 / 2.0;
    (2.0 * u / std::f64::consts::PI).asinh()
}

fn level_nodes(bits: u32, level: u32) -> Arc<Level> {
    if let Some(l) = TANH_SINH_LEVELS.read().unwrap().get(&(bits, level)) {
        return l.clone();
    }
    let tmax = t_max(bits);
    let half_pi = Float::with_val(bits, Constant::Pi) / 2u32;
    let quarter_pi = Float::with_val(bits, &half_pi / 2u32);
    let h = Float::with_val(bits, 1) >> level;
    let mut nodes = Vec::new();
    let (mut j, step) = if level == 0 { (1u64, 1u64) } else { (1, 2) };
    loop {
        let t = Float::with_val(bits, &h * j);
        if t.to_f64() > tmax {
            break;
        }
        let u = Float::with_val(bits, t.sinh_ref()) * &half_pi;
        let e2u = Float::with_val(bits, (-Float::with_val(bits, &u * 2u32)).exp_ref());
        // s = 1/(1+e^{2u}) = e^{−2u}/(1+e^{−2u})
        let s = Float::with_val(bits, &e2u / Float::with_val(bits, &e2u + 1u32));
        let sech = Float::with_val(bits, u.cosh_ref()).recip();
        let w = Float::with_val(bits, t.cosh_ref()) * &quarter_pi * sech.square();
        nodes.push(Node { s, w });
        j += step;
    }
    let table = Arc::new(Level { nodes });
    TANH_SINH_LEVELS
        .write()
        .unwrap()
        .insert((bits, level), table.clone());
    table
}

/// Outcome of one finite tanh-sinh integration.
struct Panel<V> {
    value: V,
    err_log10: f64,
    evaluations: u64,
}

fn tanh_sinh_panel<V, F>(
    f: &F,
    a: &Float,
    b: &Float,
    tol_log10: f64,
    max_level: u32,
    bits: u32,
) -> Result<Panel<V>>
where
    V: QuadValue,
    F: Fn(&Float) -> V,
{
    let len = Float::with_val(bits, b - a);
    let mid = Float::with_val(bits, a + b) / 2u32;
    let mut evaluations = 1u64;
    let mut acc = V::zero(bits);
    let center = f(&mid);
    acc.add_weighted(&center, &(Float::with_val(bits, Constant::Pi) / 4u32));
    let mut prev: Option<V> = None;
    let mut last_diff = f64::INFINITY;
    for level in 0..=max_level {
        let nodes = level_nodes(bits, level);
        for node in &nodes.nodes {
            let off = Float::with_val(bits, &len * &node.s);
            let xl = Float::with_val(bits, a + &off);
            let xr = Float::with_val(bits, b - &off);
            let mut pair = f(&xl);
            pair.add_value(&f(&xr));
            evaluations += 2;
            if pair.is_finite_value() {
                acc.add_weighted(&pair, &node.w);
            }
        }
        let mut est = acc.clone();
        let h = Float::with_val(bits, 1) >> level;
        est.scale(&Float::with_val(bits, &h * &len));
        if let Some(p) = &prev {
            let d = est.log10_dist(p);
            let mag = est.log10_abs().max(0.0);
            last_diff = d;
            if level >= 3 && (d <= tol_log10 + mag || d == f64::NEG_INFINITY) {
                return Ok(Panel {
                    value: est,
                    err_log10: d.max(-(f64::from(bits)) * std::f64::consts::LOG10_2 + mag),
                    evaluations,
                });
            }
        }
        prev = Some(est);
    }
    Err(Error::NonConvergence {
        what: "tanh-sinh quadrature",
        target_log10: tol_log10,
        reached_log10: last_diff,
    })
}

/// Tanh-sinh quadrature of `f` over the finite interval [a, b].
pub fn integrate_finite<V, F>(f: F, a: &Float, b: &Float, ctx: &PrecisionContext) -> Result<EvalResult<V>>
where
    V: QuadValue,
    F: Fn(&Float) -> V,
{
    let p = tanh_sinh_panel(&f, a, b, ctx.target_log10(), 12, ctx.bits())?;
    finish(p.value, p.err_log10, p.evaluations, ctx, "tanh-sinh quadrature")
}

fn finish<V: QuadValue>(
    value: V,
    err_log10: f64,
    evaluations: u64,
    ctx: &PrecisionContext,
    what: &'static str,
) -> Result<EvalResult<V>> {
    if err_log10 > -f64::from(ctx.digits()) {
        return Err(Error::NonConvergence {
            what,
            target_log10: -f64::from(ctx.digits()),
            reached_log10: err_log10,
        });
    }
    Ok(EvalResult::new(value, err_log10, Method::Quadrature, evaluations))
}

/// ∫₀^∞ f(x) dx for f decaying at least like e^{−λx}, λ = `decay_hint`.
///
/// The half-line is truncated where the integrand drops below the working
/// tolerance and the remainder is split into geometrically growing panels,
/// each integrated by tanh-sinh with level doubling.
pub fn integrate_semi_infinite<V, F>(f: F, decay_hint: f64, ctx: &PrecisionContext) -> Result<EvalResult<V>>
where
    V: QuadValue,
    F: Fn(&Float) -> V,
{
    integrate_semi_infinite_with(f, &SemiInfinite::new(decay_hint), ctx)
}

pub fn integrate_semi_infinite_with<V, F>(
    f: F,
    opts: &SemiInfinite,
    ctx: &PrecisionContext,
) -> Result<EvalResult<V>>
where
    V: QuadValue,
    F: Fn(&Float) -> V,
{
    if !(opts.decay_hint > 0.0) {
        return Err(Error::InvalidArgument("decay hint must be positive".into()));
    }
    let bits = ctx.bits();
    let work = f64::from(ctx.working_digits());
    let ln10 = std::f64::consts::LN_10;
    let mut x_max = work * ln10 / opts.decay_hint;
    let mut evaluations = 0u64;
    // Push the cut outwards while polynomial prefactors keep the integrand large.
    let mut tail_log10;
    let mut grow = 0;
    loop {
        let v = f(&Float::with_val(bits, x_max));
        evaluations += 1;
        tail_log10 = v.log10_abs() - opts.decay_hint.log10();
        if tail_log10 < -work || grow > 80 {
            break;
        }
        x_max *= 1.15;
        grow += 1;
    }
    if tail_log10 >= -f64::from(ctx.digits()) {
        return Err(Error::NonConvergence {
            what: "semi-infinite truncation",
            target_log10: -f64::from(ctx.digits()),
            reached_log10: tail_log10,
        });
    }

    let first = opts
        .first_break
        .unwrap_or(2.0 * std::f64::consts::PI / opts.decay_hint)
        .min(x_max);
    let mut breaks = vec![0.0, first];
    while *breaks.last().unwrap() * 2.0 < x_max {
        let next = breaks.last().unwrap() * 2.0;
        breaks.push(next);
    }
    if *breaks.last().unwrap() < x_max {
        breaks.push(x_max);
    }
    let panels = (breaks.len() - 1) as f64;
    let tol = ctx.target_log10() - panels.log10();

    let mut total = V::zero(bits);
    let mut err = tail_log10;
    for w in breaks.windows(2) {
        let a = Float::with_val(bits, w[0]);
        let b = Float::with_val(bits, w[1]);
        let p = tanh_sinh_panel(&f, &a, &b, tol, opts.max_level, bits)?;
        total.add_value(&p.value);
        err = log10_add(err, p.err_log10);
        evaluations += p.evaluations;
    }
    finish(total, err, evaluations, ctx, "semi-infinite quadrature")
}

// ---------------------------------------------------------------------------
// Gauss–Legendre

#[derive(Debug)]
struct GaussRule {
    /// Non-negative nodes on [−1, 1] with weights; x = 0 appears once for odd n.
    nodes: Vec<(Float, Float)>,
}

static GAUSS_RULES: LazyLock<RwLock<HashMap<(u32, u32), Arc<GaussRule>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn legendre_pair(n: u32, x: &Float) -> (Float, Float) {
    let bits = x.prec();
    let mut p0 = Float::with_val(bits, 1);
    let mut p1 = x.clone();
    for k in 2..=n {
        let t = Float::with_val(bits, x * &p1) * (2 * k - 1);
        let p2 = (t - Float::with_val(bits, &p0 * (k - 1))) / k;
        p0 = p1;
        p1 = p2;
    }
    (p1, p0)
}

fn gauss_rule(n: u32, bits: u32) -> Arc<GaussRule> {
    if let Some(r) = GAUSS_RULES.read().unwrap().get(&(n, bits)) {
        return r.clone();
    }
    let wbits = bits + 32;
    let mut nodes = Vec::new();
    for i in 1..=(n + 1) / 2 {
        let guess = (std::f64::consts::PI * (f64::from(i) - 0.25) / (f64::from(n) + 0.5)).cos();
        let mut x = Float::with_val(wbits, guess);
        let mut dp = Float::new(wbits);
        for _ in 0..100 {
            let (p, pm1) = legendre_pair(n, &x);
            let x2m1 = Float::with_val(wbits, x.square_ref()) - 1u32;
            dp = (Float::with_val(wbits, &x * &p) - pm1) * n / &x2m1;
            let dx = Float::with_val(wbits, &p / &dp);
            x -= &dx;
            if dx.is_zero() || log10_abs(&dx) < -(f64::from(wbits) * 0.30103) + 2.0 {
                let (_, pm1) = legendre_pair(n, &x);
                let (p, _) = legendre_pair(n, &x);
                let x2m1 = Float::with_val(wbits, x.square_ref()) - 1u32;
                dp = (Float::with_val(wbits, &x * &p) - pm1) * n / x2m1;
                break;
            }
        }
        let one_m_x2 = 1u32 - Float::with_val(wbits, x.square_ref());
        let w = Float::with_val(wbits, 2u32) / (one_m_x2 * dp.square());
        nodes.push((Float::with_val(bits, &x), Float::with_val(bits, &w)));
    }
    let rule = Arc::new(GaussRule { nodes });
    GAUSS_RULES.write().unwrap().insert((n, bits), rule.clone());
    rule
}

fn gauss_segment<F>(f: &F, a: &Complex, b: &Complex, rule: &GaussRule, n: u32, bits: u32) -> Complex
where
    F: Fn(&Complex) -> Complex,
{
    let half = Complex::with_val(bits, b - a) / 2u32;
    let mid = Complex::with_val(bits, a + b) / 2u32;
    let mut acc = Complex::new(bits);
    for (i, (x, w)) in rule.nodes.iter().enumerate() {
        let off = Complex::with_val(bits, &half * x);
        if n % 2 == 1 && i == rule.nodes.len() - 1 {
            // x = 0 is the last node for odd n
            acc += f(&mid) * w;
        } else {
            let mut s = f(&Complex::with_val(bits, &mid + &off));
            s += f(&Complex::with_val(bits, &mid - &off));
            acc += s * w;
        }
    }
    acc * half
}

fn gauss_adaptive<F>(
    f: &F,
    a: &Complex,
    b: &Complex,
    whole: Complex,
    tol_log10: f64,
    depth: u32,
    rule: &GaussRule,
    n: u32,
    bits: u32,
    evals: &mut u64,
) -> Result<(Complex, f64)>
where
    F: Fn(&Complex) -> Complex,
{
    let m = Complex::with_val(bits, a + b) / 2u32;
    let left = gauss_segment(f, a, &m, rule, n, bits);
    let right = gauss_segment(f, &m, b, rule, n, bits);
    *evals += 2 * u64::from(n);
    let split = Complex::with_val(bits, &left + &right);
    let d = split.log10_dist(&whole);
    let mag = split.log10_abs().max(0.0);
    if d <= tol_log10 + mag || d == f64::NEG_INFINITY {
        return Ok((split, d));
    }
    if depth == 0 {
        return Err(Error::PathCrossesPole(format!(
            "{:.6}{:+.6}i",
            m.real().to_f64(),
            m.imag().to_f64()
        )));
    }
    let (l, el) = gauss_adaptive(f, a, &m, left, tol_log10 - 0.31, depth - 1, rule, n, bits, evals)?;
    let (r, er) = gauss_adaptive(f, &m, b, right, tol_log10 - 0.31, depth - 1, rule, n, bits, evals)?;
    Ok((l + r, log10_add(el, er)))
}

/// ∫ f along the polyline through `points`, by adaptive composite
/// Gauss–Legendre. Each segment is cut into panels no longer than one unit.
pub fn integrate_path<F>(f: F, points: &[Complex], ctx: &PrecisionContext) -> Result<EvalResult<Complex>>
where
    F: Fn(&Complex) -> Complex,
{
    let bits = ctx.bits();
    let n = (0.45 * f64::from(ctx.working_digits())).ceil().max(12.0) as u32;
    let rule = gauss_rule(n, bits);
    let mut total = Complex::new(bits);
    let mut err = f64::NEG_INFINITY;
    let mut evals = 0u64;
    let mut panels = Vec::new();
    for seg in points.windows(2) {
        let len = Complex::with_val(bits, &seg[1] - &seg[0]).abs().real().to_f64();
        if len == 0.0 {
            continue;
        }
        let k = len.ceil().max(1.0) as u32;
        let step = Complex::with_val(bits, &seg[1] - &seg[0]) / k;
        for i in 0..k {
            let a = Complex::with_val(bits, &seg[0] + Complex::with_val(bits, &step * i));
            let b = if i + 1 == k {
                seg[1].clone()
            } else {
                Complex::with_val(bits, &seg[0] + Complex::with_val(bits, &step * (i + 1)))
            };
            panels.push((a, b));
        }
    }
    let tol = ctx.target_log10() - (panels.len().max(1) as f64).log10();
    for (a, b) in &panels {
        let whole = gauss_segment(&f, a, b, &rule, n, bits);
        evals += u64::from(n);
        let (v, e) = gauss_adaptive(&f, a, b, whole, tol, 40, &rule, n, bits, &mut evals)?;
        total += v;
        err = log10_add(err, e);
    }
    finish(total, err, evals, ctx, "Gauss–Legendre path quadrature")
}

/// x^p with an integer exponent, used by the polynomial-kernel integrands.
pub fn powi(x: &Float, p: u32) -> Float {
    Float::with_val(x.prec(), x.pow(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bose(ctx: &PrecisionContext, p: u32) -> impl Fn(&Float) -> Float + '_ {
        let two_pi = ctx.pi() * 2u32;
        move |t: &Float| {
            let den = Float::with_val(t.prec(), t * &two_pi).exp_m1();
            powi(t, p) / den
        }
    }

    #[test]
    fn exponential_integral() {
        let ctx = PrecisionContext::new(30);
        let r = integrate_semi_infinite(|x: &Float| Float::with_val(x.prec(), -x).exp(), 1.0, &ctx).unwrap();
        let err = Float::with_val(ctx.bits(), &r.value - 1u32).abs();
        assert!(err < 1e-40, "{err}");
        assert!(r.err_log10 <= -30.0);
    }

    #[test]
    fn bose_moment_one() {
        let ctx = PrecisionContext::new(30);
        let r = integrate_semi_infinite(bose(&ctx, 1), 2.0 * std::f64::consts::PI, &ctx).unwrap();
        let want = Float::with_val(ctx.bits(), 1) / 24u32;
        assert!(Float::with_val(ctx.bits(), &r.value - &want).abs() < 1e-40);
    }

    #[test]
    fn bose_moment_three() {
        let ctx = PrecisionContext::new(30);
        let r = integrate_semi_infinite(bose(&ctx, 3), 2.0 * std::f64::consts::PI, &ctx).unwrap();
        let want = Float::with_val(ctx.bits(), 1) / 240u32;
        assert!(Float::with_val(ctx.bits(), &r.value - &want).abs() < 1e-40);
    }

    #[test]
    fn log_endpoint_singularity() {
        // ∫₀¹ log x dx = −1
        let ctx = PrecisionContext::new(30);
        let r = integrate_finite(
            |x: &Float| Float::with_val(x.prec(), x.ln_ref()),
            &ctx.float(0),
            &ctx.float(1),
            &ctx,
        )
        .unwrap();
        assert!(Float::with_val(ctx.bits(), &r.value + 1u32).abs() < 1e-40);
    }

    #[test]
    fn gauss_rule_integrates_polynomials() {
        let ctx = PrecisionContext::new(30);
        let pts = [ctx.complex(0), ctx.complex((0, 1)), ctx.complex((2, 1)), ctx.complex(2)];
        // path-independent: ∫₀² x³ dx = 4
        let r = integrate_path(|x: &Complex| Complex::with_val(x.prec(), x.pow(3u32)), &pts, &ctx).unwrap();
        let err = Complex::with_val(ctx.bits(), &r.value - 4u32).abs().real().clone();
        assert!(err < 1e-40, "{err}");
    }

    #[test]
    fn gauss_path_exp() {
        let ctx = PrecisionContext::new(40);
        let pts = [ctx.complex(0), ctx.complex((0, 1)), ctx.complex((3, 1)), ctx.complex(3)];
        let r = integrate_path(|x: &Complex| Complex::with_val(x.prec(), x.exp_ref()), &pts, &ctx).unwrap();
        let want = Float::with_val(ctx.bits(), 3).exp() - 1u32;
        let err = Complex::with_val(ctx.bits(), &r.value - &want).abs().real().clone();
        assert!(err < 1e-50, "{err}");
    }

    #[test]
    fn nonconvergence_on_slow_decay() {
        let ctx = PrecisionContext::new(30);
        // claims e^{-x} decay but only decays like 1/x²
        let r = integrate_semi_infinite(
            |x: &Float| Float::with_val(x.prec(), 1u32) / (Float::with_val(x.prec(), x.square_ref()) + 1u32),
            1.0,
            &ctx,
        );
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }
}
