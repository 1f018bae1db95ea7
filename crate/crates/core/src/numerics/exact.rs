//! Exact rational and integer sequences.

use std::sync::{LazyLock, RwLock};

use rug::{Complex, Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;

/// Reduced fraction with positive denominator.
pub type ExactRational = Rational;

static BERNOULLI: LazyLock<RwLock<Vec<Rational>>> =
    LazyLock::new(|| RwLock::new(vec![Rational::from(1), Rational::from((-1, 2))]));

/// Bₙ with the convention B₁ = −1/2.
pub fn bernoulli_number(n: u32) -> ExactRational {
    let n = n as usize;
    if n > 1 && n % 2 == 1 {
        return Rational::new();
    }
    {
        let table = BERNOULLI.read().unwrap();
        if n < table.len() {
            return table[n].clone();
        }
    }
    let mut table = BERNOULLI.write().unwrap();
    while table.len() <= n {
        let m = table.len();
        let value = if m % 2 == 1 {
            Rational::new()
        } else {
            // B_m = −1/(m+1) Σ_{k<m} C(m+1, k) B_k, odd k > 1 vanish
            let mut acc = Rational::new();
            for (k, b) in table.iter().enumerate() {
                if k > 1 && k % 2 == 1 {
                    continue;
                }
                let c = Integer::from(Integer::binomial_u(m as u32 + 1, k as u32));
                acc += Rational::from(b * c);
            }
            -acc / Integer::from(m + 1)
        };
        table.push(value);
    }
    table[n].clone()
}

/// Bernoulli number rounded to `prec` bits.
pub fn bernoulli_float(n: u32, prec: u32) -> Float {
    Float::with_val(prec, &bernoulli_number(n))
}

/// Bₙ(z) = Σₖ C(n,k) Bₖ z^{n−k}.
pub fn bernoulli_poly(n: u32, z: &Complex, ctx: &PrecisionContext) -> Complex {
    let bits = ctx.bits();
    // Horner in z over coefficients C(n,k) B_k, k = 0 leading.
    let mut acc = Complex::with_val(bits, 0);
    for k in 0..=n {
        let coef = Rational::from(bernoulli_number(k) * Integer::from(Integer::binomial_u(n, k)));
        acc *= z;
        acc += Float::with_val(bits, &coef);
    }
    acc
}

/// Hₚ = Σ_{k=1}^{p} 1/k.
pub fn harmonic(p: u32) -> ExactRational {
    (1..=p).fold(Rational::new(), |acc, k| acc + Rational::from((1, k)))
}

/// Row n of the Stirling subset triangle, entries {n,0} … {n,n}.
pub fn stirling_subset_row(n: u32) -> Vec<Integer> {
    let mut row = vec![Integer::from(1)];
    for m in 1..=n as usize {
        let mut next = vec![Integer::new(); m + 1];
        for k in 1..=m {
            let mut v = Integer::from(&row.get(k - 1).cloned().unwrap_or_default());
            if k < row.len() {
                v += Integer::from(k) * &row[k];
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

/// {n, k}: partitions of an n-set into k blocks.
pub fn stirling_subset(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::new();
    }
    stirling_subset_row(n).swap_remove(k as usize)
}

pub fn bell_number(n: u32) -> Integer {
    stirling_subset_row(n).iter().sum()
}

/// Bell numbers B₀ … B_{len−1}.
pub fn bell_numbers(len: usize) -> Vec<Integer> {
    let mut out = Vec::with_capacity(len);
    let mut row = vec![Integer::from(1)];
    for n in 0..len {
        if n > 0 {
            let mut next = vec![Integer::new(); n + 1];
            for k in 1..=n {
                let mut v = row[k - 1].clone();
                if k < row.len() {
                    v += Integer::from(k) * &row[k];
                }
                next[k] = v;
            }
            row = next;
        }
        out.push(row.iter().sum());
    }
    out
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
pub fn bareiss_det(mut m: Vec<Vec<Integer>>) -> Integer {
    let n = m.len();
    if n == 0 {
        return Integer::from(1);
    }
    let mut sign = 1;
    let mut prev = Integer::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Integer::new();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = Integer::from(&m[i][j] * &m[k][k]) - Integer::from(&m[i][k] * &m[k][j]);
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// det Mₙ for the Hankel matrix Mₙ[i][j] = B_{i+j−1} (1-based) of Bell numbers.
pub fn hankel_bell_det(n: u32) -> Result<Integer> {
    if n == 0 {
        return Err(Error::InvalidArgument("Hankel order must be ≥ 1".into()));
    }
    let n = n as usize;
    let bell = bell_numbers(2 * n);
    let m = (0..n)
        .map(|i| (0..n).map(|j| bell[i + j + 1].clone()).collect())
        .collect();
    Ok(bareiss_det(m))
}

/// n!! with (−1)!! = 0!! = 1.
pub fn double_factorial(n: i64) -> Result<Integer> {
    if n < -1 {
        return Err(Error::InvalidArgument(format!("double factorial undefined for {n}")));
    }
    let mut acc = Integer::from(1);
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

/// ∏_{i=1}^{n−1} i!, the value of G(n+1).
pub fn superfactorial(n: u32) -> Integer {
    let mut acc = Integer::from(1);
    let mut fact = Integer::from(1);
    for i in 1..n {
        fact *= i;
        acc *= &fact;
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> Integer {
    Integer::from(Integer::binomial_u(n, k))
}

pub fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}
