//! Exact evaluation of the hyperfactorial product formulas, as printed.
//!
//! Each function transcribes its source expression verbatim over exact
//! arithmetic. Where a printed formula is internally inconsistent with the
//! counts, that is for [`crate::verifier`] to detect and report — nothing is
//! patched here.

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::One;
use thiserror::Error;

use crate::exact::ExactScaled;
use crate::interval::{self, Interval};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("formula undefined: {0}")]
    Undefined(String),
}

type Result<T> = std::result::Result<T, FormulaError>;

static HYPERFACTORIALS: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// Hyperfactorial `h(n) = 0! 1! ... (n-1)!`, with `h(0) = 1`.
pub fn hyperfactorial(n: u64) -> BigUint {
    let mut cache = HYPERFACTORIALS.lock().unwrap();
    if cache.is_empty() {
        cache.push(BigUint::one()); // h(0)
        cache.push(BigUint::one()); // h(1)
    }
    if (n as usize) < cache.len() {
        return cache[n as usize].clone();
    }
    // extend via h(k) = h(k-1) * (k-1)!
    let mut factorial = BigUint::one();
    for i in 1..cache.len() as u64 {
        factorial *= BigUint::from(i);
    }
    while (cache.len() as u64) <= n {
        let k = cache.len() as u64;
        // factorial holds (k-1)! here
        let next = cache.last().unwrap() * &factorial;
        cache.push(next);
        factorial *= BigUint::from(k);
    }
    cache[n as usize].clone()
}

fn h(arg: i64, what: &str) -> Result<BigUint> {
    if arg < 0 {
        return Err(FormulaError::Undefined(format!(
            "hyperfactorial argument {what} = {arg} is negative"
        )));
    }
    Ok(hyperfactorial(arg as u64))
}

fn ratio_of_products(num: &[BigUint], den: &[BigUint]) -> BigRational {
    let mut n = BigUint::one();
    for f in num {
        n *= f;
    }
    let mut d = BigUint::one();
    for f in den {
        d *= f;
    }
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Number of domino tilings of the Aztec diamond `AD_n`: `2^{n(n+1)/2}`.
pub fn aztec_value(n: u64) -> BigUint {
    BigUint::one() << (n * (n + 1) / 2) as usize
}

/// The cruciform product formula, as printed:
///
/// ```text
/// M(C_{m,n}^{a,b,c,d}) = 2^{ m(3m+1)/4 + n(3n+1)/4 + (a+c)(b+d)/2 - (m-n)(a-b+c-d)/4 }
///     * h(m+n+1)^2 h(m-a) h(n-b) h(m-c) h(n-d)
///     / ( h(n+a+1) h(m+b+1) h(n+c+1) h(m+d+1) )
/// ```
///
/// The exponent is carried exactly as a rational; some balanced
/// negative-pier tuples make it (or the whole value) non-integral, which the
/// verifier reports rather than this function hiding it.
pub fn cruciform_value(m: i64, n: i64, a: i64, b: i64, c: i64, d: i64) -> Result<ExactScaled> {
    let exp = Ratio::new(m * (3 * m + 1), 4)
        + Ratio::new(n * (3 * n + 1), 4)
        + Ratio::new((a + c) * (b + d), 2)
        - Ratio::new((m - n) * (a - b + c - d), 4);
    let hmn = h(m + n + 1, "m+n+1")?;
    let num = [
        hmn.clone(),
        hmn,
        h(m - a, "m-a")?,
        h(n - b, "n-b")?,
        h(m - c, "m-c")?,
        h(n - d, "n-d")?,
    ];
    let den = [
        h(n + a + 1, "n+a+1")?,
        h(m + b + 1, "m+b+1")?,
        h(n + c + 1, "n+c+1")?,
        h(m + d + 1, "m+d+1")?,
    ];
    Ok(ExactScaled::new(exp, ratio_of_products(&num, &den)))
}

/// The elbow product formula:
/// `2^{n(n+1)/2} n! h(2n+1) h(a) h(b) / ( h(n+a+1) h(n+b+1) )`.
pub fn elbow_value(n: i64, a: i64, b: i64) -> Result<ExactScaled> {
    if n < 0 || a < 0 || b < 0 {
        return Err(FormulaError::Undefined(format!(
            "elbow formula needs n,a,b >= 0, got ({n},{a},{b})"
        )));
    }
    let exp = Ratio::from_integer(n * (n + 1) / 2);
    let mut factorial = BigUint::one();
    for i in 1..=n as u64 {
        factorial *= BigUint::from(i);
    }
    let num = [factorial, h(2 * n + 1, "2n+1")?, h(a, "a")?, h(b, "b")?];
    let den = [h(n + a + 1, "n+a+1")?, h(n + b + 1, "n+b+1")?];
    Ok(ExactScaled::new(exp, ratio_of_products(&num, &den)))
}

/// The T-region formula:
///
/// ```text
/// M(T_{m,n}^{b,c,d}) = 2^{ m(m-1)/4 + n(3n+1)/4 + (m+c)(b+d)/2 - (m-n)(m-b+c-d)/4 }
///     * h(m+n+1) h(n-b) h(m-c) h(n-d) / ( h(m+b+1) h(n+c+1) h(m+d+1) )
/// ```
pub fn t_region_value(m: i64, n: i64, b: i64, c: i64, d: i64) -> Result<ExactScaled> {
    let exp = Ratio::new(m * (m - 1), 4)
        + Ratio::new(n * (3 * n + 1), 4)
        + Ratio::new((m + c) * (b + d), 2)
        - Ratio::new((m - n) * (m - b + c - d), 4);
    let num = [
        h(m + n + 1, "m+n+1")?,
        h(n - b, "n-b")?,
        h(m - c, "m-c")?,
        h(n - d, "n-d")?,
    ];
    let den = [
        h(m + b + 1, "m+b+1")?,
        h(n + c + 1, "n+c+1")?,
        h(m + d + 1, "m+d+1")?,
    ];
    Ok(ExactScaled::new(exp, ratio_of_products(&num, &den)))
}

/// The stated divisor of the Di Francesco count:
/// `2^{n(2n-1)} (n-1)!(2n-1)!/(3n-1)! * [0!1!...(4n-2)!] / [(n-1)!n!...(3n-2)!]^2`.
pub fn corollary_value(n: i64) -> Result<ExactScaled> {
    if n < 1 {
        return Err(FormulaError::Undefined(format!("needs n >= 1, got {n}")));
    }
    let exp = Ratio::from_integer(n * (2 * n - 1));
    let factorial = |k: u64| -> BigUint {
        let mut f = BigUint::one();
        for i in 1..=k {
            f *= BigUint::from(i);
        }
        f
    };
    // 0! 1! ... (4n-2)! = h(4n-1)
    let top_run = hyperfactorial(4 * n as u64 - 1);
    // (n-1)! n! ... (3n-2)! = h(3n-1) / h(n-1)
    let mid_run = BigRational::new(
        BigInt::from(hyperfactorial(3 * n as u64 - 1)),
        BigInt::from(hyperfactorial(n as u64 - 1)),
    );
    let q = BigRational::new(
        BigInt::from(factorial(n as u64 - 1) * factorial(2 * n as u64 - 1) * top_run),
        BigInt::from(factorial(3 * n as u64 - 1)),
    ) / (&mid_run * &mid_run);
    Ok(ExactScaled::new(exp, q))
}

/// Krattenthaler's intruded-rectangle specialization, as printed:
///
/// ```text
/// M(AR_{m+n,2n+a+c+1}^{n+a}(n-d,n-b)) = 2^{ C(2n+a+c,2) + (m+n+1)(m-n-a-c+1) }
///     * h(m+n+1)^2 h(m-a+1) h(n-b+1) h(m-c+1) h(n-d+1)
///     / ( h(n+a) h(m+b) h(n+c) h(m+d) )
/// ```
pub fn krattenthaler_value(m: i64, n: i64, a: i64, b: i64, c: i64, d: i64) -> Result<ExactScaled> {
    let s = 2 * n + a + c;
    let exp = Ratio::from_integer(s * (s - 1) / 2 + (m + n + 1) * (m - n - a - c + 1));
    let hmn = h(m + n + 1, "m+n+1")?;
    let num = [
        hmn.clone(),
        hmn,
        h(m - a + 1, "m-a+1")?,
        h(n - b + 1, "n-b+1")?,
        h(m - c + 1, "m-c+1")?,
        h(n - d + 1, "n-d+1")?,
    ];
    let den = [
        h(n + a, "n+a")?,
        h(m + b, "m+b")?,
        h(n + c, "n+c")?,
        h(m + d, "m+d")?,
    ];
    Ok(ExactScaled::new(exp, ratio_of_products(&num, &den)))
}

/// The conjectured count of Di Francesco's region `T_n`:
/// `2^{n(n-1)/2} prod_{i=0}^{n-1} (4i+2)!/(n+2i+1)!`. Always an integer;
/// asserted.
pub fn conjecture_value(n: i64) -> Result<BigUint> {
    if n < 1 {
        return Err(FormulaError::Undefined(format!("needs n >= 1, got {n}")));
    }
    let mut q = BigRational::one();
    let factorial = |k: i64| -> BigUint {
        let mut f = BigUint::one();
        for i in 1..=k as u64 {
            f *= BigUint::from(i);
        }
        f
    };
    for i in 0..n {
        q *= BigRational::new(
            BigInt::from(factorial(4 * i + 2)),
            BigInt::from(factorial(n + 2 * i + 1)),
        );
    }
    let v = ExactScaled::new(Ratio::from_integer(n * (n - 1) / 2), q);
    v.to_biguint().ok_or_else(|| {
        FormulaError::Undefined(format!("conjectured value at n={n} is not an integer: {v}"))
    })
}

/// Diagnostic evaluation of the printed half-square expression
/// `2^{n(n-1)/2} sqrt( prod_{j,k=1..n} (cos^2(pi j/(2n+1)) + cos^2(pi k/(2n+1))) )`
/// as a guaranteed enclosure. The printed expression is not integral at
/// small `n`; callers compare against engine counts and record the outcome.
pub fn half_square_value(n: u32, precision_bits: u32) -> Interval {
    let prefactor = BigRational::new(
        BigInt::one() << (n as usize * (n as usize - 1) / 2),
        BigInt::one(),
    );
    cos_square_product(n, precision_bits, false)
        .sqrt(precision_bits)
        .scale(&prefactor)
}

/// The Temperley-Fisher-Kasteleyn product for the full `2n x 2n` square:
/// `prod_{j,k=1..n} 4 (cos^2(pi j/(2n+1)) + cos^2(pi k/(2n+1)))`. Rounds to
/// the exact tiling count; used as a companion cross-check.
pub fn square_tfk_value(n: u32, precision_bits: u32) -> Interval {
    cos_square_product(n, precision_bits, true)
}

fn cos_square_product(n: u32, bits: u32, with_factor_four: bool) -> Interval {
    let work = bits + 16;
    let pi = interval::pi(work);
    let denom = BigRational::new(BigInt::one(), BigInt::from(2 * n as i64 + 1));
    // cos^2(pi j / (2n+1)) for j = 1..n
    let cos2: Vec<Interval> = (1..=n)
        .map(|j| {
            let angle = pi
                .scale(&(&denom * BigRational::from_integer(BigInt::from(j as i64))))
                .round(work);
            interval::cos(&angle, work).square().round(work)
        })
        .collect();
    let four = BigRational::from_integer(BigInt::from(4));
    let mut product = Interval::from_integer(1);
    for j in 0..n as usize {
        for k in 0..n as usize {
            let mut term = cos2[j].add(&cos2[k]);
            if with_factor_four {
                term = term.scale(&four);
            }
            product = product.mul(&term).round(work);
        }
    }
    product
}
