//! Rational interval arithmetic with guaranteed enclosures.
//!
//! This backs the evaluation of the trigonometric product formula for the
//! half-square region, where "does the value round to an integer" must be a
//! decidable question. Everything is exact: endpoints are big rationals,
//! every operation widens outward, and transcendental values (pi, cosines)
//! come from series with explicit remainder bounds.

use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A closed interval `[lo, hi]` of rationals, `lo <= hi`.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

fn pow2_rational(bits: i64) -> BigRational {
    if bits >= 0 {
        BigRational::new(BigInt::one() << bits as usize, BigInt::one())
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-bits) as usize)
    }
}

impl Interval {
    pub fn exact(v: BigRational) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::exact(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    pub fn scale(&self, k: &BigRational) -> Interval {
        if k.is_negative() {
            Interval {
                lo: &self.hi * k,
                hi: &self.lo * k,
            }
        } else {
            Interval {
                lo: &self.lo * k,
                hi: &self.hi * k,
            }
        }
    }

    pub fn square(&self) -> Interval {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.lo.is_negative() && self.hi.is_positive() {
            Interval {
                lo: BigRational::zero(),
                hi: a.max(b),
            }
        } else {
            Interval {
                lo: a.clone().min(b.clone()),
                hi: a.max(b),
            }
        }
    }

    /// Outward rounding to dyadic endpoints with `bits` fractional bits;
    /// keeps denominators from exploding in long series.
    pub fn round(&self, bits: u32) -> Interval {
        let scale = pow2_rational(bits as i64);
        let lo = (&self.lo * &scale).floor() / &scale;
        let hi = (&self.hi * &scale).ceil() / &scale;
        Interval { lo, hi }
    }

    /// Guaranteed enclosure of the square root (requires `lo >= 0`).
    pub fn sqrt(&self, bits: u32) -> Interval {
        assert!(!self.lo.is_negative(), "sqrt of a negative interval");
        Interval {
            lo: sqrt_lower(&self.lo, bits),
            hi: sqrt_upper(&self.hi, bits),
        }
    }

    /// The unique integer contained in the interval, when the interval
    /// certifies one (contains exactly one integer). `None` otherwise.
    pub fn unique_integer(&self) -> Option<BigInt> {
        let lo = self.lo.ceil().to_integer();
        let hi = self.hi.floor().to_integer();
        if lo == hi {
            Some(lo)
        } else {
            None
        }
    }

    /// Midpoint, for display only.
    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

/// Rational lower bound on `sqrt(x)` with error below `2^-bits`.
fn sqrt_lower(x: &BigRational, bits: u32) -> BigRational {
    assert!(!x.is_negative());
    if x.is_zero() {
        return BigRational::zero();
    }
    // sqrt(p/q) = sqrt(p*q)/q; floor(sqrt(p*q*4^k)) / (q*2^k) is a lower bound.
    let k = bits as usize + 1;
    let scaled = (x.numer() * x.denom()).magnitude() << (2 * k);
    let root = scaled.sqrt();
    BigRational::new(BigInt::from(root), x.denom() << k)
}

/// Rational upper bound on `sqrt(x)` with error below `2^-bits`.
fn sqrt_upper(x: &BigRational, bits: u32) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let k = bits as usize + 1;
    let scaled = (x.numer() * x.denom()).magnitude() << (2 * k);
    let root = scaled.sqrt() + 1u32;
    BigRational::new(BigInt::from(root), x.denom() << k)
}

/// Enclosure of pi via Machin's formula, accurate to about `bits` bits.
pub fn pi(bits: u32) -> Interval {
    // pi = 16 atan(1/5) - 4 atan(1/239)
    let a = atan_inv(5, bits + 8);
    let b = atan_inv(239, bits + 8);
    let sixteen = BigRational::from_integer(BigInt::from(16));
    let minus_four = BigRational::from_integer(BigInt::from(-4));
    a.scale(&sixteen).add(&b.scale(&minus_four)).round(bits + 4)
}

/// Enclosure of `atan(1/m)` from the alternating Taylor series.
fn atan_inv(m: u64, bits: u32) -> Interval {
    let x = BigRational::new(BigInt::one(), BigInt::from(m));
    let x2 = &x * &x;
    let eps = pow2_rational(-(bits as i64));
    let mut term = x.clone(); // x^(2k+1) / (2k+1)
    let mut power = x.clone();
    let mut sum = BigRational::zero();
    let mut k = 0u32;
    loop {
        // alternating series with strictly decreasing terms: partial sums bracket
        if term.abs() < eps {
            break;
        }
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        k += 1;
        power = power * &x2;
        term = &power / BigRational::from_integer(BigInt::from(2 * k as i64 + 1));
    }
    // remainder bounded by the first omitted term
    let lo = &sum - term.abs();
    let hi = &sum + term.abs();
    Interval { lo, hi }
}

/// Enclosure of `cos` over an interval contained in `[0, pi]`, where cosine
/// is monotone decreasing.
pub fn cos(x: &Interval, bits: u32) -> Interval {
    Interval {
        lo: cos_point(&x.hi, bits).lo,
        hi: cos_point(&x.lo, bits).hi,
    }
}

/// Enclosure of `cos(x)` for a rational `x` with `|x| < 4`, from the Taylor
/// series with an explicit tail bound.
fn cos_point(x: &BigRational, bits: u32) -> Interval {
    assert!(x.abs() < BigRational::from_integer(BigInt::from(4)));
    let x2 = (x * x).reduced();
    let eps = pow2_rational(-(bits as i64) - 4);
    let mut term = BigRational::one(); // x^(2k) / (2k)!
    let mut sum = BigRational::zero();
    let mut k: u32 = 0;
    loop {
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        k += 1;
        term = &term * &x2
            / BigRational::from_integer(BigInt::from((2 * k as i64 - 1) * (2 * k as i64)));
        // once terms decrease (2k(2k-1) > x^2, true for k >= 2 with |x| < 4)
        // the alternating tail is bounded by the next term
        if k >= 2 && term < eps {
            break;
        }
    }
    Interval {
        lo: &sum - &term,
        hi: &sum + &term,
    }
    .round(bits + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(i: &Interval, v: f64, tol: f64) {
        let mid = i.midpoint_f64();
        assert!((mid - v).abs() < tol, "mid {mid} vs {v}");
    }

    #[test]
    fn pi_enclosure() {
        let p = pi(128);
        approx(&p, std::f64::consts::PI, 1e-12);
        assert!(p.width() < pow2_rational(-120));
    }

    #[test]
    fn cos_values() {
        let p = pi(96);
        let third = p.scale(&BigRational::new(BigInt::one(), BigInt::from(3)));
        let c = cos(&third, 96);
        approx(&c, 0.5, 1e-12);
        // cos(pi/3) = 1/2 exactly: the enclosure must contain it
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert!(c.lo <= half && half <= c.hi);
    }

    #[test]
    fn sqrt_enclosure() {
        let two = Interval::from_integer(2);
        let s = two.sqrt(100);
        approx(&s, std::f64::consts::SQRT_2, 1e-12);
        assert!(&s.lo * &s.lo <= BigRational::from_integer(BigInt::from(2)));
        assert!(&s.hi * &s.hi >= BigRational::from_integer(BigInt::from(2)));
    }

    #[test]
    fn unique_integer_detection() {
        let i = Interval::new(
            BigRational::new(BigInt::from(359), BigInt::from(10)),
            BigRational::new(BigInt::from(361), BigInt::from(10)),
        );
        assert_eq!(i.unique_integer(), Some(BigInt::from(36)));
        let j = Interval::new(
            BigRational::new(BigInt::from(7), BigInt::from(10)),
            BigRational::new(BigInt::from(8), BigInt::from(10)),
        );
        assert_eq!(j.unique_integer(), None);
    }
}
