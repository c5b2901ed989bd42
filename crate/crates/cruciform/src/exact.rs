//! `ExactScaled`: exact values of the form `2^e * q` with a rational
//! exponent `e` and an odd-normalized positive rational `q`.
//!
//! The product formulas keep their power-of-two prefactor symbolic, because
//! the printed exponents involve quarter-integer terms; a value whose
//! exponent is not an integer is representable and compares exactly.

use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub type Exponent = Ratio<i64>;

/// `2^exp * q`, with `q > 0` and both numerator and denominator of `q` odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactScaled {
    exp: Exponent,
    q: BigRational,
}

fn two_adic_valuation(n: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    n.magnitude().trailing_zeros().expect("nonzero") as i64
}

impl ExactScaled {
    /// Build `2^exp * q`, normalizing powers of two out of `q`. Panics if
    /// `q <= 0`: counts and formula values here are positive.
    pub fn new(exp: Exponent, q: BigRational) -> Self {
        assert!(q.is_positive(), "ExactScaled requires a positive rational");
        let vn = two_adic_valuation(q.numer());
        let vd = two_adic_valuation(q.denom());
        let numer = q.numer() >> vn as usize;
        let denom = q.denom() >> vd as usize;
        ExactScaled {
            exp: exp + Exponent::from_integer(vn - vd),
            q: BigRational::new(numer, denom),
        }
    }

    pub fn one() -> Self {
        ExactScaled {
            exp: Exponent::zero(),
            q: BigRational::one(),
        }
    }

    pub fn pow2(exp: Exponent) -> Self {
        ExactScaled {
            exp,
            q: BigRational::one(),
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::new(Exponent::zero(), q)
    }

    pub fn from_biguint(n: &BigUint) -> Self {
        assert!(!n.is_zero(), "ExactScaled is positive; zero counts are handled separately");
        Self::from_rational(BigRational::from_integer(BigInt::from_biguint(
            Sign::Plus,
            n.clone(),
        )))
    }

    /// Power-of-two exponent (may be a non-integer rational).
    pub fn exponent(&self) -> Exponent {
        self.exp
    }

    /// The odd-normalized rational factor.
    pub fn odd_part(&self) -> &BigRational {
        &self.q
    }

    /// True when the value is a pure power of two.
    pub fn is_pow2(&self) -> bool {
        self.q.is_one()
    }

    /// True when the value is a (positive) integer.
    pub fn is_integer(&self) -> bool {
        self.exp.is_integer() && !self.exp.is_negative() && self.q.is_integer()
    }

    /// The value as a natural number, when integral.
    pub fn to_biguint(&self) -> Option<BigUint> {
        if !self.is_integer() {
            return None;
        }
        let base = self.q.to_integer().magnitude().clone();
        Some(base << self.exp.to_integer() as usize)
    }

    /// The value as an exact rational; `None` when the exponent is not an
    /// integer (the value is then irrational).
    pub fn to_rational(&self) -> Option<BigRational> {
        if !self.exp.is_integer() {
            return None;
        }
        let e = self.exp.to_integer();
        let pow = BigRational::new(BigInt::one() << e.unsigned_abs() as usize, BigInt::one());
        Some(if e >= 0 { &self.q * pow } else { &self.q / pow })
    }

    /// Decimal string when integral, else `None`.
    pub fn decimal(&self) -> Option<String> {
        self.to_biguint().map(|n| n.to_string())
    }

    pub fn to_doc(&self) -> ExactScaledDoc {
        ExactScaledDoc {
            pow2: self.exp.to_string(),
            rational: self.q.to_string(),
            decimal: self.decimal(),
        }
    }
}

/// Serialized form: `{"pow2": e, "rational": "p/q", "decimal": "..."}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExactScaledDoc {
    pub pow2: String,
    pub rational: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
}

impl Mul for ExactScaled {
    type Output = ExactScaled;
    fn mul(self, rhs: ExactScaled) -> ExactScaled {
        // odd * odd stays odd, no renormalization needed
        ExactScaled {
            exp: self.exp + rhs.exp,
            q: self.q * rhs.q,
        }
    }
}

impl Div for ExactScaled {
    type Output = ExactScaled;
    fn div(self, rhs: ExactScaled) -> ExactScaled {
        ExactScaled {
            exp: self.exp - rhs.exp,
            q: self.q / rhs.q,
        }
    }
}

impl fmt::Display for ExactScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^{} * {}", self.exp, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn es(exp: (i64, i64), num: i64, den: i64) -> ExactScaled {
        ExactScaled::new(
            Exponent::new(exp.0, exp.1),
            BigRational::new(BigInt::from(num), BigInt::from(den)),
        )
    }

    #[test]
    fn normalization() {
        // 2^0 * 24/10 = 2^2 * 3/5
        let v = es((0, 1), 24, 10);
        assert_eq!(v.exponent(), Exponent::from_integer(2));
        assert_eq!(v.odd_part(), &BigRational::new(BigInt::from(3), BigInt::from(5)));
    }

    #[test]
    fn equality_across_forms() {
        assert_eq!(es((3, 1), 1, 1), es((0, 1), 8, 1));
        assert_ne!(es((1, 2), 1, 1), es((0, 1), 1, 1));
    }

    #[test]
    fn integrality() {
        assert_eq!(es((2, 1), 3, 1).to_biguint(), Some(BigUint::from_u32(12).unwrap()));
        assert!(es((-1, 1), 3, 1).to_biguint().is_none());
        assert!(es((1, 2), 1, 1).to_biguint().is_none());
        assert!(es((0, 1), 3, 5).to_biguint().is_none());
        assert_eq!(
            es((-2, 1), 3, 1).to_rational(),
            Some(BigRational::new(BigInt::from(3), BigInt::from(4)))
        );
        assert!(es((1, 4), 1, 1).to_rational().is_none());
    }

    #[test]
    fn arithmetic() {
        let a = es((1, 2), 3, 1);
        let b = es((3, 2), 5, 3);
        assert_eq!(a.clone() * b.clone(), es((2, 1), 5, 1));
        assert_eq!(a.clone() / b, es((-1, 1), 9, 5));
        assert_eq!(a / es((1, 2), 3, 1), ExactScaled::one());
    }
}
