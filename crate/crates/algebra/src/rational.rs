//! Exact rational numbers over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::AlgebraError;

/// A fraction kept in lowest terms with a positive denominator.
///
/// Equality is structural, which is sound only because every constructor
/// normalizes. Zero is always `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: BigInt,
    denom: BigInt,
}

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, AlgebraError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(numer.into(), denom))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational {
            numer: n.into(),
            denom: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// Builds a fraction without reducing it. Only meant for mutation tests
    /// that need a deliberately broken arithmetic.
    #[doc(hidden)]
    pub fn from_parts_unnormalized(numer: BigInt, denom: BigInt) -> Self {
        Rational { numer, denom }
    }

    fn normalized(mut numer: BigInt, mut denom: BigInt) -> Self {
        debug_assert!(!denom.is_zero());
        if denom.is_negative() {
            numer = -numer;
            denom = -denom;
        }
        let g = numer.gcd(&denom);
        if !g.is_one() {
            numer /= &g;
            denom /= &g;
        }
        Rational { numer, denom }
    }

    pub fn numer(&self) -> &BigInt {
        &self.numer
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// True when the value is in lowest terms with a positive denominator.
    pub fn is_normalized(&self) -> bool {
        self.denom.is_positive() && self.numer.gcd(&self.denom).is_one()
    }

    pub fn plus(&self, right: &Rational) -> Rational {
        Self::normalized(
            &self.numer * &right.denom + &right.numer * &self.denom,
            &self.denom * &right.denom,
        )
    }

    pub fn times(&self, right: &Rational) -> Rational {
        Self::normalized(&self.numer * &right.numer, &self.denom * &right.denom)
    }

    pub fn add_inv(&self) -> Rational {
        Rational {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }

    /// The reciprocal; zero has none.
    pub fn mult_inv(&self) -> Result<Rational, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(self.denom.clone(), self.numer.clone()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn plus_reduces() {
        assert_eq!(r(1, 2).plus(&r(1, 3)), r(5, 6));
        assert_eq!(r(1, 2).plus(&r(1, 2)), r(1, 1));
    }

    #[test]
    fn times_of_reciprocals_is_one() {
        let p = r(2, 3).times(&r(3, 2));
        assert_eq!(p, Rational::one());
        assert_eq!((p.numer().clone(), p.denom().clone()), (BigInt::from(1), BigInt::from(1)));
    }

    #[test]
    fn zero_is_its_own_inverse() {
        assert_eq!(Rational::zero().add_inv(), Rational::zero());
        assert_eq!(Rational::zero().add_inv().to_string(), "0/1");
    }

    #[test]
    fn mult_inv_moves_sign_to_numerator() {
        let inv = r(-2, 3).mult_inv().unwrap();
        assert_eq!(inv.to_string(), "-3/2");
        assert_eq!(r(1, 1).mult_inv().unwrap(), r(1, 1));
    }

    #[test]
    fn mult_inv_of_zero_fails() {
        assert_eq!(Rational::zero().mult_inv(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn constructor_normalizes_sign_and_terms() {
        let x = r(4, -6);
        assert_eq!(x.to_string(), "-2/3");
        assert!(x.is_normalized());
        assert_eq!(r(0, -7).to_string(), "0/1");
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn unnormalized_parts_are_detected() {
        let x = Rational::from_parts_unnormalized(BigInt::from(2), BigInt::from(4));
        assert!(!x.is_normalized());
        assert_ne!(x, r(1, 2));
    }
}
