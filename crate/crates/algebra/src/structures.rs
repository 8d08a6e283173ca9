//! The algebraic tower as traits, from additive semigroups up to vector spaces.
//!
//! Each trait carries operations only. The laws that give them meaning live
//! in [`crate::laws`], where they are checked by sampling.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{AlgebraError, Rational};

pub trait AdditiveSemigroup: Sized {
    fn plus(&self, right: &Self) -> Self;
}

pub trait MultiplicativeSemigroup: Sized {
    fn times(&self, right: &Self) -> Self;
}

pub trait AdditiveMonoid: AdditiveSemigroup {
    /// The additive neutral element.
    fn zero(&self) -> Self;
}

pub trait MultiplicativeMonoid: MultiplicativeSemigroup {
    /// The multiplicative neutral element.
    fn one(&self) -> Self;
}

pub trait AdditiveGroup: AdditiveMonoid {
    fn add_inv(&self) -> Self;
}

/// Commutativity of `times` is not expressible here; the ring law suite
/// checks it.
pub trait CommutativeRing: AdditiveGroup + MultiplicativeMonoid {}

pub trait MultiplicativeGroup: MultiplicativeMonoid {
    fn mult_inv(&self) -> Result<Self, AlgebraError>;
}

pub trait Field: AdditiveGroup + MultiplicativeGroup {}

/// An additive group of vectors combined with a field of scalars.
pub trait VectorSpace: AdditiveGroup {
    type Scalar: Field;

    fn times_scalar(&self, s: &Self::Scalar) -> Self;
}

impl AdditiveSemigroup for Rational {
    fn plus(&self, right: &Self) -> Self {
        Rational::plus(self, right)
    }
}

impl MultiplicativeSemigroup for Rational {
    fn times(&self, right: &Self) -> Self {
        Rational::times(self, right)
    }
}

impl AdditiveMonoid for Rational {
    fn zero(&self) -> Self {
        Rational::zero()
    }
}

impl MultiplicativeMonoid for Rational {
    fn one(&self) -> Self {
        Rational::one()
    }
}

impl AdditiveGroup for Rational {
    fn add_inv(&self) -> Self {
        Rational::add_inv(self)
    }
}

impl MultiplicativeGroup for Rational {
    fn mult_inv(&self) -> Result<Self, AlgebraError> {
        Rational::mult_inv(self)
    }
}

impl CommutativeRing for Rational {}
impl Field for Rational {}

impl AdditiveSemigroup for BigInt {
    fn plus(&self, right: &Self) -> Self {
        self + right
    }
}

impl MultiplicativeSemigroup for BigInt {
    fn times(&self, right: &Self) -> Self {
        self * right
    }
}

impl AdditiveMonoid for BigInt {
    fn zero(&self) -> Self {
        <BigInt as Zero>::zero()
    }
}

impl MultiplicativeMonoid for BigInt {
    fn one(&self) -> Self {
        <BigInt as One>::one()
    }
}

impl AdditiveGroup for BigInt {
    fn add_inv(&self) -> Self {
        -self
    }
}

impl CommutativeRing for BigInt {}
