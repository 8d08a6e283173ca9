use std::fmt;

use crate::structures::{AdditiveGroup, AdditiveMonoid, AdditiveSemigroup, Field, VectorSpace};
use crate::{AlgebraError, Rational};

/// A fixed-dimension vector of field elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VectorN<S> {
    components: Vec<S>,
}

impl<S: Field + Clone> VectorN<S> {
    pub fn new(components: Vec<S>) -> Result<Self, AlgebraError> {
        if components.is_empty() {
            return Err(AlgebraError::EmptyVector);
        }
        Ok(VectorN { components })
    }

    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[S] {
        &self.components
    }

    pub fn try_plus(&self, right: &Self) -> Result<Self, AlgebraError> {
        if self.dimension() != right.dimension() {
            return Err(AlgebraError::DimensionMismatch {
                left: self.dimension(),
                right: right.dimension(),
            });
        }
        let components = self
            .components
            .iter()
            .zip(&right.components)
            .map(|(a, b)| a.plus(b))
            .collect();
        Ok(VectorN { components })
    }

    fn map(&self, f: impl Fn(&S) -> S) -> Self {
        VectorN {
            components: self.components.iter().map(f).collect(),
        }
    }
}

impl VectorN<Rational> {
    pub fn zeros(dimension: usize) -> Result<Self, AlgebraError> {
        Self::new(vec![Rational::zero(); dimension])
    }

    pub fn from_integers(values: &[i64]) -> Result<Self, AlgebraError> {
        Self::new(values.iter().map(|&v| Rational::from_integer(v)).collect())
    }
}

/// Panics when the dimensions differ; use [`VectorN::try_plus`] to get an error instead.
impl<S: Field + Clone> AdditiveSemigroup for VectorN<S> {
    fn plus(&self, right: &Self) -> Self {
        match self.try_plus(right) {
            Ok(v) => v,
            Err(e) => panic!("{e}"),
        }
    }
}

impl<S: Field + Clone> AdditiveMonoid for VectorN<S> {
    fn zero(&self) -> Self {
        self.map(|c| c.zero())
    }
}

impl<S: Field + Clone> AdditiveGroup for VectorN<S> {
    fn add_inv(&self) -> Self {
        self.map(|c| c.add_inv())
    }
}

impl<S: Field + Clone> VectorSpace for VectorN<S> {
    type Scalar = S;

    fn times_scalar(&self, s: &S) -> Self {
        self.map(|c| c.times(s))
    }
}

impl<S: fmt::Display> fmt::Display for VectorN<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl<S: fmt::Display> fmt::Debug for VectorN<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> VectorN<Rational> {
        VectorN::from_integers(xs).unwrap()
    }

    #[test]
    fn componentwise_plus() {
        assert_eq!(v(&[1, 2]).try_plus(&v(&[3, 4])).unwrap(), v(&[4, 6]));
    }

    #[test]
    fn plus_inverse_gives_zero() {
        let u = v(&[1, 2]);
        assert_eq!(u.plus(&u.add_inv()), VectorN::zeros(2).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert_eq!(
            v(&[1, 2]).try_plus(&v(&[1, 2, 3])),
            Err(AlgebraError::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn scalar_multiplication() {
        let u = v(&[1, 2, 3]);
        assert_eq!(u.times_scalar(&Rational::from_integer(2)), v(&[2, 4, 6]));
        assert_eq!(u.times_scalar(&Rational::one()), u);
        assert_eq!(u.times_scalar(&Rational::zero()), VectorN::zeros(3).unwrap());
    }

    #[test]
    fn empty_vectors_are_rejected() {
        assert_eq!(VectorN::<Rational>::new(vec![]), Err(AlgebraError::EmptyVector));
        assert!(VectorN::zeros(0).is_err());
    }
}
