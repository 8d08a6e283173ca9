//! The semigroup-to-vector-space tower over exact rationals.
//!
//! [`structures`] states the operations of each level as traits,
//! [`Rational`] and [`VectorN`] implement them exactly, and [`laws`] checks the
//! equational laws those traits cannot state.

pub mod laws;
mod rational;
pub mod structures;
mod vector;

use thiserror::Error;

pub use laws::{check_laws, Law, LawReport, LawResult, Level, Scope, StructureWitness, WitnessError};
pub use rational::Rational;
pub use vector::VectorN;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("vectors need at least one component")]
    EmptyVector,
}
