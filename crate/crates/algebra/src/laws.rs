//! Sampling-based checks of the equational laws behind each structure level.
//!
//! A [`StructureWitness`] bundles a carrier sampler with exactly the
//! operations its level needs. [`check_laws`] draws samples for every law of
//! that level and compares both sides exactly.

use std::fmt::{self, Debug};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::structures::{CommutativeRing, Field, VectorSpace};
use crate::{AlgebraError, Rational, VectorN};

pub type BinaryOp<T> = Box<dyn Fn(&T, &T) -> T + Send + Sync>;
pub type UnaryOp<T> = Box<dyn Fn(&T) -> T + Send + Sync>;
pub type PartialOp<T> = Box<dyn Fn(&T) -> Result<T, AlgebraError> + Send + Sync>;
pub type ScalarOp<T, S> = Box<dyn Fn(&T, &S) -> T + Send + Sync>;
pub type Sampler<T> = Box<dyn Fn(&mut ChaCha8Rng) -> T + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Semigroup,
    Monoid,
    Group,
    CommutativeRing,
    Field,
    VectorSpace,
}

impl Level {
    fn required_ops(self) -> &'static [Op] {
        use Op::*;
        match self {
            Level::Semigroup => &[Plus],
            Level::Monoid => &[Plus, Zero],
            Level::Group => &[Plus, Zero, AddInv],
            Level::CommutativeRing => &[Plus, Zero, AddInv, Times, One],
            Level::Field => &[Plus, Zero, AddInv, Times, One, MultInv],
            Level::VectorSpace => &[Plus, Zero, AddInv, TimesScalar],
        }
    }

    /// Whether a witness at `self` can be viewed as one at `lower`.
    pub fn subsumes(self, lower: Level) -> bool {
        match (self, lower) {
            (Level::VectorSpace, l) => l <= Level::Group || l == Level::VectorSpace,
            (a, b) => b <= a,
        }
    }

    fn laws(self) -> &'static [Law] {
        use Law::*;
        match self {
            Level::Semigroup => &[PlusAssociative, PlusCommutative],
            Level::Monoid => &[PlusAssociative, PlusCommutative, ZeroIdentity],
            Level::Group | Level::VectorSpace => &[PlusAssociative, PlusCommutative, ZeroIdentity, AdditiveInverse],
            Level::CommutativeRing => &[
                PlusAssociative,
                PlusCommutative,
                ZeroIdentity,
                AdditiveInverse,
                TimesAssociative,
                TimesCommutative,
                OneIdentity,
                Distributive,
            ],
            Level::Field => &[
                PlusAssociative,
                PlusCommutative,
                ZeroIdentity,
                AdditiveInverse,
                TimesAssociative,
                TimesCommutative,
                OneIdentity,
                MultiplicativeInverse,
                Distributive,
            ],
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Semigroup => "semigroup",
            Level::Monoid => "monoid",
            Level::Group => "group",
            Level::CommutativeRing => "commutative ring",
            Level::Field => "field",
            Level::VectorSpace => "vector space",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Plus,
    Zero,
    AddInv,
    Times,
    One,
    MultInv,
    TimesScalar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    PlusAssociative,
    PlusCommutative,
    ZeroIdentity,
    AdditiveInverse,
    TimesAssociative,
    TimesCommutative,
    OneIdentity,
    MultiplicativeInverse,
    Distributive,
    /// (a + b)·v = a·v + b·v
    ScalarSumDistributes,
    /// a·(u + v) = a·u + a·v
    VectorSumDistributes,
    /// (a·b)·v = a·(b·v)
    ScalarProductCompatible,
    /// 1·v = v
    ScalarOneIdentity,
}

impl Law {
    const VECTOR_SPACE: [Law; 4] = [
        Law::ScalarSumDistributes,
        Law::VectorSumDistributes,
        Law::ScalarProductCompatible,
        Law::ScalarOneIdentity,
    ];

    fn stream_id(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::PlusAssociative => "plus is associative",
            Law::PlusCommutative => "plus is commutative",
            Law::ZeroIdentity => "zero is the plus identity",
            Law::AdditiveInverse => "addInv is the plus inverse",
            Law::TimesAssociative => "times is associative",
            Law::TimesCommutative => "times is commutative",
            Law::OneIdentity => "one is the times identity",
            Law::MultiplicativeInverse => "multInv is the times inverse on nonzero elements",
            Law::Distributive => "times distributes over plus",
            Law::ScalarSumDistributes => "(a + b)*v = a*v + b*v",
            Law::VectorSumDistributes => "a*(u + v) = a*u + a*v",
            Law::ScalarProductCompatible => "(a*b)*v = a*(b*v)",
            Law::ScalarOneIdentity => "1*v = v",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("a {level} witness requires exactly the operations {required}")]
    OperationMismatch { level: Level, required: String },
    #[error("a vector space witness needs a field witness for its scalars")]
    MissingScalars,
    #[error("a {from} witness cannot be viewed as a {to}")]
    NotSubsumed { from: Level, to: Level },
    #[error("at least one sample is required")]
    NoSamples,
}

/// The operations a witness supplies. Unused slots stay `None`.
pub struct Operations<T, S = T> {
    pub plus: Option<BinaryOp<T>>,
    pub zero: Option<UnaryOp<T>>,
    pub add_inv: Option<UnaryOp<T>>,
    pub times: Option<BinaryOp<T>>,
    pub one: Option<UnaryOp<T>>,
    pub mult_inv: Option<PartialOp<T>>,
    pub times_scalar: Option<ScalarOp<T, S>>,
}

impl<T, S> Default for Operations<T, S> {
    fn default() -> Self {
        Operations {
            plus: None,
            zero: None,
            add_inv: None,
            times: None,
            one: None,
            mult_inv: None,
            times_scalar: None,
        }
    }
}

impl<T, S> Operations<T, S> {
    fn has(&self, op: Op) -> bool {
        match op {
            Op::Plus => self.plus.is_some(),
            Op::Zero => self.zero.is_some(),
            Op::AddInv => self.add_inv.is_some(),
            Op::Times => self.times.is_some(),
            Op::One => self.one.is_some(),
            Op::MultInv => self.mult_inv.is_some(),
            Op::TimesScalar => self.times_scalar.is_some(),
        }
    }

    fn drop_unrequired(&mut self, level: Level) {
        let req = level.required_ops();
        if !req.contains(&Op::Times) {
            self.times = None;
        }
        if !req.contains(&Op::One) {
            self.one = None;
        }
        if !req.contains(&Op::MultInv) {
            self.mult_inv = None;
        }
        if !req.contains(&Op::TimesScalar) {
            self.times_scalar = None;
        }
        if !req.contains(&Op::AddInv) {
            self.add_inv = None;
        }
        if !req.contains(&Op::Zero) {
            self.zero = None;
        }
    }
}

/// A carrier sampler plus the operation bundle of one structure level.
pub struct StructureWitness<T, S = T> {
    name: String,
    level: Level,
    sampler: Sampler<T>,
    ops: Operations<T, S>,
    scalars: Option<Box<StructureWitness<S, S>>>,
}

impl<T, S> StructureWitness<T, S> {
    pub fn new(
        name: impl Into<String>,
        level: Level,
        sampler: Sampler<T>,
        ops: Operations<T, S>,
        scalars: Option<StructureWitness<S, S>>,
    ) -> Result<Self, WitnessError> {
        let required = level.required_ops();
        let all = [Op::Plus, Op::Zero, Op::AddInv, Op::Times, Op::One, Op::MultInv, Op::TimesScalar];
        if all.iter().any(|&op| ops.has(op) != required.contains(&op)) {
            return Err(WitnessError::OperationMismatch {
                level,
                required: format!("{required:?}"),
            });
        }
        let scalars = match (level, scalars) {
            (Level::VectorSpace, Some(s)) if s.level == Level::Field => Some(Box::new(s)),
            (Level::VectorSpace, _) => return Err(WitnessError::MissingScalars),
            (_, _) => None,
        };
        Ok(StructureWitness {
            name: name.into(),
            level,
            sampler,
            ops,
            scalars,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn level(&self) -> Level {
        self.level
    }

    /// Forgets the operations beyond `level`, e.g. views a field as a group.
    pub fn at_level(mut self, level: Level) -> Result<Self, WitnessError> {
        if !self.level.subsumes(level) {
            return Err(WitnessError::NotSubsumed { from: self.level, to: level });
        }
        self.ops.drop_unrequired(level);
        if level != Level::VectorSpace {
            self.scalars = None;
        }
        self.level = level;
        Ok(self)
    }
}

impl<T: Field + Clone + Send + Sync + 'static> StructureWitness<T, T> {
    /// Witness for a type implementing [`Field`].
    pub fn field(name: impl Into<String>, sampler: Sampler<T>) -> Self {
        let ops = Operations {
            plus: Some(Box::new(|a: &T, b: &T| a.plus(b))),
            zero: Some(Box::new(|a: &T| a.zero())),
            add_inv: Some(Box::new(|a: &T| a.add_inv())),
            times: Some(Box::new(|a: &T, b: &T| a.times(b))),
            one: Some(Box::new(|a: &T| a.one())),
            mult_inv: Some(Box::new(|a: &T| a.mult_inv())),
            times_scalar: None,
        };
        Self::new(name, Level::Field, sampler, ops, None).expect("field operations are complete")
    }
}

impl<T: CommutativeRing + Clone + Send + Sync + 'static> StructureWitness<T, T> {
    /// Witness for a type implementing [`CommutativeRing`].
    pub fn commutative_ring(name: impl Into<String>, sampler: Sampler<T>) -> Self {
        let ops = Operations {
            plus: Some(Box::new(|a: &T, b: &T| a.plus(b))),
            zero: Some(Box::new(|a: &T| a.zero())),
            add_inv: Some(Box::new(|a: &T| a.add_inv())),
            times: Some(Box::new(|a: &T, b: &T| a.times(b))),
            one: Some(Box::new(|a: &T| a.one())),
            ..Operations::default()
        };
        Self::new(name, Level::CommutativeRing, sampler, ops, None).expect("ring operations are complete")
    }
}

impl<V> StructureWitness<V, V::Scalar>
where
    V: VectorSpace + Clone + Send + Sync + 'static,
{
    /// Witness for a type implementing [`VectorSpace`], with `scalars` as its field.
    pub fn vector_space(
        name: impl Into<String>,
        sampler: Sampler<V>,
        scalars: StructureWitness<V::Scalar, V::Scalar>,
    ) -> Result<Self, WitnessError> {
        let ops = Operations {
            plus: Some(Box::new(|a: &V, b: &V| a.plus(b))),
            zero: Some(Box::new(|a: &V| a.zero())),
            add_inv: Some(Box::new(|a: &V| a.add_inv())),
            times_scalar: Some(Box::new(|v: &V, s: &V::Scalar| v.times_scalar(s))),
            ..Operations::default()
        };
        Self::new(name, Level::VectorSpace, sampler, ops, Some(scalars))
    }
}

/// Which carrier a law was checked on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Elements,
    Scalars,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawResult {
    pub law: Law,
    pub scope: Scope,
    pub samples: usize,
    /// Rendered counterexample of the first failing sample.
    pub counterexample: Option<String>,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub structure: String,
    pub level: Level,
    pub samples: usize,
    pub seed: u64,
    pub results: Vec<LawResult>,
}

impl LawReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(LawResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn result(&self, law: Law, scope: Scope) -> Option<&LawResult> {
        self.results.iter().find(|r| r.law == law && r.scope == scope)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} as {}: {} samples per law, seed {}",
            self.structure, self.level, self.samples, self.seed
        )?;
        for r in &self.results {
            let scope = match r.scope {
                Scope::Elements => "",
                Scope::Scalars => "scalars: ",
            };
            match &r.counterexample {
                None => writeln!(f, "  pass  {scope}{}", r.law)?,
                Some(cx) => writeln!(f, "  FAIL  {scope}{}: {cx}", r.law)?,
            }
        }
        let failed = self.failures().count();
        write!(f, "{} laws, {} failed", self.results.len(), failed)
    }
}

/// Checks every law of the witness's level on `samples` random draws.
///
/// Each law draws from its own stream derived from `seed`, so the outcome of a
/// law does not depend on which other laws run alongside it.
pub fn check_laws<T, S>(w: &StructureWitness<T, S>, samples: usize, seed: u64) -> Result<LawReport, WitnessError>
where
    T: PartialEq + Debug,
    S: PartialEq + Debug,
{
    if samples == 0 {
        return Err(WitnessError::NoSamples);
    }
    let mut results: Vec<LawResult> = w
        .level
        .laws()
        .iter()
        .map(|&law| check_ring_law(w, law, samples, seed, Scope::Elements))
        .collect();
    if let (Level::VectorSpace, Some(scalars)) = (w.level, &w.scalars) {
        for law in Law::VECTOR_SPACE {
            results.push(check_vector_law(w, scalars, law, samples, seed));
        }
        let scalar_report = check_laws(scalars, samples, seed)?;
        results.extend(scalar_report.results.into_iter().map(|r| LawResult {
            scope: Scope::Scalars,
            ..r
        }));
    }
    Ok(LawReport {
        structure: w.name.clone(),
        level: w.level,
        samples,
        seed,
        results,
    })
}

fn law_rng(seed: u64, law: Law) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(law.stream_id());
    rng
}

fn op<'a, X>(slot: &'a Option<X>, what: &str) -> &'a X {
    slot.as_ref().unwrap_or_else(|| panic!("witness validated without {what}"))
}

fn check_ring_law<T, S>(w: &StructureWitness<T, S>, law: Law, samples: usize, seed: u64, scope: Scope) -> LawResult
where
    T: PartialEq + Debug,
{
    let mut rng = law_rng(seed, law);
    let draw = |rng: &mut ChaCha8Rng| (w.sampler)(rng);
    let ops = &w.ops;
    let mut counterexample = None;
    for _ in 0..samples {
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let c = draw(&mut rng);
        let outcome = match law {
            Law::PlusAssociative => {
                let plus = op(&ops.plus, "plus");
                compare(plus(&plus(&a, &b), &c), plus(&a, &plus(&b, &c)))
            }
            Law::PlusCommutative => {
                let plus = op(&ops.plus, "plus");
                compare(plus(&a, &b), plus(&b, &a))
            }
            Law::ZeroIdentity => {
                let plus = op(&ops.plus, "plus");
                let zero = op(&ops.zero, "zero")(&a);
                identity_holds(&a, plus(&a, &zero)).and(identity_holds(&a, plus(&zero, &a)))
            }
            Law::AdditiveInverse => {
                let plus = op(&ops.plus, "plus");
                let inv = op(&ops.add_inv, "addInv")(&a);
                compare(plus(&a, &inv), op(&ops.zero, "zero")(&a))
            }
            Law::TimesAssociative => {
                let times = op(&ops.times, "times");
                compare(times(&times(&a, &b), &c), times(&a, &times(&b, &c)))
            }
            Law::TimesCommutative => {
                let times = op(&ops.times, "times");
                compare(times(&a, &b), times(&b, &a))
            }
            Law::OneIdentity => {
                let times = op(&ops.times, "times");
                let one = op(&ops.one, "one")(&a);
                identity_holds(&a, times(&a, &one)).and(identity_holds(&a, times(&one, &a)))
            }
            Law::MultiplicativeInverse => {
                let zero = op(&ops.zero, "zero")(&a);
                if a == zero {
                    Ok(())
                } else {
                    match op(&ops.mult_inv, "multInv")(&a) {
                        Ok(inv) => compare(op(&ops.times, "times")(&a, &inv), op(&ops.one, "one")(&a)),
                        Err(e) => Err(format!("multInv failed on a nonzero element: {e}")),
                    }
                }
            }
            Law::Distributive => {
                let plus = op(&ops.plus, "plus");
                let times = op(&ops.times, "times");
                compare(times(&a, &plus(&b, &c)), plus(&times(&a, &b), &times(&a, &c)))
            }
            _ => unreachable!("{law} is not an element law"),
        };
        if let Err(detail) = outcome {
            counterexample = Some(format!("a = {a:?}, b = {b:?}, c = {c:?}: {detail}"));
            break;
        }
    }
    LawResult {
        law,
        scope,
        samples,
        counterexample,
    }
}

fn identity_holds<T: PartialEq + Debug>(expected: &T, got: T) -> Result<(), String> {
    if &got == expected {
        Ok(())
    } else {
        Err(format!("expected {expected:?}, got {got:?}"))
    }
}

fn compare<T: PartialEq + Debug>(lhs: T, rhs: T) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("lhs = {lhs:?}, rhs = {rhs:?}"))
    }
}

fn check_vector_law<T, S>(
    w: &StructureWitness<T, S>,
    scalars: &StructureWitness<S, S>,
    law: Law,
    samples: usize,
    seed: u64,
) -> LawResult
where
    T: PartialEq + Debug,
    S: PartialEq + Debug,
{
    let mut rng = law_rng(seed, law);
    let plus = op(&w.ops.plus, "plus");
    let scale = op(&w.ops.times_scalar, "timesScalar");
    let s_plus = op(&scalars.ops.plus, "scalar plus");
    let s_times = op(&scalars.ops.times, "scalar times");
    let s_one = op(&scalars.ops.one, "scalar one");
    let mut counterexample = None;
    for _ in 0..samples {
        let u = (w.sampler)(&mut rng);
        let v = (w.sampler)(&mut rng);
        let a = (scalars.sampler)(&mut rng);
        let b = (scalars.sampler)(&mut rng);
        let outcome = match law {
            Law::ScalarSumDistributes => compare(scale(&v, &s_plus(&a, &b)), plus(&scale(&v, &a), &scale(&v, &b))),
            Law::VectorSumDistributes => compare(scale(&plus(&u, &v), &a), plus(&scale(&u, &a), &scale(&v, &a))),
            Law::ScalarProductCompatible => compare(scale(&v, &s_times(&a, &b)), scale(&scale(&v, &b), &a)),
            Law::ScalarOneIdentity => identity_holds(&v, scale(&v, &s_one(&a))),
            _ => unreachable!("{law} is not a vector space law"),
        };
        if let Err(detail) = outcome {
            counterexample = Some(format!("u = {u:?}, v = {v:?}, a = {a:?}, b = {b:?}: {detail}"));
            break;
        }
    }
    LawResult {
        law,
        scope: Scope::Elements,
        samples,
        counterexample,
    }
}

/// Uniform numerator in [-100, 100] over a denominator in [1, 100], reduced.
pub fn rational_sampler() -> Sampler<Rational> {
    Box::new(|rng: &mut ChaCha8Rng| {
        let n: i64 = rng.gen_range(-100..=100);
        let d: i64 = rng.gen_range(1..=100);
        Rational::new(n, d).expect("denominator is positive")
    })
}

/// Uniform integers in [-100, 100].
pub fn integer_sampler() -> Sampler<num_bigint::BigInt> {
    Box::new(|rng: &mut ChaCha8Rng| num_bigint::BigInt::from(rng.gen_range(-100i64..=100)))
}

pub fn vector_sampler(dimension: usize) -> Sampler<VectorN<Rational>> {
    let scalar = rational_sampler();
    Box::new(move |rng: &mut ChaCha8Rng| {
        VectorN::new((0..dimension).map(|_| scalar(rng)).collect()).expect("dimension is positive")
    })
}

pub fn rationals() -> StructureWitness<Rational> {
    StructureWitness::field("rationals", rational_sampler())
}

pub fn integers() -> StructureWitness<num_bigint::BigInt> {
    StructureWitness::commutative_ring("integers", integer_sampler())
}

/// Rational vectors of the given dimension over the rational field.
pub fn rational_vectors(dimension: usize) -> Result<StructureWitness<VectorN<Rational>, Rational>, AlgebraError> {
    if dimension == 0 {
        return Err(AlgebraError::EmptyVector);
    }
    Ok(StructureWitness::vector_space(
        format!("rational vectors of dimension {dimension}"),
        vector_sampler(dimension),
        rationals(),
    )
    .expect("vector space operations are complete"))
}
