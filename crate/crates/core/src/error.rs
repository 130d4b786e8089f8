//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different coefficient fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("element is not invertible modulo {0}")]
    NonInvertible(String),
    #[error("modulus {0} is not square-free")]
    NotSquareFree(String),
    #[error("modulus must be monic of degree at least 1")]
    BadModulus,
    #[error("constant polynomial where a nonconstant one is required")]
    ConstantInput,
    #[error("polynomial vanishes identically in y")]
    ZeroPolynomialInY,
    #[error("at least two nonconstant generators are required")]
    FewerThanTwoGenerators,
    #[error("degrees {0} and {1} are not coprime")]
    DegreesNotCoprime(usize, usize),
    #[error("zero polynomial input")]
    ZeroInput,
    #[error("root iteration did not converge after {0} iterations")]
    NonConvergence(usize),
    #[error("subalgebra has infinite codimension (degree gcd {0})")]
    InfiniteCodimension(u64),
    #[error("condition vanishes on the whole subalgebra")]
    ConditionVanishesOnB,
    #[error("conditions do not define a subalgebra")]
    NotSubalgebraConditions,
    #[error("conditions are linearly dependent: only {independent} of {given} are independent")]
    DegenerateConditions { given: usize, independent: usize },
    #[error("spectrum is not exactly representable")]
    SpectrumNotExact,
    #[error("no N <= {0} with x^i * pi^N inside the algebra")]
    PowerBoundExceeded(usize),
    #[error("root {0} of the characteristic polynomial is neither a critical point nor paired")]
    UnpairedRoot(String),
    #[error("spectrum has {size} points, above the bound {bound}")]
    BoundViolated { size: usize, bound: usize },
    #[error("subalgebra contains no element of degree two")]
    NoDegreeTwoElement,
    #[error("dimension did not stabilize below degree {0}")]
    NoStabilization(usize),
    #[error("expected an odd integer, got {0}")]
    EvenInput(i64),
    #[error("codimension {0} is outside the classified range")]
    UnsupportedCodimension(usize),
    #[error("spectrum could not be computed exactly")]
    InexactSpectrum,
    #[error("parameters violate a side condition: {0}")]
    ParameterDegeneracy(String),
    #[error("system has infinitely many solutions")]
    InfiniteSolutionSet,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("symbol '{0}' needs a declared number field")]
    UnknownSymbol(char),
    #[error("no matching case: {0}")]
    NoMatchingCase(String),
    #[error("{0}")]
    Invalid(String),
}
