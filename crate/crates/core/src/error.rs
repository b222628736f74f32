use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field spec `{0}`")]
    InvalidFieldSpec(String),
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("field of order {0} needs an explicit modulus")]
    MissingModulus(u64),
    #[error("modulus `{0}` is reducible over the prime field")]
    ReducibleModulus(String),
    #[error("modulus must be monic")]
    NonMonicModulus,
    #[error("modulus has degree {found}, expected {expected}")]
    ModulusDegreeMismatch { expected: u32, found: u32 },
    #[error("field too large for exhaustive arithmetic tables ({0} elements)")]
    FieldTooLarge(u64),

    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("division by zero")]
    DivisionByZero,
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error("gamma must be nonzero")]
    ZeroGamma,
    #[error("beta must be nonzero")]
    ZeroBeta,
    #[error("operation requires positive characteristic")]
    CharacteristicZero,

    #[error("constant inner function hits a pole of the outer function")]
    ConstantPoleCollision,
    #[error("zero function")]
    ZeroFunction,
    #[error("map is not of degree one")]
    NotDegreeOne,
    #[error("identity map fixes every point")]
    IdentityMap,
    #[error("no fixed point in K ∪ {{∞}}; fixed points lie in a quadratic extension")]
    NoFixedPointInField,
    #[error("function is not invariant under x -> x+1")]
    NotInvariant,
    #[error("f(alpha x) / f(x) is not constant")]
    NotScalingRelated,
    #[error("f∘g ≠ h∘f")]
    NotSemiconjugate,
    #[error("f must be nonconstant")]
    ConstantFunction,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operation needs a finite field")]
    InfiniteField,
    #[error("search space of {needed} candidates exceeds budget {budget}")]
    BudgetExceeded { needed: String, budget: u64 },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("division by the zero function")]
    DivisionByZeroFunction,
    #[error("exponent at position {pos} is not an integer literal")]
    NonIntegerExponent { pos: usize },
    #[error("expected a constant, found a nonconstant expression")]
    NotConstant,
}

pub type Result<T> = std::result::Result<T, Error>;
