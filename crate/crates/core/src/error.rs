//! Error types.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("rational root search space too large")]
    RootSearchTooLarge,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("non-rational literal '{text}' at position {pos}")]
    NonRationalLiteral { text: String, pos: usize },
    #[error("total degree {degree} exceeds the limit of {cap} (at position {pos})")]
    DegreeTooLarge { degree: u64, cap: u32, pos: usize },
}

/// Failures of the blow-up engine and the principalizer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("no generators given")]
    NoGenerators,
    #[error("generator {index} does not vanish at the origin")]
    SupportMissesOrigin { index: usize },
    #[error("all generators are zero")]
    AllZero,
    #[error("center {0} does not lie over the origin")]
    CenterNotOverOrigin(String),
    #[error("a required center is not a rational point: its coordinate on chart {chart} is a root of {minimal_poly}")]
    CenterNotRational { chart: String, minimal_poly: String },
    #[error("principalization did not finish within {0} blow-ups")]
    StepBudgetExceeded(usize),
    #[error("the residual ideal is not yet the unit ideal along the exceptional locus")]
    ResidualNotUnit,
    #[error("unknown divisor {0}")]
    UnknownDivisor(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("vertex {0} is not exceptional")]
    NotExceptional(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error("diagram does not come from a minimal principalization")]
    NotMinimal,
    #[error("{0} is not a candidate pole")]
    NotACandidate(String),
    #[error("{0} is a candidate pole of order two; residue contributions are undefined")]
    OrderTwoCandidate(String),
    #[error("invalid diagram JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenericError {
    #[error("degenerate coefficients: {0}")]
    DegenerateLambda(String),
    #[error("no generic coefficients found after {0} attempts")]
    RetriesExhausted(usize),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameters must satisfy a > b >= 0 (got a = {a}, b = {b})")]
    ParameterOrder { a: u32, b: u32 },
    #[error("{0} is out of range: realizable poles are the rationals in [-1, 0) and -1 - 1/i")]
    OutOfRange(String),
    #[error("engine run for (a, b) = ({a}, {b}) does not have a pole at {target}")]
    NotRealized { a: u32, b: u32, target: String },
    #[error(transparent)]
    Engine(#[from] EngineError),
}
