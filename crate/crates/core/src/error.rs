use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse permutation {input:?}: {reason}")]
    PermutationParse { input: String, reason: String },

    #[error("degree mismatch: S_{left} vs S_{right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("polynomial rings differ: {left} vs {right} variables")]
    RingMismatch { left: usize, right: usize },

    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,

    #[error("monomial {exponents:?} lies outside the staircase for n = {n}")]
    OutsideStaircase { n: usize, exponents: Vec<u32> },

    #[error("level {ell} out of range for n = {n} (allowed {min}..={max})")]
    LevelOutOfRange { n: usize, ell: usize, min: usize, max: usize },

    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("two descent paths disagree on the Schubert polynomial of {perm}")]
    PathDisagreement { perm: String },

    #[error("polynomial is not in the span of the Schubert basis: {0}")]
    NotInSchubertSpan(String),

    #[error("irreducible block needs 0 <= k <= ell <= C(n,2) - ell, got n = {n}, ell = {ell}, k = {k}")]
    BlockIndex { n: usize, ell: usize, k: usize },

    #[error("n = {n} exceeds the supported maximum {max} for {what}")]
    TooLarge { n: usize, max: usize, what: &'static str },
}
