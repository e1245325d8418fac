use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("unsupported field gf({p}^{m})")]
    UnsupportedField { p: u32, m: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("element code {code} is out of range for {field}")]
    NotInField { code: u32, field: String },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("subfield degree {sub} does not divide extension degree {m}")]
    NotSubfield { sub: u32, m: u32 },
    #[error("element is not in the subfield of degree {0}")]
    NotInSubfield(u32),

    #[error("semigroup needs at least one positive generator")]
    EmptyGenerators,
    #[error("generators have gcd {0}; the semigroup has infinite genus")]
    InfiniteGenus(u64),
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(u64),
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid curve parameter: {0}")]
    InvalidParameter(String),
    #[error("the model has no point set or function basis (semigroup level only)")]
    SemigroupOnly,
    #[error("not Castle data: {0}")]
    NotCastle(String),
    #[error("chain needs n >= 2g (n = {n}, g = {g})")]
    ShortChain { n: usize, g: u64 },
    #[error("evaluated basis has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("no everywhere-nonzero vector in the isometry solution space (dimension {0})")]
    NoIsometry(usize),
    #[error("decoding failure: weight exceeds guarantee ({stage}: {detail})")]
    DecodingFailure { stage: &'static str, detail: String },

    #[error("exhaustive search over {words} codewords exceeds the cap of {cap}")]
    BruteForceCap { words: u128, cap: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}
