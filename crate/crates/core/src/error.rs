use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree n must be positive")]
    InvalidDegree,
    #[error("l = {ell} is too small (need l >= 3)")]
    EllTooSmall { ell: u64 },
    #[error("q = {q} is not congruent to -1 mod {ell}")]
    CongruenceViolation { q: u64, ell: u64 },
    #[error("field size overflows 64 bits")]
    Overflow,

    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("valuation of zero is undefined")]
    ZeroArgument,

    #[error("factor product {product} does not equal l = {ell}")]
    FactorProductMismatch { product: u64, ell: u64 },
    #[error("chain factor {0} is smaller than 2")]
    InvalidFactor(u64),
    #[error("u must be nonzero")]
    ZeroU,
    #[error("l = {0} must be even")]
    OddEll(u64),

    #[error("element does not have norm one")]
    NormNotOne,
    #[error("zero input")]
    ZeroInput,
    #[error("(A, B) = (0, 0)")]
    ZeroPair,
    #[error("X^l - a is reducible: a is a power in F_q2(x)")]
    NotIrreducible,
    #[error("a lies in F_q(x); the construction needs a outside the base field")]
    Degenerate,
    #[error("a * sigma(a) differs from u^l")]
    InconsistentNorm,
    #[error("u must be 1 for odd l")]
    UnsupportedU,
    #[error("no eta in U_(q+1) yields a generator")]
    SearchExhausted,
    #[error("extensions are over different towers or degrees")]
    TowerMismatch,

    #[error("ramified place {place} has odd degree {degree}")]
    EvenDegreeViolation { place: String, degree: usize },
    #[error("ramification index {e} does not divide l = {ell} at {place}")]
    IndexDivisibilityViolation { place: String, e: u64, ell: u64 },

    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
}

impl Error {
    /// Stable variant name, used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::InvalidDegree => "InvalidDegree",
            Error::EllTooSmall { .. } => "EllTooSmall",
            Error::CongruenceViolation { .. } => "CongruenceViolation",
            Error::Overflow => "Overflow",
            Error::DivisionByZeroPoly => "DivisionByZeroPoly",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::ZeroArgument => "ZeroArgument",
            Error::FactorProductMismatch { .. } => "FactorProductMismatch",
            Error::InvalidFactor(_) => "InvalidFactor",
            Error::ZeroU => "ZeroU",
            Error::OddEll(_) => "OddEll",
            Error::NormNotOne => "NormNotOne",
            Error::ZeroInput => "ZeroInput",
            Error::ZeroPair => "ZeroPair",
            Error::NotIrreducible => "NotIrreducible",
            Error::Degenerate => "Degenerate",
            Error::InconsistentNorm => "InconsistentNorm",
            Error::UnsupportedU => "UnsupportedU",
            Error::SearchExhausted => "SearchExhausted",
            Error::TowerMismatch => "TowerMismatch",
            Error::EvenDegreeViolation { .. } => "EvenDegreeViolation",
            Error::IndexDivisibilityViolation { .. } => "IndexDivisibilityViolation",
            Error::Parse(_) => "Parse",
            Error::InvalidSpec(_) => "InvalidSpec",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
