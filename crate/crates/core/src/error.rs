use thiserror::Error;

/// Errors surfaced by the library.
///
/// Everything here is a caller-visible contract violation or a domain
/// restriction; internal invariant breaks panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("leading coefficient is not a unit; series is not invertible")]
    NonUnitLeadingCoeff,

    #[error("infinite q-Pochhammer product does not terminate: factor has no positive q-power")]
    NonTerminatingProduct,

    #[error("coefficient index {n} exceeds series truncation {trunc}")]
    TruncationExceeded { n: usize, trunc: usize },

    #[error("generating function assembly violated an invariant: {0}")]
    GenFunInvariant(String),

    #[error("evaluation point 0 is outside the domain of a Laurent polynomial with negative exponents")]
    LaurentAtZero,

    #[error("dilogarithm argument {0} is outside the real domain (x <= 1)")]
    DilogDomain(f64),

    #[error("no self-conjugate partitions of {n}; distribution is empty")]
    EmptySampleSpace { n: usize },

    #[error("asymptotic variance is not positive at n = {n} (threshold n >= {n_min})")]
    VarianceNotPositive { n: usize, n_min: usize },

    #[error("distribution at n = {n} is degenerate (zero variance)")]
    DegenerateDistribution { n: usize },

    #[error("quadrature evaluation point has modulus >= 1; product does not converge")]
    QuadratureDivergence,

    #[error("quadrature sample count {m} is too small for n = {n} (need at least {min})")]
    TooFewSamples { m: usize, n: usize, min: usize },

    #[error("hook length product does not divide {n}! exactly; hook computation is inconsistent")]
    InexactDivision { n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
