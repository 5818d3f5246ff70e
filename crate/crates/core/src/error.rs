use alloc::string::String;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("coefficient list has {found} entries, expected k + 1 = {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("outermost superdiagonal coefficient a_s is zero")]
    ZeroLeadingCoefficient,
    #[error("outermost subdiagonal coefficient a_(s+r) is zero")]
    ZeroTrailingCoefficient,
    #[error("companion matrix requires at least one superdiagonal (s >= 1)")]
    NoSuperdiagonal,
    #[error("modulus {p} divides the leading coefficient a_s")]
    ModulusDividesLeadingCoefficient { p: u64 },
    #[error("modulus {p} divides a coefficient denominator")]
    ModulusDividesDenominator { p: u64 },
    #[error("{p} is not an odd prime")]
    InvalidModulus { p: u64 },
    #[error("value is not finite")]
    NonFinite,
    #[error("matrix size n must be at least 1")]
    EmptyMatrix,
    #[error("n = {n} is below the bandwidth k = {k}")]
    BelowBandwidth { n: u64, k: usize },
    #[error("expected a tridiagonal band (s = r = 1), got s = {s}, r = {r}")]
    NotTridiagonal { s: usize, r: usize },
    #[error("root multiplicities sum to {found}, expected {expected}")]
    MultiplicitySum { expected: u32, found: u32 },
    #[error("roots must be pairwise distinct with positive multiplicity")]
    InvalidRoots,
    #[error("closed form requires n >= {min}")]
    ClosedFormRange { min: u64 },
    #[error("closed forms with root denominators require exact arithmetic")]
    InexactField,
    #[error("division by a value that is zero in the active field")]
    NotInvertible,
    #[error("matrix shape mismatch")]
    Shape,
    #[error("could not parse scalar {0:?}")]
    ParseScalar(String),
}

pub type Result<T> = core::result::Result<T, Error>;
