use std::fmt;

/// Every fallible operation in this crate reports one of these.
///
/// The variants are deliberately flat: each one corresponds to a distinct
/// machine-readable kind (see [`Error::kind`]) that front ends can match on
/// without parsing messages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input or intermediate value fell outside the supported range.
    /// Arithmetic in this crate is checked: overflow is reported, never wrapped.
    RangeExceeded { what: String },
    /// An operation that needs an odd prime modulus got something else.
    NotAnOddPrime { value: i64 },
    /// Two ideals of Z/nZ with different n were combined.
    ModulusMismatch { left: i64, right: i64 },
    /// A sequence of ideals is not ascending under inclusion.
    NotAChain { index: usize },
    /// A quadratic field parameter d must be squarefree.
    NotSquarefree { value: i64 },
    /// d = 0 or d = 1 does not define a quadratic field.
    InvalidD { value: i64 },
    /// Elements or ideals of two different quadratic rings were combined.
    RingMismatch { left: i64, right: i64 },
    /// The zero ideal is outside the representable range of the ideal form used here.
    ZeroIdeal,
    /// A rational prime was expected.
    NotPrime { value: i64 },
    /// The input relation is not a partial order (antisymmetry failed).
    NotAPartialOrder { witness: (usize, usize) },
    /// The input order has a pair with no meet or no join.
    NotALattice { pair: (usize, usize), missing: &'static str },
    /// Two radical-chain elements over different bases were compared.
    BaseMismatch { left: i64, right: i64 },
    /// A chain fed to stationarity detection went down (or sideways off-chain) at this index.
    NotAscending { index: usize },
    /// The prime list for a power-set isomorphism must consist of distinct primes.
    NotDistinctPrimes { value: i64 },
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RangeExceeded { .. } => "RangeExceeded",
            Error::NotAnOddPrime { .. } => "NotAnOddPrime",
            Error::ModulusMismatch { .. } => "ModulusMismatch",
            Error::NotAChain { .. } => "NotAChain",
            Error::NotSquarefree { .. } => "NotSquarefree",
            Error::InvalidD { .. } => "InvalidD",
            Error::RingMismatch { .. } => "RingMismatch",
            Error::ZeroIdeal => "ZeroIdeal",
            Error::NotPrime { .. } => "NotPrime",
            Error::NotAPartialOrder { .. } => "NotAPartialOrder",
            Error::NotALattice { .. } => "NotALattice",
            Error::BaseMismatch { .. } => "BaseMismatch",
            Error::NotAscending { .. } => "NotAscending",
            Error::NotDistinctPrimes { .. } => "NotDistinctPrimes",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RangeExceeded { what } => write!(f, "range exceeded: {what}"),
            Error::NotAnOddPrime { value } => write!(f, "{value} is not an odd prime"),
            Error::ModulusMismatch { left, right } => {
                write!(f, "ideals live in different rings: Z/{left}Z vs Z/{right}Z")
            }
            Error::NotAChain { index } => {
                write!(f, "not an ascending chain: entry {index} is not contained in entry {}", index + 1)
            }
            Error::NotSquarefree { value } => write!(f, "{value} is not squarefree"),
            Error::InvalidD { value } => {
                write!(f, "d = {value} does not define a quadratic field (need squarefree d, d != 0, 1)")
            }
            Error::RingMismatch { left, right } => {
                write!(f, "operands live in different quadratic rings: d = {left} vs d = {right}")
            }
            Error::ZeroIdeal => write!(f, "the zero ideal has no finite-index normal form"),
            Error::NotPrime { value } => write!(f, "{value} is not a rational prime"),
            Error::NotAPartialOrder { witness: (i, j) } => {
                write!(f, "not a partial order: elements {i} and {j} are related both ways but distinct")
            }
            Error::NotALattice { pair: (i, j), missing } => {
                write!(f, "not a lattice: elements {i} and {j} have no {missing}")
            }
            Error::BaseMismatch { left, right } => {
                write!(f, "radical chain elements have different bases: {left} vs {right}")
            }
            Error::NotAscending { index } => {
                write!(f, "sequence is not ascending at index {index}")
            }
            Error::NotDistinctPrimes { value } => {
                write!(f, "prime list must consist of distinct primes; offending entry {value}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
