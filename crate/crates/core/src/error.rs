//! Crate-wide error type.

use std::fmt;

/// Errors raised by contract violations of the library operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A modulus that was required to be prime is not.
    NotPrime(u64),
    /// (0, 0) is not a point of the projective line.
    ZeroProjectivePoint,
    /// Operation requires a nonzero polynomial.
    ZeroPolynomial,
    /// Operation requires degree at least `min`.
    DegreeTooSmall { min: usize, got: usize },
    /// Operation requires an exact degree.
    RequiresDegree { expected: usize, got: usize },
    /// Two prime-field operands carry different moduli.
    ModulusMismatch(u64, u64),
    /// Operation requires a squarefree polynomial.
    NotSquarefree(String),
    /// The defining polynomial is not separable over Q(T) (zero discriminant).
    NotSeparableOverQt,
    /// A specialised polynomial failed the separability precondition.
    SeparabilityFailure(String),
    /// Every residue class modulo p is excluded by the branch data.
    ResidueSaturation(u64),
    /// t0 evaluates the discriminant to zero, so it may be a branch point.
    PossibleBranchPoint(String),
    /// No catalog entry with the given name.
    UnknownEntry(String),
    /// Entry has no bivariate polynomial, so the family pipeline does not apply.
    NoBivariatePolynomial(String),
    /// No group profile of the observed permutation degree.
    NoProfileOfDegree(u32),
    /// Statistical matching was asked for fewer usable primes than the floor.
    SampleTooSmall { got: u64, min: u64 },
    /// Unknown profile generator name.
    UnknownProfileSpec(String),
    /// Text that failed to parse, with a reason.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ZeroProjectivePoint => write!(f, "(0, 0) does not define a projective point"),
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::DegreeTooSmall { min, got } => {
                write!(f, "degree {got} below required minimum {min}")
            }
            Error::RequiresDegree { expected, got } => {
                write!(f, "operation requires degree {expected}, got {got}")
            }
            Error::ModulusMismatch(p, q) => write!(f, "modulus mismatch: {p} vs {q}"),
            Error::NotSquarefree(what) => write!(f, "not squarefree: {what}"),
            Error::NotSeparableOverQt => write!(f, "P not separable over Q(T)"),
            Error::SeparabilityFailure(what) => {
                write!(f, "separability precondition of the derivative test fails: {what}")
            }
            Error::ResidueSaturation(p) => write!(
                f,
                "all residues excluded mod {p} — the hypothesis p >= r+1 may fail"
            ),
            Error::PossibleBranchPoint(t0) => write!(f, "t0 = {t0} is (possibly) a branch point"),
            Error::UnknownEntry(name) => write!(f, "unknown catalog entry '{name}'"),
            Error::NoBivariatePolynomial(name) => {
                write!(f, "entry '{name}' has no bivariate polynomial")
            }
            Error::NoProfileOfDegree(d) => write!(f, "no group profile of degree {d}"),
            Error::SampleTooSmall { got, min } => {
                write!(f, "sample of {got} usable primes below configured minimum {min}")
            }
            Error::UnknownProfileSpec(s) => write!(f, "unknown profile generator '{s}'"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
