use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    ReducibleModulus,
    InvalidModulus(String),
    NotASubfield { sub: u32, sup: u32 },
    IncompatibleContexts,
    FieldTooLarge { size: u64, cap: u64 },
    ZeroPolynomial,
    NotIrreduciblePlace,
    PoleAtPlace,
    ContextMismatch,
    RootsNotInBaseField { found: usize, expected: usize },
    DependentGenerators,
    NotASubgroup,
    ZeroScale,
    NotAdditive,
    NotIrreducible,
    RamifiedPlaceForSplitTest,
    DependentSubextensions,
    SingularSystem,
    NotAFixedField(String),
    DegreeOverflow { degree: usize, bound: usize },
    LengthCapExceeded { m: usize, cap: usize },
    LengthMismatch,
    RingMismatch,
    SingularWittSystem,
    IdentityFailure(String),
    NotReduced(String),
    VerificationFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ReducibleModulus => write!(f, "modulus is reducible over the prime field"),
            Error::InvalidModulus(why) => write!(f, "invalid modulus: {why}"),
            Error::NotASubfield { sub, sup } => {
                write!(f, "degree {sub} does not divide degree {sup}; not a subfield")
            }
            Error::IncompatibleContexts => write!(f, "elements live in incompatible fields"),
            Error::FieldTooLarge { size, cap } => {
                write!(f, "field of size {size} exceeds the cap {cap}")
            }
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::NotIrreduciblePlace => {
                write!(f, "place polynomial is not monic irreducible")
            }
            Error::PoleAtPlace => write!(f, "rational function has a pole at the place"),
            Error::ContextMismatch => write!(f, "operands belong to different algebras"),
            Error::RootsNotInBaseField { found, expected } => write!(
                f,
                "only {found} of the {expected} roots of the additive polynomial lie in the base field"
            ),
            Error::DependentGenerators => write!(f, "generators are F_p-linearly dependent"),
            Error::NotASubgroup => write!(f, "elements do not form an additive subgroup"),
            Error::ZeroScale => write!(f, "scale must be nonzero"),
            Error::NotAdditive => write!(f, "polynomial is not additive (monic and separable)"),
            Error::NotIrreducible => write!(f, "f(X) - u is not irreducible over k"),
            Error::RamifiedPlaceForSplitTest => {
                write!(f, "place is ramified; no split/inert verdict exists")
            }
            Error::DependentSubextensions => {
                write!(f, "right-hand sides are dependent modulo the Artin-Schreier image")
            }
            Error::SingularSystem => write!(f, "Moore system is singular"),
            Error::NotAFixedField(why) => write!(f, "not a fixed field generator: {why}"),
            Error::DegreeOverflow { degree, bound } => {
                write!(f, "degree {degree} exceeds the algebra bound {bound}")
            }
            Error::LengthCapExceeded { m, cap } => {
                write!(f, "Witt length {m} exceeds the cap {cap}")
            }
            Error::LengthMismatch => write!(f, "Witt vectors of different lengths"),
            Error::RingMismatch => write!(f, "Witt vectors over different coefficient rings"),
            Error::SingularWittSystem => write!(f, "Witt-Moore system has no unit pivot"),
            Error::IdentityFailure(why) => write!(f, "identity check failed: {why}"),
            Error::NotReduced(why) => write!(f, "input is not in reduced form: {why}"),
            Error::VerificationFailed(why) => write!(f, "verification failed: {why}"),
        }
    }
}

impl core::error::Error for Error {}
