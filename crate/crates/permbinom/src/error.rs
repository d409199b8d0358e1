use core::fmt;

/// Errors shared across the crate.
///
/// `SizeCap` and `Overflow` mark inputs that exceed a resource limit
/// (exhaustive scans, 128-bit arithmetic); everything else is a rejected
/// input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter that must be prime is not.
    NotPrime(u64),
    /// A parameter that must be a prime power is not.
    NotPrimePower(u64),
    /// An operation was asked to run past its resource limit.
    SizeCap(&'static str),
    /// Exact integer arithmetic left the 128-bit range.
    Overflow(&'static str),
    /// A digit expansion does not fit the requested width.
    DigitOverflow,
    /// A supplied modulus polynomial factors over the base field.
    ReducibleModulus,
    /// Inversion, logarithm or a negative power of zero.
    DivisionByZero,
    /// `d` does not divide the multiplicative group order.
    NotSubgroupOrder(u64),
    /// The Frobenius argument is not `p^m` with `m` dividing the degree.
    NotSubpower(u64),
    /// A precondition on a plain parameter failed.
    BadParameter(&'static str),
    /// A textual field or element description does not parse.
    ParseError(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(n) => write!(f, "{n} is not prime"),
            Error::NotPrimePower(n) => write!(f, "{n} is not a prime power"),
            Error::SizeCap(what) => write!(f, "size cap exceeded: {what}"),
            Error::Overflow(what) => write!(f, "128-bit overflow: {what}"),
            Error::DigitOverflow => write!(f, "digit overflow: value does not fit the requested width"),
            Error::ReducibleModulus => write!(f, "modulus polynomial is reducible"),
            Error::DivisionByZero => write!(f, "zero has no inverse, logarithm or negative power"),
            Error::NotSubgroupOrder(d) => write!(f, "{d} does not divide the multiplicative group order"),
            Error::NotSubpower(q) => write!(f, "{q} is not a power of the characteristic dividing the degree"),
            Error::BadParameter(what) => write!(f, "bad parameter: {what}"),
            Error::ParseError(what) => write!(f, "parse error: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
