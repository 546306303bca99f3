use core::fmt;

/// Unified error type for every fallible operation in the crate.
///
/// Variants carrying a `&'static str` name the violated constraint so callers
/// (and CLI users) see which precondition failed, not just that one did.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands live over different coefficient fields.
    FieldMismatch,
    /// Constant term is not a unit, so no multiplicative inverse exists.
    NotInvertible,
    /// The operation is undefined over the series' coefficient field.
    UnsupportedField,
    /// The constant term violates the operation's requirement (e.g. `exp`
    /// needs constant term 0, `log` needs 1, bundle classes need 1).
    BadConstantTerm,
    /// A substitution image is not homogeneous of the replaced generator's
    /// weight.
    WeightMismatch,
    /// Matrix or operand shapes are inconsistent (non-square determinant,
    /// mixed truncation orders, ...).
    ShapeError,
    /// A coefficient that must be an integer is not.
    NonIntegralCoefficient,
    /// A rank is missing, non-integral, or out of the representable range.
    BadRank,
    /// An argument lies outside the mathematical domain of the function.
    Domain(&'static str),
    /// The requested enumeration exceeds the configured size cap.
    TooLarge,
    /// Internal consistency check failed; indicates a bug, not bad input.
    Internal(&'static str),
    /// A growth vector violates the named validity constraint.
    InvalidGrowthVector(&'static str),
    /// Structured input data violates the named precondition.
    Precondition(&'static str),
    /// The parameters are valid but outside the scope of this routine.
    UnsupportedParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "coefficient fields do not match"),
            Error::NotInvertible => write!(f, "constant term is not invertible"),
            Error::UnsupportedField => write!(f, "operation not defined over this field"),
            Error::BadConstantTerm => write!(f, "constant term violates operation requirement"),
            Error::WeightMismatch => write!(f, "substitution image has the wrong weight"),
            Error::ShapeError => write!(f, "inconsistent operand shape"),
            Error::NonIntegralCoefficient => write!(f, "coefficient is not an integer"),
            Error::BadRank => write!(f, "rank is missing, non-integral or out of range"),
            Error::Domain(what) => write!(f, "argument outside domain: {what}"),
            Error::TooLarge => write!(f, "enumeration exceeds the configured size cap"),
            Error::Internal(what) => write!(f, "internal invariant violated: {what}"),
            Error::InvalidGrowthVector(what) => write!(f, "invalid growth vector: {what}"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::UnsupportedParameter(what) => write!(f, "unsupported parameter: {what}"),
        }
    }
}

impl core::error::Error for Error {}
