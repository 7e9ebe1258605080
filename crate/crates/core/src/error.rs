use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Structurally invalid input: an index out of range, a negative
    /// coefficient, a duplicated triple. Distinct from axiom failures, which
    /// are reported by validation instead.
    Malformed(String),
    /// Power iteration did not reach the residual target.
    NonConvergence { iterations: usize, residual: f64 },
    /// A configured search or size bound was exceeded.
    BoundExceeded { what: &'static str, value: usize, bound: usize },
    /// Class multiplication of a candidate grading is not well defined.
    InconsistentGrading(String),
    /// An operation requiring a non-pointed ring received a pointed one.
    PointedInput,
    /// An operation requiring commutative fusion rules received a ring
    /// without them.
    NotCommutative { a: usize, b: usize },
    /// A parameter outside the documented domain (odd `M`, bad twist, ...).
    InvalidParameter(String),
    /// A documented precondition of an operation does not hold.
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Malformed(msg) => write!(f, "malformed input: {msg}"),
            Error::NonConvergence { iterations, residual } => write!(
                f,
                "eigenvalue iteration did not converge after {iterations} steps (residual {residual:e})"
            ),
            Error::BoundExceeded { what, value, bound } => {
                write!(f, "{what} {value} exceeds the configured bound {bound}")
            }
            Error::InconsistentGrading(msg) => write!(f, "inconsistent grading: {msg}"),
            Error::PointedInput => f.write_str("input ring is pointed"),
            Error::NotCommutative { a, b } => {
                write!(f, "fusion rules are not commutative at ({a}, {b})")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
