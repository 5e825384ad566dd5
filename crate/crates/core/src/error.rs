use core::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The letters do not form a Cayley permutation (image is not {1..k}).
    NotCayley,
    /// The letters are not weakly increasing.
    NotWeaklyIncreasing,
    /// An operation that needs at least one letter got an empty word.
    EmptyWord,
    /// The bottom row is not a permutation.
    NotPermutation,
    /// Des(top) is not contained in Des(bottom).
    DescentCondition,
    /// The biword is not a binary Burge word.
    NotBinaryBurge,
    /// A declared codomain bound is smaller than the maximum letter.
    BoundTooSmall { bound: u32, max: u32 },
    /// A matrix violates its row/column constraints.
    InvalidMatrix,
    /// Omega biwords have no matrix form.
    NoMatrixForm,
    /// An index lies outside the ambient range.
    IndexOutOfRange { index: usize, n: usize },
    /// Mismatched lengths in a biword or point list.
    LengthMismatch,
    /// Polynomial degree exceeds what the operation allows.
    DegreeOverflow,
    /// The polynomial has no expansion in the requested gamma basis.
    NotGammaExpressible,
    /// The gamma linear system is inconsistent.
    InconsistentSystem,
    /// The gamma linear system has more than one solution.
    NonUniqueSolution,
    /// Star/bar counts do not match the expected (n, m - a - 1).
    StarsBarsMismatch,
    /// Too few sample points for the requested degree.
    InsufficientPoints,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotCayley => write!(f, "not a Cayley permutation"),
            Error::NotWeaklyIncreasing => write!(f, "letters are not weakly increasing"),
            Error::EmptyWord => write!(f, "empty word not allowed here"),
            Error::NotPermutation => write!(f, "not a permutation"),
            Error::DescentCondition => {
                write!(f, "descent set of top row not contained in bottom row's")
            }
            Error::NotBinaryBurge => write!(f, "not a binary Burge word"),
            Error::BoundTooSmall { bound, max } => {
                write!(f, "codomain bound {bound} smaller than maximum letter {max}")
            }
            Error::InvalidMatrix => write!(f, "matrix violates row/column constraints"),
            Error::NoMatrixForm => write!(f, "omega biwords have no matrix form"),
            Error::IndexOutOfRange { index, n } => {
                write!(f, "index {index} out of range for ambient length {n}")
            }
            Error::LengthMismatch => write!(f, "mismatched lengths"),
            Error::DegreeOverflow => write!(f, "polynomial degree too large for operation"),
            Error::NotGammaExpressible => write!(f, "no expansion in the gamma basis"),
            Error::InconsistentSystem => write!(f, "gamma linear system is inconsistent"),
            Error::NonUniqueSolution => write!(f, "gamma linear system has multiple solutions"),
            Error::StarsBarsMismatch => write!(f, "star/bar counts do not match"),
            Error::InsufficientPoints => write!(f, "too few sample points"),
        }
    }
}
