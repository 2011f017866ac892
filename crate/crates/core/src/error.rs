use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A character outside `{1, 2, 3}` at the given (0-based) position.
    InvalidDigit { ch: char, pos: usize },
    EmptyInput,
    /// Unequal numbers of ones and twos.
    NotAType { ones: usize, twos: usize },
    NotIrreducible,
    BadWidth(usize),
    SizeMismatch { expected: usize, found: usize },
    WidthMismatch { expected: usize, found: usize },
    DimensionMismatch { expected: usize, found: usize },
    NotIncreasing,
    TooSmall { n: u64, k: usize },
    TooLarge { vertices: usize, limit: usize },
    TrivialType,
    Reducible,
    BadRange,
    IndexOut { index: usize, len: usize },
    CoverageGap { expected: usize, found: usize },
    ImageNotVertex { source: usize },
    BudgetExceeded { lower: usize, upper: usize, nodes: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDigit { ch, pos } => {
                write!(f, "invalid mark {ch:?} at position {pos}, expected 1, 2 or 3")
            }
            Error::EmptyInput => f.write_str("empty mark sequence"),
            Error::NotAType { ones, twos } => {
                write!(f, "not a type: {ones} ones but {twos} twos")
            }
            Error::NotIrreducible => f.write_str("type is not irreducible"),
            Error::BadWidth(k) => write!(f, "width {k} out of range"),
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected} elements, found {found}")
            }
            Error::WidthMismatch { expected, found } => {
                write!(f, "width mismatch: expected a {expected}-set, found {found} elements")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected} coordinates, found {found}")
            }
            Error::NotIncreasing => f.write_str("elements are not strictly increasing"),
            Error::TooSmall { n, k } => write!(f, "ground set [{n}] too small for width {k}"),
            Error::TooLarge { vertices, limit } => {
                write!(f, "graph would have {vertices} vertices, limit is {limit}")
            }
            Error::TrivialType => f.write_str("trivial type (all threes) has no type-graph"),
            Error::Reducible => f.write_str("type is reducible"),
            Error::BadRange => f.write_str("argument out of range"),
            Error::IndexOut { index, len } => write!(f, "index {index} out of range 1..={len}"),
            Error::CoverageGap { expected, found } => {
                write!(f, "mapping covers {found} of {expected} vertices")
            }
            Error::ImageNotVertex { source } => {
                write!(f, "image of source vertex {source} is not a target vertex")
            }
            Error::BudgetExceeded { lower, upper, nodes } => {
                write!(f, "search budget exhausted after {nodes} nodes: {lower} <= chi <= {upper}")
            }
        }
    }
}

impl core::error::Error for Error {}
