use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::groebner::category::CategoryError;
use crate::noetherian::NonNoetherianWitness;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidId(String),
    UnknownVertex(String),
    UnknownArrow(String),
    DuplicateVertex(String),
    DuplicateArrow(String),
    DuplicateRay(String),
    /// The operation is undefined in the presence of rays.
    RaysPresent(&'static str),
    /// Decisions are only made at declared (core) vertices.
    RayVertex(String),
    NotComposable {
        expected: String,
        found: String,
    },
    BaseMismatch {
        expected: String,
        found: String,
    },
    PosetMismatch,
    EmptyGenerators,
    EmptyPeriod,
    /// Refused because the base vertex is not left noetherian.
    NotNoetherian(Box<NonNoetherianWitness>),
    NotLeftFinite(String),
    MalformedWitness(&'static str),
    UnrankedArrow(String),
    DuplicateRank(String),
    UnsupportedField(u32),
    ShapeMismatch(&'static str),
    DimensionGuard {
        total: usize,
        limit: usize,
    },
    CyclicWithoutTruncation,
    ZeroTruncation,
    Overflow {
        length: usize,
        truncation: usize,
    },
    TooLarge(&'static str),
    Category(CategoryError),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidId(id) => write!(f, "invalid identifier {id:?}"),
            Error::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Error::UnknownArrow(a) => write!(f, "unknown arrow {a}"),
            Error::DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
            Error::DuplicateArrow(a) => write!(f, "duplicate arrow {a}"),
            Error::DuplicateRay(r) => write!(f, "duplicate ray {r}"),
            Error::RaysPresent(op) => write!(f, "{op} is not supported on quivers with rays"),
            Error::RayVertex(v) => write!(f, "{v} is a ray vertex; choose a declared vertex"),
            Error::NotComposable { expected, found } => {
                write!(f, "arrows do not compose: expected source {expected}, found {found}")
            }
            Error::BaseMismatch { expected, found } => {
                write!(f, "path starts at {found}, expected {expected}")
            }
            Error::PosetMismatch => f.write_str("ideals live in different path posets"),
            Error::EmptyGenerators => f.write_str("an ideal needs at least one generator"),
            Error::EmptyPeriod => f.write_str("the period of a sequence must be non-empty"),
            Error::NotNoetherian(w) => {
                write!(f, "vertex {} is not left noetherian", w.base_name())
            }
            Error::NotLeftFinite(v) => {
                write!(f, "infinitely many paths start at {v}; the free representation is infinite dimensional")
            }
            Error::MalformedWitness(why) => write!(f, "malformed witness: {why}"),
            Error::UnrankedArrow(a) => write!(f, "arrow {a} has no rank in the order"),
            Error::DuplicateRank(a) => write!(f, "arrow {a} is ranked twice"),
            Error::UnsupportedField(p) => write!(f, "unsupported field size {p} (use 2, 3 or 5)"),
            Error::ShapeMismatch(what) => write!(f, "shape mismatch: {what}"),
            Error::DimensionGuard { total, limit } => {
                write!(f, "total dimension {total} exceeds the enumeration limit {limit}")
            }
            Error::CyclicWithoutTruncation => {
                f.write_str("the quiver has an oriented cycle; a truncation length is required")
            }
            Error::ZeroTruncation => f.write_str("truncation length must be at least 1"),
            Error::Overflow { length, truncation } => {
                write!(f, "product of length {length} exceeds truncation {truncation}")
            }
            Error::TooLarge(what) => write!(f, "too large: {what}"),
            Error::Category(e) => write!(f, "{e}"),
        }
    }
}

impl From<CategoryError> for Error {
    fn from(e: CategoryError) -> Self {
        Error::Category(e)
    }
}
