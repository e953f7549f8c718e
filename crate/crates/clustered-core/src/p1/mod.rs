//! Exact graded linear algebra on the projective line: binary forms with
//! rational coefficients, kernel splitting types of maps O(1)^(n+1) -> O(d),
//! and the gluing of two hypersurfaces along a common line.

mod form;
mod linalg;
mod multipoly;
mod splitting;

pub use form::BinaryForm;
pub use multipoly::{glue_along_line, CoordinateMap, Gluing, MultiPolynomial};
pub use splitting::{
    build_osculating_map, kernel_splitting_type, section_kernel_dimension, GradedMap,
    SplittingType,
};

use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum P1Error {
    /// A nonzero form was required.
    ZeroForm,
    /// Every entry of the map is zero (or the entry list is empty).
    ZeroMap,
    /// A form or polynomial does not have the degree this position demands.
    DegreeMismatch { expected: u32, found: u32 },
    /// The marked binary form factors through fewer than two distinct points.
    NotEnoughDistinctRoots { distinct: u32 },
    /// Balancedness is undefined for a rank-0 splitting type.
    EmptyType,
    /// An exponent tuple does not have one entry per variable.
    ExponentArity { expected: usize, found: usize },
    /// A term's exponents do not sum to the declared degree.
    NotHomogeneous,
    /// A coordinate map must embed distinct source variables into range.
    BadCoordinateMap,
    /// A hypersurface being glued restricts to zero on the chosen line.
    ZeroLineRestriction,
    /// The two line restrictions are not scalar multiples of each other.
    NonProportionalRestrictions,
}

impl fmt::Display for P1Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Error::ZeroForm => write!(f, "form must be nonzero"),
            P1Error::ZeroMap => write!(f, "map must have a nonzero entry"),
            P1Error::DegreeMismatch { expected, found } => {
                write!(f, "expected degree {expected}, found {found}")
            }
            P1Error::NotEnoughDistinctRoots { distinct } => {
                write!(f, "form has {distinct} distinct roots; need at least 2")
            }
            P1Error::EmptyType => write!(f, "splitting type is empty"),
            P1Error::ExponentArity { expected, found } => {
                write!(f, "expected {expected} exponents, found {found}")
            }
            P1Error::NotHomogeneous => write!(f, "terms must all have the declared degree"),
            P1Error::BadCoordinateMap => {
                write!(f, "coordinate images must be distinct and in range")
            }
            P1Error::ZeroLineRestriction => {
                write!(f, "restriction to the common line is zero")
            }
            P1Error::NonProportionalRestrictions => {
                write!(f, "line restrictions are not proportional")
            }
        }
    }
}

impl core::error::Error for P1Error {}
