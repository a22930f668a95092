use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::color::Color;

/// Every failure the library can report.
///
/// Variants carry enough context to point at the offending edge, vertex or
/// color. [`Error::code`] gives a stable machine-readable name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Dimension outside `1..=MAX_DIMENSION`.
    BadDimension(usize),
    /// An edge references a vertex id outside the gem.
    VertexOutOfRange { edge: usize, vertex: usize, vertex_count: usize },
    /// An edge joins a vertex to itself.
    LoopEdge { edge: usize, vertex: usize },
    /// Two edges with identical endpoints and color.
    DuplicateEdge { edge: usize },
    /// A vertex carries two edges of one color.
    ColorClash { edge: usize, vertex: usize, color: Color },
    /// A vertex lacks an edge of a color below the dimension.
    MissingColor { vertex: usize, color: Color },
    /// A color exceeds the dimension.
    BadColor { color: Color, dimension: usize },
    /// Two vertices share a label.
    DuplicateLabel { vertex: usize },
    /// Operation requires a closed gem.
    NotClosed,
    /// Operation requires boundary vertices.
    NoBoundary,
    /// An odd closed walk exists.
    NotBipartite { vertex: usize },
    /// Operation requires a connected gem.
    Disconnected,
    /// A vertex id outside the gem.
    UnknownVertex(usize),
    /// Vertex count must be even.
    OddVertexCount(usize),
    /// Dipole specification does not hold against the gem.
    InvalidDipole(String),
    /// Bad color set for a dipole insertion.
    BadColors(String),
    /// Glue move specification does not hold against the gem.
    InvalidGlueSpec(String),
    /// A construction or map builder parameter is out of range.
    BadParam(String),
    /// Not a permutation of the color set.
    BadPermutation(String),
    /// A vertex map violates the edge contract.
    InvalidMap { violations: usize },
    /// The signed preimage counts disagree between target vertices.
    InconsistentDegree { per_target: Vec<(usize, i64)> },
    /// Orientation reversal is only defined on the standard targets.
    UnsupportedTarget,
    /// Gems that should coincide do not.
    Mismatch(String),
}

impl Error {
    /// Stable identifier for the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::BadDimension(_) => "BadDimension",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::LoopEdge { .. } => "LoopEdge",
            Error::DuplicateEdge { .. } => "DuplicateEdge",
            Error::ColorClash { .. } => "ColorClash",
            Error::MissingColor { .. } => "MissingColor",
            Error::BadColor { .. } => "BadColor",
            Error::DuplicateLabel { .. } => "DuplicateLabel",
            Error::NotClosed => "NotClosed",
            Error::NoBoundary => "NoBoundary",
            Error::NotBipartite { .. } => "NotBipartite",
            Error::Disconnected => "Disconnected",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::OddVertexCount(_) => "OddVertexCount",
            Error::InvalidDipole(_) => "InvalidDipole",
            Error::BadColors(_) => "BadColors",
            Error::InvalidGlueSpec(_) => "InvalidGlueSpec",
            Error::BadParam(_) => "BadParam",
            Error::BadPermutation(_) => "BadPermutation",
            Error::InvalidMap { .. } => "InvalidMap",
            Error::InconsistentDegree { .. } => "InconsistentDegree",
            Error::UnsupportedTarget => "UnsupportedTarget",
            Error::Mismatch(_) => "Mismatch",
        }
    }

    /// Index of the offending edge, when the error is about one.
    pub fn edge_index(&self) -> Option<usize> {
        match *self {
            Error::VertexOutOfRange { edge, .. }
            | Error::LoopEdge { edge, .. }
            | Error::DuplicateEdge { edge }
            | Error::ColorClash { edge, .. } => Some(edge),
            _ => None,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadDimension(n) => write!(f, "dimension {n} is not supported"),
            Error::VertexOutOfRange { edge, vertex, vertex_count } => {
                write!(f, "edge {edge} references vertex {vertex}, but the gem has {vertex_count} vertices")
            }
            Error::LoopEdge { edge, vertex } => write!(f, "edge {edge} is a loop at vertex {vertex}"),
            Error::DuplicateEdge { edge } => write!(f, "edge {edge} duplicates an earlier edge"),
            Error::ColorClash { edge, vertex, color } => {
                write!(f, "edge {edge} gives vertex {vertex} a second edge of color {color}")
            }
            Error::MissingColor { vertex, color } => {
                write!(f, "vertex {vertex} has no edge of color {color}")
            }
            Error::BadColor { color, dimension } => {
                write!(f, "color {color} exceeds dimension {dimension}")
            }
            Error::DuplicateLabel { vertex } => write!(f, "label of vertex {vertex} is not unique"),
            Error::NotClosed => f.write_str("gem has boundary vertices"),
            Error::NoBoundary => f.write_str("gem is closed"),
            Error::NotBipartite { vertex } => {
                write!(f, "odd cycle through vertex {vertex}; gem is not bipartite")
            }
            Error::Disconnected => f.write_str("gem is disconnected"),
            Error::UnknownVertex(v) => write!(f, "vertex {v} does not exist"),
            Error::OddVertexCount(v) => write!(f, "vertex count {v} is odd"),
            Error::InvalidDipole(why) => write!(f, "invalid dipole: {why}"),
            Error::BadColors(why) => write!(f, "bad dipole colors: {why}"),
            Error::InvalidGlueSpec(why) => write!(f, "invalid glue move: {why}"),
            Error::BadParam(why) => write!(f, "bad parameter: {why}"),
            Error::BadPermutation(why) => write!(f, "bad cyclic permutation: {why}"),
            Error::InvalidMap { violations } => {
                write!(f, "vertex map violates the edge contract on {violations} edges")
            }
            Error::InconsistentDegree { per_target } => {
                write!(f, "signed preimage counts disagree: {per_target:?}")
            }
            Error::UnsupportedTarget => {
                f.write_str("orientation reversal needs a standard sphere or product crystallization")
            }
            Error::Mismatch(why) => write!(f, "mismatch: {why}"),
        }
    }
}

impl core::error::Error for Error {}
