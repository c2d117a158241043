//! Error type shared by every module of this crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or analysing a structure.
///
/// Mathematical negatives ("not strongly shellable", "not chordal", …) are
/// *not* errors; operations report them through their return values, usually
/// with a witness.  Errors are reserved for invalid inputs and for explicit
/// size guards on exhaustive procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe would hold {0} labels; at most {1} are supported")]
    UniverseTooLarge(usize, usize),

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("invalid label {0:?}: {1}")]
    InvalidLabel(String, String),

    #[error("label {0:?} is not in the universe")]
    UnknownLabel(String),

    #[error("vertex index {0} is outside the universe of size {1}")]
    VertexOutOfRange(usize, usize),

    #[error("set {0} is not contained in the universe")]
    SetOutsideUniverse(String),

    #[error("empty edges are not allowed here")]
    EmptyEdge,

    #[error("edge sets must form an antichain: {0} is contained in {1}")]
    ComparableEdges(String, String),

    #[error("edge {0} must consist of exactly two distinct vertices")]
    NotTwoElementEdge(String),

    #[error("duplicate edge {0}")]
    DuplicateEdge(String),

    #[error("not a tree: contains the cycle {0}")]
    CycleInTree(String),

    #[error("not a tree: {0} and {1} lie in different connected components")]
    DisconnectedTree(String, String),

    #[error("operation requires at least {0} vertices; got {1}")]
    TooFewVertices(usize, usize),

    #[error("complex is not pure: facets {0} and {1} have different cardinalities")]
    NotPure(String, String),

    #[error("clutter is not uniform: edges {0} and {1} have different cardinalities")]
    NotUniform(String, String),

    #[error("facet distance requires equal cardinalities; got {0} and {1}")]
    UnequalCardinalities(String, String),

    #[error("order must be a permutation of the {0} facet indices")]
    NotAPermutation(usize),

    #[error("cardinality parameter must be at least 1")]
    CardinalityTooSmall,

    #[error("exhaustive oracle refuses an input of size {0}; at most {1} is supported")]
    OracleTooLarge(usize, usize),

    #[error("exhaustive induced-subcomplex check refuses a universe of size {0}; at most {1} supported")]
    MatroidCheckTooLarge(usize, usize),

    #[error("minor-space exploration refuses a universe of size {0}; at most {1} supported")]
    MinorSpaceTooLarge(usize, usize),

    #[error("order search supports at most {0} items; got {1}")]
    SearchTooLarge(usize, usize),

    #[error("multiplicity vector has length {0}, but the universe has {1} vertices")]
    MultiplicityLengthMismatch(usize, usize),

    #[error("multiplicities must be at least 1")]
    MultiplicityTooSmall,

    #[error(
        "layer indices must satisfy max(0, lambda-|Y|) <= i <= j <= min(lambda, |X|); \
         got lambda={lambda}, i={i}, j={j}, |X|={x_size}, |Y|={y_size}"
    )]
    LayerIndices {
        lambda: usize,
        i: usize,
        j: usize,
        x_size: usize,
        y_size: usize,
    },

    #[error("the two vertex sets must be disjoint, but they share {0}")]
    SetsNotDisjoint(String),

    #[error("quotient map is not surjective: nothing maps onto {0:?}")]
    QuotientNotSurjective(String),

    #[error("map assigns {0} images, but the source graph has {1} vertices")]
    QuotientLengthMismatch(usize, usize),

    #[error("graph is not bipartite: odd closed walk through {0}")]
    NotBipartite(String),

    #[error("vertex order is not a perfect elimination order of the graph")]
    NotAnEliminationOrder,

    #[error("the two path endpoints must be distinct")]
    IdenticalPathEndpoints,

    ///  Raised when a construction that is guaranteed to produce a valid
    ///  strong shelling order fails its own re-verification.  Reaching this
    ///  would falsify a theorem the library relies on, so it is a hard error
    ///  rather than a negative result.
    #[error("constructed order failed verification at position pair ({0}, {1}); this contradicts a proven guarantee")]
    ConstructionFailed(usize, usize),

    #[error("no vertex of eccentricity at most 2 exists; this contradicts a proven guarantee for this input class")]
    NoEccentricCenter,

    #[error("the zero ideal has no generator supports to dualize")]
    DualOfZeroIdeal,

    #[error("upward degree sequence must be non-increasing at position {0}")]
    SequenceNotMonotone(usize),

    #[error("secondary sequence must have length {expected} (the first entry of the primary sequence); got {got}")]
    SequenceLengthMismatch { expected: usize, got: usize },

    #[error("secondary sequence entries beyond position {0} must be zero")]
    SequenceTailNotZero(usize),

    #[error("primary upward degree sequence must be non-empty")]
    EmptySequence,

    #[error("graph cannot be decomposed from this vertex: {0}")]
    NotDecomposableFrom(String),
}
