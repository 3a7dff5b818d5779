use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point must have at least one coordinate")]
    EmptyPoint,
    #[error("non-finite coordinate {value}")]
    NonFinite { value: f64 },
    #[error("weight {0} is outside the unit interval")]
    InvalidWeight(f64),
    #[error("simplex is degenerate (|volume| = {volume:e})")]
    DegenerateSimplex { volume: f64 },
    #[error("expected {expected} vertices for a simplex, found {found}")]
    SimplexArity { expected: usize, found: usize },

    #[error("too few vertices: need at least {needed}, found {found}")]
    TooFewVertices { needed: usize, found: usize },
    #[error("polytope is not convex at vertex {vertex}")]
    NotConvex { vertex: usize },
    #[error("degenerate input at vertex {vertex} (repeated or collinear)")]
    Degenerate { vertex: usize },
    #[error("vertex index {index} out of range (have {len} vertices)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("facet {facet} is malformed: {reason}")]
    MalformedFacet { facet: usize, reason: &'static str },
    #[error("facet {facet} is not planar (deviation {deviation:e})")]
    NonPlanarFacet { facet: usize, deviation: f64 },
    #[error("boundary is not closed: edge ({a}, {b}) is used by {count} facet(s)")]
    OpenBoundary { a: usize, b: usize, count: usize },
    #[error("facet {facet} is oriented inconsistently with its neighbours")]
    InconsistentOrientation { facet: usize },
    #[error("Euler characteristic is {found}, expected {expected}")]
    Euler { found: i64, expected: i64 },
    #[error("vertex {vertex} lies in fewer than {needed} facets")]
    VertexNotOnBoundary { vertex: usize, needed: usize },
    #[error("invalid face lattice: {0}")]
    InvalidLattice(String),

    #[error("base vertex {base} out of range (have {len} vertices)")]
    BaseOutOfRange { base: usize, len: usize },
    #[error("no semi-shelling order exists for the facets")]
    ShellingFailed,
    #[error("cone over a triangle of facet {facet} is degenerate")]
    DegenerateCone { facet: usize },

    #[error("point lies outside the polytope (closest simplex {simplex}, coordinate {coordinate:e})")]
    Outside { simplex: usize, coordinate: f64 },
}
