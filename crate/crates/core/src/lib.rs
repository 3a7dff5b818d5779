//! Pointed decompositions of convex polytopes and the sparse barycentric
//! coordinates they induce.
//!
//! A convex polytope `P` with vertex set `V` admits many barycentric
//! representations of a point `x`. Fixing a base vertex `v` and splitting
//! `P` into full-dimensional simplices that all contain `v` picks out one
//! of them: locate `x` in the first simplex (in a fixed numbering) whose
//! affine coordinates are all non-negative, and use those coordinates,
//! padding every other vertex with zero. The result has at most `k + 1`
//! nonzero weights for a `k`-polytope.
//!
//! The crate is organised bottom-up:
//!
//! - [`geometry`]: binary convex combinations, determinants, signed
//!   volumes, affine/areal coordinates and point classification.
//! - [`polytope`]: validated polygons, 3-polytopes and face lattices.
//! - [`decompose`]: fan triangulation, facet semi-shelling, vertex
//!   numbering, pyramid and simplicial decompositions, and the recursive
//!   construction for face lattices of any dimension.
//! - [`coords`]: scan-based point location, pointed coordinates and
//!   cartographic (fan-averaged) coordinates for polygons.
//!
//! Everything here is `no_std` (with `alloc`) and free of IO; file formats
//! and the command-line tool live in the `barysparse` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod coords;
pub mod decompose;
mod error;
pub mod geometry;
mod linalg;
pub mod polytope;

pub use coords::{cartographic_coordinates, locate, pointed_coordinates, LocateResult, SparseCoordinates};
pub use decompose::{
    fan_decompose, number_vertices, pyramid_decompose, recursive_decompose, shell_facets, simplicial_decompose,
    PointedDecomposition, PyramidDecomposition, ShellOrder, VertexNumbering,
};
pub use error::{Error, Result};
pub use geometry::{
    affine_coordinates, areal_coordinates, classify, combine, signed_area, signed_volume, AffineCoordinates, Point,
    PointClass, PointTag, SimplexGeometry,
};
pub use polytope::{
    face_check, standard_simplex, validate_polygon, validate_polytope3, FaceLattice, LatticePolytope, Polygon,
    Polytope3, Simplex,
};

/// Default tolerance for membership and classification decisions.
pub const DEFAULT_TOL: f64 = 1e-9;
