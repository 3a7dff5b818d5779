//! Numerical kernel: binary convex combinations, signed volumes, affine
//! (volumetric) coordinates and point classification relative to a simplex.

use alloc::vec::Vec;
use core::ops::Index;

use crate::linalg::{det_columns, factorial, norm, sub};
use crate::{Error, Result};

/// Relative factor of the degeneracy test: a simplex is degenerate when
/// `|volume| <= DEGENERACY_FACTOR * longest_edge^n`.
pub const DEGENERACY_FACTOR: f64 = 1e-12;

/// A point of `R^n` with finite Cartesian coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPoint);
        }
        if let Some(&value) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::NonFinite { value });
        }
        Ok(Point(coords))
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    pub fn distance(&self, other: &Point) -> f64 {
        norm(&sub(&self.0, &other.0))
    }
}

impl<const N: usize> From<[f64; N]> for Point {
    fn from(coords: [f64; N]) -> Self {
        debug_assert!(N > 0 && coords.iter().all(|c| c.is_finite()));
        Point(coords.to_vec())
    }
}

impl Index<usize> for Point {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl AsRef<[f64]> for Point {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Coefficients `p_0, ..., p_n` of an affine combination; they sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineCoordinates(Vec<f64>);

impl AffineCoordinates {
    pub fn new(coeffs: Vec<f64>) -> Self {
        AffineCoordinates(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn min(&self) -> f64 {
        self.0.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.0
    }
}

impl Index<usize> for AffineCoordinates {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointTag {
    Interior,
    Boundary,
    Vertex,
    Outside,
}

/// Position of a point relative to a simplex, derived from its affine
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointClass {
    pub tag: PointTag,
    /// Indices whose coefficient is zero within tolerance.
    pub zero_set: Vec<usize>,
}

/// `x(1 - p) + y p`.
///
/// The closed interval is accepted so that the projections `p = 0` and
/// `p = 1` return `x` and `y` exactly. `combine(x, x, p)` is exactly `x`.
pub fn combine(x: &Point, y: &Point, p: f64) -> Result<Point> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch { expected: x.dim(), found: y.dim() });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidWeight(p));
    }
    if p == 1.0 {
        return Ok(y.clone());
    }
    let coords = x.0.iter().zip(&y.0).map(|(a, b)| a + (b - a) * p).collect();
    Ok(Point(coords))
}

fn check_simplex_shape(points: &[Point]) -> Result<usize> {
    let n = points.first().map(Point::dim).ok_or(Error::SimplexArity { expected: 2, found: 0 })?;
    if points.len() != n + 1 {
        return Err(Error::SimplexArity { expected: n + 1, found: points.len() });
    }
    if let Some(p) = points.iter().find(|p| p.dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
    }
    Ok(n)
}

fn edge_vectors(points: &[Point]) -> Vec<Vec<f64>> {
    points[1..].iter().map(|v| sub(&v.0, &points[0].0)).collect()
}

fn columns(vs: &[Vec<f64>]) -> Vec<&[f64]> {
    vs.iter().map(Vec::as_slice).collect()
}

/// Signed hypervolume `det[v_1 - v_0, ..., v_n - v_0] / n!` of the simplex
/// spanned by `n + 1` points of `R^n`. Degenerate simplices give (close to) zero.
pub fn signed_volume(points: &[Point]) -> Result<f64> {
    let n = check_simplex_shape(points)?;
    let edges = edge_vectors(points);
    Ok(det_columns(&columns(&edges)) / factorial(n))
}

/// Length of the longest edge among all vertex pairs.
pub fn longest_edge(points: &[Point]) -> f64 {
    let mut longest = 0.0f64;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            longest = longest.max(a.distance(b));
        }
    }
    longest
}

/// `|volume| <= 1e-12 * longest_edge^n`.
pub fn is_degenerate_volume(volume: f64, points: &[Point]) -> bool {
    let n = points.len().saturating_sub(1);
    let scale = longest_edge(points);
    let threshold = (0..n).fold(DEGENERACY_FACTOR, |acc, _| acc * scale);
    volume.abs() <= threshold
}

/// A non-degenerate simplex with its determinant cached.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexGeometry {
    vertices: Vec<Point>,
    det: f64,
    signed_volume: f64,
}

impl SimplexGeometry {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let n = check_simplex_shape(&vertices)?;
        let edges = edge_vectors(&vertices);
        let det = det_columns(&columns(&edges));
        let signed_volume = det / factorial(n);
        if is_degenerate_volume(signed_volume, &vertices) {
            return Err(Error::DegenerateSimplex { volume: signed_volume });
        }
        Ok(SimplexGeometry { vertices, det, signed_volume })
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn signed_volume(&self) -> f64 {
        self.signed_volume
    }
}

/// Affine coordinates of `x` with respect to the vertices of `s`, valid for
/// any `x` in the ambient space.
///
/// `p_i = det[v_1 - v_0, .., x - v_0, .., v_n - v_0] / det[v_1 - v_0, .., v_n - v_0]`
/// for `i >= 1` (the `x` column replacing column `i`), and `p_0 = 1 - sum p_i`.
pub fn affine_coordinates(s: &SimplexGeometry, x: &Point) -> Result<AffineCoordinates> {
    let n = s.dim();
    if x.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: x.dim() });
    }
    let mut edges = edge_vectors(&s.vertices);
    let rel = sub(&x.0, &s.vertices[0].0);
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(0.0);
    for i in 0..n {
        let saved = core::mem::replace(&mut edges[i], rel.clone());
        coeffs.push(det_columns(&columns(&edges)) / s.det);
        edges[i] = saved;
    }
    coeffs[0] = 1.0 - coeffs[1..].iter().sum::<f64>();
    Ok(AffineCoordinates(coeffs))
}

fn check_planar(points: &[&Point]) -> Result<()> {
    match points.iter().find(|p| p.dim() != 2) {
        Some(p) => Err(Error::DimensionMismatch { expected: 2, found: p.dim() }),
        None => Ok(()),
    }
}

/// Signed area `det[b - a, c - a] / 2`; positive iff `a, b, c` turn counterclockwise.
pub fn signed_area(a: &Point, b: &Point, c: &Point) -> Result<f64> {
    check_planar(&[a, b, c])?;
    Ok(area2(a, b, c) * 0.5)
}

pub(crate) fn area2(a: &Point, b: &Point, c: &Point) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

/// Areal coordinates of `x` in the triangle `t`, as ratios of signed
/// sub-triangle areas.
pub fn areal_coordinates(t: &[Point; 3], x: &Point) -> Result<AffineCoordinates> {
    let [v0, v1, v2] = t;
    check_planar(&[v0, v1, v2, x])?;
    let whole = signed_area(v0, v1, v2)?;
    if is_degenerate_volume(whole, t) {
        return Err(Error::DegenerateSimplex { volume: whole });
    }
    let p1 = signed_area(v0, x, v2)? / whole;
    let p2 = signed_area(v0, v1, x)? / whole;
    let p0 = signed_area(x, v1, v2)? / whole;
    Ok(AffineCoordinates(alloc::vec![p0, p1, p2]))
}

/// Classifies a point from its affine coordinates.
///
/// `tol` is scaled by `max(1, max |p_i|)`. Outside when some coefficient is
/// below `-tol`; Vertex when one coefficient is 1 and the rest vanish;
/// Boundary when some coefficient vanishes; Interior otherwise.
pub fn classify(coords: &AffineCoordinates, tol: f64) -> PointClass {
    let scale = coords.0.iter().fold(1.0f64, |m, p| m.max(p.abs()));
    let t = tol * scale;
    let zero_set: Vec<usize> = (0..coords.len()).filter(|&i| coords[i].abs() <= t).collect();
    let tag = if coords.0.iter().any(|&p| p < -t) {
        PointTag::Outside
    } else if coords.len() > 1 && zero_set.len() == coords.len() - 1 && coords.0.iter().any(|&p| (p - 1.0).abs() <= t) {
        PointTag::Vertex
    } else if !zero_set.is_empty() {
        PointTag::Boundary
    } else {
        PointTag::Interior
    };
    PointClass { tag, zero_set }
}
