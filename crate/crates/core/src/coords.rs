//! Point location over a pointed decomposition and the sparse barycentric
//! coordinates it yields.

use alloc::vec;
use alloc::vec::Vec;

use crate::decompose::{fan_decompose, PointedDecomposition};
use crate::geometry::{affine_coordinates, classify, AffineCoordinates, Point, PointClass};
use crate::polytope::Polygon;
use crate::{Error, Result};

/// Coefficients this close to zero (relative) are snapped to zero on output.
const ZERO_SNAP: f64 = 1e-12;

/// The simplex a point was located in.
#[derive(Debug, Clone, PartialEq)]
pub struct LocateResult {
    /// Numbering position of the simplex, from 1.
    pub order_id: usize,
    /// Barycentric coordinates in that simplex, in its vertex order, clamped
    /// to `[0, 1]` and renormalised.
    pub coords: AffineCoordinates,
    /// Classification of the raw (unclamped) coordinates.
    pub class: PointClass,
}

/// Barycentric coordinates supported on one simplex of a decomposition;
/// vertices not listed have weight zero.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseCoordinates {
    /// `(vertex index, weight)` sorted by vertex index, weights in `(0, 1]`.
    pub entries: Vec<(usize, f64)>,
    pub polytope_dim: usize,
    /// Simplex the point was located in.
    pub order_id: usize,
}

impl SparseCoordinates {
    pub fn weight(&self, vertex: usize) -> f64 {
        self.entries.iter().find(|(v, _)| *v == vertex).map_or(0.0, |e| e.1)
    }

    pub fn sum(&self) -> f64 {
        self.entries.iter().map(|e| e.1).sum()
    }

    /// Dense weight vector of length `n`.
    pub fn to_dense(&self, n: usize) -> Vec<f64> {
        let mut out = vec![0.0; n];
        for &(v, w) in &self.entries {
            out[v] = w;
        }
        out
    }

    /// `sum weight * vertex`.
    pub fn reconstruct(&self, points: &[Point]) -> Vec<f64> {
        let mut x = vec![0.0; self.polytope_dim];
        for &(v, w) in &self.entries {
            x.iter_mut().zip(points[v].coords()).for_each(|(s, c)| *s += w * c);
        }
        x
    }
}

/// Zeroes coefficients in `[-tol, 0)` and those within the snap threshold,
/// then renormalises to sum one.
fn clamp(coords: &AffineCoordinates) -> AffineCoordinates {
    let scale = coords.coeffs().iter().fold(1.0f64, |m, p| m.max(p.abs()));
    let snap = ZERO_SNAP * scale;
    let clamped: Vec<f64> = coords.coeffs().iter().map(|&p| if p <= snap { 0.0 } else { p }).collect();
    let total: f64 = clamped.iter().sum();
    AffineCoordinates::new(clamped.into_iter().map(|p| p / total).collect())
}

/// Scans the simplices in numbering order and returns the first in which
/// the affine coordinates of `x` are all at least `-tol` (relative).
///
/// On failure the error carries the simplex whose most negative coordinate
/// is the least negative.
pub fn locate(d: &PointedDecomposition, x: &Point, tol: f64) -> Result<LocateResult> {
    if x.dim() != d.dim() {
        return Err(Error::DimensionMismatch { expected: d.dim(), found: x.dim() });
    }
    let mut closest = (0, f64::NEG_INFINITY);
    for (i, simplex) in d.simplices().iter().enumerate() {
        let coords = affine_coordinates(d.geometry(i), x)?;
        let scale = coords.coeffs().iter().fold(1.0f64, |m, p| m.max(p.abs()));
        let worst = coords.min();
        if worst >= -tol * scale {
            let class = classify(&coords, tol);
            return Ok(LocateResult { order_id: simplex.order_id, coords: clamp(&coords), class });
        }
        if worst > closest.1 {
            closest = (simplex.order_id, worst);
        }
    }
    Err(Error::Outside { simplex: closest.0, coordinate: closest.1 })
}

/// Base-pointed barycentric coordinates of `x`: its barycentric coordinates
/// in the located simplex, every other vertex weighted zero.
pub fn pointed_coordinates(d: &PointedDecomposition, x: &Point, tol: f64) -> Result<SparseCoordinates> {
    let hit = locate(d, x, tol)?;
    let simplex = &d.simplices()[hit.order_id - 1];
    let mut entries: Vec<(usize, f64)> =
        simplex.vertex_ids.iter().copied().zip(hit.coords.into_coeffs()).filter(|&(_, w)| w > 0.0).collect();
    entries.sort_unstable_by_key(|e| e.0);
    Ok(SparseCoordinates { entries, polytope_dim: d.dim(), order_id: hit.order_id })
}

/// Cartographic coordinates: the mean of the `v`-pointed coordinate vectors
/// over every vertex `v` of the polygon, indexed like `poly.points()`.
pub fn cartographic_coordinates(poly: &Polygon, x: &Point, tol: f64) -> Result<Vec<f64>> {
    let n = poly.len();
    let mut acc = vec![0.0; n];
    for base in 0..n {
        let d = fan_decompose(poly, base)?;
        for (v, w) in pointed_coordinates(&d, x, tol)?.entries {
            acc[v] += w;
        }
    }
    acc.iter_mut().for_each(|w| *w /= n as f64);
    Ok(acc)
}
