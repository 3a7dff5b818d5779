//! Validated polytope models: convex polygons, 3-polytopes given by facet
//! cycles, and face lattices with vertex coordinates for any dimension.
//!
//! No convex hulls are computed here; the combinatorics are taken as given
//! and checked against the geometry.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::geometry::{area2, signed_volume, Point, SimplexGeometry};
use crate::linalg::{dot, norm, orthonormal_basis, reject, sub};
use crate::{Error, Result};

/// Relative tolerance for collinearity and coplanarity tests, scaled by the
/// bounding-box diagonal.
pub const SHAPE_TOL: f64 = 1e-9;

/// Length of the diagonal of the axis-aligned bounding box of `points`.
pub fn bbox_diagonal(points: &[Point]) -> f64 {
    let Some(first) = points.first() else { return 0.0 };
    let dim = first.dim();
    let mut acc = 0.0;
    for axis in 0..dim {
        let (lo, hi) =
            points.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p[axis]), hi.max(p[axis])));
        acc += (hi - lo) * (hi - lo);
    }
    libm::sqrt(acc)
}

fn centroid<'a>(points: impl IntoIterator<Item = &'a Point>) -> Vec<f64> {
    let mut sum: Vec<f64> = Vec::new();
    let mut count = 0usize;
    for p in points {
        if sum.is_empty() {
            sum = vec![0.0; p.dim()];
        }
        for (s, c) in sum.iter_mut().zip(p.coords()) {
            *s += c;
        }
        count += 1;
    }
    sum.iter_mut().for_each(|s| *s /= count as f64);
    sum
}

/// Closed half-space `{x : normal . x <= offset}` with unit `normal`.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfSpace {
    pub normal: Vec<f64>,
    pub offset: f64,
}

impl HalfSpace {
    /// Positive outside, negative inside.
    pub fn signed_distance(&self, x: &[f64]) -> f64 {
        dot(&self.normal, x) - self.offset
    }
}

/// Answers whether a vertex subset spans a face.
pub trait FaceSystem {
    fn vertex_count(&self) -> usize;
    /// `subset` is sorted and deduplicated.
    fn is_face_sorted(&self, subset: &[usize]) -> bool;
}

/// True iff `subset` is the vertex set of a face of `p`, including the empty
/// face and `p` itself.
pub fn face_check<P: FaceSystem + ?Sized>(p: &P, subset: &[usize]) -> bool {
    let set: BTreeSet<usize> = subset.iter().copied().collect();
    if set.iter().any(|&i| i >= p.vertex_count()) {
        return false;
    }
    let sorted: Vec<usize> = set.into_iter().collect();
    if sorted.len() <= 1 || sorted.len() == p.vertex_count() {
        return true;
    }
    p.is_face_sorted(&sorted)
}

// ---------------------------------------------------------------------------
// Polygons

/// A strictly convex polygon in the plane.
///
/// Points keep the caller's indexing; `cycle` lists the indices in
/// counterclockwise order starting from index 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    points: Vec<Point>,
    cycle: Vec<usize>,
}

/// Checks convexity and non-degeneracy and canonicalises the orientation to
/// counterclockwise (clockwise input is accepted and reversed).
pub fn validate_polygon(points: Vec<Point>) -> Result<Polygon> {
    let n = points.len();
    if n < 3 {
        return Err(Error::TooFewVertices { needed: 3, found: n });
    }
    if let Some(p) = points.iter().find(|p| p.dim() != 2) {
        return Err(Error::DimensionMismatch { expected: 2, found: p.dim() });
    }
    let diag = bbox_diagonal(&points);
    let len_tol = SHAPE_TOL * diag;
    for i in 0..n {
        for j in i + 1..n {
            if points[i].distance(&points[j]) <= len_tol {
                return Err(Error::Degenerate { vertex: j });
            }
        }
    }

    let twice_area: f64 = (0..n)
        .map(|i| {
            let (a, b) = (&points[i], &points[(i + 1) % n]);
            a[0] * b[1] - a[1] * b[0]
        })
        .sum();
    let cycle: Vec<usize> =
        if twice_area >= 0.0 { (0..n).collect() } else { core::iter::once(0).chain((1..n).rev()).collect() };

    // Every other vertex must lie strictly left of each directed edge.
    let area_tol = SHAPE_TOL * diag * diag;
    for k in 0..n {
        let (a, b) = (cycle[k], cycle[(k + 1) % n]);
        for step in 2..n {
            let c = cycle[(k + step) % n];
            let turn = area2(&points[a], &points[b], &points[c]);
            if turn.abs() <= area_tol {
                return Err(Error::Degenerate { vertex: if step == 2 { b } else { c } });
            }
            if turn < 0.0 {
                return Err(Error::NotConvex { vertex: if step == 2 { b } else { c } });
            }
        }
    }
    Ok(Polygon { points, cycle })
}

impl Polygon {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Vertex indices in counterclockwise order, starting at index 0.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// Counterclockwise cycle rotated to start at `start`.
    pub fn cycle_from(&self, start: usize) -> Vec<usize> {
        let pos = self.cycle.iter().position(|&v| v == start).unwrap_or(0);
        let n = self.cycle.len();
        (0..n).map(|k| self.cycle[(pos + k) % n]).collect()
    }

    /// Shoelace area over the counterclockwise cycle.
    pub fn area(&self) -> f64 {
        let n = self.cycle.len();
        let twice: f64 = (0..n)
            .map(|k| {
                let a = &self.points[self.cycle[k]];
                let b = &self.points[self.cycle[(k + 1) % n]];
                a[0] * b[1] - a[1] * b[0]
            })
            .sum();
        twice * 0.5
    }

    pub fn halfspaces(&self) -> Vec<HalfSpace> {
        let n = self.cycle.len();
        (0..n)
            .map(|k| {
                let a = &self.points[self.cycle[k]];
                let b = &self.points[self.cycle[(k + 1) % n]];
                let normal = [b[1] - a[1], a[0] - b[0]];
                let len = norm(&normal);
                let normal = vec![normal[0] / len, normal[1] / len];
                let offset = dot(&normal, a.coords());
                HalfSpace { normal, offset }
            })
            .collect()
    }
}

impl FaceSystem for Polygon {
    fn vertex_count(&self) -> usize {
        self.points.len()
    }

    fn is_face_sorted(&self, subset: &[usize]) -> bool {
        let n = self.cycle.len();
        subset.len() == 2
            && (0..n).any(|k| {
                let (a, b) = (self.cycle[k], self.cycle[(k + 1) % n]);
                (a.min(b), a.max(b)) == (subset[0], subset[1])
            })
    }
}

// ---------------------------------------------------------------------------
// 3-polytopes

/// A convex 3-polytope whose facets are vertex cycles, counterclockwise as
/// seen from outside.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope3 {
    points: Vec<Point>,
    facets: Vec<Vec<usize>>,
}

/// Newell normal of a planar polygon: twice its vector area.
fn newell_normal(points: &[Point], cycle: &[usize]) -> [f64; 3] {
    let mut n = [0.0; 3];
    for k in 0..cycle.len() {
        let a = &points[cycle[k]];
        let b = &points[cycle[(k + 1) % cycle.len()]];
        n[0] += (a[1] - b[1]) * (a[2] + b[2]);
        n[1] += (a[2] - b[2]) * (a[0] + b[0]);
        n[2] += (a[0] - b[0]) * (a[1] + b[1]);
    }
    n
}

fn cross(a: &[f64], b: &[f64]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Validates a 3-polytope from vertex coordinates and facet cycles.
///
/// Facets must be consistently oriented (all outward or all inward); the
/// result is canonicalised so every facet is counterclockwise seen from
/// outside, using the vertex centroid as interior reference.
pub fn validate_polytope3(points: Vec<Point>, facets: Vec<Vec<usize>>) -> Result<Polytope3> {
    if points.len() < 4 {
        return Err(Error::TooFewVertices { needed: 4, found: points.len() });
    }
    if facets.len() < 4 {
        return Err(Error::InvalidLattice(format!("need at least 4 facets, found {}", facets.len())));
    }
    if let Some(p) = points.iter().find(|p| p.dim() != 3) {
        return Err(Error::DimensionMismatch { expected: 3, found: p.dim() });
    }
    let nv = points.len();
    for (f, cycle) in facets.iter().enumerate() {
        if cycle.len() < 3 {
            return Err(Error::MalformedFacet { facet: f, reason: "fewer than 3 vertices" });
        }
        if let Some(&index) = cycle.iter().find(|&&i| i >= nv) {
            return Err(Error::IndexOutOfRange { index, len: nv });
        }
        let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
        if distinct.len() != cycle.len() {
            return Err(Error::MalformedFacet { facet: f, reason: "repeated vertex" });
        }
    }

    let diag = bbox_diagonal(&points);
    let tol = SHAPE_TOL * diag;

    // planarity against the Newell plane through the facet centroid
    let mut planes = Vec::with_capacity(facets.len());
    for (f, cycle) in facets.iter().enumerate() {
        let n = newell_normal(&points, cycle);
        let len = norm(&n);
        if len <= tol * diag {
            return Err(Error::MalformedFacet { facet: f, reason: "zero area" });
        }
        let unit = [n[0] / len, n[1] / len, n[2] / len];
        let c = centroid(cycle.iter().map(|&i| &points[i]));
        let deviation = cycle.iter().map(|&i| dot(&unit, &sub(points[i].coords(), &c)).abs()).fold(0.0, f64::max);
        if deviation > tol {
            return Err(Error::NonPlanarFacet { facet: f, deviation });
        }
        planes.push((unit, c));
    }

    // closed, consistently oriented boundary
    let mut edges: BTreeMap<(usize, usize), Vec<(usize, bool)>> = BTreeMap::new();
    for (f, cycle) in facets.iter().enumerate() {
        for k in 0..cycle.len() {
            let (a, b) = (cycle[k], cycle[(k + 1) % cycle.len()]);
            edges.entry((a.min(b), a.max(b))).or_default().push((f, a < b));
        }
    }
    for (&(a, b), uses) in &edges {
        if uses.len() != 2 {
            return Err(Error::OpenBoundary { a, b, count: uses.len() });
        }
        if uses[0].1 == uses[1].1 {
            return Err(Error::InconsistentOrientation { facet: uses[1].0 });
        }
    }
    let euler = nv as i64 - edges.len() as i64 + facets.len() as i64;
    if euler != 2 {
        return Err(Error::Euler { found: euler, expected: 2 });
    }
    let mut incidence = vec![0usize; nv];
    facets.iter().flatten().for_each(|&i| incidence[i] += 1);
    if let Some(vertex) = incidence.iter().position(|&c| c < 3) {
        return Err(Error::VertexNotOnBoundary { vertex, needed: 3 });
    }

    // convexity: facets are convex polygons, all vertices behind every facet
    let area_tol = tol * diag;
    for (f, cycle) in facets.iter().enumerate() {
        let (unit, _) = &planes[f];
        let m = cycle.len();
        for k in 0..m {
            let a = points[cycle[k]].coords();
            let b = points[cycle[(k + 1) % m]].coords();
            let c = points[cycle[(k + 2) % m]].coords();
            let turn = dot(&cross(&sub(b, a), &sub(c, b)), unit);
            if turn.abs() <= area_tol {
                return Err(Error::Degenerate { vertex: cycle[(k + 1) % m] });
            }
            if turn < 0.0 {
                return Err(Error::NotConvex { vertex: cycle[(k + 1) % m] });
            }
        }
    }
    let interior = centroid(points.iter());
    let outward = dot(&planes[0].0, &sub(&planes[0].1, &interior)) > 0.0;
    let sign = if outward { 1.0 } else { -1.0 };
    for (f, cycle) in facets.iter().enumerate() {
        let (unit, c) = &planes[f];
        for (v, p) in points.iter().enumerate() {
            if cycle.contains(&v) {
                continue;
            }
            let d = sign * dot(unit, &sub(p.coords(), c));
            if d.abs() <= tol {
                return Err(Error::Degenerate { vertex: v });
            }
            if d > 0.0 {
                return Err(Error::NotConvex { vertex: v });
            }
        }
    }

    let facets = if outward {
        facets
    } else {
        facets
            .into_iter()
            .map(|mut cycle| {
                cycle[1..].reverse();
                cycle
            })
            .collect()
    };
    Ok(Polytope3 { points, facets })
}

impl Polytope3 {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Facet cycles, counterclockwise seen from outside.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Unordered edges `(min, max)` in order of first appearance along the facets.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for cycle in &self.facets {
            for k in 0..cycle.len() {
                let (a, b) = (cycle[k], cycle[(k + 1) % cycle.len()]);
                let e = (a.min(b), a.max(b));
                if seen.insert(e) {
                    out.push(e);
                }
            }
        }
        out
    }

    /// Twice the vector area of facet `f`, pointing outward.
    pub fn facet_normal(&self, f: usize) -> [f64; 3] {
        newell_normal(&self.points, &self.facets[f])
    }

    pub fn centroid(&self) -> Vec<f64> {
        centroid(self.points.iter())
    }

    /// Divergence-theorem volume: `sum over facets of (c_f . n_f) A_f / 3`.
    pub fn volume(&self) -> f64 {
        self.facets
            .iter()
            .enumerate()
            .map(|(f, cycle)| {
                let c = centroid(cycle.iter().map(|&i| &self.points[i]));
                let n = self.facet_normal(f);
                dot(&c, &n) / 6.0
            })
            .sum()
    }

    pub fn halfspaces(&self) -> Vec<HalfSpace> {
        (0..self.facets.len())
            .map(|f| {
                let n = self.facet_normal(f);
                let len = norm(&n);
                let normal = vec![n[0] / len, n[1] / len, n[2] / len];
                let offset = dot(&normal, self.points[self.facets[f][0]].coords());
                HalfSpace { normal, offset }
            })
            .collect()
    }
}

impl FaceSystem for Polytope3 {
    fn vertex_count(&self) -> usize {
        self.points.len()
    }

    fn is_face_sorted(&self, subset: &[usize]) -> bool {
        if subset.len() == 2 {
            let e = (subset[0], subset[1]);
            return self.edges().contains(&e);
        }
        self.facets.iter().any(|cycle| {
            let mut s = cycle.clone();
            s.sort_unstable();
            s == subset
        })
    }
}

// ---------------------------------------------------------------------------
// Face lattices

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    /// Indices of this face's facets in the layer one dimension lower.
    pub facets: Vec<usize>,
}

/// The graded lattice of nonempty faces of a polytope of dimension `dim`.
///
/// `layer(0)` holds the vertices and `layer(dim)` the single top face; the
/// empty face is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    dim: usize,
    layers: Vec<Vec<Face>>,
}

impl FaceLattice {
    /// Builds a lattice from the intermediate layers.
    ///
    /// `layers[d - 1]` lists the `d`-faces for `d = 1 .. dim - 1`, each as the
    /// indices of its facets in the layer below (for edges: two vertex
    /// indices). Vertices and the top face are implied.
    pub fn new(vertex_count: usize, dim: usize, layers: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let bad = |msg: alloc::string::String| Err(Error::InvalidLattice(msg));
        if dim == 0 {
            return bad("dimension must be at least 1".into());
        }
        if layers.len() + 1 != dim {
            return bad(format!("expected {} intermediate layers, found {}", dim - 1, layers.len()));
        }
        if vertex_count < dim + 1 {
            return Err(Error::TooFewVertices { needed: dim + 1, found: vertex_count });
        }
        let mut built: Vec<Vec<Face>> = Vec::with_capacity(dim + 1);
        built.push((0..vertex_count).map(|v| Face { vertices: vec![v], facets: Vec::new() }).collect());
        let top = vec![(0..layers.last().map_or(vertex_count, Vec::len)).collect::<Vec<_>>()];
        for (d, raw) in layers.into_iter().chain(core::iter::once(top)).enumerate().map(|(i, l)| (i + 1, l)) {
            let below = &built[d - 1];
            let mut layer = Vec::with_capacity(raw.len());
            let mut seen = BTreeSet::new();
            for (i, facets) in raw.into_iter().enumerate() {
                if let Some(&j) = facets.iter().find(|&&j| j >= below.len()) {
                    return bad(format!("{d}-face {i} refers to missing {}-face {j}", d - 1));
                }
                let distinct: BTreeSet<usize> = facets.iter().copied().collect();
                if distinct.len() != facets.len() {
                    return bad(format!("{d}-face {i} lists a facet twice"));
                }
                if d == 1 && facets.len() != 2 {
                    return bad(format!("edge {i} must have exactly 2 vertices"));
                }
                if facets.len() < d + 1 {
                    return bad(format!("{d}-face {i} has only {} facets", facets.len()));
                }
                let vertices: BTreeSet<usize> =
                    facets.iter().flat_map(|&j| below[j].vertices.iter().copied()).collect();
                let vertices: Vec<usize> = vertices.into_iter().collect();
                if vertices.len() < d + 1 {
                    return bad(format!("{d}-face {i} spans only {} vertices", vertices.len()));
                }
                if !seen.insert(vertices.clone()) {
                    return bad(format!("{d}-face {i} duplicates another face"));
                }
                layer.push(Face { vertices, facets });
            }
            let mut used = vec![false; below.len()];
            layer.iter().flat_map(|f| f.facets.iter()).for_each(|&j| used[j] = true);
            if let Some(j) = used.iter().position(|u| !u) {
                return bad(format!("{}-face {j} is not contained in any {d}-face", d - 1));
            }
            built.push(layer);
        }

        // diamond property: inside every face each ridge lies in exactly two facets
        for d in 2..=dim {
            for (i, face) in built[d].iter().enumerate() {
                let mut count: BTreeMap<usize, usize> = BTreeMap::new();
                for &g in &face.facets {
                    for &r in &built[d - 1][g].facets {
                        *count.entry(r).or_default() += 1;
                    }
                }
                if let Some((r, c)) = count.iter().find(|(_, &c)| c != 2) {
                    return bad(format!("{}-face {r} lies in {c} facets of {d}-face {i}", d - 2));
                }
            }
        }

        let lattice = FaceLattice { dim, layers: built };
        let chi: i64 = (0..dim).map(|d| if d % 2 == 0 { 1 } else { -1 } * lattice.layers[d].len() as i64).sum();
        let expected = if dim.is_multiple_of(2) { 0 } else { 2 };
        if chi != expected {
            return Err(Error::Euler { found: chi, expected });
        }
        Ok(lattice)
    }

    /// The lattice of a polygon: edges in counterclockwise order.
    pub fn from_polygon(poly: &Polygon) -> Self {
        let n = poly.len();
        let cycle = poly.cycle();
        let edges = (0..n).map(|k| vec![cycle[k], cycle[(k + 1) % n]]).collect();
        FaceLattice::new(n, 2, vec![edges]).expect("validated polygon has a valid face lattice")
    }

    /// The lattice of a 3-polytope: edges in order of first appearance,
    /// facets in the given order with their edges in cyclic order.
    pub fn from_polytope3(p: &Polytope3) -> Self {
        let edges = p.edges();
        let index: BTreeMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let facets = p
            .facets()
            .iter()
            .map(|cycle| {
                (0..cycle.len())
                    .map(|k| {
                        let (a, b) = (cycle[k], cycle[(k + 1) % cycle.len()]);
                        index[&(a.min(b), a.max(b))]
                    })
                    .collect()
            })
            .collect();
        let edges = edges.into_iter().map(|(a, b)| vec![a, b]).collect();
        FaceLattice::new(p.points().len(), 3, vec![edges, facets]).expect("validated polytope has a valid face lattice")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.layers[0].len()
    }

    /// The `d`-faces.
    pub fn layer(&self, d: usize) -> &[Face] {
        &self.layers[d]
    }

    pub fn face(&self, d: usize, i: usize) -> &Face {
        &self.layers[d][i]
    }

    /// `f_0, f_1, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// Vertices of the 2-face `i` in cyclic order (direction unspecified),
    /// starting at its smallest vertex.
    pub fn polygon_cycle(&self, i: usize) -> Vec<usize> {
        let face = &self.layers[2][i];
        let edges: Vec<[usize; 2]> = face
            .facets
            .iter()
            .map(|&e| {
                let v = &self.layers[1][e].vertices;
                [v[0], v[1]]
            })
            .collect();
        let start = face.vertices[0];
        let mut cycle = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while cycle.len() < face.vertices.len() {
            let next = edges
                .iter()
                .filter_map(|e| match *e {
                    [a, b] if a == cur && b != prev => Some(b),
                    [a, b] if b == cur && a != prev => Some(a),
                    _ => None,
                })
                .min()
                .expect("2-face edges form a cycle");
            prev = cur;
            cur = next;
            cycle.push(cur);
        }
        cycle
    }
}

impl FaceSystem for FaceLattice {
    fn vertex_count(&self) -> usize {
        self.layers[0].len()
    }

    fn is_face_sorted(&self, subset: &[usize]) -> bool {
        self.layers.iter().any(|layer| layer.iter().any(|f| f.vertices == subset))
    }
}

/// A face lattice together with vertex coordinates in `R^dim`, checked for
/// consistency: each `d`-face spans a `d`-flat and every facet supports the
/// polytope.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticePolytope {
    points: Vec<Point>,
    lattice: FaceLattice,
}

impl LatticePolytope {
    pub fn new(points: Vec<Point>, lattice: FaceLattice) -> Result<Self> {
        let dim = lattice.dim();
        if points.len() != lattice.vertex_count() {
            return Err(Error::InvalidLattice(format!(
                "lattice has {} vertices but {} points were given",
                lattice.vertex_count(),
                points.len()
            )));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
        }
        let diag = bbox_diagonal(&points);
        for d in 1..=dim {
            for (i, face) in lattice.layer(d).iter().enumerate() {
                let rank = affine_basis(&points, &face.vertices, diag).len();
                if rank != d {
                    return Err(Error::InvalidLattice(format!("{d}-face {i} spans a {rank}-flat")));
                }
            }
        }
        let poly = LatticePolytope { points, lattice };
        let tol = SHAPE_TOL * diag;
        for (f, h) in poly.halfspaces().iter().enumerate() {
            let facet = &poly.lattice.layer(dim - 1)[f].vertices;
            if !h.offset.is_finite() || h.normal.iter().any(|c| !c.is_finite()) {
                return Err(Error::InvalidLattice(format!("facet {f} passes through the interior")));
            }
            for (v, p) in poly.points.iter().enumerate() {
                let d = h.signed_distance(p.coords());
                let on = facet.binary_search(&v).is_ok();
                if on && d.abs() > tol {
                    return Err(Error::NonPlanarFacet { facet: f, deviation: d.abs() });
                }
                if !on && d > -tol {
                    return Err(if d > tol { Error::NotConvex { vertex: v } } else { Error::Degenerate { vertex: v } });
                }
            }
        }
        Ok(poly)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        self.lattice.dim()
    }

    /// Hypervolume by the pyramid formula: the `d`-volume of a face is
    /// `1/d` times the sum over its facets of facet volume times the distance
    /// from the face centroid to the facet.
    pub fn volume(&self) -> f64 {
        let diag = bbox_diagonal(&self.points);
        let mut below = vec![1.0; self.lattice.vertex_count()];
        for d in 1..=self.dim() {
            below = self
                .lattice
                .layer(d)
                .iter()
                .map(|face| {
                    let c = centroid(face.vertices.iter().map(|&v| &self.points[v]));
                    let sum: f64 = face
                        .facets
                        .iter()
                        .map(|&g| {
                            let ids = &self.lattice.layer(d - 1)[g].vertices;
                            let basis = affine_basis(&self.points, ids, diag);
                            let h = norm(&reject(&sub(self.points[ids[0]].coords(), &c), &basis));
                            h * below[g]
                        })
                        .sum();
                    sum / d as f64
                })
                .collect();
        }
        below[0]
    }

    /// Outward facet half-spaces, in facet order.
    pub fn halfspaces(&self) -> Vec<HalfSpace> {
        let dim = self.dim();
        let diag = bbox_diagonal(&self.points);
        let inner = centroid(self.points.iter());
        self.lattice
            .layer(dim - 1)
            .iter()
            .map(|facet| {
                let basis = affine_basis(&self.points, &facet.vertices, diag);
                let c = centroid(facet.vertices.iter().map(|&v| &self.points[v]));
                let n = reject(&sub(&c, &inner), &basis);
                let len = norm(&n);
                let normal: Vec<f64> = n.iter().map(|x| x / len).collect();
                let offset = dot(&normal, &c);
                HalfSpace { normal, offset }
            })
            .collect()
    }
}

/// Orthonormal basis of the direction space of the flat through `ids`.
pub(crate) fn affine_basis(points: &[Point], ids: &[usize], scale: f64) -> Vec<Vec<f64>> {
    let origin = points[ids[0]].coords();
    let diffs: Vec<Vec<f64>> = ids[1..].iter().map(|&i| sub(points[i].coords(), origin)).collect();
    orthonormal_basis(&diffs, scale)
}

// ---------------------------------------------------------------------------
// Simplices

/// A simplex of a decomposition: vertex indices into the parent polytope
/// plus its position in the decomposition's numbering (from 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    pub vertex_ids: Vec<usize>,
    pub order_id: usize,
}

impl Simplex {
    pub fn points(&self, all: &[Point]) -> Vec<Point> {
        self.vertex_ids.iter().map(|&i| all[i].clone()).collect()
    }

    pub fn geometry(&self, all: &[Point]) -> Result<SimplexGeometry> {
        SimplexGeometry::new(self.points(all))
    }
}

/// The corner simplex `e_0 = 0, e_1, ..., e_n` of `R^n`.
///
/// `n = 0` has no ambient coordinates; it is returned as the single point
/// `0` of `R^1`.
pub fn standard_simplex(n: usize) -> (Vec<Point>, Simplex) {
    let dim = n.max(1);
    let points = (0..=n)
        .map(|i| {
            let mut c = vec![0.0; dim];
            if i > 0 {
                c[i - 1] = 1.0;
            }
            Point::new(c).expect("finite")
        })
        .collect();
    (points, Simplex { vertex_ids: (0..=n).collect(), order_id: 1 })
}

/// Signed volume of `s` over `points`.
pub fn simplex_volume(s: &Simplex, points: &[Point]) -> Result<f64> {
    signed_volume(&s.points(points))
}
