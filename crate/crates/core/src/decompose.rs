//! Pointed decompositions: splitting a polytope into full-dimensional
//! simplices that all contain one base vertex, numbered for scanning.
//!
//! Polygons are fan-triangulated from the base. A 3-polytope is handled by
//! semi-shelling its facets (those containing the base first), numbering
//! the vertices by first appearance along that facet order, fanning every
//! facet that misses the base from its lowest-labelled vertex, and coning
//! each triangle with the base. Face lattices of any dimension repeat the
//! same construction one level down for each facet.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::geometry::{Point, SimplexGeometry};
use crate::linalg::{det, dot, sub};
use crate::polytope::{affine_basis, bbox_diagonal, LatticePolytope, Polygon, Polytope3, Simplex};
use crate::{Error, Result};

/// A base vertex together with a consecutively numbered list of simplices
/// that contain it and tile the polytope.
#[derive(Debug, Clone, PartialEq)]
pub struct PointedDecomposition {
    base_vertex: usize,
    dim: usize,
    points: Vec<Point>,
    simplices: Vec<Simplex>,
    geometry: Vec<SimplexGeometry>,
}

impl PointedDecomposition {
    /// Builds the decomposition from vertex lists; `sources[i]` names the
    /// facet that simplex `i` came from, for error reporting.
    fn from_lists(
        points: &[Point],
        base_vertex: usize,
        dim: usize,
        lists: Vec<Vec<usize>>,
        sources: &[usize],
    ) -> Result<Self> {
        let mut simplices = Vec::with_capacity(lists.len());
        let mut geometry = Vec::with_capacity(lists.len());
        for (i, vertex_ids) in lists.into_iter().enumerate() {
            let simplex = Simplex { vertex_ids, order_id: i + 1 };
            let g = simplex
                .geometry(points)
                .map_err(|_| Error::DegenerateCone { facet: sources.get(i).copied().unwrap_or(0) })?;
            simplices.push(simplex);
            geometry.push(g);
        }
        Ok(PointedDecomposition { base_vertex, dim, points: points.to_vec(), simplices, geometry })
    }

    pub fn base_vertex(&self) -> usize {
        self.base_vertex
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertex coordinates of the parent polytope.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Simplices in scan order; `simplices()[i].order_id == i + 1`.
    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Geometry of the simplex at position `i` (order id `i + 1`).
    pub fn geometry(&self, i: usize) -> &SimplexGeometry {
        &self.geometry[i]
    }

    pub fn signed_volumes(&self) -> Vec<f64> {
        self.geometry.iter().map(SimplexGeometry::signed_volume).collect()
    }

    /// Sum of absolute simplex volumes.
    pub fn total_volume(&self) -> f64 {
        self.geometry.iter().map(|g| g.signed_volume().abs()).sum()
    }
}

/// Apex plus one pyramid per facet that misses the apex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidDecomposition {
    pub base_vertex: usize,
    /// `(facet index, facet vertex cycle)` in shell order.
    pub pyramids: Vec<(usize, Vec<usize>)>,
}

/// Facet order whose first `split` entries contain the base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellOrder {
    pub facet_order: Vec<usize>,
    pub split: usize,
}

impl ShellOrder {
    pub fn base_facets(&self) -> &[usize] {
        &self.facet_order[..self.split]
    }

    pub fn other_facets(&self) -> &[usize] {
        &self.facet_order[self.split..]
    }
}

/// Labels `0, 1, ..., m` assigned to vertices; the base gets 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexNumbering {
    order: Vec<usize>,
    labels: BTreeMap<usize, usize>,
}

impl VertexNumbering {
    pub fn label(&self, vertex: usize) -> Option<usize> {
        self.labels.get(&vertex).copied()
    }

    pub fn vertex(&self, label: usize) -> Option<usize> {
        self.order.get(label).copied()
    }

    /// Vertices by label.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The vertex of `sequence` with the smallest label, if any is labelled.
    fn first_of(&self, sequence: &[usize]) -> Option<usize> {
        sequence.iter().copied().filter(|v| self.labels.contains_key(v)).min_by_key(|v| self.labels[v])
    }
}

fn rotate_to(cycle: &[usize], start: usize) -> Vec<usize> {
    let pos = cycle.iter().position(|&v| v == start).unwrap_or(0);
    cycle[pos..].iter().chain(&cycle[..pos]).copied().collect()
}

/// Triangles `(c_0, c_i, c_{i+1})` of the fan over `cycle` from `cycle[0]`.
fn fan(cycle: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (1..cycle.len().saturating_sub(1)).map(move |i| vec![cycle[0], cycle[i], cycle[i + 1]])
}

// ---------------------------------------------------------------------------
// Polygons

/// Fan triangulation from `base`: the cycle is rotated so the base comes
/// first and the triangles `tau_{1,i,i+1}` are emitted for `i = 2 .. n-1`.
pub fn fan_decompose(poly: &Polygon, base: usize) -> Result<PointedDecomposition> {
    if base >= poly.len() {
        return Err(Error::BaseOutOfRange { base, len: poly.len() });
    }
    let cycle = poly.cycle_from(base);
    let lists: Vec<Vec<usize>> = fan(&cycle).collect();
    PointedDecomposition::from_lists(poly.points(), base, 2, lists, &[])
}

// ---------------------------------------------------------------------------
// Semi-shelling

/// Whether `facets[candidate]` meets the union of `facets[prev]` in a
/// nonempty union of ridges of the candidate.
///
/// Pairwise intersections of faces are faces, so the union is a union of
/// ridges exactly when at least one pairwise intersection is a ridge and
/// every nonempty one lies inside such a ridge.
fn meets_in_ridges(
    facets: &[Vec<usize>],
    candidate: usize,
    prev: &[usize],
    is_ridge: &impl Fn(usize, &[usize]) -> bool,
) -> bool {
    let own = &facets[candidate];
    let mut ridges: Vec<Vec<usize>> = Vec::new();
    let mut others: Vec<Vec<usize>> = Vec::new();
    for &j in prev {
        let meet: Vec<usize> = own.iter().copied().filter(|v| facets[j].binary_search(v).is_ok()).collect();
        if meet.is_empty() {
            continue;
        }
        if is_ridge(candidate, &meet) {
            ridges.push(meet);
        } else {
            others.push(meet);
        }
    }
    !ridges.is_empty() && others.iter().all(|g| ridges.iter().any(|r| g.iter().all(|v| r.binary_search(v).is_ok())))
}

/// Position of the first facet in `order` violating the semi-shelling
/// condition, if any.
pub(crate) fn first_shell_violation(
    facets: &[Vec<usize>],
    order: &[usize],
    is_ridge: &impl Fn(usize, &[usize]) -> bool,
) -> Option<usize> {
    (1..order.len()).find(|&i| !meets_in_ridges(facets, order[i], &order[..i], is_ridge))
}

/// Semi-shells `facets` (sorted vertex sets) with those containing `base`
/// first. Greedy lowest-index choice with depth-first backtracking.
fn semi_shell(facets: &[Vec<usize>], base: usize, is_ridge: impl Fn(usize, &[usize]) -> bool) -> Result<ShellOrder> {
    let (with_base, without): (Vec<usize>, Vec<usize>) =
        (0..facets.len()).partition(|&f| facets[f].binary_search(&base).is_ok());
    let split = with_base.len();
    if split == 0 {
        return Err(Error::ShellingFailed);
    }

    fn extend(
        facets: &[Vec<usize>],
        classes: [&[usize]; 2],
        order: &mut Vec<usize>,
        used: &mut [bool],
        is_ridge: &impl Fn(usize, &[usize]) -> bool,
    ) -> bool {
        let pool = if order.len() < classes[0].len() { classes[0] } else { classes[1] };
        if order.len() == facets.len() {
            return true;
        }
        for &f in pool {
            if used[f] || (!order.is_empty() && !meets_in_ridges(facets, f, order, is_ridge)) {
                continue;
            }
            used[f] = true;
            order.push(f);
            if extend(facets, classes, order, used, is_ridge) {
                return true;
            }
            order.pop();
            used[f] = false;
        }
        false
    }

    let mut order = Vec::with_capacity(facets.len());
    let mut used = vec![false; facets.len()];
    if extend(facets, [&with_base, &without], &mut order, &mut used, &is_ridge) {
        Ok(ShellOrder { facet_order: order, split })
    } else {
        Err(Error::ShellingFailed)
    }
}

/// Numbers vertices: `base -> 0`, then along `order`, each facet's
/// sequence rotated to its lowest-labelled vertex, new vertices labelled
/// consecutively on first appearance.
fn number_along(base: usize, order: &[usize], sequence: impl Fn(usize) -> Vec<usize>) -> VertexNumbering {
    let mut numbering = VertexNumbering { order: vec![base], labels: BTreeMap::from([(base, 0)]) };
    for &f in order {
        let seq = sequence(f);
        let start = numbering.first_of(&seq).unwrap_or(seq[0]);
        for v in rotate_to(&seq, start) {
            if !numbering.labels.contains_key(&v) {
                numbering.labels.insert(v, numbering.order.len());
                numbering.order.push(v);
            }
        }
    }
    numbering
}

// ---------------------------------------------------------------------------
// 3-polytopes

fn sorted_facets(p: &Polytope3) -> Vec<Vec<usize>> {
    p.facets()
        .iter()
        .map(|c| {
            let mut s = c.clone();
            s.sort_unstable();
            s
        })
        .collect()
}

fn is_cycle_edge(cycle: &[usize], pair: &[usize]) -> bool {
    let m = cycle.len();
    pair.len() == 2
        && (0..m).any(|k| {
            let (a, b) = (cycle[k], cycle[(k + 1) % m]);
            (a.min(b), a.max(b)) == (pair[0], pair[1])
        })
}

fn check_base(base: usize, len: usize) -> Result<()> {
    if base >= len {
        return Err(Error::BaseOutOfRange { base, len });
    }
    Ok(())
}

/// Semi-shelling of the facets of `p`: facets containing `base` first.
pub fn shell_facets(p: &Polytope3, base: usize) -> Result<ShellOrder> {
    check_base(base, p.points().len())?;
    semi_shell(&sorted_facets(p), base, |f, g| is_cycle_edge(&p.facets()[f], g))
}

/// Whether every prefix of `shell` satisfies the semi-shelling condition.
pub fn shell_is_valid(p: &Polytope3, shell: &ShellOrder) -> bool {
    first_shell_violation(&sorted_facets(p), &shell.facet_order, &|f, g| is_cycle_edge(&p.facets()[f], g)).is_none()
}

/// Vertex numbering along the shell order, following each facet's outward
/// counterclockwise cycle from its lowest-labelled vertex.
pub fn number_vertices(p: &Polytope3, base: usize, shell: &ShellOrder) -> VertexNumbering {
    number_along(base, &shell.facet_order, |f| p.facets()[f].clone())
}

/// One pyramid with apex `base` over each facet missing `base`, in shell order.
pub fn pyramid_decompose(p: &Polytope3, base: usize) -> Result<PyramidDecomposition> {
    let shell = shell_facets(p, base)?;
    let pyramids = shell.other_facets().iter().map(|&f| (f, p.facets()[f].clone())).collect();
    Ok(PyramidDecomposition { base_vertex: base, pyramids })
}

/// Base-pointed tetrahedral decomposition of a 3-polytope.
///
/// Each facet missing the base (in shell order) is fan-triangulated from its
/// lowest-labelled vertex and every triangle is coned with the base, giving
/// tetrahedra `[base, a, b, c]` with positive orientation.
pub fn simplicial_decompose(p: &Polytope3, base: usize) -> Result<PointedDecomposition> {
    let shell = shell_facets(p, base)?;
    let numbering = number_vertices(p, base, &shell);
    let mut lists = Vec::new();
    let mut sources = Vec::new();
    for &f in shell.other_facets() {
        let cycle = &p.facets()[f];
        let first = numbering.first_of(cycle).expect("every vertex is numbered");
        for tri in fan(&rotate_to(cycle, first)) {
            lists.push(core::iter::once(base).chain(tri).collect());
            sources.push(f);
        }
    }
    PointedDecomposition::from_lists(p.points(), base, 3, lists, &sources)
}

// ---------------------------------------------------------------------------
// Face lattices

/// Ordered orthonormal frame of a face's direction space; fixes the face's
/// orientation.
type Frame = Vec<Vec<f64>>;

struct LatticeWalk<'a> {
    poly: &'a LatticePolytope,
    scale: f64,
}

impl LatticeWalk<'_> {
    fn vertices(&self, d: usize, i: usize) -> &[usize] {
        &self.poly.lattice().face(d, i).vertices
    }

    fn centroid(&self, ids: &[usize]) -> Vec<f64> {
        let pts = self.poly.points();
        let mut c = vec![0.0; self.poly.dim()];
        for &v in ids {
            c.iter_mut().zip(pts[v].coords()).for_each(|(s, x)| *s += x);
        }
        c.iter_mut().for_each(|s| *s /= ids.len() as f64);
        c
    }

    /// Induced boundary orientation: `(outward normal, facet frame)` is
    /// positively oriented with respect to `parent`.
    fn facet_frame(&self, parent: &Frame, d: usize, face: usize, facet: usize) -> Frame {
        let ids = self.vertices(d - 1, facet);
        let mut basis = affine_basis(self.poly.points(), ids, self.scale);
        if basis.is_empty() {
            return basis;
        }
        let outward = crate::linalg::reject(&sub(&self.centroid(ids), &self.centroid(self.vertices(d, face))), &basis);
        let cols: Vec<&[f64]> = core::iter::once(outward.as_slice()).chain(basis.iter().map(Vec::as_slice)).collect();
        let n = parent.len();
        let m: Vec<f64> = parent.iter().flat_map(|row| cols.iter().map(move |c| dot(row, c))).collect();
        if det(&m, n) < 0.0 {
            basis[0].iter_mut().for_each(|x| *x = -*x);
        }
        basis
    }

    /// Cycle of the 2-face `i`, counterclockwise with respect to `frame`.
    fn oriented_cycle(&self, i: usize, frame: &Frame) -> Vec<usize> {
        let mut cycle = self.poly.lattice().polygon_cycle(i);
        let pts = self.poly.points();
        let u = sub(pts[cycle[1]].coords(), pts[cycle[0]].coords());
        let w = sub(pts[cycle[2]].coords(), pts[cycle[0]].coords());
        let m = [dot(&frame[0], &u), dot(&frame[0], &w), dot(&frame[1], &u), dot(&frame[1], &w)];
        if det(&m, 2) < 0.0 {
            cycle[1..].reverse();
        }
        cycle
    }

    fn facet_sets(&self, d: usize, face: usize) -> Vec<Vec<usize>> {
        let lattice = self.poly.lattice();
        lattice.face(d, face).facets.iter().map(|&g| lattice.face(d - 1, g).vertices.clone()).collect()
    }

    /// `is_ridge(k, set)`: `set` is the vertex set of a facet of the `k`-th
    /// facet of `face`.
    fn ridge_test(&self, d: usize, face: usize) -> impl Fn(usize, &[usize]) -> bool + '_ {
        let lattice = self.poly.lattice();
        let facets = lattice.face(d, face).facets.clone();
        move |k, set| lattice.face(d - 1, facets[k]).facets.iter().any(|&r| lattice.face(d - 2, r).vertices == set)
    }

    fn shell(&self, d: usize, face: usize, anchor: usize) -> Result<ShellOrder> {
        semi_shell(&self.facet_sets(d, face), anchor, self.ridge_test(d, face))
    }

    /// Shell order (as positions in the face's facet list), numbering and
    /// facet frames for the `d`-face `face` pointed at `anchor`, `d >= 3`.
    fn plan(
        &self,
        d: usize,
        face: usize,
        anchor: usize,
        frame: &Frame,
    ) -> Result<(ShellOrder, VertexNumbering, Vec<Frame>)> {
        let lattice = self.poly.lattice();
        let facets = &lattice.face(d, face).facets;
        let frames: Vec<Frame> = facets.iter().map(|&g| self.facet_frame(frame, d, face, g)).collect();
        let shell = self.shell(d, face, anchor)?;
        let numbering = number_along(anchor, &shell.facet_order, |k| {
            if d - 1 == 2 {
                self.oriented_cycle(facets[k], &frames[k])
            } else {
                self.vertices(d - 1, facets[k]).to_vec()
            }
        });
        Ok((shell, numbering, frames))
    }

    /// Simplices of the `d`-face `face` pointed at `anchor`, each listed
    /// anchor first.
    fn decompose(&self, d: usize, face: usize, anchor: usize, frame: &Frame) -> Result<Vec<Vec<usize>>> {
        match d {
            0 => Ok(vec![vec![anchor]]),
            1 => {
                let v = self.vertices(1, face);
                let other = if v[0] == anchor { v[1] } else { v[0] };
                Ok(vec![vec![anchor, other]])
            }
            2 => {
                let cycle = self.oriented_cycle(face, frame);
                Ok(fan(&rotate_to(&cycle, anchor)).collect())
            }
            _ => {
                let (shell, numbering, frames) = self.plan(d, face, anchor, frame)?;
                let facets = &self.poly.lattice().face(d, face).facets;
                let mut out = Vec::new();
                for &k in shell.other_facets() {
                    let ids = self.vertices(d - 1, facets[k]);
                    let first = numbering.first_of(ids).expect("every vertex is numbered");
                    for s in self.decompose(d - 1, facets[k], first, &frames[k])? {
                        out.push(core::iter::once(anchor).chain(s).collect());
                    }
                }
                Ok(out)
            }
        }
    }

    fn identity_frame(&self) -> Frame {
        let k = self.poly.dim();
        (0..k).map(|i| (0..k).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect()
    }
}

fn walk(p: &LatticePolytope) -> LatticeWalk<'_> {
    LatticeWalk { poly: p, scale: bbox_diagonal(p.points()) }
}

/// Semi-shelling of the facets of a lattice polytope (facet indices into
/// layer `dim - 1`).
pub fn shell_lattice_facets(p: &LatticePolytope, base: usize) -> Result<ShellOrder> {
    check_base(base, p.points().len())?;
    let k = p.dim();
    if k < 2 {
        return Ok(ShellOrder { facet_order: (0..p.lattice().layer(0).len()).collect(), split: 1 });
    }
    let w = walk(p);
    let shell = w.shell(k, 0, base)?;
    let facets = &p.lattice().face(k, 0).facets;
    Ok(ShellOrder { facet_order: shell.facet_order.iter().map(|&i| facets[i]).collect(), split: shell.split })
}

/// Whether every prefix of `shell` (facet indices) satisfies the
/// semi-shelling condition in the lattice.
#[allow(clippy::let_and_return)]
pub fn lattice_shell_is_valid(p: &LatticePolytope, shell: &ShellOrder) -> bool {
    let k = p.dim();
    if k < 2 {
        return true;
    }
    let w = walk(p);
    // top face lists its facets as 0..f in layer order
    let is_ridge = w.ridge_test(k, 0);
    let valid = first_shell_violation(&w.facet_sets(k, 0), &shell.facet_order, &is_ridge).is_none();
    valid
}

/// Top-level vertex numbering of a lattice polytope for `shell`. 2-face
/// facets contribute their oriented cycles, higher facets their vertices in
/// index order.
pub fn number_lattice_vertices(p: &LatticePolytope, base: usize, shell: &ShellOrder) -> VertexNumbering {
    let k = p.dim();
    let w = walk(p);
    let frame = w.identity_frame();
    number_along(base, &shell.facet_order, |g| {
        if k == 3 {
            w.oriented_cycle(g, &w.facet_frame(&frame, k, 0, g))
        } else if k == 2 {
            let v = w.vertices(1, g);
            vec![v[0], v[1]]
        } else {
            w.vertices(k - 1, g).to_vec()
        }
    })
}

/// Base-pointed simplicial decomposition of a polytope given by its face
/// lattice, in any dimension.
///
/// For `k = 1` the edge itself; for `k = 2` the fan from the base; above
/// that the facets missing the base are decomposed recursively (each
/// pointed at its lowest-labelled vertex, in shell order) and every
/// resulting simplex is coned with the base. Facet orientations are the
/// induced boundary orientations, so for `k <= 3` the output matches
/// [`fan_decompose`] and [`simplicial_decompose`].
pub fn recursive_decompose(p: &LatticePolytope, base: usize) -> Result<PointedDecomposition> {
    check_base(base, p.points().len())?;
    let k = p.dim();
    let w = walk(p);
    let frame = w.identity_frame();
    let lists = w.decompose(k, 0, base, &frame)?;
    // recover the top-level facet of each simplex for error reporting
    let facet_layer = p.lattice().layer(k.saturating_sub(1));
    let sources: Vec<usize> = lists
        .iter()
        .map(|s| {
            let rest: BTreeSet<usize> = s[1..].iter().copied().collect();
            facet_layer.iter().position(|f| rest.iter().all(|v| f.vertices.binary_search(v).is_ok())).unwrap_or(0)
        })
        .collect();
    PointedDecomposition::from_lists(p.points(), base, k, lists, &sources)
}
