//! Validated polytopes built from documents, with a uniform interface over
//! polygons, 3-polytopes and face lattices.

use barysparse_core::decompose::{
    lattice_shell_is_valid, number_lattice_vertices, shell_is_valid, shell_lattice_facets,
};
use barysparse_core::polytope::{bbox_diagonal, HalfSpace};
use barysparse_core::{
    fan_decompose, number_vertices, recursive_decompose, shell_facets, simplicial_decompose, validate_polygon,
    validate_polytope3, FaceLattice, LatticePolytope, Point, PointedDecomposition, Polygon, Polytope3, ShellOrder,
    VertexNumbering,
};

use crate::{CliError, PolytopeDocument};

#[derive(Debug, Clone)]
pub enum Model {
    /// A polygon with its edge lattice, used for shelling.
    Polygon(Polygon, LatticePolytope),
    Solid(Polytope3),
    Lattice(LatticePolytope),
}

/// A pointed decomposition together with the shell order and vertex
/// numbering that produced it.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub shell: ShellOrder,
    /// Vertices in label order: the vertex labelled `i` is `numbering[i]`.
    pub numbering: Vec<usize>,
    pub pointed: PointedDecomposition,
}

fn labels(n: VertexNumbering) -> Vec<usize> {
    n.order().to_vec()
}

impl Model {
    pub fn from_document(doc: &PolytopeDocument) -> Result<Self, CliError> {
        let points = doc.vertices.iter().map(|row| Point::new(row.clone())).collect::<Result<Vec<_>, _>>()?;
        let model = match (doc.dim, &doc.facets, &doc.face_lattice) {
            (2, None, None) => {
                let poly = validate_polygon(points)?;
                let lattice = LatticePolytope::new(poly.points().to_vec(), FaceLattice::from_polygon(&poly))?;
                Model::Polygon(poly, lattice)
            }
            (2, None, Some(layers)) => {
                let poly = validate_polygon(points)?;
                let lattice = FaceLattice::new(poly.len(), 2, layers.clone())?;
                let lattice = LatticePolytope::new(poly.points().to_vec(), lattice)?;
                Model::Polygon(poly, lattice)
            }
            (3, Some(facets), None) => Model::Solid(validate_polytope3(points, facets.clone())?),
            (1, None, None) => {
                let n = points.len();
                Model::Lattice(LatticePolytope::new(points, FaceLattice::new(n, 1, Vec::new())?)?)
            }
            (dim, None, Some(layers)) => {
                let lattice = FaceLattice::new(points.len(), dim, layers.clone())?;
                Model::Lattice(LatticePolytope::new(points, lattice)?)
            }
            _ => return Err(CliError::document("facets", "unsupported combination of dim, facets and face_lattice")),
        };
        Ok(model)
    }

    pub fn dim(&self) -> usize {
        match self {
            Model::Polygon(..) => 2,
            Model::Solid(_) => 3,
            Model::Lattice(p) => p.dim(),
        }
    }

    pub fn points(&self) -> &[Point] {
        match self {
            Model::Polygon(p, _) => p.points(),
            Model::Solid(p) => p.points(),
            Model::Lattice(p) => p.points(),
        }
    }

    pub fn halfspaces(&self) -> Vec<HalfSpace> {
        match self {
            Model::Polygon(p, _) => p.halfspaces(),
            Model::Solid(p) => p.halfspaces(),
            Model::Lattice(p) => p.halfspaces(),
        }
    }

    pub fn bbox_diagonal(&self) -> f64 {
        bbox_diagonal(self.points())
    }

    /// Volume computed without any decomposition: shoelace, divergence
    /// theorem or the recursive pyramid formula.
    pub fn volume(&self) -> f64 {
        match self {
            Model::Polygon(p, _) => p.area(),
            Model::Solid(p) => p.volume(),
            Model::Lattice(p) => p.volume(),
        }
    }

    /// Vertex lists of the facets, indexed as in the shell order.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        match self {
            Model::Polygon(_, l) => l.lattice().layer(1).iter().map(|f| f.vertices.clone()).collect(),
            Model::Solid(p) => p.facets().to_vec(),
            Model::Lattice(p) => p.lattice().layer(p.dim() - 1).iter().map(|f| f.vertices.clone()).collect(),
        }
    }

    pub fn is_simplex(&self) -> bool {
        self.points().len() == self.dim() + 1
    }

    pub fn decompose(&self, base: usize) -> Result<Decomposition, CliError> {
        let d = match self {
            Model::Polygon(poly, l) => {
                let shell = shell_lattice_facets(l, base)?;
                // a fan labels the vertices counterclockwise from the base
                Decomposition { numbering: poly.cycle_from(base), pointed: fan_decompose(poly, base)?, shell }
            }
            Model::Solid(p) => {
                let shell = shell_facets(p, base)?;
                Decomposition {
                    numbering: labels(number_vertices(p, base, &shell)),
                    pointed: simplicial_decompose(p, base)?,
                    shell,
                }
            }
            Model::Lattice(p) => {
                let shell = shell_lattice_facets(p, base)?;
                Decomposition {
                    numbering: labels(number_lattice_vertices(p, base, &shell)),
                    pointed: recursive_decompose(p, base)?,
                    shell,
                }
            }
        };
        Ok(d)
    }

    /// Re-checks the ridge condition for every prefix of `shell`.
    pub fn shell_is_valid(&self, shell: &ShellOrder) -> bool {
        match self {
            Model::Polygon(_, l) | Model::Lattice(l) => lattice_shell_is_valid(l, shell),
            Model::Solid(p) => shell_is_valid(p, shell),
        }
    }

    pub fn polygon(&self) -> Option<&Polygon> {
        match self {
            Model::Polygon(p, _) => Some(p),
            _ => None,
        }
    }
}
