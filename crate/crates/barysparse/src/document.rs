//! The polytope document: a JSON map of arrays.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "name": "square",
//!   "vertices": [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]],
//!   "base_vertex": 0
//! }
//! ```
//!
//! `facets` lists vertex cycles (3-polytopes, counterclockwise from
//! outside). `face_lattice` lists the layers of faces of dimension
//! `1 .. dim - 1`; each face is given by the indices of its facets in the
//! layer below, and an edge by its two vertex indices.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face_lattice: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_vertex: Option<usize>,
}

impl PolytopeDocument {
    /// Parses and structurally checks a document. Geometric validation
    /// happens when the document is turned into a [`crate::Model`].
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: PolytopeDocument = serde_json::from_str(text).map_err(|e| CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
        })?;
        doc.check()?;
        Ok(doc)
    }

    fn check(&self) -> Result<(), CliError> {
        let n = self.vertices.len();
        if self.dim == 0 {
            return Err(CliError::document("dim", "must be at least 1"));
        }
        for (i, row) in self.vertices.iter().enumerate() {
            if row.len() != self.dim {
                return Err(CliError::document(
                    format!("vertices[{i}]"),
                    format!("expected {} coordinates, found {}", self.dim, row.len()),
                ));
            }
        }
        if let Some(facets) = &self.facets {
            if self.dim != 3 {
                return Err(CliError::document("facets", "only used for dim 3; give a face_lattice instead"));
            }
            for (f, cycle) in facets.iter().enumerate() {
                if let Some(&v) = cycle.iter().find(|&&v| v >= n) {
                    return Err(CliError::document(
                        format!("facets[{f}]"),
                        format!("vertex index {v} out of range ({n} vertices)"),
                    ));
                }
            }
        }
        if let Some(layers) = &self.face_lattice {
            if self.dim < 2 {
                return Err(CliError::document("face_lattice", "not used for dim 1"));
            }
            if self.facets.is_some() {
                return Err(CliError::document("face_lattice", "give either facets or face_lattice, not both"));
            }
            if layers.len() + 1 != self.dim {
                return Err(CliError::document(
                    "face_lattice",
                    format!("expected {} layers, found {}", self.dim - 1, layers.len()),
                ));
            }
            let mut below = n;
            for (d, layer) in layers.iter().enumerate() {
                for (i, face) in layer.iter().enumerate() {
                    if let Some(&j) = face.iter().find(|&&j| j >= below) {
                        return Err(CliError::document(
                            format!("face_lattice[{d}][{i}]"),
                            format!("index {j} out of range ({below} faces below)"),
                        ));
                    }
                }
                below = layer.len();
            }
        }
        if self.dim >= 4 && self.face_lattice.is_none() {
            return Err(CliError::document("face_lattice", format!("required for dim {}", self.dim)));
        }
        if self.dim == 3 && self.facets.is_none() && self.face_lattice.is_none() {
            return Err(CliError::document("facets", "dim 3 needs facets or a face_lattice"));
        }
        if let Some(b) = self.base_vertex {
            if b >= n {
                return Err(CliError::document("base_vertex", format!("index {b} out of range ({n} vertices)")));
            }
        }
        Ok(())
    }

    /// Canonical text: fixed field order, one vertex row or face per line,
    /// shortest round-trip float representation.
    pub fn to_text(&self) -> String {
        let mut out = String::from("{\n");
        let mut fields: Vec<String> = vec![format!("  \"dim\": {}", self.dim)];
        if let Some(name) = &self.name {
            fields.push(format!("  \"name\": {}", json(name)));
        }
        fields.push(format!("  \"vertices\": {}", block(self.vertices.iter().map(json), "    ")));
        if let Some(f) = &self.facets {
            fields.push(format!("  \"facets\": {}", block(f.iter().map(json), "    ")));
        }
        if let Some(layers) = &self.face_lattice {
            let inner: Vec<String> = layers.iter().map(|l| block(l.iter().map(json), "      ")).collect();
            fields.push(format!("  \"face_lattice\": {}", block(inner.into_iter(), "    ")));
        }
        if let Some(b) = self.base_vertex {
            fields.push(format!("  \"base_vertex\": {b}"));
        }
        let _ = write!(out, "{}\n}}\n", fields.join(",\n"));
        out
    }
}

fn block(items: impl Iterator<Item = String>, indent: &str) -> String {
    let items: Vec<String> = items.map(|s| format!("{indent}{s}")).collect();
    if items.is_empty() {
        return "[]".into();
    }
    let close = &indent[..indent.len() - 2];
    format!("[\n{}\n{close}]", items.join(",\n"))
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serialises")
}
