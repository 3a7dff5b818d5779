use std::fmt::Write;

use barysparse_core::{cartographic_coordinates, pointed_coordinates, Error, Point, DEFAULT_TOL};
use rayon::prelude::*;

use super::{join, Outcome};
use crate::{CliError, Model, PolytopeDocument};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Text,
}

#[derive(Debug, Clone)]
pub struct CoordsOptions {
    pub base: Option<usize>,
    pub tol: f64,
    pub cartographic: bool,
    pub strict: bool,
    pub format: Format,
}

impl Default for CoordsOptions {
    fn default() -> Self {
        CoordsOptions { base: None, tol: DEFAULT_TOL, cartographic: false, strict: false, format: Format::Csv }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Outside,
}

/// Coordinates of one query point.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordinateRecord {
    pub point: Vec<f64>,
    pub status: Status,
    /// Containing simplex; `None` for cartographic coordinates and outside points.
    pub simplex: Option<usize>,
    /// Nonzero `(vertex, weight)` pairs by vertex index.
    pub entries: Vec<(usize, f64)>,
}

/// Evaluates every query point, in parallel, preserving input order.
pub fn evaluate(
    model: &Model,
    base: usize,
    points: &[Vec<f64>],
    opts: &CoordsOptions,
) -> Result<Vec<CoordinateRecord>, CliError> {
    if opts.cartographic {
        let poly = model
            .polygon()
            .ok_or_else(|| CliError::document("dim", "cartographic coordinates are defined for polygons only"))?;
        return points
            .par_iter()
            .map(|x| {
                let outside = || CoordinateRecord {
                    point: x.clone(),
                    status: Status::Outside,
                    simplex: None,
                    entries: Vec::new(),
                };
                match cartographic_coordinates(poly, &Point::new(x.clone())?, opts.tol) {
                    Ok(w) => Ok(CoordinateRecord {
                        point: x.clone(),
                        status: Status::Ok,
                        simplex: None,
                        entries: w.into_iter().enumerate().filter(|e| e.1 > 0.0).collect(),
                    }),
                    Err(Error::Outside { .. }) => Ok(outside()),
                    Err(e) => Err(e.into()),
                }
            })
            .collect();
    }
    let d = model.decompose(base)?.pointed;
    points
        .par_iter()
        .map(|x| match pointed_coordinates(&d, &Point::new(x.clone())?, opts.tol) {
            Ok(c) => Ok(CoordinateRecord {
                point: x.clone(),
                status: Status::Ok,
                simplex: Some(c.order_id),
                entries: c.entries,
            }),
            Err(Error::Outside { .. }) => {
                Ok(CoordinateRecord { point: x.clone(), status: Status::Outside, simplex: None, entries: Vec::new() })
            }
            Err(e) => Err(e.into()),
        })
        .collect()
}

pub fn format_records(records: &[CoordinateRecord], dim: usize, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            let mut header: Vec<String> = (0..dim).map(|i| format!("x{i}")).collect();
            header.extend(["status".into(), "simplex_id".into(), "weights".into()]);
            let _ = writeln!(out, "{}", header.join(","));
            for r in records {
                let mut cells: Vec<String> = r.point.iter().map(f64::to_string).collect();
                cells.push(status_name(r.status).into());
                cells.push(r.simplex.map(|s| s.to_string()).unwrap_or_default());
                cells.extend(r.entries.iter().map(|(v, w)| format!("v{v}={w}")));
                let _ = writeln!(out, "{}", cells.join(","));
            }
        }
        Format::Text => {
            for r in records {
                let _ = write!(out, "point {} status {}", join(&r.point), status_name(r.status));
                if let Some(s) = r.simplex {
                    let _ = write!(out, " simplex {s}");
                }
                if !r.entries.is_empty() {
                    let _ = write!(out, " weights {}", join(r.entries.iter().map(|(v, w)| format!("v{v}={w}"))));
                }
                out.push('\n');
            }
        }
    }
    out
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Outside => "outside",
    }
}

/// One record per query point. With `strict`, any outside point turns into
/// a failure after the table is produced.
pub fn run(doc: &PolytopeDocument, points: &[Vec<f64>], opts: &CoordsOptions) -> Result<Outcome, CliError> {
    let model = Model::from_document(doc)?;
    let base = opts.base.or(doc.base_vertex).unwrap_or(0);
    let records = evaluate(&model, base, points, opts)?;
    let text = format_records(&records, model.dim(), opts.format);
    let outside = records.iter().filter(|r| r.status == Status::Outside).count();
    let failure =
        (opts.strict && outside > 0).then_some(CliError::StrictOutside { count: outside, total: records.len() });
    Ok(Outcome { text, failure })
}
