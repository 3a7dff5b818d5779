use std::fmt::Write;

use barysparse_core::{affine_coordinates, pointed_coordinates, Point, SimplexGeometry, DEFAULT_TOL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Outcome;
use crate::{CliError, Model, PolytopeDocument};

/// Name of the sampling generator, printed in every report.
pub const RNG_NAME: &str = "chacha8";

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
    pub base: Option<usize>,
    pub tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { samples: 1000, seed: 0, base: None, tol: DEFAULT_TOL }
    }
}

/// Result of one checked property.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Uniform samples from the interior of `model`, by rejection from its
/// bounding box.
pub fn sample_interior(model: &Model, count: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let dim = model.dim();
    let pts = model.points();
    let lo: Vec<f64> = (0..dim).map(|i| pts.iter().map(|p| p[i]).fold(f64::INFINITY, f64::min)).collect();
    let hi: Vec<f64> = (0..dim).map(|i| pts.iter().map(|p| p[i]).fold(f64::NEG_INFINITY, f64::max)).collect();
    let hs = model.halfspaces();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x: Vec<f64> = (0..dim).map(|i| rng.gen_range(lo[i]..=hi[i])).collect();
        if hs.iter().all(|h| h.signed_distance(&x) < 0.0) {
            out.push(x);
        }
    }
    out
}

/// Runs every property on `opts.samples` seeded interior points.
pub fn checks(model: &Model, base: usize, opts: &VerifyOptions) -> Result<Vec<Check>, CliError> {
    let d = model.decompose(base)?;
    let pd = &d.pointed;
    let dim = model.dim();
    let diag = model.bbox_diagonal();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let samples = sample_interior(model, opts.samples, &mut rng);
    let whole = model.is_simplex().then(|| SimplexGeometry::new(model.points().to_vec())).transpose()?;

    let mut located = 0usize;
    let (mut sum_err, mut rec_err, mut max_nz) = (0.0f64, 0.0f64, 0usize);
    let mut support_ok = true;
    let mut overlaps = 0usize;
    let mut unique_err = 0.0f64;
    for x in &samples {
        let p = Point::new(x.clone())?;
        let strict =
            (0..pd.len()).filter(|&i| affine_coordinates(pd.geometry(i), &p).is_ok_and(|c| c.min() > opts.tol)).count();
        if strict > 1 {
            overlaps += 1;
        }
        let Ok(c) = pointed_coordinates(pd, &p, opts.tol) else { continue };
        located += 1;
        sum_err = sum_err.max((c.sum() - 1.0).abs());
        let back = c.reconstruct(model.points());
        rec_err = back.iter().zip(x).fold(rec_err, |m, (a, b)| m.max((a - b).abs()));
        max_nz = max_nz.max(c.entries.len());
        let simplex = &pd.simplices()[c.order_id - 1];
        support_ok &= c.entries.iter().all(|(v, _)| simplex.vertex_ids.contains(v));
        if let Some(g) = &whole {
            let exact = affine_coordinates(g, &p)?;
            unique_err = exact.coeffs().iter().enumerate().fold(unique_err, |m, (v, e)| m.max((c.weight(v) - e).abs()));
        }
    }

    let oracle = model.volume();
    let total: f64 = pd.signed_volumes().iter().map(|v| v.abs()).sum();
    let vol_err = (total - oracle).abs() / oracle;
    let positive = pd.signed_volumes().iter().all(|&v| v > 0.0);
    let common_base = pd.simplices().iter().all(|s| s.vertex_ids.contains(&base));

    let mut out = vec![
        Check { name: "partition-of-unity", passed: sum_err <= 1e-9, detail: format!("max |sum - 1| {sum_err:.3e}") },
        Check {
            name: "reconstruction",
            passed: rec_err <= 1e-9 * diag,
            detail: format!("max error {rec_err:.3e} (limit {:.3e})", 1e-9 * diag),
        },
        Check {
            name: "sparsity",
            passed: max_nz <= dim + 1 && support_ok,
            detail: format!("max nonzeros {max_nz} (limit {})", dim + 1),
        },
        Check {
            name: "volume-conservation",
            passed: vol_err <= 1e-9 && positive,
            detail: format!("simplices {total} oracle {oracle} relative error {vol_err:.3e}"),
        },
        Check {
            name: "cover",
            passed: located == samples.len(),
            detail: format!("located {located}/{}", samples.len()),
        },
        Check {
            name: "interior-disjointness",
            passed: overlaps == 0,
            detail: format!("overlapping samples {overlaps}"),
        },
        Check {
            name: "shell-condition",
            passed: model.shell_is_valid(&d.shell),
            detail: format!("{} facets, {} containing the base", d.shell.facet_order.len(), d.shell.split),
        },
        Check { name: "common-wall", passed: common_base, detail: format!("every simplex contains vertex {base}") },
    ];
    if whole.is_some() {
        out.push(Check {
            name: "uniqueness",
            passed: unique_err <= 1e-12,
            detail: format!("max deviation {unique_err:.3e}"),
        });
    }
    Ok(out)
}

pub fn run(doc: &PolytopeDocument, opts: &VerifyOptions) -> Result<Outcome, CliError> {
    let model = Model::from_document(doc)?;
    let base = opts.base.or(doc.base_vertex).unwrap_or(0);
    let results = checks(&model, base, opts)?;
    let mut text = String::new();
    let _ = writeln!(text, "name {}", doc.name.as_deref().unwrap_or("-"));
    let _ = writeln!(text, "rng {RNG_NAME} seed {}", opts.seed);
    let _ = writeln!(text, "samples {}", opts.samples);
    let _ = writeln!(text, "base {base}");
    for c in &results {
        let _ = writeln!(text, "{} {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let failed = results.iter().find(|c| !c.passed);
    let _ = writeln!(text, "result {}", if failed.is_some() { "FAIL" } else { "PASS" });
    Ok(Outcome { text, failure: failed.map(|c| CliError::VerifyFailed(c.name.to_string())) })
}
