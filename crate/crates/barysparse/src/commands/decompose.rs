use std::fmt::Write;

use super::join;
use crate::{CliError, Model, PolytopeDocument};

/// Lists the shell order, the vertex numbering and the numbered simplices.
///
/// ```text
/// name hexagon
/// dim 2
/// base 0
/// facets 6
///   F0 0 1
///   ...
/// shell F0 F5 | F1 F2 F3 F4
/// numbering 0 1 2 3 4 5
/// simplices 4
///   1: 0 1 2 vol 0.4330127018922193
/// ```
pub fn run(doc: &PolytopeDocument, base: Option<usize>) -> Result<String, CliError> {
    let model = Model::from_document(doc)?;
    let base = base.or(doc.base_vertex).unwrap_or(0);
    let d = model.decompose(base)?;
    let facets = model.facets();

    let mut out = String::new();
    let _ = writeln!(out, "name {}", doc.name.as_deref().unwrap_or("-"));
    let _ = writeln!(out, "dim {}", model.dim());
    let _ = writeln!(out, "base {base}");
    let _ = writeln!(out, "facets {}", facets.len());
    for (i, f) in facets.iter().enumerate() {
        let _ = writeln!(out, "  F{i} {}", join(f));
    }
    let tag = |fs: &[usize]| join(fs.iter().map(|f| format!("F{f}")));
    let _ = writeln!(out, "shell {} | {}", tag(d.shell.base_facets()), tag(d.shell.other_facets()));
    let _ = writeln!(out, "numbering {}", join(&d.numbering));
    let _ = writeln!(out, "simplices {}", d.pointed.len());
    for (s, vol) in d.pointed.simplices().iter().zip(d.pointed.signed_volumes()) {
        let _ = writeln!(out, "  {}: {} vol {vol}", s.order_id, join(&s.vertex_ids));
    }
    let _ = writeln!(out, "volume {}", d.pointed.total_volume());
    Ok(out)
}
