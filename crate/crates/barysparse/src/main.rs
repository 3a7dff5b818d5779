use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use barysparse::commands::coords::{CoordsOptions, Format};
use barysparse::commands::verify::VerifyOptions;
use barysparse::commands::{coords, decompose, render, verify, Outcome};
use barysparse::points::{parse_points, parse_row};
use barysparse::{CliError, PolytopeDocument};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Pointed decompositions and sparse barycentric coordinates of convex polytopes.
#[derive(Parser)]
#[command(name = "barysparse", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the shell order, vertex numbering and numbered simplices.
    Decompose {
        #[command(flatten)]
        common: Common,
    },
    /// Compute pointed (or cartographic) coordinates of query points.
    Coords {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        queries: Queries,
        #[arg(long, default_value_t = barysparse_core::DEFAULT_TOL)]
        tol: f64,
        /// Average the pointed coordinates over every base vertex (polygons only).
        #[arg(long)]
        cartographic: bool,
        /// Exit with status 4 if any point is outside.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Check the decomposition and coordinate invariants on random samples.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = barysparse_core::DEFAULT_TOL)]
        tol: f64,
    },
    /// Draw a polygon's fan as SVG.
    Render {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        queries: Queries,
    },
}

#[derive(Args)]
struct Common {
    /// Polytope document (JSON).
    input: PathBuf,
    /// Base vertex; defaults to the document's base_vertex, then 0.
    #[arg(long)]
    base: Option<usize>,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Queries {
    /// File with one query point per line.
    points: Option<PathBuf>,
    /// Inline query point, e.g. --point "0.5 0.25". Repeatable.
    #[arg(long = "point", allow_hyphen_values = true)]
    inline: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Text,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load(path: &Path) -> Result<PolytopeDocument, CliError> {
    PolytopeDocument::parse(&read(path)?)
}

fn queries(q: &Queries, dim: usize) -> Result<Vec<Vec<f64>>, CliError> {
    let mut rows = match &q.points {
        Some(path) => parse_points(&read(path)?, dim)?,
        None => Vec::new(),
    };
    for (i, raw) in q.inline.iter().enumerate() {
        rows.push(parse_row(raw, dim).map_err(|message| CliError::PointRow { line: i + 1, message })?);
    }
    Ok(rows)
}

fn execute(command: &Command) -> Result<(Outcome, Option<&Path>), CliError> {
    Ok(match command {
        Command::Decompose { common } => {
            (decompose::run(&load(&common.input)?, common.base)?.into(), common.out.as_deref())
        }
        Command::Coords { common, queries: q, tol, cartographic, strict, format } => {
            let doc = load(&common.input)?;
            let points = queries(q, doc.dim)?;
            let opts = CoordsOptions {
                base: common.base,
                tol: *tol,
                cartographic: *cartographic,
                strict: *strict,
                format: match format {
                    OutputFormat::Csv => Format::Csv,
                    OutputFormat::Text => Format::Text,
                },
            };
            (coords::run(&doc, &points, &opts)?, common.out.as_deref())
        }
        Command::Verify { common, samples, seed, tol } => {
            let opts = VerifyOptions { samples: *samples, seed: *seed, base: common.base, tol: *tol };
            (verify::run(&load(&common.input)?, &opts)?, common.out.as_deref())
        }
        Command::Render { common, queries: q } => {
            let doc = load(&common.input)?;
            let points = queries(q, doc.dim)?;
            (render::run(&doc, &points, common.base)?.into(), common.out.as_deref())
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli.command).and_then(|(outcome, out)| {
        match out {
            Some(path) => {
                fs::write(path, &outcome.text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?
            }
            None => print!("{}", outcome.text),
        }
        outcome.failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
