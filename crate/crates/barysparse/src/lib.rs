//! File formats, commands and rendering for `barysparse-core`.
//!
//! The `barysparse` binary is a thin wrapper over [`commands`]; everything
//! here works on strings so it can be driven from tests.

pub mod commands;
pub mod document;
mod error;
pub mod model;
pub mod points;

pub use document::PolytopeDocument;
pub use error::CliError;
pub use model::{Decomposition, Model};
