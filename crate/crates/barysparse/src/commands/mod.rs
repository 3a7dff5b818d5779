//! The four subcommands. Each returns its full output as a string so the
//! binary only handles files and exit codes.

pub mod coords;
pub mod decompose;
pub mod render;
pub mod verify;

use crate::CliError;

/// Output of a command, plus an error that should set the exit code after
/// the output has been written.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub failure: Option<CliError>,
}

impl From<String> for Outcome {
    fn from(text: String) -> Self {
        Outcome { text, failure: None }
    }
}

pub(crate) fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
