//! Command-line interface for the spectrum engine: polynomial parsing,
//! subcommand dispatch, and deterministic JSON and table emitters.

pub mod app;
pub mod text;

pub use app::{run, Cli, Command, Format, Outcome};
pub use text::{format_polynomial, parse_polynomial, ParseError};
