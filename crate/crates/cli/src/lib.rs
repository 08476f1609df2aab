//! Text front end for `gradalg-core`: the `.galg` presentation language,
//! result reports and the subcommands of the `gradalg` binary.

pub mod commands;
pub mod report;
pub mod textio;

pub use commands::{CliError, CliResult, Options};
pub use report::Report;
pub use textio::{parse_poly, parse_presentation, print_presentation, ParseError, ParseErrorKind};
