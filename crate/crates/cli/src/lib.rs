//! Instance files, check suites and reports for the `lsakit` binary.

pub mod error;
pub mod instance;
pub mod output;
pub mod suites;

pub use error::CliError;
pub use instance::{parse_instance, parse_instance_bytes, Instance};
pub use output::{Envelope, Format};
pub use suites::{Options, Outcome};
