//! Command-line front end for `evolkit`.

pub mod commands;
pub mod document;
pub mod report;

pub use commands::{run, RunOutput};
pub use document::{emit_document, parse_algebra_document, parse_document, parse_element, AlgebraDocument};
pub use report::{emit_report, Format, Report};
