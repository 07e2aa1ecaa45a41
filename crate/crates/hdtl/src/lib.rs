//! File formats and the command line front end for `hdtl-core`.

pub mod cli;
pub mod format;

pub use cli::{run, Outcome};
pub use format::{parse_table, serialize_table, TableFormat};
