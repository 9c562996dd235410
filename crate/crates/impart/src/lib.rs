//! File formats, instance generators and the `impart` command-line tool
//! built on [`impart_core`].

pub mod cli;
pub mod format;
pub mod gen;
pub mod report;

pub use cli::run;
pub use format::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, Format, FormatError};
pub use gen::{generate, GenKind};
pub use report::RunReport;
